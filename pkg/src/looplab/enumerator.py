"""Exhaustive generation of small loops.

Tables are normalized (element 0 is the identity) and produced by filling
cells in row-major order with ascending values, so the output stream is in
lexicographic table order. Rows and columns in use are tracked as bitmasks;
after every assignment each empty cell in the touched row and column must
keep a candidate, and single-candidate cells are filled immediately.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .errors import OrderTooLarge, UnknownFilter
from .identities import is_associative, is_cc, is_moufang
from .probability import p_assoc
from .table import Loop

MAX_UNFILTERED_ORDER = 7
# Orders above MAX_UNFILTERED_ORDER need the in-search Moufang pruning.
MAX_PRUNED_ORDER = 10
MAX_CANONICAL_ORDER = 16
# In-search Moufang propagation switches on from this order.
INCREMENTAL_MOUFANG_FROM = 7


def _has_nuclear_commutators(t: Loop) -> bool:
    from .theorems import has_nuclear_commutators

    return has_nuclear_commutators(t)


FILTERS: dict[str, Callable[[Loop], bool]] = {
    "moufang": lambda t: is_moufang(t, 1).holds,
    "cc": lambda t: is_cc(t).holds,
    "nonassociative": lambda t: not is_associative(t).holds,
    "associative": lambda t: is_associative(t).holds,
    "nuclear_commutators": _has_nuclear_commutators,
}

PRUNING_FILTERS = frozenset({"moufang"})


@dataclass(frozen=True)
class EnumerationJob:
    order: int
    filters: tuple[str, ...] = ()
    up_to_iso: bool = False
    limit: int | None = None
    workers: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise OrderTooLarge(f"order must be positive, got {self.order}")
        unknown = [f for f in self.filters if f not in FILTERS]
        if unknown:
            raise UnknownFilter(f"unknown filter(s): {', '.join(unknown)}; "
                                f"choose from {', '.join(sorted(FILTERS))}")
        object.__setattr__(self, "filters", tuple(self.filters))
        if self.order > MAX_UNFILTERED_ORDER:
            if not PRUNING_FILTERS & set(self.filters):
                raise OrderTooLarge(
                    f"unfiltered enumeration is limited to order {MAX_UNFILTERED_ORDER}; "
                    f"order {self.order} needs a pruning filter ({', '.join(sorted(PRUNING_FILTERS))})")
            if self.order > MAX_PRUNED_ORDER:
                raise OrderTooLarge(f"enumeration is limited to order {MAX_PRUNED_ORDER}")

    @property
    def prune_moufang(self) -> bool:
        return "moufang" in self.filters and self.order >= INCREMENTAL_MOUFANG_FROM


@dataclass
class EnumerationStats:
    """Counts per stage: completed Latin squares, survivors of each filter, emitted."""

    squares: int = 0
    passed: dict[str, int] = field(default_factory=dict)
    isomorphism_classes: int | None = None
    emitted: int = 0

    def summary(self) -> str:
        parts = [f"squares={self.squares}"]
        parts += [f"{k}={v}" for k, v in self.passed.items()]
        if self.isomorphism_classes is not None:
            parts.append(f"classes={self.isomorphism_classes}")
        parts.append(f"emitted={self.emitted}")
        return "# summary: " + " ".join(parts)


# -- Latin square search ------------------------------------------------------

def _initial_state(n: int):
    cells = [-1] * (n * n)
    rows = [0] * n
    cols = [0] * n
    for i in range(n):
        for pos, v in ((i, i), (i * n, i)):
            cells[pos] = v
        rows[0] |= 1 << i
        cols[0] |= 1 << i
        rows[i] |= 1 << i
        cols[i] |= 1 << i
    return cells, rows, cols


def _assign(n: int, cells, rows, cols, pos: int, v: int) -> bool:
    """Set a cell, then fill forced singles; False on a dead end."""
    full = (1 << n) - 1
    queue = [(pos, v)]
    while queue:
        pos, v = queue.pop()
        cur = cells[pos]
        if cur != -1:
            if cur != v:
                return False
            continue
        r, c = divmod(pos, n)
        bit = 1 << v
        if (rows[r] | cols[c]) & bit:
            return False
        cells[pos] = v
        rows[r] |= bit
        cols[c] |= bit
        for q in list(range(r * n, r * n + n)) + list(range(c, n * n, n)):
            if cells[q] != -1:
                continue
            qr, qc = divmod(q, n)
            cand = full & ~(rows[qr] | cols[qc])
            if not cand:
                return False
            if cand & (cand - 1) == 0:
                queue.append((q, cand.bit_length() - 1))
    return True


def _moufang_propagate(n: int, cells, rows, cols) -> bool:
    """Enforce z(x(zy)) = ((zx)z)y on every triple whose products are known enough.

    When one side is known and the other side lacks only its outer product,
    that cell is forced; the inner product of the left side is also forced by
    row division. False on a contradiction.
    """
    changed = True
    while changed:
        changed = False
        for z in range(n):
            zrow = z * n
            for x in range(n):
                d = cells[zrow + x]  # zx
                f = cells[d * n + z] if d >= 0 else -1  # (zx)z
                for y in range(n):
                    a = cells[zrow + y]  # zy
                    b = cells[x * n + a] if a >= 0 else -1  # x(zy)
                    lhs = cells[zrow + b] if b >= 0 else -1  # z(x(zy))
                    rhs = cells[f * n + y] if f >= 0 else -1  # ((zx)z)y
                    if lhs >= 0 and rhs >= 0:
                        if lhs != rhs:
                            return False
                        continue
                    if lhs >= 0 and f >= 0:
                        if not _assign(n, cells, rows, cols, f * n + y, lhs):
                            return False
                        changed = True
                    elif rhs >= 0 and b >= 0:
                        if not _assign(n, cells, rows, cols, zrow + b, rhs):
                            return False
                        changed = True
                    elif rhs >= 0 and a >= 0 and b < 0:
                        # z * b = rhs: if row z already holds rhs at column c, then b = c
                        if (rows[z] >> rhs) & 1:
                            c = cells.index(rhs, zrow, zrow + n) - zrow
                            if not _assign(n, cells, rows, cols, x * n + a, c):
                                return False
                            changed = True
                    elif lhs >= 0 and d >= 0 and f < 0:
                        # f * y = lhs: if column y already holds lhs at row r, then f = r
                        if (cols[y] >> lhs) & 1:
                            r = _row_holding(n, cells, y, lhs)
                            if not _assign(n, cells, rows, cols, d * n + z, r):
                                return False
                            changed = True
    return True


def _row_holding(n: int, cells, col: int, value: int) -> int:
    for r in range(n):
        if cells[r * n + col] == value:
            return r
    raise ValueError(value)


def _solve(n: int, cells, rows, cols, prune_moufang: bool) -> Iterator[tuple[int, ...]]:
    try:
        pos = cells.index(-1)
    except ValueError:
        yield tuple(cells)
        return
    r, c = divmod(pos, n)
    avail = ((1 << n) - 1) & ~(rows[r] | cols[c])
    while avail:
        bit = avail & -avail
        avail ^= bit
        nc, nr, ncol = cells[:], rows[:], cols[:]
        if not _assign(n, nc, nr, ncol, pos, bit.bit_length() - 1):
            continue
        if prune_moufang and not _moufang_propagate(n, nc, nr, ncol):
            continue
        yield from _solve(n, nc, nr, ncol, prune_moufang)


def _root_branches(n: int, prune_moufang: bool):
    """Start states, one per value of the first free cell, in ascending order."""
    cells, rows, cols = _initial_state(n)
    if prune_moufang and not _moufang_propagate(n, cells, rows, cols):
        return []
    try:
        pos = cells.index(-1)
    except ValueError:
        return [(cells, rows, cols)]
    r, c = divmod(pos, n)
    avail = ((1 << n) - 1) & ~(rows[r] | cols[c])
    out = []
    for v in range(n):
        if not (avail >> v) & 1:
            continue
        nc, nr, ncol = cells[:], rows[:], cols[:]
        if not _assign(n, nc, nr, ncol, pos, v):
            continue
        if prune_moufang and not _moufang_propagate(n, nc, nr, ncol):
            continue
        out.append((nc, nr, ncol))
    return out


def latin_squares(n: int, prune_moufang: bool = False) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every normalized Latin square of order n (identity 0), in lexicographic order."""
    for cells, rows, cols in _root_branches(n, prune_moufang):
        for flat in _solve(n, cells, rows, cols, prune_moufang):
            yield tuple(flat[i * n:(i + 1) * n] for i in range(n))


# -- canonical forms ----------------------------------------------------------

def _cycles_from(t: Loop, a: int, start: int) -> list[int]:
    cyc = [start]
    x = t.mul(a, start)
    while x != start:
        cyc.append(x)
        x = t.mul(a, x)
    return cyc


def _row1_layout(block_lengths: list[int]) -> list[int]:
    row = []
    j = 0
    for length in block_lengths:
        row.extend(range(j + 1, j + length))
        row.append(j)
        j += length
    return row


def canonical_table(t: Loop) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least normalized table among all relabelings of t.

    In the least table, row 1 is the left translation by the element labelled
    1, laid out cycle by cycle: the cycle through the identity first, then the
    remaining cycles by increasing length, each labelled consecutively along
    the cycle. Only the element labelled 1 and where each cycle starts are
    free; those choices are searched with branch and bound on rows 2 onward.
    """
    n = t.order
    if n > MAX_CANONICAL_ORDER:
        raise OrderTooLarge(f"canonical forms are limited to order {MAX_CANONICAL_ORDER}")
    e = t.identity
    if n <= 2:
        return tuple(tuple(range(n)) if r == 0 else tuple((r + c) % n for c in range(n))
                     for r in range(n))
    p = t.products

    plans = []
    for a1 in range(n):
        if a1 == e:
            continue
        first = _cycles_from(t, a1, e)
        seen = set(first)
        others = []
        for x in range(n):
            if x not in seen:
                cyc = _cycles_from(t, a1, x)
                seen.update(cyc)
                others.append(cyc)
        lengths = [len(first)] + sorted(len(c) for c in others)
        plans.append((_row1_layout(lengths), a1, first, others))
    best_row1 = min(plan[0] for plan in plans)

    best: list[int] | None = None  # flattened rows 2.. of the incumbent

    def compare(labels: list[int], label_of: dict[int, int]) -> int:
        """-1 if strictly better than the incumbent, 1 if worse, 0 if undecided."""
        if best is None:
            return 0
        k = len(labels)
        i = 0
        for r in range(2, k):
            pr = p[labels[r]]
            for c in range(n):
                if c >= k:
                    return 0
                v = label_of.get(pr[labels[c]])
                inc = best[i]
                i += 1
                if v is None:
                    return 1 if inc < k else 0
                if v != inc:
                    return -1 if v < inc else 1
        return 0

    def dfs(labels: list[int], label_of: dict[int, int], remaining: list[list[int]]):
        nonlocal best
        if compare(labels, label_of) > 0:
            return
        if not remaining:
            flat = [label_of[p[labels[r]][labels[c]]] for r in range(2, n) for c in range(n)]
            if best is None or flat < best:
                best = flat
            return
        shortest = min(len(c) for c in remaining)
        for idx, cyc in enumerate(remaining):
            if len(cyc) != shortest:
                continue
            rest = remaining[:idx] + remaining[idx + 1:]
            for s in range(len(cyc)):
                order = cyc[s:] + cyc[:s]
                new_labels = labels + order
                new_map = dict(label_of)
                for x in order:
                    new_map[x] = len(new_map)
                dfs(new_labels, new_map, rest)

    for row1, a1, first, others in plans:
        if row1 != best_row1:
            continue
        dfs(list(first), {x: i for i, x in enumerate(first)}, others)

    rows = [tuple(range(n)), tuple(best_row1)]
    rows += [tuple(best[i * n:(i + 1) * n]) for i in range(n - 2)]
    return tuple(rows)


def canonical_form(t: Loop) -> bytes:
    """Serialized canonical table; equal for two loops iff they are isomorphic."""
    return bytes([t.order]) + bytes(v for row in canonical_table(t) for v in row)


# -- enumeration --------------------------------------------------------------

def _passes(t: Loop, filters: tuple[str, ...], stats: EnumerationStats | None) -> bool:
    for name in filters:
        if not FILTERS[name](t):
            return False
        if stats is not None:
            stats.passed[name] = stats.passed.get(name, 0) + 1
    return True


def _branch_stream(args):
    n, state, filters, up_to_iso, prune = args
    stats = EnumerationStats(passed={f: 0 for f in filters})
    cells, rows, cols = state

    def gen():
        for flat in _solve(n, cells, rows, cols, prune):
            stats.squares += 1
            t = Loop(tuple(flat[i * n:(i + 1) * n] for i in range(n)), 0)
            if _passes(t, filters, stats):
                yield t.products, (canonical_form(t) if up_to_iso else None)

    return gen(), stats


def _run_branch(args):
    items, stats = _branch_stream(args)
    return list(items), stats


def default_workers() -> int:
    env = os.environ.get("LOOPLAB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def enumerate_loops(job: EnumerationJob, stats: EnumerationStats | None = None) -> Iterator[Loop]:
    """Stream the loops described by ``job`` in lexicographic table order.

    With ``up_to_iso`` each isomorphism class is represented by its first
    (hence lexicographically least) normalized table.
    """
    if stats is None:
        stats = EnumerationStats()
    for f in job.filters:
        stats.passed.setdefault(f, 0)
    n = job.order
    prune = job.prune_moufang
    branches = _root_branches(n, prune)
    tasks = [(n, b, job.filters, job.up_to_iso, prune) for b in branches]
    seen: set[bytes] = set()

    if job.workers > 1 and len(tasks) > 1 and n >= 6:
        with ProcessPoolExecutor(max_workers=job.workers) as pool:
            results = pool.map(_run_branch, tasks)
            yield from _merge(results, job, stats, seen)
    else:
        yield from _merge(map(_branch_stream, tasks), job, stats, seen)
    if job.up_to_iso:
        stats.isomorphism_classes = len(seen)


def _merge(results, job: EnumerationJob, stats: EnumerationStats, seen: set[bytes]) -> Iterator[Loop]:
    for items, branch_stats in results:
        for products, form in items:
            if form is not None:
                if form in seen:
                    continue
                seen.add(form)
            if job.limit is not None and stats.emitted >= job.limit:
                break
            stats.emitted += 1
            yield Loop(products, 0)
        stats.squares += branch_stats.squares
        for k, v in branch_stats.passed.items():
            stats.passed[k] = stats.passed.get(k, 0) + v
        if job.limit is not None and stats.emitted >= job.limit:
            return


def enumerate_all(order: int, filters=(), up_to_iso: bool = False, limit: int | None = None,
                  workers: int = 1) -> list[Loop]:
    return list(enumerate_loops(EnumerationJob(order, tuple(filters), up_to_iso, limit, workers)))


@dataclass(frozen=True)
class Counterexample:
    loop: Loop
    p_assoc: Fraction


def counterexample_search(n: int, bound: Fraction, workers: int = 1) -> list[Counterexample]:
    """Nonassociative Moufang loops of order n whose association probability exceeds bound.

    Nuclear commutators are not required. An empty result only means no such
    loop exists at this order.
    """
    job = EnumerationJob(n, ("moufang", "nonassociative"), up_to_iso=True, workers=workers)
    out = []
    for t in enumerate_loops(job):
        pa = p_assoc(t)
        if pa > bound:
            out.append(Counterexample(t, pa))
    return out
