"""Cayley tables of finite magmas, quasigroups and loops.

Elements are the integers ``0..n-1``. A :class:`MagmaTable` only promises
closure; :func:`validate` upgrades it to a :class:`Loop` when the table is a
Latin square with a two-sided identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotALoop, OrderMismatch, OutOfRangeEntry, ShapeError

Perm = tuple[int, ...]


class Classification(str, enum.Enum):
    MAGMA = "magma"
    QUASIGROUP = "quasigroup"
    LOOP = "loop"


@dataclass(frozen=True)
class MagmaTable:
    products: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> MagmaTable:
        products = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(products)
        if n == 0:
            raise ShapeError("a table needs at least one element")
        for r, row in enumerate(products):
            if len(row) != n:
                raise ShapeError(f"row {r} has {len(row)} entries, expected {n}")
            for c, v in enumerate(row):
                if not 0 <= v < n:
                    raise OutOfRangeEntry(r, c, v, n)
        return cls(products)

    @property
    def order(self) -> int:
        return len(self.products)


@dataclass(frozen=True)
class Validation:
    classification: Classification
    loop: Loop | None = None
    defect: str | None = None  # first Latin or identity failure, for diagnostics
    defect_row: int | None = None


def _latin_defect(products) -> tuple[str, int] | None:
    n = len(products)
    for r, row in enumerate(products):
        seen = set()
        for v in row:
            if v in seen:
                return f"row {r} repeats value {v}", r
            seen.add(v)
    for c in range(n):
        seen = set()
        for r in range(n):
            v = products[r][c]
            if v in seen:
                return f"column {c} repeats value {v}", r
            seen.add(v)
    return None


def validate(table: MagmaTable | Sequence[Sequence[int]]) -> Validation:
    """Classify a table as magma, quasigroup or loop.

    Raises :class:`OutOfRangeEntry` for entries outside ``0..n-1``.
    """
    if not isinstance(table, MagmaTable):
        table = MagmaTable.from_rows(table)
    products = table.products
    n = table.order
    defect = _latin_defect(products)
    if defect is not None:
        return Validation(Classification.MAGMA, defect=defect[0], defect_row=defect[1])
    # In a quasigroup a left identity and a right identity coincide if both exist,
    # so scanning for a two-sided one is enough to get uniqueness.
    identity = None
    for e in range(n):
        if all(products[e][x] == x and products[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        return Validation(Classification.QUASIGROUP, defect="no two-sided identity element")
    return Validation(Classification.LOOP, loop=Loop(products, identity))


@dataclass(frozen=True, eq=False)
class Loop:
    """A validated finite loop. Immutable; use :func:`validate` or :meth:`from_rows`."""

    products: tuple[tuple[int, ...], ...]
    identity: int
    _ldiv: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    _rdiv: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.products)
        ldiv = [[0] * n for _ in range(n)]
        rdiv = [[0] * n for _ in range(n)]
        for a in range(n):
            row = self.products[a]
            for x in range(n):
                ldiv[a][row[x]] = x  # a * x = b  =>  a \ b = x
                rdiv[a][self.products[x][a]] = x  # x * a = b  =>  b / a = x
        object.__setattr__(self, "_ldiv", tuple(map(tuple, ldiv)))
        object.__setattr__(self, "_rdiv", tuple(map(tuple, rdiv)))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> Loop:
        v = validate(MagmaTable.from_rows(rows))
        if v.loop is None:
            raise NotALoop(f"table is a {v.classification.value}: {v.defect}")
        return v.loop

    @property
    def order(self) -> int:
        return len(self.products)

    @property
    def elements(self) -> range:
        return range(len(self.products))

    def mul(self, a: int, b: int) -> int:
        return self.products[a][b]

    def left_div(self, a: int, b: int) -> int:
        """The unique x with a*x = b."""
        return self._ldiv[a][b]

    def right_div(self, a: int, b: int) -> int:
        """The unique x with x*a = b."""
        return self._rdiv[a][b]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.products]

    def is_normalized(self) -> bool:
        """True when element 0 is the identity, so row 0 and column 0 read 0..n-1."""
        return self.identity == 0

    def relabel(self, f: Sequence[int]) -> Loop:
        """The isomorphic loop obtained by renaming each element x to f[x]."""
        n = self.order
        out = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                out[f[a]][f[b]] = f[self.products[a][b]]
        return Loop(tuple(map(tuple, out)), f[self.identity])

    def __eq__(self, other):
        return isinstance(other, Loop) and self.products == other.products

    def __hash__(self):
        return hash(self.products)

    def __repr__(self):
        return f"Loop(order={self.order}, identity={self.identity})"


def translations(t: Loop, x: int) -> tuple[Perm, Perm]:
    """Left and right translations y -> x*y and y -> y*x as permutation tuples."""
    left = t.products[x]
    right = tuple(t.products[y][x] for y in t.elements)
    return left, right


def two_sided_inverse(t: Loop, x: int) -> int | None:
    right_inv = t.left_div(x, t.identity)  # x*y = e
    left_inv = t.right_div(x, t.identity)  # y*x = e
    return right_inv if right_inv == left_inv else None


def generated_size(t: Loop, gens: Iterable[int]) -> int:
    return len(_closure(t, set(gens) | {t.identity}))


def _closure(t: Loop, seed: set[int]) -> set[int]:
    members = set(seed)
    frontier = list(members)
    while frontier:
        new = []
        current = list(members)
        for a in frontier:
            for b in current:
                for v in (t.mul(a, b), t.mul(b, a), t.left_div(a, b), t.left_div(b, a),
                          t.right_div(a, b), t.right_div(b, a)):
                    if v not in members:
                        members.add(v)
                        new.append(v)
                        current.append(v)
        frontier = new
    return members


def _profile(t: Loop, x: int) -> tuple[int, bool, bool]:
    # isomorphism invariants of a single element
    return generated_size(t, [x]), t.mul(x, x) == t.identity, two_sided_inverse(t, x) is not None


def _generating_sequence(t: Loop, profiles: Sequence) -> list[int]:
    gens: list[int] = []
    span = {t.identity}
    rarity = {p: profiles.count(p) for p in profiles}
    while len(span) < t.order:
        # rare profiles first: fewer candidate images to try
        g = min((x for x in t.elements if x not in span), key=lambda x: (rarity[profiles[x]], x))
        gens.append(g)
        span = _closure(t, span | {g})
    return gens


def _extend(a: Loop, b: Loop, mapping: dict[int, int]) -> dict[int, int] | None:
    """Close a partial map under products and divisions; None on conflict."""
    f = dict(mapping)
    used = {v: k for k, v in f.items()}
    if len(used) != len(f):
        return None
    changed = True
    while changed:
        changed = False
        items = list(f.items())
        for x, fx in items:
            for y, fy in items:
                for src, dst in ((a.mul(x, y), b.mul(fx, fy)),
                                 (a.left_div(x, y), b.left_div(fx, fy)),
                                 (a.right_div(x, y), b.right_div(fx, fy))):
                    have = f.get(src)
                    if have is None:
                        if dst in used:
                            return None
                        f[src] = dst
                        used[dst] = src
                        changed = True
                    elif have != dst:
                        return None
    return f


def isomorphic(a: Loop, b: Loop) -> Perm | None:
    """Return a bijection f with f(x*y) = f(x)*f(y), or None if a and b are not isomorphic.

    Generators of ``a`` are mapped to elements of ``b`` with the same element
    profile (size of the generated subloop, squaring to identity, inverse
    property of the element); each choice is extended by closure and the
    result checked against the full table.
    """
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    n = a.order
    pa = [_profile(a, x) for x in a.elements]
    pb = [_profile(b, x) for x in b.elements]
    if sorted(pa) != sorted(pb):
        return None
    gens = _generating_sequence(a, pa)
    candidates = [[y for y in b.elements if pb[y] == pa[g]] for g in gens]

    def search(i: int, f: dict[int, int]) -> dict[int, int] | None:
        if i == len(gens):
            return f
        for y in candidates[i]:
            if gens[i] in f:
                if f[gens[i]] != y:
                    continue
                ext = f
            else:
                ext = _extend(a, b, {**f, gens[i]: y})
            if ext is None:
                continue
            found = search(i + 1, ext)
            if found is not None:
                return found
        return None

    f = search(0, {a.identity: b.identity})
    if f is None or len(f) != n:
        return None
    perm = tuple(f[x] for x in range(n))
    if all(perm[a.mul(x, y)] == b.mul(perm[x], perm[y]) for x in range(n) for y in range(n)):
        return perm
    return None


def is_commutative(t: Loop) -> bool:
    return all(t.mul(x, y) == t.mul(y, x) for x in t.elements for y in range(x + 1, t.order))
