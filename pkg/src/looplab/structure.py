"""Associators, nuclei, adjoint sets, subloops, cosets, quotients and L(x,y)."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import EmptySet, NotASubloop, NotNormal, OrderTooLarge
from .table import Loop, Perm, _closure

MAX_SUBLOOP_ORDER = 16


@dataclass(frozen=True)
class ElementSet:
    """Sorted duplicate-free set of elements of a loop of order ``order``."""

    members: tuple[int, ...]
    order: int

    @classmethod
    def of(cls, items: Iterable[int], order: int) -> ElementSet:
        members = tuple(sorted(set(items)))
        if members and not (0 <= members[0] and members[-1] < order):
            raise ValueError(f"elements must lie in 0..{order - 1}")
        return cls(members, order)

    def __contains__(self, x) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: ElementSet) -> bool:
        return set(self.members) <= set(other.members)

    def __lt__(self, other: ElementSet) -> bool:
        return set(self.members) < set(other.members)

    def __str__(self) -> str:
        return " ".join(map(str, self.members))


class NucleusKind(str, enum.Enum):
    LEFT = "left"
    MIDDLE = "middle"
    RIGHT = "right"
    FULL = "full"


@dataclass(frozen=True)
class PseudoAutomorphism:
    map: Perm
    companion: int

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(z for z, fz in enumerate(self.map) if z == fz)


def associator(t: Loop, a: int, b: int, c: int) -> int:
    """The unique x with (ab)c = (a(bc))x."""
    return t.left_div(t.mul(a, t.mul(b, c)), t.mul(t.mul(a, b), c))


def commutator(t: Loop, x: int, y: int) -> int:
    """The unique c with xy = (yx)c."""
    return t.left_div(t.mul(y, x), t.mul(x, y))


def associator_table(t: Loop) -> list[list[list[int]]]:
    n = t.order
    p = t.products
    return [[[t.left_div(p[a][p[b][c]], p[p[a][b]][c]) for c in range(n)]
             for b in range(n)] for a in range(n)]


def nucleus(t: Loop, kind: NucleusKind | str = NucleusKind.FULL) -> ElementSet:
    kind = NucleusKind(kind)
    if kind is NucleusKind.FULL:
        sets = [set(nucleus(t, k)) for k in (NucleusKind.LEFT, NucleusKind.MIDDLE, NucleusKind.RIGHT)]
        return ElementSet.of(sets[0] & sets[1] & sets[2], t.order)
    p = t.products
    n = t.order
    members = []
    for a in range(n):
        if kind is NucleusKind.LEFT:
            ok = all(p[p[a][x]][y] == p[a][p[x][y]] for x in range(n) for y in range(n))
        elif kind is NucleusKind.MIDDLE:
            ok = all(p[p[x][a]][y] == p[x][p[a][y]] for x in range(n) for y in range(n))
        else:
            ok = all(p[p[x][y]][a] == p[x][p[y][a]] for x in range(n) for y in range(n))
        if ok:
            members.append(a)
    return ElementSet(tuple(members), n)


def adjoint(t: Loop, A: Iterable[int]) -> ElementSet:
    """Bruck's adjoint: all x with [a, x, g] = 1 for every a in A and g in the loop.

    The adjoint variable sits in the middle associator slot.
    """
    A = list(A)
    if not A:
        raise EmptySet("adjoint of an empty set")
    p = t.products
    n = t.order
    return ElementSet(tuple(x for x in range(n)
                            if all(p[p[a][x]][g] == p[a][p[x][g]] for a in A for g in range(n))), n)


def partial_set(t: Loop, x: int, y: int) -> ElementSet:
    """All z with [z, y, x] = 1."""
    p = t.products
    return ElementSet(tuple(z for z in t.elements if p[p[z][y]][x] == p[z][p[y][x]]), t.order)


def subloop_closure(t: Loop, S: Iterable[int]) -> ElementSet:
    """Smallest subloop containing S (closed under product and both divisions)."""
    return ElementSet.of(_closure(t, set(S) | {t.identity}), t.order)


def is_subloop(t: Loop, H: Iterable[int]) -> bool:
    H = set(H)
    if t.identity not in H:
        return False
    return all(t.mul(a, b) in H and t.left_div(a, b) in H and t.right_div(a, b) in H
               for a in H for b in H)


def is_associative_set(t: Loop, H: Iterable[int]) -> bool:
    H = list(H)
    p = t.products
    return all(p[p[a][b]][c] == p[a][p[b][c]] for a in H for b in H for c in H)


def all_subloops(t: Loop, max_order: int = MAX_SUBLOOP_ORDER) -> list[ElementSet]:
    """Every subloop of t, sorted by size then members.

    Starts from closures of all subsets of size <= 3 and keeps closing
    (known subloop + one element) until nothing new appears. Every subloop is
    reached, since it is obtained from {e} by adding generators one at a time.
    """
    n = t.order
    if n > max_order:
        raise OrderTooLarge(f"subloop enumeration is limited to order {max_order}, got {n}")
    found: set[frozenset[int]] = set()
    frontier: list[frozenset[int]] = []

    def add(s: set[int]):
        fs = frozenset(s)
        if fs not in found:
            found.add(fs)
            frontier.append(fs)

    add(_closure(t, {t.identity}))
    for k in (1, 2, 3):
        for gens in combinations(range(n), k):
            add(_closure(t, set(gens) | {t.identity}))
    while frontier:
        batch, frontier[:] = list(frontier), []
        for H in batch:
            for x in range(n):
                if x not in H:
                    add(_closure(t, H | {x}))
    return sorted((ElementSet.of(s, n) for s in found), key=lambda s: (len(s), s.members))


def _require_subloop(t: Loop, H: Iterable[int]) -> frozenset[int]:
    H = frozenset(H)
    if not is_subloop(t, H):
        raise NotASubloop(f"{sorted(H)} is not a subloop")
    return H


@dataclass(frozen=True)
class CosetDecomposition:
    cosets: tuple[ElementSet, ...]
    partition: bool

    @property
    def index(self) -> int | None:
        return len(self.cosets) if self.partition else None


def cosets(t: Loop, H: Iterable[int], side: str = "left") -> CosetDecomposition:
    """Distinct cosets xH (side="left") or Hx (side="right"), in order of first representative."""
    H = _require_subloop(t, H)
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    seen: dict[tuple[int, ...], ElementSet] = {}
    for x in t.elements:
        if side == "left":
            c = ElementSet.of((t.mul(x, h) for h in H), t.order)
        else:
            c = ElementSet.of((t.mul(h, x) for h in H), t.order)
        seen.setdefault(c.members, c)
    cs = tuple(seen.values())
    covered = [m for c in cs for m in c.members]
    partition = len(covered) == t.order and len(set(covered)) == t.order
    return CosetDecomposition(cs, partition)


def is_normal(t: Loop, H: Iterable[int]) -> bool:
    """xH = Hx, (Hx)y = H(xy) and y(xH) = (yx)H for all x, y."""
    H = _require_subloop(t, H)
    n = t.order
    left = [frozenset(t.mul(x, h) for h in H) for x in range(n)]
    right = [frozenset(t.mul(h, x) for h in H) for x in range(n)]
    for x in range(n):
        if left[x] != right[x]:
            return False
        for y in range(n):
            if frozenset(t.mul(hx, y) for hx in right[x]) != right[t.mul(x, y)]:
                return False
            if frozenset(t.mul(y, xh) for xh in left[x]) != left[t.mul(y, x)]:
                return False
    return True


@dataclass(frozen=True)
class Quotient:
    loop: Loop
    cosets: tuple[ElementSet, ...]  # coset i is element i of the quotient loop


def quotient(t: Loop, H: Iterable[int]) -> Quotient:
    """Cayley table of t/H on the left cosets of a normal subloop H."""
    H = _require_subloop(t, H)
    if not is_normal(t, H):
        raise NotNormal(f"{sorted(H)} is not a normal subloop")
    dec = cosets(t, H, "left")
    index_of = {}
    for i, c in enumerate(dec.cosets):
        for m in c:
            index_of[m] = i
    k = len(dec.cosets)
    rows = [[0] * k for _ in range(k)]
    for i, ci in enumerate(dec.cosets):
        for j, cj in enumerate(dec.cosets):
            images = {index_of[t.mul(a, b)] for a in ci for b in cj}
            if len(images) != 1:
                raise NotNormal("coset product depends on the representatives")
            rows[i][j] = images.pop()
    return Quotient(Loop.from_rows(rows), dec.cosets)


def compose(*perms: Perm) -> Perm:
    """compose(f, g, h)(z) = f(g(h(z)))."""
    out = perms[-1]
    for f in reversed(perms[:-1]):
        out = tuple(f[v] for v in out)
    return out


def invert(perm: Perm) -> Perm:
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return tuple(inv)


# Order in which the three translations in L(x,y) are applied to an argument z.
# "left_first": z -> (yx) \ (y(xz)), i.e. L_x is applied first and L_{yx}^{-1} last
# (maps written on the right). The opposite reading z -> x(y((yx) \ z)) fails the
# pseudo-automorphism law and the fixed-point formula on the octonion loop.
PSEUDO_L_ORDER = "left_first"


def pseudo_L(t: Loop, x: int, y: int, order: str = PSEUDO_L_ORDER) -> PseudoAutomorphism:
    """L(x,y) built from L_x, L_y and L_{yx}^{-1}, with companion [y, x]."""
    Lx = t.products[x]
    Ly = t.products[y]
    Lyx_inv = invert(t.products[t.mul(y, x)])
    if order == "left_first":
        f = compose(Lyx_inv, Ly, Lx)
    elif order == "inverse_first":
        f = compose(Lx, Ly, Lyx_inv)
    else:
        raise ValueError(f"unknown composition order {order!r}")
    return PseudoAutomorphism(f, commutator(t, y, x))


def is_pseudo_automorphism(t: Loop, f: Perm, c: int) -> bool:
    """True iff f(x)(f(y)c) = f(xy)c for all x, y."""
    p = t.products
    n = t.order
    return all(p[f[a]][p[f[b]][c]] == p[f[p[a][b]]][c] for a in range(n) for b in range(n))
