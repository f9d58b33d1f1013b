"""Decidable identity checks over a whole Cayley table.

Every scan walks its variables in lexicographic order and stops at the first
violation, so the reported witness is the lexicographically smallest one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .table import Loop, _closure
from .structure import is_associative_set


@dataclass(frozen=True)
class IdentityVerdict:
    name: str
    holds: bool
    witness: tuple[int, ...] | None = None
    detail: str | None = None  # which identity of a family failed

    def __bool__(self) -> bool:
        return self.holds


def _verdict(name, witness, detail=None) -> IdentityVerdict:
    if witness is None:
        return IdentityVerdict(name, True)
    return IdentityVerdict(name, False, tuple(witness), detail)


def associativity_witness(t: Loop) -> tuple[int, int, int] | None:
    p = t.products
    r = range(t.order)
    for x, y, z in product(r, r, r):
        if p[p[x][y]][z] != p[x][p[y][z]]:
            return x, y, z
    return None


def is_associative(t: Loop) -> IdentityVerdict:
    """(xy)z = x(yz) for all x, y, z; witness is (x, y, z)."""
    return _verdict("associative", associativity_witness(t))


# Each identity is written over variables (x, y, z) as (lhs, rhs) callables on
# the product table p.
MOUFANG_IDENTITIES = {
    1: (lambda p, x, y, z: p[z][p[x][p[z][y]]], lambda p, x, y, z: p[p[p[z][x]][z]][y]),
    2: (lambda p, x, y, z: p[p[p[x][z]][y]][z], lambda p, x, y, z: p[x][p[z][p[y][z]]]),
    3: (lambda p, x, y, z: p[p[z][x]][p[y][z]], lambda p, x, y, z: p[p[z][p[x][y]]][z]),
}

MOUFANG_TEXT = {
    1: "z(x(zy)) = ((zx)z)y",
    2: "((xz)y)z = x(z(yz))",
    3: "(zx)(yz) = (z(xy))z",
}


def moufang_witness(t: Loop, variant: int) -> tuple[int, int, int] | None:
    lhs, rhs = MOUFANG_IDENTITIES[variant]
    p = t.products
    r = range(t.order)
    for x, y, z in product(r, r, r):
        if lhs(p, x, y, z) != rhs(p, x, y, z):
            return x, y, z
    return None


def is_moufang(t: Loop, variant: int | str = 1) -> IdentityVerdict:
    """Moufang identity number 1, 2 or 3, or ``"all"`` for all three."""
    variants = (1, 2, 3) if variant == "all" else (int(variant),)
    for v in variants:
        w = moufang_witness(t, v)
        if w is not None:
            return _verdict("moufang", w, f"identity ({v}): {MOUFANG_TEXT[v]}")
    return _verdict("moufang", None)


def is_cc(t: Loop) -> IdentityVerdict:
    """Conjugacy closed: z(xy) = R_z^-1(zx) . (zy) and (xy)z = (xz) . L_z^-1(yz)."""
    p = t.products
    r = range(t.order)
    for x, y, z in product(r, r, r):
        if p[z][p[x][y]] != p[t.right_div(z, p[z][x])][p[z][y]]:
            return _verdict("cc", (x, y, z), "identity (4): z(xy) = R_z^-1(zx) . (zy)")
    for x, y, z in product(r, r, r):
        if p[p[x][y]][z] != p[p[x][z]][t.left_div(z, p[y][z])]:
            return _verdict("cc", (x, y, z), "identity (5): (xy)z = (xz) . L_z^-1(yz)")
    return _verdict("cc", None)


def is_alternative(t: Loop) -> IdentityVerdict:
    p = t.products
    r = range(t.order)
    for x, y in product(r, r):
        if p[p[x][y]][y] != p[x][p[y][y]]:
            return _verdict("alternative", (x, y), "right alternative: (xy)y = x(yy)")
    for x, y in product(r, r):
        if p[p[x][x]][y] != p[x][p[x][y]]:
            return _verdict("alternative", (x, y), "left alternative: (xx)y = x(xy)")
    return _verdict("alternative", None)


def is_diassociative(t: Loop) -> IdentityVerdict:
    """Every subloop generated by two elements is associative; witness is the pair."""
    verdicts: dict[frozenset[int], bool] = {}
    for x in t.elements:
        for y in t.elements:
            span = frozenset(_closure(t, {t.identity, x, y}))
            ok = verdicts.get(span)
            if ok is None:
                ok = verdicts[span] = is_associative_set(t, span)
            if not ok:
                return _verdict("diassociative", (x, y))
    return _verdict("diassociative", None)


def violates(t: Loop, verdict: IdentityVerdict) -> bool:
    """Re-evaluate a failing verdict's witness and confirm it is a real violation."""
    if verdict.holds or verdict.witness is None:
        return False
    p = t.products
    w = verdict.witness
    if verdict.name == "associative":
        x, y, z = w
        return p[p[x][y]][z] != p[x][p[y][z]]
    if verdict.name == "moufang":
        v = int(verdict.detail.split("(")[1].split(")")[0])
        lhs, rhs = MOUFANG_IDENTITIES[v]
        return lhs(p, *w) != rhs(p, *w)
    if verdict.name == "cc":
        x, y, z = w
        if verdict.detail.startswith("identity (4)"):
            return p[z][p[x][y]] != p[t.right_div(z, p[z][x])][p[z][y]]
        return p[p[x][y]][z] != p[p[x][z]][t.left_div(z, p[y][z])]
    if verdict.name == "alternative":
        x, y = w
        if verdict.detail.startswith("right"):
            return p[p[x][y]][y] != p[x][p[y][y]]
        return p[p[x][x]][y] != p[x][p[x][y]]
    if verdict.name == "diassociative":
        return not is_associative_set(t, _closure(t, {t.identity, *w}))
    raise ValueError(f"unknown identity {verdict.name!r}")
