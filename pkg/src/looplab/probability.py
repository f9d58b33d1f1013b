"""Exact association and commutation probabilities.

Results are :class:`fractions.Fraction` values; floats only ever appear in
:func:`render`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .structure import adjoint, nucleus
from .table import Loop

MOUFANG_SHARP_BOUND = Fraction(43, 64)
CC_SHARP_BOUND = Fraction(7, 8)


def render(value: Fraction, approx: bool = True) -> str:
    text = f"{value.numerator}/{value.denominator}"
    if approx:
        text += f" (≈ {float(value):.6f})"
    return text


def associating_triples(t: Loop) -> int:
    p = t.products
    r = range(t.order)
    return sum(1 for x in r for y in r for z in r if p[p[x][y]][z] == p[x][p[y][z]])


def p_assoc(t: Loop) -> Fraction:
    """Fraction of ordered triples (x, y, z) with (xy)z = x(yz)."""
    return Fraction(associating_triples(t), t.order ** 3)


def p_comm(t: Loop) -> Fraction:
    """Fraction of ordered pairs (x, y) with xy = yx."""
    p = t.products
    r = range(t.order)
    return Fraction(sum(1 for x in r for y in r if p[x][y] == p[y][x]), t.order ** 2)


@dataclass(frozen=True)
class TripleCountBreakdown:
    """Associating triples split by where x, y fall.

    case1: x in the nucleus (every y, z).
    case2: x outside the nucleus, y in the adjoint {x}' (every z).
    case3: x outside the nucleus, y outside {x}', and [x, y, z] = 1.
    case3_partial: the same (x, y) range counted with z in the set {z : [z, y, x] = 1};
    agrees with case3 whenever trivial associators are invariant under
    permutation (Moufang and CC loops), not in general.
    """

    order: int
    nucleus_size: int
    case1: int
    case2: int
    case3: int
    case3_partial: int

    @property
    def total(self) -> int:
        return self.order ** 3

    @property
    def associating(self) -> int:
        return self.case1 + self.case2 + self.case3

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.associating, self.total)

    @property
    def partial_fraction(self) -> Fraction:
        return Fraction(self.case1 + self.case2 + self.case3_partial, self.total)


def p_assoc_decomposed(t: Loop) -> TripleCountBreakdown:
    """Count associating triples through the nucleus / adjoint / partial-set cases."""
    n = t.order
    p = t.products
    N = nucleus(t)
    case1 = len(N) * n * n
    case2 = case3 = case3_partial = 0
    for x in t.elements:
        if x in N:
            continue
        x_adj = set(adjoint(t, [x]))
        case2 += len(x_adj) * n
        for y in t.elements:
            if y in x_adj:
                continue
            xy = p[x][y]
            yx = p[y][x]
            for z in t.elements:
                if p[xy][z] == p[x][p[y][z]]:
                    case3 += 1
                if p[p[z][y]][x] == p[z][yx]:
                    case3_partial += 1
    return TripleCountBreakdown(n, len(N), case1, case2, case3, case3_partial)


def nucleus_ratio(t: Loop) -> Fraction:
    return Fraction(len(nucleus(t)), t.order)


def moufang_bound_value(t: Loop) -> Fraction:
    """|N|/n * 3/8 + 5/8, the per-loop bound for Moufang loops with nuclear commutators."""
    return nucleus_ratio(t) * Fraction(3, 8) + Fraction(5, 8)


def cc_bound_value(t: Loop) -> Fraction:
    """|N|/n * 1/4 + 3/4, the per-loop bound for CC loops."""
    return nucleus_ratio(t) * Fraction(1, 4) + Fraction(3, 4)
