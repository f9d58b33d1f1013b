"""Machine checks of the bounds, corollaries and lemmas about associating triples.

Each ``verify_*`` function returns a :class:`TheoremVerdict`. A verdict whose
hypotheses do not hold for the given loop is reported with
``applicable=False`` rather than as vacuously verified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import identities
from .probability import (CC_SHARP_BOUND, MOUFANG_SHARP_BOUND, cc_bound_value,
                          moufang_bound_value, p_assoc)
from .structure import (ElementSet, all_subloops, associator, commutator, cosets,
                        is_associative_set, is_normal, is_pseudo_automorphism, is_subloop,
                        nucleus, partial_set, pseudo_L, quotient)
from .table import Loop, _closure

MOUFANG_BOUND = "MOUFANG_BOUND"
CC_BOUND = "CC_BOUND"
INDEX_8 = "INDEX_8"
TWO_GEN = "TWO_GEN"
MOUFANG_THM = "MOUFANG_THM"
LAGRANGE = "LAGRANGE"
FIXED_POINT = "FIXED_POINT"

CLAIMS = (MOUFANG_BOUND, CC_BOUND, INDEX_8, TWO_GEN, MOUFANG_THM, LAGRANGE, FIXED_POINT)

# Orders above this skip the subloop-sweeping claims.
MAX_SWEEP_ORDER = 16


@dataclass
class TheoremVerdict:
    claim: str
    applicable: bool
    verified: bool = False
    evidence: dict = field(default_factory=dict)
    counterexample: dict | None = None
    reason: str = ""

    @property
    def falsified(self) -> bool:
        return self.applicable and not self.verified

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return {"num": v.numerator, "den": v.denominator}
            if isinstance(v, ElementSet):
                return list(v.members)
            if isinstance(v, tuple):
                return [enc(x) for x in v]
            if isinstance(v, dict):
                return {k: enc(x) for k, x in v.items()}
            return v

        return {
            "claim": self.claim,
            "applicable": self.applicable,
            "verified": self.verified if self.applicable else None,
            "reason": self.reason,
            "evidence": enc(self.evidence),
            "counterexample": enc(self.counterexample),
        }


def _not_applicable(claim: str, reason: str) -> TheoremVerdict:
    return TheoremVerdict(claim, False, reason=reason)


def commutator_outside_nucleus(t: Loop) -> tuple[int, int] | None:
    N = set(nucleus(t))
    for x in t.elements:
        for y in t.elements:
            if commutator(t, x, y) not in N:
                return x, y
    return None


def has_nuclear_commutators(t: Loop) -> bool:
    """Every commutator [x, y] lies in the nucleus.

    Checking the set of commutators is equivalent to checking the subloop it
    generates, because the nucleus is itself a subloop.
    """
    return commutator_outside_nucleus(t) is None


def _compare(value: Fraction, bound: Fraction) -> str:
    return "equal" if value == bound else ("below" if value < bound else "above")


def verify_moufang_bound(t: Loop) -> TheoremVerdict:
    if not identities.is_moufang(t).holds:
        return _not_applicable(MOUFANG_BOUND, "not a Moufang loop")
    if identities.is_associative(t).holds:
        return _not_applicable(MOUFANG_BOUND, "associative (a group)")
    bad = commutator_outside_nucleus(t)
    if bad is not None:
        return _not_applicable(MOUFANG_BOUND, f"commutator [{bad[0]},{bad[1]}] is not nuclear")
    pa = p_assoc(t)
    per_loop = moufang_bound_value(t)
    ok = pa <= MOUFANG_SHARP_BOUND
    v = TheoremVerdict(MOUFANG_BOUND, True, ok, {
        "p_assoc": pa, "per_loop_bound": per_loop, "bound": MOUFANG_SHARP_BOUND,
        "relation": _compare(pa, MOUFANG_SHARP_BOUND),
        "within_per_loop_bound": pa <= per_loop,
    })
    if not ok:
        v.counterexample = {"p_assoc": pa}
    return v


def verify_cc_bound(t: Loop) -> TheoremVerdict:
    if not identities.is_cc(t).holds:
        return _not_applicable(CC_BOUND, "not a CC loop")
    if identities.is_associative(t).holds:
        return _not_applicable(CC_BOUND, "associative (a group)")
    pa = p_assoc(t)
    per_loop = cc_bound_value(t)
    ok = pa <= CC_SHARP_BOUND
    v = TheoremVerdict(CC_BOUND, True, ok, {
        "p_assoc": pa, "per_loop_bound": per_loop, "bound": CC_SHARP_BOUND,
        "relation": _compare(pa, CC_SHARP_BOUND),
        "within_per_loop_bound": pa <= per_loop,
    })
    if not ok:
        v.counterexample = {"p_assoc": pa}
    return v


def verify_index_corollary(t: Loop) -> TheoremVerdict:
    if not identities.is_moufang(t).holds:
        return _not_applicable(INDEX_8, "not a Moufang loop")
    if identities.is_associative(t).holds:
        return _not_applicable(INDEX_8, "associative (a group)")
    N = nucleus(t)
    dec = cosets(t, N)
    index = dec.index
    ok = dec.partition and index is not None and index >= 8
    v = TheoremVerdict(INDEX_8, True, ok, {
        "nucleus": N, "nucleus_size": len(N), "cosets_partition": dec.partition, "index": index,
    })
    if not ok:
        v.counterexample = {"nucleus": N, "index": index}
    return v


def _two_generated(q: Loop) -> tuple[int, int] | None:
    for a in q.elements:
        for b in range(a, q.order):
            if len(_closure(q, {q.identity, a, b})) == q.order:
                return a, b
    return None


def verify_two_generator_lemma(t: Loop) -> TheoremVerdict:
    """If t is a nonassociative Moufang loop, no quotient by a normal A <= N is 2-generated."""
    if not identities.is_moufang(t).holds:
        return _not_applicable(TWO_GEN, "not a Moufang loop")
    if identities.is_associative(t).holds:
        return _not_applicable(TWO_GEN, "associative (a group)")
    if t.order > MAX_SWEEP_ORDER:
        return _not_applicable(TWO_GEN, f"order above the sweep limit {MAX_SWEEP_ORDER}")
    N = set(nucleus(t))
    checked = []
    for A in all_subloops(t):
        if not set(A) <= N or not is_normal(t, A):
            continue
        q = quotient(t, A).loop
        gens = _two_generated(q)
        checked.append({"subloop": A, "quotient_order": q.order, "two_generated": gens is not None})
        if gens is not None:
            return TheoremVerdict(TWO_GEN, True, False, {"checked": tuple(checked)},
                                  counterexample={"subloop": A, "coset_generators": gens})
    return TheoremVerdict(TWO_GEN, True, True, {"checked": tuple(checked)})


def verify_moufang_theorem(t: Loop) -> TheoremVerdict:
    """Trivial-associator triples generate associative subloops; triviality is symmetric."""
    if not identities.is_moufang(t).holds:
        return _not_applicable(MOUFANG_THM, "not a Moufang loop")
    if t.order > MAX_SWEEP_ORDER:
        return _not_applicable(MOUFANG_THM, f"order above the sweep limit {MAX_SWEEP_ORDER}")
    e = t.identity
    span_ok: dict[frozenset, bool] = {}
    inverse = {x: t.left_div(x, e) for x in t.elements}
    trivial = 0
    for x in t.elements:
        for y in t.elements:
            for z in t.elements:
                if associator(t, x, y, z) != e:
                    continue
                trivial += 1
                for perm in permutations((x, y, z)):
                    if associator(t, *perm) != e:
                        return TheoremVerdict(MOUFANG_THM, True, False, {"trivial_triples": trivial},
                                              counterexample={"triple": (x, y, z), "permuted": perm})
                if associator(t, inverse[x], y, z) != e:
                    return TheoremVerdict(MOUFANG_THM, True, False, {"trivial_triples": trivial},
                                          counterexample={"triple": (x, y, z), "first_inverted": (inverse[x], y, z)})
                span = frozenset(_closure(t, {e, x, y, z}))
                ok = span_ok.get(span)
                if ok is None:
                    ok = span_ok[span] = is_associative_set(t, span)
                if not ok:
                    return TheoremVerdict(MOUFANG_THM, True, False, {"trivial_triples": trivial},
                                          counterexample={"triple": (x, y, z),
                                                          "subloop": ElementSet.of(span, t.order)})
    return TheoremVerdict(MOUFANG_THM, True, True, {
        "trivial_triples": trivial, "distinct_subloops_checked": len(span_ok)})


def verify_lagrange(t: Loop) -> TheoremVerdict:
    if not (identities.is_moufang(t).holds or identities.is_cc(t).holds):
        return _not_applicable(LAGRANGE, "neither Moufang nor CC")
    if t.order > MAX_SWEEP_ORDER:
        return _not_applicable(LAGRANGE, f"order above the sweep limit {MAX_SWEEP_ORDER}")
    subs = all_subloops(t)
    orders = sorted({len(s) for s in subs})
    for s in subs:
        if t.order % len(s):
            return TheoremVerdict(LAGRANGE, True, False, {"subloop_orders": tuple(orders)},
                                  counterexample={"subloop": s})
    return TheoremVerdict(LAGRANGE, True, True, {
        "subloop_count": len(subs), "subloop_orders": tuple(orders)})


def verify_fixed_point_lemma(t: Loop) -> TheoremVerdict:
    """Checks on L(x,y) and the partial sets.

    For Moufang loops with nuclear commutators, for every pair (x, y): L(x,y)
    is a pseudo-automorphism with companion [y,x]; its fixed points are
    exactly partial_set(x, y); that set is a subloop; and
    L(x,y)(z) * [z,y,x] = z for every z. For CC loops only the subloop check
    applies.
    """
    moufang = identities.is_moufang(t).holds
    nuclear = has_nuclear_commutators(t)
    cc = identities.is_cc(t).holds
    if moufang and nuclear:
        mode = "moufang"
    elif cc:
        mode = "cc"
    else:
        return _not_applicable(FIXED_POINT, "needs a Moufang loop with nuclear commutators, or a CC loop")
    pairs = 0
    for x in t.elements:
        for y in t.elements:
            pairs += 1
            part = partial_set(t, x, y)
            if not is_subloop(t, part):
                return TheoremVerdict(FIXED_POINT, True, False, {"mode": mode},
                                      counterexample={"pair": (x, y), "check": "subloop", "set": part})
            if mode != "moufang":
                continue
            L = pseudo_L(t, x, y)
            if L.companion != commutator(t, y, x) or not is_pseudo_automorphism(t, L.map, L.companion):
                return TheoremVerdict(FIXED_POINT, True, False, {"mode": mode},
                                      counterexample={"pair": (x, y), "check": "pseudo_automorphism"})
            if ElementSet.of(L.fixed_points(), t.order) != part:
                return TheoremVerdict(FIXED_POINT, True, False, {"mode": mode},
                                      counterexample={"pair": (x, y), "check": "fixed_points",
                                                      "fixed": L.fixed_points(), "set": part})
            for z in t.elements:
                if t.mul(L.map[z], associator(t, z, y, x)) != z:
                    return TheoremVerdict(FIXED_POINT, True, False, {"mode": mode},
                                          counterexample={"pair": (x, y), "check": "formula", "z": z})
    return TheoremVerdict(FIXED_POINT, True, True, {"mode": mode, "pairs": pairs})


VERIFIERS = {
    MOUFANG_BOUND: verify_moufang_bound,
    CC_BOUND: verify_cc_bound,
    INDEX_8: verify_index_corollary,
    TWO_GEN: verify_two_generator_lemma,
    MOUFANG_THM: verify_moufang_theorem,
    LAGRANGE: verify_lagrange,
    FIXED_POINT: verify_fixed_point_lemma,
}


def verify(t: Loop, claims=CLAIMS) -> list[TheoremVerdict]:
    unknown = [c for c in claims if c not in VERIFIERS]
    if unknown:
        raise KeyError(f"unknown claim(s): {', '.join(unknown)}")
    return [VERIFIERS[c](t) for c in claims]
