import random

import pytest
from hypothesis import given, settings, strategies as st

from looplab import Classification, Loop, MagmaTable, isomorphic, translations, two_sided_inverse, validate
from looplab.catalog import cyclic_table, elementary_abelian_table
from looplab.errors import NotALoop, OrderMismatch, OutOfRangeEntry
from looplab.structure import invert


def test_singleton_is_loop():
    v = validate([[0]])
    assert v.classification is Classification.LOOP
    assert v.loop.identity == 0


def test_cyclic3_is_loop():
    v = validate([[(i + j) % 3 for j in range(3)] for i in range(3)])
    assert v.classification is Classification.LOOP and v.loop.identity == 0


def test_repeated_column_is_magma():
    v = validate([[0, 1], [1, 1]])
    assert v.classification is Classification.MAGMA
    assert v.defect.endswith("repeats value 1")


def test_latin_without_identity_is_quasigroup():
    # x*y = -x-y mod 3 is Latin with no identity
    v = validate([[(-i - j) % 3 for j in range(3)] for i in range(3)])
    assert v.classification is Classification.QUASIGROUP
    assert v.loop is None


def test_identity_need_not_be_zero():
    # Z/3 relabelled so that the identity is element 2
    rows = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    v = validate(rows)
    assert v.classification is Classification.LOOP and v.loop.identity == 2


def test_out_of_range_entry():
    with pytest.raises(OutOfRangeEntry) as exc:
        MagmaTable.from_rows([[0, 1], [1, 2]])
    assert (exc.value.row, exc.value.col) == (1, 1)


def test_from_rows_rejects_non_loop():
    with pytest.raises(NotALoop):
        Loop.from_rows([[0, 1], [1, 1]])


def test_mul_examples(q8):
    c3 = cyclic_table(3)
    assert c3.mul(1, 2) == 0
    assert all(c3.mul(0, x) == x for x in range(3))
    assert q8.mul(1, 2) == 3  # i * j = k


def test_division_examples():
    c5 = cyclic_table(5)
    assert c5.left_div(2, 1) == 4
    assert all(c5.left_div(a, a) == 0 for a in range(5))


def test_translations():
    c3 = cyclic_table(3)
    L1, R1 = translations(c3, 1)
    assert L1 == (1, 2, 0) and R1 == (1, 2, 0)
    Le, Re = translations(c3, 0)
    assert Le == Re == (0, 1, 2)


def test_two_sided_inverse(o16):
    c4 = cyclic_table(4)
    assert two_sided_inverse(c4, 0) == 0
    assert two_sided_inverse(c4, 1) == 3
    assert all(two_sided_inverse(o16, x) is not None for x in range(16))


def test_isomorphic_examples(o16):
    assert isomorphic(o16, o16) is not None
    assert isomorphic(cyclic_table(4), elementary_abelian_table(4)) is None
    with pytest.raises(OrderMismatch):
        isomorphic(cyclic_table(3), cyclic_table(4))


def test_invariants_on_small_loops(loops_upto6):
    for t in loops_upto6[::7]:
        for a in t.elements:
            L, _ = translations(t, a)
            Linv = invert(L)
            for b in t.elements:
                assert t.mul(a, t.left_div(a, b)) == b
                assert t.mul(t.right_div(a, b), a) == b
                assert Linv[b] == t.left_div(a, b)


def test_validate_idempotent_and_monotone(loops_upto6):
    for t in loops_upto6[::101]:
        v1 = validate(t.products)
        v2 = validate(v1.loop.products)
        assert v1.classification is v2.classification is Classification.LOOP


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["o16", "q8", "smallest_cc", "cyclic6"]), st.randoms(use_true_random=False))
def test_isomorphic_finds_witness_for_relabeling(name, rnd):
    from looplab import catalog

    t = catalog.get(name).table
    f = list(range(t.order))
    rnd.shuffle(f)
    u = t.relabel(f)
    w = isomorphic(t, u)
    assert w is not None
    assert all(w[t.mul(x, y)] == u.mul(w[x], w[y]) for x in t.elements for y in t.elements)
    back = isomorphic(u, t)
    assert back is not None
    winv = invert(w)
    assert all(winv[u.mul(x, y)] == t.mul(winv[x], winv[y]) for x in u.elements for y in u.elements)


def test_isomorphic_agrees_with_brute_force_order5(loops_upto6):
    from oracles import brute_isomorphic

    five = [t for t in loops_upto6 if t.order == 5]
    rng = random.Random(0)
    for _ in range(150):
        a, b = rng.choice(five), rng.choice(five)
        assert (isomorphic(a, b) is not None) == (brute_isomorphic(a.products, b.products) is not None)
