import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from looplab import catalog, isomorphic
from looplab.enumerator import (EnumerationJob, EnumerationStats, canonical_form, canonical_table,
                                counterexample_search, enumerate_all, enumerate_loops, latin_squares)
from looplab.errors import OrderTooLarge, UnknownFilter
from looplab.identities import is_cc, is_moufang
from looplab.probability import p_assoc
from looplab.table import Classification, validate
from oracles import brute_canonical, normalized_latin_squares


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tiny_orders_have_one_class(n):
    assert len(enumerate_all(n, up_to_iso=True)) == 1


def test_order6_cc_nonassociative():
    loops = enumerate_all(6, ("cc", "nonassociative"))
    assert loops
    values = [p_assoc(t) for t in loops]
    assert max(values) <= Fraction(7, 8)
    assert Fraction(7, 8) in values


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_completeness_against_generate_and_test(n):
    assert [t.products for t in enumerate_all(n)] == normalized_latin_squares(n)


def test_output_is_lexicographic_and_sound(loops_upto6):
    six = [t.products for t in loops_upto6 if t.order == 6]
    assert six == sorted(six) and len(six) == len(set(six)) == 9408
    assert all(validate(p).classification is Classification.LOOP for p in six[::50])


def test_filters_are_sound():
    for t in enumerate_all(6, ("moufang",)):
        assert is_moufang(t, "all").holds
    for t in enumerate_all(5, ("cc",)):
        assert is_cc(t).holds


def test_up_to_iso_representative_is_least(loops_upto6):
    reps = enumerate_all(5, up_to_iso=True)
    five = [t for t in loops_upto6 if t.order == 5]
    for r in reps:
        cls = [t for t in five if isomorphic(t, r) is not None]
        assert min(t.products for t in cls) == r.products


def test_iso_rejection_matches_pairwise_isomorphism(loops_upto6):
    five = [t for t in loops_upto6 if t.order == 5]
    by_form = {}
    for t in five:
        by_form.setdefault(canonical_form(t), []).append(t)
    for group in by_form.values():
        assert all(isomorphic(group[0], t) is not None for t in group)
    keys = [g[0] for g in by_form.values()]
    for i, a in enumerate(keys):
        for b in keys[i + 1:]:
            assert isomorphic(a, b) is None


def test_canonical_form_is_least_relabeling(loops_upto6):
    for t in [u for u in loops_upto6 if u.order <= 5] + loops_upto6[-9408::61]:
        assert canonical_table(t) == brute_canonical(t.products, t.identity)


def test_canonical_form_examples():
    c3 = catalog.cyclic(3).table
    assert canonical_form(c3) == canonical_form(c3.relabel([0, 2, 1]))
    assert canonical_form(catalog.cyclic(4).table) != canonical_form(catalog.klein4().table)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 5), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabeling(k, rnd):
    t = enumerate_all(5, up_to_iso=True)[k]
    f = list(range(5))
    rnd.shuffle(f)
    assert canonical_form(t.relabel(f)) == canonical_form(t)


def test_canonical_form_nonnormalized_input():
    t = catalog.q8().table
    f = [3, 0, 1, 2, 4, 5, 6, 7]
    u = t.relabel(f)
    assert u.identity == 3
    assert canonical_form(u) == canonical_form(t)


def test_limit_and_stats():
    stats = EnumerationStats()
    out = list(enumerate_loops(EnumerationJob(5, limit=3), stats))
    assert len(out) == 3 and stats.emitted == 3
    stats = EnumerationStats()
    list(enumerate_loops(EnumerationJob(5, ("nonassociative",), up_to_iso=True), stats))
    assert stats.squares == 56 and stats.isomorphism_classes == 5
    assert "squares=56" in stats.summary()


def test_job_validation():
    with pytest.raises(UnknownFilter):
        EnumerationJob(4, ("bol",))
    with pytest.raises(OrderTooLarge):
        EnumerationJob(8)
    with pytest.raises(OrderTooLarge):
        EnumerationJob(11, ("moufang",))
    EnumerationJob(8, ("moufang",))


def test_parallel_matches_serial():
    serial = [t.products for t in enumerate_all(6, ("cc",))]
    parallel = [t.products for t in enumerate_all(6, ("cc",), workers=2)]
    assert serial == parallel
    iso_s = [t.products for t in enumerate_all(6, up_to_iso=True)]
    iso_p = [t.products for t in enumerate_all(6, up_to_iso=True, workers=3)]
    assert iso_s == iso_p and len(iso_s) == 109


def test_moufang_pruning_matches_post_filter():
    pruned = list(latin_squares(6, prune_moufang=True))
    filtered = [t.products for t in enumerate_all(6, ("moufang",))]
    assert pruned == filtered


def test_moufang_order_8_are_groups():
    loops = enumerate_all(8, ("moufang",))
    assert len(loops) == 2760
    assert len(enumerate_all(8, ("moufang",), up_to_iso=True)) == 5


def test_counterexample_search_small_orders():
    for n in range(1, 9):
        assert counterexample_search(n, Fraction(43, 64)) == []
        assert counterexample_search(n, Fraction(0)) == []
        assert counterexample_search(n, Fraction(1)) == []
