"""Duality of antichains of downsets: oracle, decomposition, recursive test."""

import random

import pytest

from lattice_dual import (
    DualityInstance,
    brute_force_dual,
    check_star,
    decompose,
    dualize_brute,
    easy_test,
    is_antichain,
    poset_from_pairs,
)
from lattice_dual import test_duality as duality_test
from lattice_dual import test_duality_stats as duality_test_stats

from conftest import planted_instance, random_instance, random_poset

CHAIN3 = poset_from_pairs(["p1", "p2", "p3"], [("p1", "p2"), ("p2", "p3")])
ANTI2 = poset_from_pairs(["p1", "p2"], [])


# -- instance validation ---------------------------------------------------


def test_instance_rejects_non_downset():
    with pytest.raises(ValueError):
        DualityInstance(CHAIN3, [{"p2"}], [])


def test_instance_rejects_non_antichain():
    with pytest.raises(ValueError):
        DualityInstance(ANTI2, [{"p1"}, {"p1", "p2"}], [])


# -- property (*) -----------------------------------------------------------


def test_check_star_examples():
    assert check_star(DualityInstance(ANTI2, [{"p1"}], [set()]))
    assert not check_star(DualityInstance(ANTI2, [{"p1"}], [{"p1", "p2"}]))
    assert check_star(DualityInstance(ANTI2, [], [{"p1"}]))


# -- degenerate cases --------------------------------------------------------


def test_easy_test_empty_a():
    assert easy_test(DualityInstance(ANTI2, [], [{"p1", "p2"}]))
    assert not easy_test(DualityInstance(ANTI2, [], [set()]))


def test_easy_test_empty_b():
    assert easy_test(DualityInstance(ANTI2, [set()], []))
    assert not easy_test(DualityInstance(ANTI2, [{"p1"}], []))


def test_easy_test_requires_a_degenerate_side():
    with pytest.raises(ValueError):
        easy_test(DualityInstance(ANTI2, [{"p1"}], [{"p2"}]))


# -- brute-force oracle -------------------------------------------------------


def test_brute_chain3_dual():
    assert brute_force_dual(DualityInstance(CHAIN3, [{"p1"}], [set()])).dual


def test_brute_antichain2_dual_pair():
    inst = DualityInstance(ANTI2, [{"p1", "p2"}], [{"p1"}, {"p2"}])
    assert brute_force_dual(inst).dual


def test_brute_not_dual_with_witness():
    verdict = brute_force_dual(DualityInstance(ANTI2, [{"p1"}], [set()]))
    assert not verdict.dual
    assert verdict.witness == frozenset({"p2"})


def test_witness_invariant():
    rng = random.Random(61)
    for _ in range(100):
        inst = random_instance(rng, 7, 4)
        verdict = brute_force_dual(inst)
        if verdict.witness is not None:
            assert not verdict.dual
            assert not any(a <= verdict.witness for a in inst.a)
            assert not any(verdict.witness <= b for b in inst.b)
            assert inst.poset.is_downset(verdict.witness)


# -- brute-force dualization --------------------------------------------------


def test_dualize_examples():
    assert set(dualize_brute([{"p1", "p2"}], ANTI2)) == {
        frozenset({"p1"}),
        frozenset({"p2"}),
    }
    assert dualize_brute([set()], ANTI2) == []
    assert dualize_brute([], ANTI2) == [frozenset({"p1", "p2"})]


def test_dualize_output_is_dual_antichain():
    rng = random.Random(67)
    for _ in range(60):
        poset = random_poset(rng, 7)
        inst = planted_instance(rng, 7, 4)
        dual = list(inst.b)
        assert is_antichain(dual)
        assert brute_force_dual(inst).dual


# -- decomposition ------------------------------------------------------------


def test_decompose_worked_example():
    inst = DualityInstance(CHAIN3, [{"p1", "p2"}], [{"p1"}])
    sub1, sub2 = decompose(inst, "p1")
    assert sub1.poset.elements == ("p2", "p3")
    assert sub1.a == (frozenset({"p2"}),)
    assert sub1.b == (frozenset(),)
    assert sub2.poset.elements == ()
    assert sub2.a == ()
    assert sub2.b == (frozenset(),)


def test_decompose_b_member_without_p_dropped_from_b1():
    # B member not containing p contributes nothing to the first subproblem
    inst = DualityInstance(ANTI2, [{"p1", "p2"}], [{"p1"}, {"p2"}])
    sub1, _ = decompose(inst, "p1")
    assert sub1.b == (frozenset(),)  # only the member containing p1 survives


def test_decompose_with_full_downset():
    inst = DualityInstance(CHAIN3, [{"p1"}], [set()])
    sub1, _ = decompose(inst, "p3")
    assert sub1.poset.elements == ()


def test_decompose_rejects_unknown_element():
    with pytest.raises(ValueError):
        decompose(DualityInstance(ANTI2, [], []), "p9")


def test_decompose_outputs_are_valid_instances():
    rng = random.Random(71)
    for _ in range(100):
        inst = random_instance(rng, 7, 4)
        if not inst.poset.elements:
            continue
        p = rng.choice(inst.poset.elements)
        sub1, sub2 = decompose(inst, p)
        for sub in (sub1, sub2):
            assert check_star(sub)
            assert is_antichain(sub.a) and is_antichain(sub.b)
            for member in sub.a + sub.b:
                assert sub.poset.is_downset(member)


def test_decomposition_lemma_randomized():
    rng = random.Random(73)
    for _ in range(150):
        inst = random_instance(rng, 7, 4)
        if not inst.poset.elements:
            continue
        p = rng.choice(inst.poset.elements)
        sub1, sub2 = decompose(inst, p)
        whole = brute_force_dual(inst).dual
        parts = brute_force_dual(sub1).dual and brute_force_dual(sub2).dual
        assert whole == parts


# -- recursive test ------------------------------------------------------------


def test_duality_spec_examples():
    assert duality_test(DualityInstance(CHAIN3, [{"p1"}], [set()]))
    assert duality_test(DualityInstance(ANTI2, [{"p1", "p2"}], [{"p1"}, {"p2"}]))
    assert not duality_test(DualityInstance(ANTI2, [{"p1"}], [set()]))


def test_duality_rejects_star_violation():
    with pytest.raises(ValueError):
        duality_test(DualityInstance(ANTI2, [{"p1"}], [{"p1", "p2"}]))


def test_duality_stats_counts_calls():
    inst = DualityInstance(ANTI2, [{"p1", "p2"}], [{"p1"}, {"p2"}])
    dual, calls = duality_test_stats(inst)
    assert dual and calls >= 1


def test_duality_agrees_with_oracle_randomized():
    rng = random.Random(79)
    for _ in range(150):
        inst = random_instance(rng, 8, 5)
        assert duality_test(inst) == brute_force_dual(inst).dual


def test_duality_agrees_on_planted_duals():
    rng = random.Random(83)
    for _ in range(100):
        inst = planted_instance(rng, 8, 5)
        assert duality_test(inst)


def test_duality_empty_poset():
    empty = poset_from_pairs([], [])
    # the single downset is the empty set; A = {∅} covers it
    assert duality_test(DualityInstance(empty, [set()], []))
    assert duality_test(DualityInstance(empty, [], [set()]))
