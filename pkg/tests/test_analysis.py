import pytest

from paretocheck import (
    AXIOMS,
    DomainIndex,
    THEOREM_AXIOMS,
    check_axiom,
    example_rule,
    gap,
    height,
    index_profile,
    make_rule,
    parse_profile,
    pareto_set,
    perturbation_search,
    rank_of,
    reproduce_example,
    stability_descent_audit,
    tops_union,
    verify_theorem,
)
from paretocheck.analysis import (
    CONSISTENT_COUNTEREXAMPLE,
    CONSISTENT_EQUAL,
    THEOREM_CONTRADICTION,
)
from paretocheck.rules import Correspondence

CATALOG = ("pareto", "tops", "borda", "plurality", "copeland", "dictator:1", "all")


# -- height -------------------------------------------------------------------


def test_height_absent_for_pareto_rule(d33):
    result = height(make_rule("pareto", 3, 3), d33)
    assert result.height is None
    assert result.profiles_with_unchosen == 0
    assert result.witnesses == ()


def test_height_example_5(d43xyzw):
    result = height(example_rule(5), d43xyzw)
    assert result.height == 2
    assert result.profiles_with_unchosen == 1
    (w,) = result.witnesses
    assert w.profile == "xyzw|ywxz|zwxy"
    assert w.rank == 2 and w.individual == 2 and w.alternative == "w"


def test_height_example_8(d52paper):
    result = height(example_rule(8), d52paper)
    assert result.height == 3
    assert result.profiles_with_unchosen == 2
    assert {w.profile for w in result.witnesses} == {"xywzt|ztwxy", "ztwxy|xywzt"}
    assert all(w.rank == 3 and w.alternative == "w" for w in result.witnesses)


def test_height_absent_plus_pareto_pass_means_equality(d33):
    # an unchosen undominated alternative never occurring, together with the
    # dominated-exclusion condition, pins the rule down pointwise
    import numpy as np

    for name in CATALOG:
        G = make_rule(name, 3, 3)
        if height(G, d33).height is None and check_axiom("pareto", G, d33).passed:
            assert np.array_equal(G.value_table(d33), d33.pareto_table), name


# -- gap ----------------------------------------------------------------------


def test_gap_examples():
    ex5 = example_rule(5)
    u5 = parse_profile("xyzw|ywxz|zwxy", ex5.universe)
    assert gap(ex5, u5, 1, ex5.universe.index("w")) == 0
    ex8 = example_rule(8)
    u8 = parse_profile("xywzt|ztwxy", ex8.universe)
    assert gap(ex8, u8, 0, ex8.universe.index("w")) == 1
    assert gap(ex8, u8, 1, ex8.universe.index("w")) == 1


def test_gap_adjacent_chosen_is_zero(d33):
    G = example_rule(10)
    u = parse_profile("cba|acb|abc", G.universe)
    b = G.universe.index("b")
    assert gap(G, u, 0, b) == 0  # c is chosen and directly above b


def test_gap_diagnostic_errors():
    G = example_rule(5)
    u = parse_profile("xyzw|ywxz|zwxy", G.universe)
    uni = G.universe
    with pytest.raises(ValueError, match="chosen"):
        gap(G, u, 0, uni.index("x"))
    v = parse_profile("xyzw|xyzw|xyzw", uni)
    with pytest.raises(ValueError, match="dominated"):
        gap(G, v, 0, uni.index("w"))
    ex4 = example_rule(4)
    u4 = parse_profile("xyz|yzx|zxy", ex4.universe)
    with pytest.raises(ValueError, match="above"):
        gap(ex4, u4, 1, ex4.universe.index("y"))  # y tops #2, nothing above


# -- theorem harness ----------------------------------------------------------


def test_theorem_pareto_consistent_equal():
    for k, m in [(1, 2), (2, 3), (3, 4), (4, 5)]:
        for n in (2, 3):
            d = DomainIndex(m, n)
            result = verify_theorem(k, make_rule("pareto", m, n), d)
            assert result.verdict == CONSISTENT_EQUAL, (k, n)


def test_theorem_example_counterexamples(d43xyzw, d53paper):
    r = verify_theorem(3, example_rule(5), d43xyzw)
    assert r.verdict == CONSISTENT_COUNTEREXAMPLE and r.failing_axiom == "monotonicity"
    r = verify_theorem(4, example_rule(9), d53paper)
    assert r.verdict == CONSISTENT_COUNTEREXAMPLE and r.failing_axiom == "strong-stability"
    d52 = DomainIndex(5, 2, "xyzwt")
    r = verify_theorem(4, example_rule(8), d52)
    assert r.verdict == CONSISTENT_COUNTEREXAMPLE and r.failing_axiom == "strong-stability"


def test_theorem_size_mismatch(d33):
    with pytest.raises(ValueError):
        verify_theorem(1, make_rule("pareto", 3, 3), d33)
    with pytest.raises(ValueError):
        verify_theorem(4, make_rule("pareto", 3, 3), d33)
    with pytest.raises(ValueError):
        verify_theorem(5, make_rule("pareto", 3, 3), d33)


def test_theorem_never_contradicted_small_sizes():
    for k, m in [(1, 2), (2, 3), (3, 4)]:
        for n in (2, 3):
            d = DomainIndex(m, n)
            for name in CATALOG:
                result = verify_theorem(k, make_rule(name, m, n), d)
                assert result.verdict != THEOREM_CONTRADICTION, (k, name, n)


# -- perturbation search -------------------------------------------------------


def test_search_empty_at_two_alternatives(d22, d23):
    assert perturbation_search(d22, ("pareto", "tops-in")) == []
    assert perturbation_search(d23, ("pareto", "tops-in")) == []


def test_search_empty_at_three_alternatives(d32, d33):
    axioms = ("pareto", "tops-in", "balancedness")
    assert perturbation_search(d32, axioms) == []
    assert perturbation_search(d33, axioms) == []


def test_search_finds_fixed_profile_deviation_at_4_3(d43):
    devs = perturbation_search(d43, ("pareto", "tops-in", "balancedness"))
    assert devs
    relabeled = ("abcd|bdac|cdab",)  # the fixed four-alternative profile in a..d
    hits = [dev for dev in devs if dev.profiles == relabeled]
    assert any(dev.choice_sets == (("a", "b", "c"),) for dev in hits)


def test_search_empty_with_monotonicity_at_m4(d42, d43):
    axioms = ("pareto", "tops-in", "balancedness", "monotonicity")
    assert perturbation_search(d42, axioms) == []
    assert perturbation_search(d43, axioms) == []


def test_search_orbit_finds_the_anchored_pair_at_5_2(d52):
    devs = perturbation_search(
        d52, ("pareto", "tops-in", "balancedness", "weak-monotonicity"), mode="orbit")
    assert len(devs) == 1
    (dev,) = devs
    assert dev.mode == "orbit"
    pair = dict(zip(dev.profiles, dev.choice_sets))
    assert pair["abdce|cedab"] == ("a", "c")
    assert pair["cedab|abdce"] == ("a", "c")
    assert len(dev.profiles) == 120


def test_search_orbit_empty_with_strong_stability_at_5_2(d52):
    devs = perturbation_search(
        d52,
        ("pareto", "tops-in", "balancedness", "weak-monotonicity", "strong-stability"),
        mode="orbit")
    assert devs == []


def test_search_results_pass_full_domain_recheck(d43, d52):
    # locality-based acceptance is sound: re-verify with the full checkers
    devs = perturbation_search(d43, ("pareto", "tops-in", "balancedness"))
    for dev in devs[:5] + devs[-5:]:
        G = dev.to_correspondence(d43)
        for axiom in ("pareto", "tops-in", "balancedness"):
            assert check_axiom(axiom, G, d43).passed, (dev.profiles, axiom)
    orbit = perturbation_search(
        d52, ("pareto", "tops-in", "balancedness", "weak-monotonicity"), mode="orbit")
    G = orbit[0].to_correspondence(d52)
    for axiom in ("pareto", "tops-in", "balancedness", "weak-monotonicity"):
        assert check_axiom(axiom, G, d52).passed, axiom


def test_search_deviations_never_contradict_theorems(d43):
    devs = perturbation_search(d43, ("pareto", "tops-in", "balancedness"))
    for dev in devs[:8]:
        result = verify_theorem(3, dev.to_correspondence(d43), d43)
        assert result.verdict == CONSISTENT_COUNTEREXAMPLE
        assert result.failing_axiom == "monotonicity"


def test_search_budget_and_validation(d43):
    few = perturbation_search(d43, ("pareto", "tops-in", "balancedness"), budget=100)
    assert few  # deviations exist within the first hundred candidates
    all_of_them = perturbation_search(d43, ("pareto", "tops-in", "balancedness"))
    assert len(few) <= len(all_of_them)
    with pytest.raises(ValueError):
        perturbation_search(d43, ("pareto",), budget=0)
    with pytest.raises(ValueError):
        perturbation_search(d43, ("pareto", "nosuch"))
    with pytest.raises(ValueError):
        perturbation_search(d43, ("pareto",), mode="orbital")


def test_search_is_deterministic(d43):
    a = perturbation_search(d43, ("pareto", "tops-in", "balancedness"))
    b = perturbation_search(d43, ("pareto", "tops-in", "balancedness"))
    assert a == b
    assert [dev.profiles for dev in a] == sorted([dev.profiles for dev in a])


# -- proof-step replays --------------------------------------------------------


@pytest.mark.parametrize("sizes", [(3, 2), (3, 3)])
def test_second_rank_escape_always_exists(sizes):
    # whenever an undominated alternative sits at rank 2, someone ranks it
    # above that individual's top
    d = DomainIndex(*sizes)
    for k in range(d.total):
        u = index_profile(d, k)
        undominated = pareto_set(u)
        for i in range(u.n):
            w = u.orderings[i][1]
            if w not in undominated:
                continue
            top = u.orderings[i][0]
            assert any(rank_of(u.orderings[j], w) < rank_of(u.orderings[j], top)
                       for j in range(u.n))


def test_descent_audit_flags_example_8(d52paper):
    steps = stability_descent_audit(example_rule(8), d52paper)
    assert len(steps) == 4
    assert {s.outcome for s in steps} == {"stability-violation"}
    assert {s.gap_before for s in steps} == {1}
    assert {s.unchosen for s in steps} == {"w"}


def test_descent_audit_empty_when_nothing_unchosen(d33):
    assert stability_descent_audit(make_rule("pareto", 3, 3), d33) == ()
    G10 = example_rule(10)
    d10 = DomainIndex(3, 3, G10.universe.labels)
    assert stability_descent_audit(G10, d10) == ()  # gaps are all zero there


def test_descent_audit_gap_reduction_over_candidates(d52):
    # every lowering move that keeps the moved alternative must shrink the
    # gap by one; dropped outcomes carry the two side-condition flags
    outcomes = {"unchanged", "gained", "dropped", "stability-violation"}
    seen = set()
    for k in range(0, d52.total, 13):
        pv = int(d52.pareto_table[k])
        tv = int(d52.tops_table[k])
        if pv & ~tv == 0:
            continue
        u = index_profile(d52, k)
        G = Correspondence(d52.universe, 2, overrides={u.orderings: tv}, name=f"dev@{k}")
        for step in stability_descent_audit(G, d52):
            seen.add(step.outcome)
            assert step.outcome in outcomes
            if step.outcome in ("unchanged", "gained"):
                assert step.gap_after == step.gap_before - 1, step
            if step.outcome == "dropped":
                assert step.blocker_dominated_at_base is not None
                assert step.moved_loses_optimality is not None
    assert "stability-violation" in seen  # positive-gap moves occurred


def test_descent_audit_measures_gained_outcome(d52):
    # coordinated pair: at u the tops {a, c} are chosen and b sits unchosen
    # at rank 3 behind the dominated blocker d; lowering a below d lands on
    # the second fixed profile, where d joins the choice set.  The gap for b
    # must shrink from 1 to 0.
    from paretocheck import lower_one, parse_profile

    uni = d52.universe
    u = parse_profile("adbce|cebad", uni)
    v = lower_one(u, 0, uni.index("a"))
    assert str(v) == "dabce|cebad"
    G = Correspondence(uni, 2, overrides={
        u.orderings: uni.mask_from_labels("ac"),
        v.orderings: uni.mask_from_labels("acd"),
    }, name="coordinated-pair")
    steps = stability_descent_audit(G, d52)
    gained = [s for s in steps if s.outcome == "gained"]
    assert len(gained) == 1
    (step,) = gained
    assert step.profile == "adbce|cebad"
    assert (step.unchosen, step.chosen_above, step.blocker) == ("b", "a", "d")
    assert step.gap_before == 1 and step.gap_after == 0


# -- example reproduction -------------------------------------------------------


@pytest.mark.parametrize("k", list(range(1, 9)) + [10, 11])
def test_reproduce_examples_fast(k):
    report = reproduce_example(k)
    assert report.ok, [c.name for c in report.checks if not c.passed]


def test_reproduce_example_rejects_unknown():
    with pytest.raises(ValueError):
        reproduce_example(12)


def test_theorem_axiom_lists_are_nested():
    assert set(THEOREM_AXIOMS[1]) < set(THEOREM_AXIOMS[2]) < set(THEOREM_AXIOMS[3])
    assert "strong-stability" in THEOREM_AXIOMS[4]
    assert "weak-monotonicity" in THEOREM_AXIOMS[4]
    assert "monotonicity" not in THEOREM_AXIOMS[4]
