import math

import pytest
from hypothesis import given, settings, strategies as st

from paretocheck import (
    DomainIndex,
    ParseError,
    Profile,
    TranspositionSite,
    Universe,
    apply_alternative_permutation,
    apply_individual_permutation,
    apply_transposition,
    enumerate_orderings,
    index_profile,
    lower_one,
    lower_to_just_below,
    pareto_dominates,
    parse_profile,
    profile_index,
    raise_one,
    raise_to_just_below,
    rank_of,
    transposition_sites,
)


# -- enumeration -------------------------------------------------------------


def test_two_alternatives_both_orders():
    assert enumerate_orderings(2) == ((0, 1), (1, 0))


def test_three_alternatives_lexicographic_endpoints():
    orderings = enumerate_orderings(3)
    assert len(orderings) == 6
    assert orderings[0] == (0, 1, 2)  # (a, b, c)
    assert orderings[-1] == (2, 1, 0)  # (c, b, a)


def test_five_alternatives_count_matches_factorial():
    # oracle: factorial computed independently of the enumeration
    expected = 1
    for k in range(2, 6):
        expected *= k
    got = enumerate_orderings(5)
    assert len(got) == expected == math.factorial(5)
    assert len(set(got)) == expected


@pytest.mark.parametrize("m", [1, 9, 0])
def test_enumeration_size_guard(m):
    with pytest.raises(ValueError):
        enumerate_orderings(m)


# -- indexing ----------------------------------------------------------------


def test_first_profile_is_all_first_ordering(d22):
    u = index_profile(d22, 0)
    assert str(u) == "ab|ab"


@pytest.mark.parametrize("sizes", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3)])
def test_round_trip_exhaustive_small_domains(sizes):
    d = DomainIndex(*sizes)
    for k in range(d.total):
        assert profile_index(d, index_profile(d, k)) == k


def test_total_is_independent_power(d33):
    assert d33.total == 6 ** 3 == 216


def test_index_most_significant_first(d32):
    # profile index = base-m! number, individual 1 most significant
    u = index_profile(d32, 2 * 6 + 5)
    assert d32.ordering_index(u.orderings[0]) == 2
    assert d32.ordering_index(u.orderings[1]) == 5


def test_index_range_and_universe_errors(d32, d33xyz):
    with pytest.raises(ValueError):
        index_profile(d32, d32.total)
    with pytest.raises(ValueError):
        index_profile(d32, -1)
    u = index_profile(d33xyz, 17)
    with pytest.raises(ValueError):
        profile_index(d32, u)  # wrong universe and n


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 5), st.integers(2, 3), st.data())
def test_round_trip_sampled(m, n, data):
    d = DomainIndex(m, n)
    k = data.draw(st.integers(0, d.total - 1))
    assert profile_index(d, index_profile(d, k)) == k


def test_domain_size_caps():
    with pytest.raises(ValueError):
        DomainIndex(9, 2)
    with pytest.raises(ValueError):
        DomainIndex(3, 7)
    d = DomainIndex(3, 7, max_individuals=7)  # cap is overridable
    assert d.total == 6 ** 7


# -- ranks and dominance -----------------------------------------------------


def test_rank_of_second_position():
    u = parse_profile("xwzy|wxyz")
    x, w = u.universe.index("x"), u.universe.index("w")
    assert rank_of(u.orderings[0], w) == 2
    assert rank_of(u.orderings[0], x) == 1


def test_ranks_form_full_range():
    r = (2, 0, 3, 1)
    assert sorted(rank_of(r, x) for x in range(4)) == [1, 2, 3, 4]


def test_unanimous_dominance():
    u = parse_profile("xyz|xyz")
    uni = u.universe
    assert pareto_dominates(u, uni.index("x"), uni.index("y"))
    assert not pareto_dominates(u, uni.index("y"), uni.index("x"))


def test_dominance_on_fixed_four_alternative_profile():
    # oracle: exhaustive pairwise scan finds no dominated pair here
    u = parse_profile("xyzw|ywxz|zwxy")
    for x in range(4):
        for y in range(4):
            if x != y:
                assert not pareto_dominates(u, x, y)


def test_dominance_on_fixed_five_alternative_pair():
    u = parse_profile("xywzt|ztwxy")
    uni = u.universe
    assert pareto_dominates(u, uni.index("x"), uni.index("y"))
    assert pareto_dominates(u, uni.index("z"), uni.index("t"))
    assert not pareto_dominates(u, uni.index("x"), uni.index("w"))


def test_dominance_rejects_equal_arguments():
    u = parse_profile("ab|ba")
    with pytest.raises(ValueError):
        pareto_dominates(u, 0, 0)


# -- transposition sites -----------------------------------------------------


def test_cyclic_profile_has_no_sites():
    assert transposition_sites(parse_profile("xyz|yzx|zxy")) == ()


def test_fixed_four_alternative_profile_has_no_sites():
    assert transposition_sites(parse_profile("xyzw|ywxz|zwxy")) == ()


def test_site_orientation_and_membership():
    u = parse_profile("cba|acb|abc")
    uni = u.universe
    site = TranspositionSite(uni.index("c"), uni.index("b"), 0, 2)
    assert site in transposition_sites(u)


def test_sites_match_bruteforce_quadruple_scan(d33):
    # oracle: scan all (x, y, i, j) quadruples directly
    for k in range(0, d33.total, 7):
        u = index_profile(d33, k)
        expected = set()
        for i in range(u.n):
            for j in range(u.n):
                if i == j:
                    continue
                ri, rj = u.orderings[i], u.orderings[j]
                for x in range(u.m):
                    for y in range(u.m):
                        if x == y:
                            continue
                        adj_i = ri.index(x) + 1 == ri.index(y)
                        adj_j = rj.index(y) + 1 == rj.index(x)
                        if adj_i and adj_j:
                            expected.add((frozenset((i, j)), frozenset((x, y))))
        got = transposition_sites(u)
        assert len(got) == len(expected)
        assert {(frozenset((s.i, s.j)), frozenset((s.x, s.y))) for s in got} == expected
        for s in got:
            ri, rj = u.orderings[s.i], u.orderings[s.j]
            assert ri.index(s.x) + 1 == ri.index(s.y)
            assert rj.index(s.y) + 1 == rj.index(s.x)


def test_apply_transposition_fixed_example():
    u = parse_profile("cba|acb|abc")
    uni = u.universe
    v = apply_transposition(u, TranspositionSite(uni.index("c"), uni.index("b"), 0, 2))
    assert str(v) == "bca|acb|acb"


def test_apply_transposition_puts_w_on_top():
    u = parse_profile("xwz|wxz")
    uni = u.universe
    v = apply_transposition(u, TranspositionSite(uni.index("x"), uni.index("w"), 0, 1))
    assert v.orderings[0][0] == uni.index("w")


def test_apply_transposition_rejects_invalid_site():
    u = parse_profile("abc|abc")
    with pytest.raises(ValueError):
        apply_transposition(u, TranspositionSite(0, 1, 0, 1))


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 5), st.integers(2, 3), st.data())
def test_transposition_involution_and_two_position_change(m, n, data):
    d = DomainIndex(m, n)
    u = index_profile(d, data.draw(st.integers(0, d.total - 1)))
    sites = transposition_sites(u)
    if not sites:
        return
    s = sites[data.draw(st.integers(0, len(sites) - 1))]
    v = apply_transposition(u, s)
    changed = [i for i in range(n) if u.orderings[i] != v.orderings[i]]
    assert changed == sorted((s.i, s.j))
    for i in changed:
        diffs = [p for p in range(m) if u.orderings[i][p] != v.orderings[i][p]]
        assert len(diffs) == 2 and diffs[1] == diffs[0] + 1
    # the reversed site appears at v and returns to u
    back = TranspositionSite(s.y, s.x, s.i, s.j)
    assert back in transposition_sites(v)
    assert apply_transposition(v, back) == u


# -- raises and lowers -------------------------------------------------------


def test_raise_one_fixed_profile():
    u = parse_profile("xyzw|ywxz|zwxy")
    uni = u.universe
    v = raise_one(u, 1, uni.index("z"))
    assert str(v) == "xyzw|ywzx|zwxy"


def test_raise_one_above_w_matches_printed_profile():
    u = parse_profile("xywzt|ztwxy|ztwxy")
    uni = u.universe
    v = raise_one(u, 1, uni.index("x"))
    assert str(v) == "xywzt|ztxwy|ztwxy"


def test_raise_lower_inverse_and_boundaries():
    u = parse_profile("abc|cab")
    assert lower_one(raise_one(u, 0, 1), 0, 1) == u
    with pytest.raises(ValueError):
        raise_one(u, 0, 0)
    with pytest.raises(ValueError):
        lower_one(u, 0, 2)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 5), st.integers(2, 3), st.data())
def test_raise_one_changes_one_adjacent_pair(m, n, data):
    d = DomainIndex(m, n)
    u = index_profile(d, data.draw(st.integers(0, d.total - 1)))
    i = data.draw(st.integers(0, n - 1))
    p = data.draw(st.integers(1, m - 1))
    x = u.orderings[i][p]
    v = raise_one(u, i, x)
    assert lower_one(v, i, x) == u
    assert [j for j in range(n) if u.orderings[j] != v.orderings[j]] == [i]
    diffs = [q for q in range(m) if u.orderings[i][q] != v.orderings[i][q]]
    assert diffs == [p - 1, p]


def test_raise_to_just_below_noop_when_adjacent():
    u = parse_profile("abc|cab")
    assert raise_to_just_below(u, 0, 1, 0) == u


def test_raise_to_just_below_multi_rank():
    u = parse_profile("abcde|edcba")
    v = raise_to_just_below(u, 0, u.universe.index("e"), u.universe.index("a"))
    assert str(v).split("|")[0] == "aebcd"


def test_lower_to_just_below_matches_lower_one_when_adjacent():
    u = parse_profile("abcde|edcba")
    assert lower_to_just_below(u, 0, 0, 1) == lower_one(u, 0, 0)


def test_just_below_preconditions():
    u = parse_profile("abc|cab")
    with pytest.raises(ValueError):
        raise_to_just_below(u, 0, 0, 1)  # a is above b already
    with pytest.raises(ValueError):
        lower_to_just_below(u, 0, 1, 0)  # b is below a already


# -- symmetries --------------------------------------------------------------


def test_identity_permutations():
    u = parse_profile("xyz|yzx|zxy")
    assert apply_alternative_permutation(u, (0, 1, 2)) == u
    assert apply_individual_permutation(u, (0, 1, 2)) == u


def test_individual_swap_matches_fixed_pair():
    u = parse_profile("xywzt|ztwxy")
    assert apply_individual_permutation(u, (1, 0)) == parse_profile("ztwxy|xywzt", u.universe)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(2, 3), st.data())
def test_alternative_permutation_commutes_with_ranks(m, n, data):
    d = DomainIndex(m, n)
    u = index_profile(d, data.draw(st.integers(0, d.total - 1)))
    theta = tuple(data.draw(st.permutations(list(range(m)))))
    v = apply_alternative_permutation(u, theta)
    for i in range(n):
        for x in range(m):
            assert rank_of(v.orderings[i], theta[x]) == rank_of(u.orderings[i], x)
    inverse = [0] * m
    for a, b in enumerate(theta):
        inverse[b] = a
    assert apply_alternative_permutation(v, inverse) == u


def test_permutation_size_mismatch():
    u = parse_profile("abc|cab")
    with pytest.raises(ValueError):
        apply_alternative_permutation(u, (1, 0))
    with pytest.raises(ValueError):
        apply_individual_permutation(u, (0, 1, 2))


# -- parsing -----------------------------------------------------------------


def test_parse_inferred_universe_order_of_appearance():
    u = parse_profile("xyzw|ywxz|zwxy")
    assert u.universe.labels == "xyzw"


def test_parse_whitespace_ignored():
    assert str(parse_profile("xyz | yzx| zxy")) == "xyz|yzx|zxy"


def test_parse_against_fixed_universe():
    uni = Universe("xyzwt")
    u = parse_profile("xywzt|ztwxy", uni)
    assert u.universe is uni and u.n == 2


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_profile("xyz|xy", None)
    assert err.value.position == 6
    with pytest.raises(ParseError) as err:
        parse_profile("xyz|xyq", Universe("xyz"))
    assert err.value.position == 6
    with pytest.raises(ParseError) as err:
        parse_profile("xyx|xyz", Universe("xyz"))
    assert err.value.position == 2


def test_profile_validation():
    uni = Universe("abc")
    with pytest.raises(ValueError):
        Profile(uni, ((0, 1, 2),))  # single individual
    with pytest.raises(ValueError):
        Profile(uni, ((0, 1, 2), (0, 1, 1)))  # not a permutation
