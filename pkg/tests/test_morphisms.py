import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from easop import catalog
from easop.eas import FiniteEAS, NoRightInverses, make_from_semigroup, make_trivial
from easop.exactlin import RationalMatrix
from easop.leas import LinearEAS
from easop.morphisms import (ProductCandidate, associative_scan, check_associative, check_square_zero,
                             find_indicator_solutions, free_algebra_test, relation_catalog_check, subgroups,
                             theta_check, theta_prime_check, verify_link, verify_subgroup_corollary)
from easop.relations import SUPPLEMENTARY, UnknownRelationSet, relation_set

ZN = {n: [[(i + j) % n for j in range(n)] for i in range(n)] for n in (1, 2, 3, 4)}


def lin(name):
    return catalog.get_leas(name)


def test_check_associative_examples():
    for lam, mu in [(1, 0), (0, 1), (2, -3), (1, 1)]:
        assert check_associative(lin("F3"), ProductCandidate("direct", (lam, mu)))
    assert check_associative(lin("C5"), ProductCandidate("direct", (0, 1)))
    assert not check_associative(lin("C5"), ProductCandidate("direct", (1, 0)))
    assert check_associative(LinearEAS(1, RationalMatrix.identity(1)), ProductCandidate("direct", (1,)))


def test_check_square_zero_examples():
    assert check_square_zero(lin("A1"), ProductCandidate("direct", (1, -1)))
    for a in [(1, 0), (0, 1), (1, 1), (2, -1)]:
        assert not check_square_zero(lin("C1"), ProductCandidate("direct", a))
    assert check_square_zero(lin("C1"), ProductCandidate("direct", (0, 0)))
    with pytest.raises(ValueError):
        check_square_zero(lin("C1"), ProductCandidate("opposite", (1, 0)))


def _patterns(name):
    S = catalog.get_eas(name)
    return {(p.plus, p.minus): (p.associative, p.square_zero) for p in find_indicator_solutions(S)}


def test_indicator_examples():
    h2 = {k for k, (a, _) in _patterns("H2").items() if a}
    assert h2 == {(("a",), ()), (("a", "b"), ())}
    e3 = _patterns("E3'")
    assert e3[("a",), ()][0] and e3[("b",), ()][0]
    assert e3[("a",), ("b",)][1]
    Z4 = make_from_semigroup(["0", "1", "2", "3"], ZN[4])
    assoc = {p.plus for p in find_indicator_solutions(Z4) if p.associative and not p.minus}
    assert assoc == {("0",), ("0", "2"), ("0", "1", "2", "3")}


def test_subgroup_corollary():
    rep = verify_subgroup_corollary(ZN[2])
    assert rep["ok"] and len(rep["subgroups"]) == 2
    rep = verify_subgroup_corollary(ZN[4])
    assert rep["ok"] and len(subgroups(ZN[4])) == 3
    assert verify_subgroup_corollary(ZN[1])["ok"]


def test_associative_scan_table():
    for name in catalog.CARDINALITY_TWO:
        assert associative_scan(catalog.get_eas(name), name)["matches_table"], name


def test_free_algebra_agrees_with_closed_criteria():
    for name in ("F3", "C5", "A1", "H2"):
        L = lin(name)
        for a in [(1, 0), (0, 1), (1, 1), (1, -1)]:
            out = free_algebra_test(L, a, (0, 0))
            assert out["associative"] == check_associative(L, ProductCandidate("direct", a))
            assert out["square_zero"] == check_square_zero(L, ProductCandidate("direct", a))


def test_theta():
    for name in catalog.CARDINALITY_TWO:
        assert theta_check(catalog.get_eas(name)).ok
    C3 = catalog.get_eas("C3")
    T = [list(r) for r in C3.triangle]
    T[1][0] = 0
    rep = theta_check(FiniteEAS(C3.elements, C3.arrow, T))
    assert not rep.ok and rep.failures[0]["triple"]
    assert theta_check(make_trivial(["*"])).ok


def test_theta_prime():
    rep = theta_prime_check(["0", "1"], ZN[2])
    assert rep.ok and rep.extra["dim_two_param_3"] == 24 and rep.extra["dim_target_3"] == 16
    rep = theta_prime_check(["0", "1", "2"], ZN[3])
    assert rep.ok and (rep.extra["dim_two_param_3"], rep.extra["dim_target_3"]) == (135, 81)
    rep = theta_prime_check(["e"], ZN[1])
    assert rep.ok and rep.extra["bijective_in_arity_3"]
    with pytest.raises(NoRightInverses):
        theta_prime_check(["0", "1"], [[0, 0], [0, 1]])


def test_named_relation_checks():
    L = lin("dendriform-1")
    rep = relation_catalog_check(L, "dendriform", "direct", {"<": 0, ">": 1})
    assert rep.ok and set(rep.holds) == {"dend1", "dend2", "dend3"}
    rep = relation_catalog_check(lin("duplicial"), "duplicial", "direct", {"<": 0, ">": 1})
    assert rep.ok
    for k in (1, 2, 3):
        rep = relation_catalog_check(lin(f"tridendriform-{k}"), "tridendriform", "direct", {"<": 0, ">": 1, ".": 2})
        assert rep.ok and len(rep.holds) == 7
    # swapping the two products breaks the dendriform axioms
    assert not relation_catalog_check(L, "dendriform", "direct", {"<": 1, ">": 0}).ok


def test_links_report_supplementary_use():
    rep = verify_link("trias-op-1")
    assert rep.ok and rep.supplementary_used == sorted(SUPPLEMENTARY["triassociative"])
    rep = verify_link("dias-op-1")
    assert rep.ok and rep.isomorphism["isomorphic"] and rep.supplementary_used == []


def test_unknown_relation_set():
    with pytest.raises(UnknownRelationSet):
        relation_set("nope")


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(catalog.CARDINALITY_TWO), st.integers(-3, 3), st.integers(-3, 3))
def test_associativity_is_homogeneous(name, lam, mu):
    L = lin(name)
    c = ProductCandidate("direct", (lam, mu))
    scaled = ProductCandidate("direct", (2 * lam, 2 * mu))
    assert check_associative(L, c) == check_associative(L, scaled)
    assert check_associative(L, c) == check_associative(L, c.flipped())
