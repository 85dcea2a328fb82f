import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from easop import catalog
from easop.eas import make_from_semigroup, make_prime, make_trivial
from easop.exactlin import ONE, FormalSum, RationalMatrix
from easop.freealg import Semigroup
from easop.leas import LinearEAS, linearize
from easop.operad import (UNIT, AsPhi, AsPhiRules, CorruptedProvider, NotRecognizable, OperadElement, TwoParamRules,
                          WordOperad, asphi_span_dimension, compose_asphi, confluence_check,
                          count_normal_forms_two_param, decorate, enumerate_normal_forms_two_param, extract_leas,
                          is_normal, koszul_orthogonality_check, left_comb, normal_forms_by_rewriting, node,
                          operad_axiom_check, rewrite_normal_form, tree_from_json, tree_shapes, tree_to_json,
                          word_compose)
from support import identity_leas

Z2_MUL = [[0, 0], [0, 1]]
Z2_ADD = [[0, 1], [1, 0]]


def test_compose_trivial_eas_concatenates():
    P = AsPhi(linearize(make_trivial(["0", "1"])))
    f, g = (0, 1, 1), (1, 0)
    for i in range(2, 5):
        assert P.compose(f, i, g) == {f[:i - 1] + g + f[i - 1:]: ONE}
    assert P.compose(f, 1, g) == {g + f: ONE}


def test_compose_family_case_left_translation():
    P = AsPhi(linearize(make_from_semigroup(["0", "1"], Z2_MUL)))
    for f in [(0, 1), (1, 0), (1, 1)]:
        for g in [(0, 1), (1, 1), (1, 0)]:
            for i in (2, 3):
                a = f[i - 2]
                expected = f[:i - 1] + tuple(a * b for b in g) + f[i - 1:]
                assert P.compose(f, i, g) == {expected: ONE}


def test_compose_group_prime_case():
    P = AsPhi(linearize(make_prime(["0", "1"], Z2_ADD)))
    for f in [(0,), (1,), (0, 1), (1, 1)]:
        for g in [(0, 1), (1, 1), (0,)]:
            for i in range(2, len(f) + 2):
                a = f[i - 2]
                expected = f[:i - 2] + ((a + sum(g)) % 2,) + g + f[i - 1:]
                assert P.compose(f, i, g) == {expected: ONE}


def test_compose_asphi_elements():
    L = catalog.get_leas("dendriform-1")
    f = OperadElement.basis((0, 1))
    g = OperadElement.basis((1,))
    out = compose_asphi(L, f, 2, g)
    assert out.arity == 4
    assert out.vector == FormalSum(AsPhi(L).compose((0, 1), 2, (1,)))
    with pytest.raises(IndexError):
        compose_asphi(L, f, 4, g)


def test_operad_axioms_and_negative_control():
    L = catalog.get_leas("leas-9")
    P = AsPhi(L)
    assert operad_axiom_check(P, 4).ok
    assert operad_axiom_check(WordOperad(Semigroup.cyclic_mul(2)), 4).ok
    bad = CorruptedProvider(AsPhi(catalog.get_leas("F3")), (0,), 2, (1,))
    rep = operad_axiom_check(bad, 4)
    assert not rep.ok and rep.failure is not None


def test_word_compose_examples():
    sg = Semigroup.cyclic_mul(2)
    for w in [(0, 1), (1, 1, 0), (1,)]:
        assert word_compose(sg, (sg.fold(w),), [w]) == FormalSum.basis(w)
        assert word_compose(sg, w, [UNIT] * len(w)) == FormalSum.basis(w)
    for al in range(2):
        for be in range(2):
            for ga in range(2):
                assert word_compose(sg, (al * be, ga), [(al, be), UNIT]) == FormalSum.basis((al, be, ga))
                for de in range(2):
                    if al * be != ga:
                        assert word_compose(sg, (ga, de), [(al, be), UNIT]) == 0


def test_rewriting_asphi_gives_left_combs():
    L = catalog.get_leas("leas-12")
    rules = AsPhiRules(L)
    for shape in tree_shapes(4):
        for t in decorate(shape, [0, 1]):
            nf = rewrite_normal_form(rules, t)
            assert all(is_normal(rules, s) for s, _ in nf)
            assert all(s == left_comb(_decs(s)) for s, _ in nf)
    assert asphi_span_dimension(L, 4) == 8


def _decs(t):
    out = []
    while t != "leaf":
        out.append(t[1])
        t = t[2]
    return list(reversed(out))


def test_normal_form_fixed_point():
    rules = AsPhiRules(catalog.get_leas("leas-3"))
    t = left_comb([0, 1, 1])
    assert is_normal(rules, t)
    assert rewrite_normal_form(rules, t) == FormalSum.basis(t)


def test_two_param_normal_forms():
    sg = Semigroup.cyclic_mul(2)
    nfs = enumerate_normal_forms_two_param(sg, 3)
    assert len(nfs) == 24
    assert set(nfs) == normal_forms_by_rewriting(sg, 3)


def test_confluence():
    assert confluence_check(AsPhiRules(catalog.get_leas("dendriform-2"))).confluent
    rep = confluence_check(AsPhiRules(identity_leas()))
    assert not rep.confluent and rep.witness is not None
    assert confluence_check(TwoParamRules(Semigroup.cyclic_mul(2))).confluent


def test_count_normal_forms():
    assert count_normal_forms_two_param(2, 4) == 176
    assert count_normal_forms_two_param(3, 4) == 2511
    assert all(count_normal_forms_two_param(1, n) == 1 for n in range(1, 8))


def test_orthogonality_examples():
    rep = koszul_orthogonality_check(LinearEAS(1, RationalMatrix.identity(1)))
    assert rep.ok and rep.dim_I + rep.dim_I_dual == 2
    rep = koszul_orthogonality_check(linearize(catalog.get_eas("C3")))
    assert rep.ok and (rep.dim_I, rep.dim_I_dual) == (4, 4)


def test_extract_round_trip_and_failures():
    L = catalog.get_leas("duplicial")
    assert extract_leas(AsPhi(L)).phi == L.phi
    with pytest.raises(NotRecognizable) as exc:
        extract_leas(WordOperad(Semigroup.cyclic_mul(2)))
    assert exc.value.detail == {"dim_A": 4, "dim_P3": 8}
    bad = CorruptedProvider(AsPhi(catalog.get_leas("F3")), (0,), 2, (1,))
    with pytest.raises(NotRecognizable):
        extract_leas(bad)


def test_tree_json_round_trip():
    t = node(1, node(0, "leaf", "leaf"), "leaf")
    assert tree_from_json(tree_to_json(t)) == t


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(catalog.leas_names("two-dim")),
       st.lists(st.integers(0, 1), min_size=1, max_size=3), st.lists(st.integers(0, 1), min_size=1, max_size=3))
def test_composition_preserves_arity(name, f, g):
    P = AsPhi(catalog.get_leas(name))
    f, g = tuple(f), tuple(g)
    for i in range(1, len(f) + 2):
        out = P.compose(f, i, g)
        assert all(len(k) == len(f) + len(g) for k in out)
