from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from easop import catalog
from easop.exactlin import FormalSum, RationalMatrix, flip_matrix
from easop.freealg import (FreePhiAlgebra, Semigroup, TwoParamWord, TypedWord, check_envelope_associativity,
                           check_opposite_phi_associativity, check_phi_associativity, dual_free_product,
                           envelope_product, generation_freeness_report, star, two_param_axiom_failures,
                           two_param_envelope_is_associative, two_param_star, word_sum_from_json, word_sum_to_json)
from easop.leas import LinearEAS, invert_leas, linearize
from support import identity_leas

FLIP = LinearEAS(2, flip_matrix(2), name="flip")
ONE_DIM = LinearEAS(1, RationalMatrix.identity(1), name="as")


def test_star_with_single_letter():
    assert star(FLIP, 1, "x", "y") == FormalSum.basis(TypedWord((1,), ("x", "y")))


def test_star_trivial_eas():
    v = TypedWord((1,), ("y", "z"))
    assert star(FLIP, 0, "x", v) == FormalSum.basis(TypedWord((0, 1), ("x", "y", "z")))


def test_star_c3():
    C3 = linearize(catalog.get_eas("C3"))
    v = TypedWord((0,), ("y", "z"))
    assert star(C3, 1, "x", v) == FormalSum.basis(TypedWord((1, 0), ("x", "y", "z")))


def test_cached_star_matches_literal_recursion():
    for name in ("leas-7", "dendriform-1", "post-lie"):
        F = FreePhiAlgebra(catalog.get_leas(name))
        u = TypedWord((1,), ("x", "y"))
        v = TypedWord((0, 1), ("y", "z", "x"))
        for a in range(F.d):
            assert F.star(a, u, v) == F.star_recursive(a, u, v)


def test_associativity_checks():
    assert check_phi_associativity(FLIP, 4).ok
    assert check_phi_associativity(ONE_DIM, 4).ok
    rep = check_phi_associativity(identity_leas(), 4)
    assert not rep.ok and rep.counterexample is not None


def test_opposite_associativity():
    assert check_opposite_phi_associativity(ONE_DIM, 4).ok
    for name in ("dendriform-3", "dendriform-4", "leas-5"):
        L = catalog.get_leas(name)
        assert check_opposite_phi_associativity(L, 3, product_of=L).ok
    for name in ("F4", "H2"):
        L = catalog.get_leas(name)
        assert check_opposite_phi_associativity(L, 4).ok
        assert check_phi_associativity(invert_leas(L), 4).ok


def test_envelope_product_trivial():
    x = FormalSum.basis((TypedWord.letter("x"), 0))
    y = FormalSum.basis((TypedWord.letter("y"), 1))
    assert envelope_product(FLIP, x, y) == FormalSum.basis((TypedWord((0,), ("x", "y")), 1))


def test_envelope_associativity():
    assert check_envelope_associativity(FLIP).ok
    assert not check_envelope_associativity(identity_leas()).ok


def test_generation_flags():
    rep = generation_freeness_report(FLIP)
    assert rep.generated and rep.free
    rep = generation_freeness_report(linearize(catalog.get_eas("A1")))
    assert not rep.generated and not rep.free


def test_two_param_single_element():
    sg = Semigroup(["e"], [[0]])

    def prod(al, be, i, j):
        return {0: 1}

    out = two_param_star(sg, prod, {(0, 0): 2}, {(0, 0): 3})
    assert out == {(0, 0): 6}


def test_two_param_grading():
    sg = Semigroup.cyclic_mul(2)

    def prod(al, be, i, j):
        return {0: 1}

    for al in range(2):
        for be in range(2):
            out = two_param_star(sg, prod, {(0, al): 1}, {(0, be): 1})
            assert set(out) == {(0, al * be)}


def _toy_products(perturb=False):
    # the word-algebra on one letter: every product multiplies the lengths, kept 3-dimensional
    def prod(al, be, i, j):
        k = i + j + 1
        if perturb and (al, be, i, j) == (1, 1, 0, 0):
            return {1: 2}
        return {k: 1} if k < 3 else {}
    return prod


def test_two_param_perturbed_constant():
    sg = Semigroup.cyclic_mul(2)
    assert not two_param_axiom_failures(sg, _toy_products(), 3)
    assert two_param_envelope_is_associative(sg, _toy_products(), 3)
    assert two_param_axiom_failures(sg, _toy_products(True), 3)
    assert not two_param_envelope_is_associative(sg, _toy_products(True), 3)


def test_dual_free_product():
    sg = Semigroup.cyclic_mul(2)
    u = TwoParamWord.generator("u")
    v = TwoParamWord.generator("v")
    assert dual_free_product(sg, 1, 0, u, v) == TwoParamWord((1, 0), ("u", "v"))
    left = TwoParamWord((1, 1), ("u1", "u2"))
    right = TwoParamWord((0,), ("v",))
    assert dual_free_product(sg, 1, 0, left, right) == TwoParamWord((1, 1, 0), ("u1", "u2", "v"))
    assert dual_free_product(sg, 0, 0, left, right) is None


def test_word_sum_json_round_trip():
    s = FormalSum({TypedWord((0, 1), ("x", "y", "z")): Fraction(-1, 2), TypedWord((), ("x",)): 3})
    assert word_sum_from_json(word_sum_to_json(s)) == s


words = st.builds(lambda d, ls: TypedWord(tuple(d[:len(ls) - 1]), tuple(ls)),
                  st.lists(st.integers(0, 1), min_size=3, max_size=3),
                  st.lists(st.sampled_from("xyz"), min_size=1, max_size=3))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(catalog.leas_names("two-dim")), words, words, st.integers(0, 1))
def test_star_length_additive(name, u, v, a):
    out = star(catalog.get_leas(name), a, u, v)
    assert all(len(w) == len(u) + len(v) and len(w.decs) == len(w) - 1 for w, _ in out)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(catalog.leas_names("two-dim")), words, words, words,
       st.fractions(max_denominator=5), st.fractions(max_denominator=5))
def test_star_bilinear(name, u, v, w, s, t):
    L = catalog.get_leas(name)
    left = star(L, 0, FormalSum.basis(u).scale(s) + FormalSum.basis(v).scale(t), w)
    assert left == star(L, 0, u, w).scale(s) + star(L, 0, v, w).scale(t)
    right = star(L, [s, t], u, w)
    assert right == star(L, 0, u, w).scale(s) + star(L, 1, u, w).scale(t)
