"""The operad As_Phi: compositions, rewriting, Koszul duality, and recovering Phi."""

from easop import catalog
from easop.freealg import Semigroup
from easop.leas import dualize
from easop.operad import (AsPhi, AsPhiRules, NotRecognizable, TwoParamRules, WordOperad, confluence_check,
                          extract_leas, koszul_orthogonality_check, left_comb, node, operad_axiom_check,
                          rewrite_normal_form, tree_to_json)

L = catalog.get_leas("tridendriform-2")
P = AsPhi(L)
print("(1,) composed at 2 with (1,):", P.compose((1,), 2, (1,)))
print("operad axioms to arity 4:", operad_axiom_check(P, 4).to_json())

# a right comb rewrites into left combs, one term per Phi coefficient
rules = AsPhiRules(L)
t = node(1, "leaf", node(2, "leaf", "leaf"))
for s, c in rewrite_normal_form(rules, t):
    print("  ", c, tree_to_json(s), "is a left comb:", s == left_comb([s[2][1], s[1]]))

print("critical pairs resolve:", confluence_check(rules).confluent)
print("two-parameter rules over (Z/2, x) resolve:", confluence_check(TwoParamRules(Semigroup.cyclic_mul(2))).confluent)

rep = koszul_orthogonality_check(L)
print(f"\nrelations I ({rep.dim_I}-dim) and I' of the transpose ({rep.dim_I_dual}-dim) pair to zero: {rep.pairing_zero}")

back = extract_leas(AsPhi(dualize(L)))
print("Phi recovered from the dual operad equals the transpose:", back.phi == dualize(L).phi)

try:
    extract_leas(WordOperad(Semigroup.cyclic_mul(2)))
except NotRecognizable as exc:
    print("the word operad is not of this form:", exc.reason)
