"""Multiplying typed words in the free Phi-associative algebra.

A typed word carries n letters and n-1 decorations.  Multiplying by ``*_a``
concatenates letters and pushes ``a`` through the decorations of the right
factor with Phi.
"""

from easop import catalog
from easop.exactlin import RationalMatrix
from easop.freealg import (TypedWord, check_envelope_associativity, check_phi_associativity,
                           generation_freeness_report, star, word_sum_to_json)
from easop.leas import LinearEAS, check_leas

L = catalog.get_leas("dendriform-1")
u = TypedWord((0,), ("x", "y"))
v = TypedWord((1, 0), ("z", "x", "y"))
for a in range(2):
    print(f"u *_{a} v =", word_sum_to_json(star(L, a, u, v)))

print("\nassociativity up to total length 4:", check_phi_associativity(L, 4).to_json())

ident = LinearEAS(2, RationalMatrix.identity(4), name="identity")
print("Phi = Id breaks the braid identity:", not check_leas(ident).ok)
rep = check_phi_associativity(ident, 4)
print("...and the free algebra notices:", rep.counterexample)

print("\nenvelope A (x) V associative? dendriform-1:", check_envelope_associativity(L).ok,
      "| identity:", check_envelope_associativity(ident).ok)

for name in ("F4", "C3"):
    g = generation_freeness_report(catalog.get_leas(name))
    print(f"{name}: rank {g.rank}, generated={g.generated}, free={g.free}")
