"""Every EAS on two elements, and what linearizing them gives."""

from easop import catalog
from easop.eas import are_isomorphic, check_eas, classify
from easop.leas import check_leas, dualize, invert_leas, is_nondegenerate, linearize

cl = classify(2)
print(f"{cl.raw_count} of the 256 table pairs on {{a, b}} are EAS, in {len(cl.classes)} isomorphism classes\n")

for S in cl.classes:
    name = next(n for n in catalog.CARDINALITY_TWO if are_isomorphic(S, catalog.get_eas(n))[0])
    L = linearize(S)
    flag = "nondegenerate" if check_eas(S).nondegenerate else ""
    print(f"  {name:7s} arrow={S.arrow} triangle={S.triangle}  braid={check_leas(L).ok} {flag}")

# nondegenerate ones can be inverted, and the inverse is again a linear EAS
F4 = linearize(catalog.get_eas("F4"))
inv = invert_leas(F4)
print("\nF4 inverse satisfies the braid identity:", check_leas(inv).ok, "| nondegenerate:", is_nondegenerate(inv))

# transposes stay inside the family
bad = [n for n in catalog.leas_names() if not check_leas(dualize(catalog.get_leas(n))).ok]
print("catalog matrices whose transpose fails:", bad or "none")
