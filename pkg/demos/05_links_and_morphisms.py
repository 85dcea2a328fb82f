"""Named algebra types hiding inside Phi-associative algebras, and operad morphisms."""

from easop import catalog
from easop.morphisms import associative_scan, theta_check, theta_prime_check, verify_link

print("links:")
for name, link in catalog.links().items():
    rep = verify_link(link)
    extra = f" (needs {', '.join(rep.supplementary_used)})" if rep.supplementary_used else ""
    iso = f" ~ {link.isomorphic_to}" if link.isomorphic_to else ""
    print(f"  {name:22s} {link.relation_set:15s} {link.mode:14s} ok={rep.ok}{iso}{extra}")

print("\nassociative combinations of the products, by indicator pattern:")
for name in ("F3", "H2", "E3'"):
    out = associative_scan(catalog.get_eas(name), name)
    pats = [("+".join(p["plus"]) + ("-" + "-".join(p["minus"]) if p["minus"] else ""), p["associative"],
             p["square_zero"]) for p in out["patterns"]]
    print(f"  {name}: {pats}")

print("\ntheta holds on every two-element EAS:",
      all(theta_check(catalog.get_eas(n)).ok for n in catalog.CARDINALITY_TWO))
rep = theta_prime_check(["0", "1", "2"], [[(i + j) % 3 for j in range(3)] for i in range(3)])
print(f"theta' over Z/3: relations preserved={rep.ok}, arity-3 dims {rep.extra['dim_two_param_3']}"
      f" -> {rep.extra['dim_target_3']}")
