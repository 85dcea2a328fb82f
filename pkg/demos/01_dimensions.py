"""How big is the two-parameter operad?

Three independent counts of p_n(w): the convolution recursion, a closed
Narayana-style sum, and brute enumeration of rewriting normal forms.  Then the
generating series and its compositional inverse.
"""

from easop.exactlin import TruncatedSeries, series_compose
from easop.operad import count_normal_forms_two_param
from easop.series import (dimension_series, koszul_dual_series, p_narayana, p_polynomial, p_recursive, schroder,
                          table_rows)

print("p_n(w) for w = 1..5, n = 1..7")
for w, row in enumerate(table_rows(5, 7), 1):
    print(f"  w={w}: " + " ".join(str(v) for v in row))

print("\nthe same cells three ways (w=3):")
for n in range(2, 6):
    print(f"  n={n}: recursion {p_recursive(3, n)[n]}, narayana {p_narayana(3, n)}, "
          f"normal forms {count_normal_forms_two_param(3, n)}")

print("\nas polynomials in w:")
for n in range(2, 6):
    print(f"  p_{n} = {p_polynomial(n)}")

print("\nat w = 2 every p_n is a power of two times a large Schroeder number:")
print("  " + ", ".join(f"{p_recursive(2, n)[n]} = 2^{n - 1}*{schroder(n)}" for n in range(1, 7)))

order = 8
P = dimension_series(3, order)
Q = koszul_dual_series(3, order)
comp = series_compose(Q, -(P.negate_argument()))
print(f"\nQ(-P(-X)) for w = 3 up to X^{order}: {comp}")
print("equals X:", comp == TruncatedSeries.x(order))
