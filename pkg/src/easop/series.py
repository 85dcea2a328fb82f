"""Dimensions of the two-parameter operad and the related generating series.

``p_n(w)`` is the dimension in arity ``n`` for a semigroup of cardinality
``w``.  It is computed three ways: the convolution recursion, a closed
Narayana-type sum, and (in :mod:`easop.operad`) by counting normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .exactlin import IntPolynomial, TruncatedSeries, W, series_compose


@dataclass
class DimensionTable:
    omega: int
    values: list[int]

    def __post_init__(self):
        if self.values and self.values[0] != 1:
            raise ValueError("p_1 must be 1")

    def __getitem__(self, n: int) -> int:
        """1-based access: ``table[n] == p_n``."""
        return self.values[n - 1]


def _recursion(one, omega, N: int) -> list:
    p = [None, one]
    for n in range(2, N + 1):
        conv = p[1] * p[n - 1]
        for k in range(2, n):
            conv = conv + p[k] * p[n - k]
        p.append(omega * (omega - 1) * conv + omega * p[n - 1])
    return p[1:]


def p_recursive(omega: int, N: int) -> DimensionTable:
    if N < 1:
        raise ValueError("N must be >= 1")
    if omega < 1:
        raise ValueError("omega must be >= 1")
    return DimensionTable(omega, _recursion(1, omega, N))


def p_narayana(omega: int, n: int) -> int:
    if n < 2:
        raise ValueError("n must be >= 2")
    s = sum(comb(n - 1, k) * comb(n - 1, k - 1) * omega ** (n - 1 - k) * (omega - 1) ** (k - 1)
            for k in range(1, n))
    q, r = divmod(s, n - 1)
    assert r == 0, f"Narayana sum {s} not divisible by {n - 1}"
    return omega ** n * q


def p_polynomial(n: int) -> IntPolynomial:
    if n < 1:
        raise ValueError("n must be >= 1")
    return _recursion(IntPolynomial([1]), W, n)[-1]


def catalan(n: int) -> int:
    """cat_n with cat_1 = cat_2 = 1, via C_{m+1} = sum C_i C_{m-i}."""
    c = [1]
    for m in range(n - 1):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n - 1]


def schroder(n: int) -> int:
    """Large Schroeder number with schr_1 = 1, via (m+1) S_m = 3(2m-1) S_{m-1} - (m-2) S_{m-2}."""
    s = [1, 2]  # S_0, S_1 in the standard 0-based indexing
    for m in range(2, n):
        num = 3 * (2 * m - 1) * s[m - 1] - (m - 2) * s[m - 2]
        q, r = divmod(num, m + 1)
        assert r == 0
        s.append(q)
    return s[n - 1]


@dataclass
class Report:
    ok: bool
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, **self.details}


def check_polynomial_properties(n: int) -> Report:
    if n < 2:
        raise ValueError("n must be >= 2")
    p = p_polynomial(n)
    checks = {
        "degree": p.degree == 2 * n - 2,
        "leading_is_catalan": p.leading == catalan(n),
        "divisible_by_w^n": p.valuation() >= n,
    }
    q = p.shift_down(n) if checks["divisible_by_w^n"] else None
    checks["q_n(0)"] = q is not None and q(0) == (-1) ** n
    if n % 2 == 1 and n >= 3:
        checks["vanishes_at_1/2"] = p(Fraction(1, 2)) == 0
    details = {"n": n, "degree": p.degree, "leading": p.leading, "catalan": catalan(n),
               "coeffs": list(p.coeffs), "checks": checks}
    return Report(all(checks.values()), details)


def dimension_series(omega: int, order: int) -> TruncatedSeries:
    """P(X) = sum p_n X^n truncated at X^order."""
    vals = p_recursive(omega, order).values
    return TruncatedSeries([0] + vals, order)


def verify_functional_equation(omega: int, order: int, series: TruncatedSeries | None = None) -> Report:
    """P = w(w-1) P^2 + w X P + X, exactly up to X^order."""
    if order > 20:
        raise ValueError("order is limited to 20")
    P = dimension_series(omega, order) if series is None else series
    X = TruncatedSeries.x(order)
    rhs = (P * P).scale(omega * (omega - 1)) + (X * P).scale(omega) + X
    diff = [k for k in range(order + 1) if P[k] != rhs[k]]
    return Report(not diff, {"omega": omega, "order": order, "first_mismatch": diff[0] if diff else None})


def koszul_dual_series(omega: int, order: int) -> TruncatedSeries:
    """Q = (w(w-1)X^2 + X) / (1 - wX), expanded by long division."""
    if order < 2:
        raise ValueError("order must be >= 2")
    num = [0, 1, omega * (omega - 1)] + [0] * (order - 2)
    out = [Fraction(0)] * (order + 1)
    for k in range(order + 1):
        out[k] = Fraction(num[k]) + (omega * out[k - 1] if k else 0)
    return TruncatedSeries(out, order)


def koszul_inversion_check(omega: int, order: int) -> Report:
    """Q(-P(-X)) == X up to X^order."""
    P = dimension_series(omega, order)
    inner = -(P.negate_argument())
    comp = series_compose(koszul_dual_series(omega, order), inner)
    ok = comp == TruncatedSeries.x(order)
    return Report(ok, {"omega": omega, "order": order, "composite": [str(c) for c in comp.coeffs]})


SCHRODER_PRINTED = (1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098)


def schroder_check(N: int) -> Report:
    if N > 10:
        raise ValueError("N is limited to 10")
    p = p_recursive(2, N).values
    rows = []
    ok = True
    for n in range(1, N + 1):
        s = schroder(n)
        good = p[n - 1] == 2 ** (n - 1) * s and s == SCHRODER_PRINTED[n - 1]
        ok &= good
        rows.append({"n": n, "p_n": p[n - 1], "schr_n": s, "ok": good})
    return Report(ok, {"rows": rows})


def table_rows(omega_max: int, n_max: int) -> list[list[int]]:
    return [p_recursive(w, n_max).values for w in range(1, omega_max + 1)]


def table_tsv(omega_max: int, n_max: int) -> str:
    lines = ["omega\tn\tp_n"]
    for w, row in enumerate(table_rows(omega_max, n_max), 1):
        lines += [f"{w}\t{n}\t{v}" for n, v in enumerate(row, 1)]
    return "\n".join(lines) + "\n"
