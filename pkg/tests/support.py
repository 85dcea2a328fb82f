"""Fixtures shared by the test modules: printed data, random matrices, corrupted tables."""

from __future__ import annotations

import random
from functools import lru_cache

from easop import catalog
from easop.eas import FiniteEAS, check_eas
from easop.exactlin import IntPolynomial, RationalMatrix, determinant_cofactor, invert, kron
from easop.leas import LinearEAS, check_leas

# dimension table, rows omega = 1..9, columns n = 1..7
PRINTED_TABLE = [
    [1, 1, 1, 1, 1, 1, 1],
    [1, 4, 24, 176, 1440, 12608, 115584],
    [1, 9, 135, 2511, 52245, 1164213, 27173475],
    [1, 16, 448, 15616, 609280, 25464832, 1114882048],
    [1, 25, 1125, 63125, 3965625, 266890625, 18816328125],
    [1, 36, 2376, 195696, 18048096, 1783238976, 184576081536],
    [1, 49, 4459, 506611, 64454845, 8785674373, 1254546699679],
    [1, 64, 7680, 1150976, 193167360, 34733293568, 6542642380800],
    [1, 81, 12393, 2368521, 506935665, 116245810017, 27925350157593],
]

W = IntPolynomial([0, 1])
_TWO_W_MINUS_1 = IntPolynomial([-1, 2])


def _poly(*coeffs_high_to_low: int) -> IntPolynomial:
    return IntPolynomial(list(reversed(coeffs_high_to_low)))


# p_n as printed: optional (2w - 1) factor, a cofactor, and w^n
PRINTED_FACTORED = {
    2: (False, _poly(1)),
    3: (True, _poly(1)),
    4: (False, _poly(5, -5, 1)),
    5: (True, _poly(7, -7, 1)),
    6: (False, _poly(42, -84, 56, -14, 1)),
    7: (True, _poly(66, -132, 84, -18, 1)),
    8: (False, _poly(429, -1287, 1485, -825, 225, -27, 1)),
    9: (True, _poly(715, -2145, 2431, -1287, 319, -33, 1)),
}


def printed_polynomial(n: int) -> IntPolynomial:
    odd, cof = PRINTED_FACTORED[n]
    p = cof * W ** n
    return _TWO_W_MINUS_1 * p if odd else p


def random_non_leas(count: int = 20, seed: int = 2024, dim: int = 2) -> list[LinearEAS]:
    """Random integer matrices in {-1,0,1}, each confirmed to violate the braid identity."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        rows = [[rng.choice((-1, 0, 0, 1)) for _ in range(dim * dim)] for _ in range(dim * dim)]
        L = LinearEAS(dim, RationalMatrix.from_rows(rows), name=f"random-{len(out)}")
        if not check_leas(L).ok:
            out.append(L)
    return out


def random_matrices(count: int = 20, seed: int = 7) -> list[LinearEAS]:
    """Random 2-dim matrices: half are (g x g) Phi (g x g)^-1 for a catalog Phi and random g, half are dense noise.

    The braid identity is natural in A, so the conjugates satisfy it while being dense.
    """
    rng = random.Random(seed)
    base = [catalog.get_leas(n) for n in catalog.leas_names("two-dim")]
    out = []
    for k in range(count):
        if k % 2 == 0:
            while True:
                g = RationalMatrix.from_rows([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
                if determinant_cofactor(g) != 0:
                    break
            gg = kron(g, g)
            phi = gg @ rng.choice(base).phi @ invert(gg)
        else:
            phi = RationalMatrix.from_rows([[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)])
        out.append(LinearEAS(2, phi, name=f"random-{k}"))
    return out


def corrupted_tables(count: int = 10, seed: int = 11) -> list[FiniteEAS]:
    """Single-entry corruptions of cardinality-2 EAS tables that break the axioms."""
    rng = random.Random(seed)
    pool = []
    for name in catalog.CARDINALITY_TWO:
        S = catalog.get_eas(name)
        for which in ("arrow", "triangle"):
            for i in range(2):
                for j in range(2):
                    A = [list(r) for r in S.arrow]
                    T = [list(r) for r in S.triangle]
                    M = A if which == "arrow" else T
                    M[i][j] = 1 - M[i][j]
                    C = FiniteEAS(S.elements, A, T, f"{name}-{which}{i}{j}")
                    if not check_eas(C).is_eas:
                        pool.append(C)
    return rng.sample(pool, count)


@lru_cache(maxsize=None)
def catalog_leas() -> tuple[LinearEAS, ...]:
    return tuple(catalog.all_leas())


def identity_leas(dim: int = 2) -> LinearEAS:
    return LinearEAS(dim, RationalMatrix.identity(dim * dim), name="identity")
