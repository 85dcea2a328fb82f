"""Linear extended associative semigroups (A, Phi).

``phi`` is a ``d^2 x d^2`` rational matrix whose column ``i*d + j`` is the
image of ``e_i (x) e_j``.  Writing ``Phi(a (x) b) = sum u (x) v``, the first
leg ``u`` plays the role of ``a -> b`` and the second leg ``v`` of ``a |> b``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .eas import FiniteEAS, NotAnEAS, check_eas
from .exactlin import (NotInvertible, RationalMatrix, flip_matrix, format_rational, invert,
                       kron_all, rank)


@dataclass(frozen=True)
class LinearEAS:
    dim: int
    phi: RationalMatrix
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.dim * self.dim
        if self.phi.shape != (n, n):
            raise ValueError(f"phi must be {n}x{n} for dim {self.dim}, got {self.phi.shape}")

    def image(self, a: int, b: int) -> dict[tuple[int, int], object]:
        """``Phi(e_a (x) e_b)`` as ``{(u, v): coef}``."""
        d = self.dim
        return {divmod(i, d): c for i, c in self.phi.column(a * d + b).items()}

    def images(self) -> list[list[dict]]:
        d = self.dim
        cols = self.phi.columns()
        return [[{divmod(i, d): c for i, c in cols[a * d + b].items()} for b in range(d)] for a in range(d)]

    def to_json(self) -> dict:
        out = {"dim": self.dim,
               "phi": [[format_rational(x) for x in row] for row in self.phi.to_rows()]}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "LinearEAS":
        if isinstance(data, str):
            data = json.loads(data)
        d = int(data["dim"])
        return cls(d, RationalMatrix.from_rows(data["phi"]), name=data.get("name"))

    @classmethod
    def from_rows(cls, rows, name: str | None = None) -> "LinearEAS":
        M = RationalMatrix.from_rows(rows)
        d = round(M.rows ** 0.5)
        return cls(d, M, name=name)


@dataclass
class LeasReport:
    ok: bool
    witness: tuple[tuple[int, int, int], tuple[int, int, int]] | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"is_leas": self.ok,
                "witness": None if self.witness is None else {"row": list(self.witness[0]),
                                                              "col": list(self.witness[1])}}


def braid_sides(L: LinearEAS) -> tuple[RationalMatrix, RationalMatrix]:
    """Both sides of the defining identity as ``d^3 x d^3`` matrices.

    left  = (Id x Phi)(Phi x Id)(Id x Phi)
    right = (Phi x Id)(Id x tau)(Phi x Id)
    """
    d = L.dim
    I = RationalMatrix.identity(d)
    id_phi = kron_all(I, L.phi)
    phi_id = kron_all(L.phi, I)
    id_tau = kron_all(I, flip_matrix(d))
    left = id_phi @ phi_id @ id_phi
    right = phi_id @ id_tau @ phi_id
    return left, right


def check_leas(L: LinearEAS) -> LeasReport:
    left, right = braid_sides(L)
    diff = left.first_difference(right)
    if diff is None:
        return LeasReport(True)
    d = L.dim
    r, c = diff

    def split(k):
        return (k // (d * d), (k // d) % d, k % d)

    return LeasReport(False, (split(r), split(c)))


def linearize(S: FiniteEAS) -> LinearEAS:
    rep = check_eas(S)
    if not rep.is_eas:
        raise NotAnEAS(rep)
    n = S.size
    cols = [{S.arrow[i][j] * n + S.triangle[i][j]: 1} for i in range(n) for j in range(n)]
    return LinearEAS(n, RationalMatrix.from_columns(cols, n * n), name=S.name)


def dualize(L: LinearEAS) -> LinearEAS:
    """Phi* in the dual basis, i.e. the transpose."""
    name = None if L.name is None else (L.name[:-5] if L.name.endswith("-dual") else L.name + "-dual")
    return LinearEAS(L.dim, L.phi.transpose(), name=name)


def is_nondegenerate(L: LinearEAS) -> bool:
    return rank(L.phi) == L.dim ** 2


def invert_leas(L: LinearEAS) -> LinearEAS:
    """Phi^{-1}; raises :class:`NotInvertible` (with the rank) when degenerate."""
    inv = invert(L.phi)
    out = LinearEAS(L.dim, inv, name=None if L.name is None else L.name + "-inv")
    if not check_leas(out):
        # cannot happen for an ell-EAS; surfaced for non-EAS input
        raise ValueError("inverse does not satisfy the braid identity (input was not an ell-EAS)")
    return out


__all__ = ["LinearEAS", "LeasReport", "braid_sides", "check_leas", "linearize", "dualize",
           "invert_leas", "is_nondegenerate", "NotInvertible"]
