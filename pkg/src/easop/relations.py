"""Named quadratic relation systems and their evaluation on free Phi-associative algebras.

An expression is a letter (a string) or a triple ``(op, left, right)``.  A
relation is a list of ``(coef, expression)`` terms whose sum is required to
vanish.  Relations whose terms all keep the letters in the order x, y, z are
*nonsymmetric* and have a coordinate vector in the arity-3 part of the free
nonsymmetric operad on the named products; the basis monomials are
``("L", p, q) = (x p y) q z`` and ``("R", p, q) = x p (y q z)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .exactlin import ONE, ZERO, FormalSum, Rational, in_span, rank_of_vectors, row_space_basis
from .freealg import FreePhiAlgebra, TypedWord
from .leas import LinearEAS

Expr = object
Relation = list[tuple[int, Expr]]


def L_(p, q):  # (x p y) q z
    return (q, (p, "x", "y"), "z")


def R_(p, q):  # x p (y q z)
    return (p, "x", (q, "y", "z"))


def rel(lhs: Sequence[Expr], rhs: Sequence[Expr]) -> Relation:
    """sum(lhs) - sum(rhs)."""
    return [(1, e) for e in lhs] + [(-1, e) for e in rhs]


class UnknownRelationSet(KeyError):
    pass


# --- the named systems ------------------------------------------------------------

def _dendriform() -> dict[str, Relation]:
    return {
        "dend1": rel([L_("<", "<")], [R_("<", "<"), R_("<", ">")]),
        "dend2": rel([L_(">", "<")], [R_(">", "<")]),
        "dend3": rel([R_(">", ">")], [L_("<", ">"), L_(">", ">")]),
    }


def _tridendriform() -> dict[str, Relation]:
    return {
        "tridend1": rel([L_("<", "<")], [R_("<", "<"), R_("<", ">"), R_("<", ".")]),
        "tridend2": rel([L_(">", "<")], [R_(">", "<")]),
        "tridend3": rel([R_(">", ">")], [L_("<", ">"), L_(">", ">"), L_(".", ">")]),
        "tridend4": rel([L_(">", ".")], [R_(">", ".")]),
        "tridend5": rel([L_("<", ".")], [R_(".", ">")]),
        "tridend6": rel([L_(".", "<")], [R_(".", "<")]),
        "tridend7": rel([L_(".", ".")], [R_(".", ".")]),
    }


def _duplicial() -> dict[str, Relation]:
    return {
        "dup1": rel([L_("<", "<")], [R_("<", "<")]),
        "dup2": rel([L_(">", "<")], [R_(">", "<")]),
        "dup3": rel([R_(">", ">")], [L_(">", ">")]),
    }


def _dual_duplicial() -> dict[str, Relation]:
    # the second axiom is read with distinct letters (x < y) > z = 0
    return {
        "dualdup1": rel([L_("<", "<")], [R_("<", "<")]),
        "dualdup2": rel([L_("<", ">")], []),
        "dualdup3": rel([L_(">", "<")], [R_(">", "<")]),
        "dualdup4": rel([], [R_("<", ">")]),
        "dualdup5": rel([L_(">", ">")], [R_(">", ">")]),
    }


def _diassociative() -> dict[str, Relation]:
    l, r = "-|", "|-"
    return {
        "dias1": rel([L_(l, l)], [R_(l, l)]),
        "dias1bis": rel([L_(l, l)], [R_(l, r)]),
        "dias2": rel([L_(r, l)], [R_(r, l)]),
        "dias3": rel([L_(l, r)], [R_(r, r)]),
        "dias4": rel([L_(r, r)], [R_(r, r)]),
    }


def _triassociative() -> dict[str, Relation]:
    l, r, p = "-|", "|-", "_|_"
    return {
        "trias1": rel([L_(l, l)], [R_(l, l)]),
        "trias1bis": rel([L_(l, l)], [R_(l, r)]),
        "trias1ter": rel([L_(l, l)], [R_(l, p)]),
        "trias2": rel([L_(r, l)], [R_(r, l)]),
        "trias3": rel([L_(p, l)], [R_(p, l)]),
        "trias4": rel([L_(l, p)], [R_(p, r)]),
        "trias5": rel([L_(r, p)], [R_(r, p)]),
        "trias6": rel([L_(l, r)], [R_(r, r)]),
        "trias6bis": rel([L_(p, r)], [R_(r, r)]),
        "trias6ter": rel([L_(r, r)], [R_(r, r)]),
    }


def _comtrias() -> dict[str, Relation]:
    # commutativity of the dot is a symmetric relation and is kept apart
    d, s = ".", "*"
    return {
        "comtrias-comm": [(1, (d, "x", "y")), (-1, (d, "y", "x"))],
        "comtrias2": rel([L_(d, d)], [R_(d, d)]),
        "comtrias3": rel([L_(s, s)], [R_(s, s)]),
        "comtrias4": rel([L_(s, s)], [R_(s, d)]),
        "comtrias5": rel([L_(d, s)], [R_(d, s)]),
    }


def _bracket(a, b):
    return [(1, ("2", a, b)), (-1, ("2", b, a))]


def _post_lie() -> dict[str, Relation]:
    """Post-Lie identities with {x,y} = x *2 y - y *2 x and x * y = x *1 y."""

    def br(a, b):  # list of (coef, expr) for {a,b} where a, b are expressions
        return _bracket(a, b)

    def star_terms(left: Relation, right: Relation) -> Relation:
        return [(c1 * c2, ("1", e1, e2)) for c1, e1 in left for c2, e2 in right]

    def br_terms(left: Relation, right: Relation) -> Relation:
        out = []
        for c1, e1 in left:
            for c2, e2 in right:
                out += [(c1 * c2 * c, e) for c, e in br(e1, e2)]
        return out

    X, Y, Z = [(1, "x")], [(1, "y")], [(1, "z")]
    # x * {y,z} = (x*y)*z - x*(y*z) - (x*z)*y + x*(z*y)
    first = star_terms(X, br_terms(Y, Z)) + [
        (-1, ("1", ("1", "x", "y"), "z")), (1, ("1", "x", ("1", "y", "z"))),
        (1, ("1", ("1", "x", "z"), "y")), (-1, ("1", "x", ("1", "z", "y")))]
    # {x,y} * z = {x*z, y} + {x, y*z}
    second = star_terms(br_terms(X, Y), Z)
    second += [(-c, e) for c, e in br_terms(star_terms(X, Z), Y)]
    second += [(-c, e) for c, e in br_terms(X, star_terms(Y, Z))]
    jacobi = br_terms(br_terms(X, Y), Z) + br_terms(br_terms(Y, Z), X) + br_terms(br_terms(Z, X), Y)
    return {"postlie1": first, "postlie2": second, "jacobi": jacobi}


# axioms of the usual definitions that the shipped lists leave out; only used
# to complete a span computation, and always reported when used
SUPPLEMENTARY = {
    "triassociative": {"trias-perp-assoc": rel([L_("_|_", "_|_")], [R_("_|_", "_|_")])},
}

RELATION_SETS = {
    "dendriform": _dendriform,
    "tridendriform": _tridendriform,
    "duplicial": _duplicial,
    "dual-duplicial": _dual_duplicial,
    "diassociative": _diassociative,
    "triassociative": _triassociative,
    "comtrias": _comtrias,
    "post-lie": _post_lie,
}


def relation_set(name: str) -> dict[str, Relation]:
    try:
        return RELATION_SETS[name]()
    except KeyError:
        raise UnknownRelationSet(name) from None


# --- evaluation -------------------------------------------------------------------

@dataclass(frozen=True)
class ProductAssignment:
    """Named product -> (side, decoration index) in a free (opposite) Phi-associative algebra."""

    side: str  # "direct" or "opposite"
    ops: Mapping[str, int]


def evaluate(F: FreePhiAlgebra, assign: ProductAssignment, expr) -> FormalSum:
    if isinstance(expr, str):
        return FormalSum.basis(TypedWord.letter(expr))
    op, left, right = expr
    a = assign.ops[op]
    u, v = evaluate(F, assign, left), evaluate(F, assign, right)
    return F.star(a, u, v) if assign.side == "direct" else F.star(a, v, u)


def evaluate_relation(F: FreePhiAlgebra, assign: ProductAssignment, relation: Relation) -> FormalSum:
    out = FormalSum()
    for c, e in relation:
        out = out + evaluate(F, assign, e).scale(c)
    return out


# --- linear algebra in the free nonsymmetric operad --------------------------------

def _monomial(expr):
    if not isinstance(expr, tuple):
        return None
    q, left, right = expr
    if isinstance(left, tuple) and left[1:] == ("x", "y") and right == "z":
        return ("L", left[0], q)
    if left == "x" and isinstance(right, tuple) and right[1:] == ("y", "z"):
        return ("R", q, right[0])
    return None


def monomial_basis(ops: Sequence[str]) -> list[tuple[str, str, str]]:
    return [(s, p, q) for s in ("L", "R") for p in ops for q in ops]


def relation_vector(relation: Relation, ops: Sequence[str]) -> list[Rational] | None:
    """Coordinates in the monomial basis, or None for a symmetric relation."""
    idx = {m: i for i, m in enumerate(monomial_basis(ops))}
    v = [ZERO] * len(idx)
    for c, e in relation:
        m = _monomial(e)
        if m is None:
            return None
        v[idx[m]] += c
    return v


def phi_relations(L: LinearEAS, assign: ProductAssignment) -> list[list[Rational]]:
    """The Phi-associativity (or opposite) relations written in the named products."""
    names = {a: op for op, a in assign.ops.items()}
    if len(names) != L.dim:
        raise ValueError("assignment must name every decoration exactly once")
    ops = [names[a] for a in range(L.dim)]
    imgs = L.images()
    out = []
    for a in range(L.dim):
        for b in range(L.dim):
            if assign.side == "direct":
                terms = [(1, R_(names[a], names[b]))]
                terms += [(-c, L_(names[v], names[u])) for (u, v), c in imgs[a][b].items()]
            else:
                terms = [(1, L_(names[b], names[a]))]
                terms += [(-c, R_(names[u], names[v])) for (u, v), c in imgs[a][b].items()]
            out.append(relation_vector(terms, ops))
    return out


def span_contains(gens: Sequence[Sequence], targets: Sequence[Sequence], dim: int) -> list[int]:
    """Indices of ``targets`` not in the span of ``gens``."""
    basis = row_space_basis(gens, dim)
    return [i for i, t in enumerate(targets) if not in_span(t, basis, dim)]


__all__ = ["RELATION_SETS", "SUPPLEMENTARY", "relation_set", "ProductAssignment", "evaluate", "evaluate_relation",
           "phi_relations", "relation_vector", "monomial_basis", "span_contains", "UnknownRelationSet",
           "rank_of_vectors", "ONE"]
