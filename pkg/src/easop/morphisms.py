"""Associative elements of Sym As_Phi(2), the morphisms out of the two-parameter operad,
and the links with named algebra types.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Sequence

from .catalog import Link, get_eas, get_leas, get_link
from .eas import (FiniteEAS, SizeLimitExceeded, are_isomorphic, associativity_witness, check_eas,
                  direct_product, make_from_semigroup, make_prime, right_division_table)
from .exactlin import ONE, ZERO, FormalSum, RationalMatrix, format_rational, to_rational
from .freealg import FreePhiAlgebra, TypedWord
from .leas import LinearEAS
from .operad import AsPhi
from .relations import (ProductAssignment, evaluate_relation, phi_relations, relation_set, relation_vector,
                        span_contains, SUPPLEMENTARY)
from .operad import count_normal_forms_two_param


# --- associative products --------------------------------------------------------

@dataclass(frozen=True)
class ProductCandidate:
    """m = sum_a coeffs[a] *_a, or the same with opposite products."""

    side: str
    coeffs: tuple

    def __post_init__(self):
        if self.side not in ("direct", "opposite"):
            raise ValueError("side must be 'direct' or 'opposite'")
        object.__setattr__(self, "coeffs", tuple(to_rational(c) for c in self.coeffs))

    def flipped(self) -> "ProductCandidate":
        return ProductCandidate("opposite" if self.side == "direct" else "direct", self.coeffs)

    def to_json(self) -> dict:
        return {"side": self.side, "coeffs": [format_rational(c) for c in self.coeffs]}


def _phi_aa(L: LinearEAS, a: Sequence) -> list:
    d = L.dim
    if len(a) != d:
        raise ValueError(f"expected {d} coefficients")
    aa = [a[i] * a[j] for i in range(d) for j in range(d)]
    return L.phi.apply(aa), aa


def check_associative(L: LinearEAS, c: ProductCandidate) -> bool:
    """Phi(a (x) a) == a (x) a; the same condition for either side."""
    img, aa = _phi_aa(L, c.coeffs)
    return img == aa


def check_square_zero(L: LinearEAS, c: ProductCandidate) -> bool:
    if c.side != "direct":
        raise ValueError("the square-zero criterion only covers direct products")
    img, _ = _phi_aa(L, c.coeffs)
    return not any(img)


def free_algebra_test(L: LinearEAS, a: Sequence, b: Sequence) -> dict:
    """Evaluate m = *_a + *_b^op on the free algebra on x, y, z.

    Independent of the closed criteria above: returns whether ``m o_1 m ==
    m o_2 m`` and whether ``m o_2 m == 0``.
    """
    F = FreePhiAlgebra(L)
    av = {i: to_rational(x) for i, x in enumerate(a) if x}
    bv = {i: to_rational(x) for i, x in enumerate(b) if x}

    def m(u, v):
        out = FormalSum()
        if av:
            out = out + F.star(av, u, v)
        if bv:
            out = out + F.star(bv, v, u)
        return out

    x, y, z = (FormalSum.basis(TypedWord.letter(s)) for s in "xyz")
    left = m(m(x, y), z)
    right = m(x, m(y, z))
    return {"associative": left == right, "square_zero": right == 0}


@dataclass
class IndicatorPattern:
    plus: tuple[str, ...]
    minus: tuple[str, ...]
    associative: bool
    square_zero: bool

    def vector(self, S: FiniteEAS) -> tuple[int, ...]:
        return tuple(1 if e in self.plus else -1 if e in self.minus else 0 for e in S.elements)

    def to_json(self) -> dict:
        return {"plus": list(self.plus), "minus": list(self.minus),
                "associative": self.associative, "square_zero": self.square_zero}


def _square_fixed(S: FiniteEAS, lam: Sequence[int]) -> bool:
    n = S.size
    rhs = {}
    for g, d in product(range(n), repeat=2):
        k = (S.arrow[g][d], S.triangle[g][d])
        rhs[k] = rhs.get(k, 0) + lam[g] * lam[d]
    return all(lam[a] * lam[b] == rhs.get((a, b), 0) for a, b in product(range(n), repeat=2))


def _square_vanishes(S: FiniteEAS, lam: Sequence[int]) -> bool:
    n = S.size
    rhs = {}
    for g, d in product(range(n), repeat=2):
        k = (S.arrow[g][d], S.triangle[g][d])
        rhs[k] = rhs.get(k, 0) + lam[g] * lam[d]
    return not any(rhs.values())


def _patterns(n: int):
    idx = range(n)
    for r in range(1, n + 1):
        for Sset in combinations(idx, r):
            yield Sset, ()
    for r in range(1, n):
        for Sset in combinations(idx, r):
            rest = [i for i in idx if i not in Sset]
            for t in range(1, len(rest) + 1):
                for Tset in combinations(rest, t):
                    if min(Sset) < min(Tset):  # 1_S - 1_T and 1_T - 1_S differ by a scalar
                        yield Sset, Tset


SEARCH_NOTE = "restricted to lambda * 1_S and lambda * (1_S - 1_T); other solutions are not searched"


def find_indicator_solutions(S: FiniteEAS) -> list[IndicatorPattern]:
    """Indicator patterns solving the associativity or square-zero system.

    Both systems are homogeneous of degree 2, so a pattern passes for one
    nonzero scalar iff it passes for all of them.
    """
    if S.size > 6:
        raise SizeLimitExceeded("indicator search is limited to 6 elements")
    out = []
    e = S.elements
    for Sset, Tset in _patterns(S.size):
        lam = [1 if i in Sset else -1 if i in Tset else 0 for i in range(S.size)]
        a, z = _square_fixed(S, lam), _square_vanishes(S, lam)
        if a or z:
            out.append(IndicatorPattern(tuple(e[i] for i in Sset), tuple(e[i] for i in Tset), a, z))
    return out


class NotAGroup(ValueError):
    pass


def _check_group(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    if associativity_witness(tuple(tuple(r) for r in table)) is not None:
        raise NotAGroup("operation is not associative")
    ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    for x in range(n):
        if not any(table[x][y] == e for y in range(n)):
            raise NotAGroup(f"element {x} has no inverse")
    return e


def subgroups(table: Sequence[Sequence[int]]) -> list[frozenset]:
    """All subgroups, found as subsets closed under the product (finite case)."""
    n = len(table)
    out = []
    for r in range(1, n + 1):
        for H in combinations(range(n), r):
            Hs = set(H)
            if all(table[a][b] in Hs for a in H for b in H):
                out.append(frozenset(H))
    return out


def verify_subgroup_corollary(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> dict:
    n = len(table)
    if n > 8:
        raise SizeLimitExceeded("groups of order at most 8")
    _check_group(table)
    labels = [str(i) for i in range(n)] if labels is None else list(labels)
    subs = set(subgroups(table))
    result = {"subgroups": sorted([sorted(labels[i] for i in H) for H in subs]), "ok": True, "per_structure": {}}
    for name, S in (("EAS", make_from_semigroup(labels, table)), ("EAS'", make_prime(labels, table))):
        passing = []
        bad = []
        for Sset, Tset in _patterns(n):
            lam = [1 if i in Sset else -1 if i in Tset else 0 for i in range(n)]
            if _square_fixed(S, lam):
                passing.append((Sset, Tset))
                if Tset or frozenset(Sset) not in subs:
                    bad.append({"plus": [labels[i] for i in Sset], "minus": [labels[i] for i in Tset]})
        found = {frozenset(Sset) for Sset, Tset in passing if not Tset}
        missing = [sorted(labels[i] for i in H) for H in subs - found]
        ok = not bad and not missing
        result["per_structure"][name] = {"ok": ok, "unexpected": bad, "missing": missing}
        result["ok"] &= ok
    return result


# --- the associative-products table for cardinality two ---------------------------

# spans of the direct products *_a, *_b given as families of subspaces
ASSOCIATIVE_TABLE = {
    "A1": ([[[1, 0]]], [[[1, -1]]]),
    "A2": ([[[1, 0]]], [[[1, -1]]]),
    "C1": ([[[1, 0]]], []),
    "C3": ([[[1, 0]], [[0, 1]]], []),
    "C5": ([[[0, 1]]], []),
    "C6": ([[[1, 0]]], []),
    "E1'-E2'": ([[[1, 0]]], [[[1, -1]]]),
    "E3'": ([[[1, 0]], [[0, 1]]], [[[1, -1]]]),
    "F1": ([[[1, 0]]], [[[1, -1]]]),
    "F3": ([[[1, 0], [0, 1]]], []),
    "F4": ([[[1, 1]], [[1, 0]]], []),
    "H1": ([[[1, 0]]], []),
    "H2": ([[[1, 1]], [[1, 0]]], []),
}


def _in_family(vec, families) -> bool:
    from .exactlin import in_span
    return any(in_span(vec, [list(map(to_rational, b)) for b in fam], len(vec)) for fam in families)


def expected_indicator_patterns(name: str) -> tuple[set, set]:
    """Patterns (as coefficient vectors) that lie in the tabulated families."""
    assoc, sq = ASSOCIATIVE_TABLE[name]
    S = get_eas(name)
    vecs = [tuple(1 if i in Sset else -1 if i in Tset else 0 for i in range(S.size))
            for Sset, Tset in _patterns(S.size)]
    return ({v for v in vecs if _in_family(v, assoc)}, {v for v in vecs if _in_family(v, sq)})


def associative_scan(S: FiniteEAS, name: str | None = None) -> dict:
    """Run the indicator search, with a comparison against the table when the name is known."""
    pats = find_indicator_solutions(S)
    out = {"patterns": [p.to_json() for p in pats], "search": SEARCH_NOTE}
    if name in ASSOCIATIVE_TABLE:
        exp_a, exp_z = expected_indicator_patterns(name)
        got_a = {p.vector(S) for p in pats if p.associative}
        got_z = {p.vector(S) for p in pats if p.square_zero}
        out["matches_table"] = got_a == exp_a and got_z == exp_z
        out["discrepancies"] = {"associative": sorted(map(list, got_a ^ exp_a)),
                                "square_zero": sorted(map(list, got_z ^ exp_z))}
    return out


# --- operad morphisms ----------------------------------------------------------------

def _raw_linearization(S: FiniteEAS) -> LinearEAS:
    n = S.size
    cols = [{S.arrow[i][j] * n + S.triangle[i][j]: 1} for i in range(n) for j in range(n)]
    return LinearEAS(n, RationalMatrix.from_columns(cols, n * n), name=S.name)


@dataclass
class MorphismReport:
    ok: bool
    checked: int
    failures: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "failures": self.failures, **self.extra}


def _relation_images(P: AsPhi, lhs_outer, lhs_inner, rhs_outer, rhs_inner):
    """(x *_i y) *_o z versus x *_o' (y *_i' z) as elements of As_Phi(3)."""
    left = {(lhs_inner, lhs_outer): ONE}
    right = P.compose((rhs_outer,), 2, (rhs_inner,))
    return left, right


def theta_check(S: FiniteEAS) -> MorphismReport:
    """*_{al,be} -> *_{al |> be} preserves every relation of the two-parameter operad."""
    n = S.size
    A, T = S.arrow, S.triangle
    w = associativity_witness(A)
    if w is not None:
        return MorphismReport(False, 0, [{"precondition": "arrow not associative",
                                          "witness": [S.elements[i] for i in w]}])
    P = AsPhi(_raw_linearization(S))
    fails, checked = [], 0
    for al, be, ga in product(range(n), repeat=3):
        checked += 1
        left, right = _relation_images(P, T[A[al][be]][ga], T[al][be], T[al][A[be][ga]], T[be][ga])
        if left != right:
            fails.append({"triple": [S.elements[i] for i in (al, be, ga)]})
    return MorphismReport(not fails, checked, fails)


def theta_prime_check(labels: Sequence[str], table: Sequence[Sequence[int]]) -> MorphismReport:
    """*_{al,be} -> *_{(al,be)} into the linearization of EAS(Omega) x EAS'(Omega).

    Raises :class:`~easop.eas.NoRightInverses` if a right translation is not bijective.
    """
    labels = [str(x) for x in labels]
    tab = tuple(tuple(int(x) for x in r) for r in table)
    right_division_table(labels, tab)
    n = len(labels)
    prod_eas = direct_product(make_from_semigroup(labels, tab), make_prime(labels, tab))
    P = AsPhi(_raw_linearization(prod_eas))

    def pair(a, b):
        return a * n + b

    fails, checked = [], 0
    for al, be, ga in product(range(n), repeat=3):
        checked += 1
        left, right = _relation_images(P, pair(tab[al][be], ga), pair(al, be), pair(al, tab[be][ga]), pair(be, ga))
        if left != right:
            fails.append({"triple": [labels[i] for i in (al, be, ga)]})
    dim_source = count_normal_forms_two_param(n, 3)
    dim_target = (n * n) ** 2
    extra = {"dim_two_param_3": dim_source, "dim_target_3": dim_target,
             "formula_source": (2 * n - 1) * n ** 3, "formula_target": n ** 4,
             "bijective_in_arity_3": dim_source == dim_target and not fails}
    return MorphismReport(not fails, checked, fails, extra)


# --- links with named algebra types -----------------------------------------------

@dataclass
class RelationReport:
    ok: bool
    relation_set: str
    holds: dict
    mode: str
    contained: bool | None = None
    missing_phi_relations: list = field(default_factory=list)
    supplementary_used: list = field(default_factory=list)
    isomorphism: dict | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "relation_set": self.relation_set, "mode": self.mode, "holds": self.holds,
                "contained": self.contained, "missing_phi_relations": self.missing_phi_relations,
                "supplementary_used": self.supplementary_used, "isomorphism": self.isomorphism}


def relation_catalog_check(L: LinearEAS, relation_set_name: str, side: str, ops: dict,
                           mode: str = "consequence", expected: Sequence[str] = ()) -> RelationReport:
    """Evaluate the named axioms on the free (opposite) Phi-associative algebra on x, y, z.

    ``consequence``: all axioms must vanish there.  ``reformulation``: the
    axioms in ``expected`` must vanish and every Phi-relation must lie in
    the span of the named axioms (plus any supplementary ones).
    """
    rels = relation_set(relation_set_name)
    assign = ProductAssignment(side, ops)
    F = FreePhiAlgebra(L)
    holds = {k: evaluate_relation(F, assign, r) == 0 for k, r in rels.items()}
    if mode == "consequence":
        return RelationReport(all(holds.values()), relation_set_name, holds, mode)
    if mode != "reformulation":
        raise ValueError(f"unknown mode {mode!r}")
    names = {a: op for op, a in ops.items()}
    oplist = [names[a] for a in range(L.dim)]
    dim = 2 * L.dim ** 2
    named = [v for v in (relation_vector(r, oplist) for r in rels.values()) if v is not None]
    targets = phi_relations(L, assign)
    missing = span_contains(named, targets, dim)
    used = []
    if missing:
        extra = SUPPLEMENTARY.get(relation_set_name, {})
        if extra:
            named2 = named + [relation_vector(r, oplist) for r in extra.values()]
            if not span_contains(named2, targets, dim):
                used = sorted(extra)
    contained = not missing
    ok = all(holds[k] for k in expected) and (contained or bool(used))
    return RelationReport(ok, relation_set_name, holds, mode, contained, missing, used)


def verify_link(link: Link | str) -> RelationReport:
    link = get_link(link) if isinstance(link, str) else link
    L = get_leas(link.target)
    rep = relation_catalog_check(L, link.relation_set, link.side, link.ops, link.mode, link.expected)
    if link.isomorphic_to is not None:
        iso, mapping = are_isomorphic(get_eas(link.target), get_eas(link.isomorphic_to))
        rep.isomorphism = {"claimed": link.isomorphic_to, "isomorphic": iso, "mapping": mapping}
        rep.ok = rep.ok and iso
    return rep
