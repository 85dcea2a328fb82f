"""Explicit nonsymmetric operads: As_Phi, the word operad on a semigroup, and tree rewriting.

Elements of ``As_Phi(n)`` are combinations of decoration tuples of length
``n - 1``, stored in left-to-right position order: the tuple
``(a_1, ..., a_{n-1})`` is the left comb ``((x_1 *_{a_1} x_2) *_{a_2} x_3) ...``.
(Printed formulas often index such tuples right to left as ``a_{n-1} ... a_1``.)
With this order ``f o_1 g`` is the concatenation ``g + f``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Protocol, Sequence

from .exactlin import (ONE, ZERO, FormalSum, RationalMatrix, apply_local, flip_matrix, format_rational,
                       invert, NotInvertible, rank_of_vectors)
from .freealg import Semigroup
from .leas import LinearEAS, check_leas

Key = object


# --- generic composition providers -------------------------------------------------

class CompositionProvider(Protocol):
    """Basis-level description of a nonsymmetric operad."""

    name: str

    def basis(self, n: int) -> list: ...

    def arity(self, f) -> int: ...

    def compose(self, f, i: int, g) -> dict: ...

    def unit(self) -> dict: ...


def _compose_sums(P: CompositionProvider, F: dict, i: int, G: dict) -> dict:
    out: dict = {}
    for f, cf in F.items():
        for g, cg in G.items():
            for k, c in P.compose(f, i, g).items():
                out[k] = out.get(k, ZERO) + cf * cg * c
    return {k: v for k, v in out.items() if v}


@dataclass
class OperadAxiomReport:
    ok: bool
    checked: int
    failure: dict | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "failure": self.failure}


def _key_json(k):
    return list(k) if isinstance(k, tuple) else k


def operad_axiom_check(P: CompositionProvider, max_arity: int = 4) -> OperadAxiomReport:
    """Sequential and parallel associativity plus unit laws on basis elements."""
    if max_arity < 3:
        raise ValueError("max_arity must be >= 3")
    basis = {n: P.basis(n) for n in range(1, max_arity + 1)}
    unit = P.unit()
    checked = 0

    def fail(kind, *items):
        return OperadAxiomReport(False, checked, {"law": kind, "elements": [_key_json(x) for x in items]})

    for n in range(1, max_arity + 1):
        for f in basis[n]:
            fs = {f: ONE}
            checked += 1
            if _compose_sums(P, unit, 1, fs) != fs:
                return fail("left unit", f)
            for i in range(1, n + 1):
                if _compose_sums(P, fs, i, unit) != fs:
                    return fail(f"right unit at {i}", f)
    for nf, ng, nh in product(range(1, max_arity + 1), repeat=3):
        if nf + ng + nh - 2 > max_arity:
            continue
        for f, g, h in product(basis[nf], basis[ng], basis[nh]):
            F, G, H = {f: ONE}, {g: ONE}, {h: ONE}
            for i in range(1, nf + 1):
                fg = _compose_sums(P, F, i, G)
                for j in range(1, ng + 1):
                    checked += 1
                    if _compose_sums(P, fg, i + j - 1, H) != _compose_sums(P, F, i, _compose_sums(P, G, j, H)):
                        return fail(f"sequential i={i} j={j}", f, g, h)
                for j in range(i + 1, nf + 1):
                    checked += 1
                    left = _compose_sums(P, fg, j + ng - 1, H)
                    right = _compose_sums(P, _compose_sums(P, F, j, H), i, G)
                    if left != right:
                        return fail(f"parallel i={i} j={j}", f, g, h)
    return OperadAxiomReport(True, checked)


# --- As_Phi ------------------------------------------------------------------------

@dataclass(frozen=True)
class OperadElement:
    arity: int
    vector: FormalSum = field(default_factory=FormalSum)

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be >= 1")
        if any(len(k) != self.arity - 1 for k in self.vector.keys()):
            raise ValueError("decoration tuple length must equal arity - 1")

    @classmethod
    def basis(cls, decs: Sequence[int]) -> "OperadElement":
        decs = tuple(decs)
        return cls(len(decs) + 1, FormalSum.basis(decs))

    def to_json(self) -> dict:
        return {"arity": self.arity,
                "terms": [{"dec": list(k), "coef": format_rational(c)} for k, c in sorted(self.vector)]}


class AsPhi:
    """Composition provider for As_Phi, with the staircase applied in matrix form."""

    def __init__(self, L: LinearEAS):
        self.L = L
        self.name = f"As_Phi[{L.name or 'anonymous'}]"
        d = L.dim
        tau = flip_matrix(d)
        self.psi = tau @ L.phi @ tau
        self._basis: dict[int, list] = {}

    def basis(self, n: int) -> list:
        if n not in self._basis:
            self._basis[n] = list(product(range(self.L.dim), repeat=n - 1))
        return self._basis[n]

    def arity(self, f) -> int:
        return len(f) + 1

    def unit(self) -> dict:
        return {(): ONE}

    def insert(self, a: int, decs: tuple) -> dict:
        """Push ``a`` from the right end of ``decs`` to the left with Psi = tau Phi tau."""
        t = {decs + (a,): ONE}
        for pos in range(len(decs) - 1, -1, -1):
            t = apply_local(self.psi, t, pos, self.L.dim)
        return t

    def compose(self, f: tuple, i: int, g: tuple) -> dict:
        k = len(f)
        if not 1 <= i <= k + 1:
            raise IndexError(f"position {i} out of range for arity {k + 1}")
        if i == 1:
            return {g + f: ONE}
        head, a, tail = f[:i - 2], f[i - 2], f[i - 1:]
        return {head + s + tail: c for s, c in self.insert(a, g).items()}


def compose_asphi(L: LinearEAS, f: OperadElement, i: int, g: OperadElement) -> OperadElement:
    if not 1 <= i <= f.arity:
        raise IndexError(f"position {i} out of range for arity {f.arity}")
    P = _asphi(L)
    out = _compose_sums(P, f.vector.terms, i, g.vector.terms)
    return OperadElement(f.arity + g.arity - 1, FormalSum(out))


@lru_cache(maxsize=64)
def _asphi(L: LinearEAS) -> AsPhi:
    return AsPhi(L)


class CorruptedProvider:
    """Wraps a provider and flips the sign of one composition, as a negative control."""

    def __init__(self, inner: CompositionProvider, f, i: int, g):
        self.inner, self.target = inner, (f, i, g)
        self.name = inner.name + "[corrupted]"

    def basis(self, n):
        return self.inner.basis(n)

    def arity(self, f):
        return self.inner.arity(f)

    def unit(self):
        return self.inner.unit()

    def compose(self, f, i, g):
        out = self.inner.compose(f, i, g)
        if (f, i, g) == self.target:
            return {k: -v for k, v in out.items()}
        return out


# --- the word operad on a semigroup --------------------------------------------------

UNIT = "I"


class WordOperad:
    """Words over a semigroup, composed under the delta condition on the folded product.

    With ``reduced=True`` this is P_0: arity 1 is spanned by the unit
    ``I = sum of all letters`` alone; otherwise arity 1 has one basis element
    per letter and the unit is a sum.
    """

    def __init__(self, sg: Semigroup, reduced: bool = True):
        self.sg = sg
        self.reduced = reduced
        self.name = ("P0" if reduced else "P") + f"[{sg.size}]"

    def basis(self, n: int) -> list:
        if n == 1 and self.reduced:
            return [UNIT]
        return list(product(range(self.sg.size), repeat=n))

    def arity(self, f) -> int:
        return 1 if f == UNIT else len(f)

    def unit(self) -> dict:
        if self.reduced:
            return {UNIT: ONE}
        return {(a,): ONE for a in range(self.sg.size)}

    def compose(self, f, i: int, g) -> dict:
        if not 1 <= i <= self.arity(f):
            raise IndexError(f"position {i} out of range")
        if g == UNIT:
            return {f: ONE}
        if f == UNIT:
            return {g: ONE}
        if f[i - 1] != self.sg.fold(g):
            return {}
        return {f[:i - 1] + g + f[i:]: ONE}


def word_compose(sg: Semigroup, w: Sequence[int], args: Sequence) -> FormalSum:
    """w o (w_1, ..., w_n) = delta(w, |w_1| ... |w_n|) w_1 ... w_n, extended linearly.

    Each argument is a word (sequence of letters), a FormalSum of word tuples,
    or the string ``"I"`` for the unit.
    """
    w = tuple(w)
    if len(args) != len(w):
        raise ValueError(f"arity mismatch: word of length {len(w)} with {len(args)} arguments")
    expanded = []
    for a in args:
        if isinstance(a, str) and a == UNIT:
            expanded.append([((x,), ONE) for x in range(sg.size)])
        elif isinstance(a, FormalSum):
            expanded.append(list(a))
        else:
            expanded.append([(tuple(a), ONE)])
    out: dict = {}
    for combo in product(*expanded):
        if all(w[k] == sg.fold(word) for k, (word, _) in enumerate(combo)):
            key = tuple(x for word, _ in combo for x in word)
            c = ONE
            for _, ci in combo:
                c *= ci
            out[key] = out.get(key, ZERO) + c
    return FormalSum(out)


def generated_dimension(P: CompositionProvider, n: int) -> int:
    """Dimension of the arity-``n`` part of the suboperad generated by arity 2."""
    layer = [{g: ONE} for g in P.basis(2)]
    gens = list(layer)
    for m in range(3, n + 1):
        new = []
        for f in layer:
            for i in range(1, m):
                for g in gens:
                    r = _compose_sums(P, f, i, g)
                    if r:
                        new.append(r)
        layer = _independent(new)
    if n == 1:
        return len(P.basis(1))
    keys = sorted({k for v in layer for k in v}, key=repr)
    idx = {k: j for j, k in enumerate(keys)}
    vecs = []
    for v in layer:
        row = [ZERO] * len(keys)
        for k, c in v.items():
            row[idx[k]] = c
        vecs.append(row)
    return rank_of_vectors(vecs, len(keys))


def _independent(vectors: list[dict]) -> list[dict]:
    """Cheap pruning: drop exact duplicates up to scale on single-term vectors."""
    seen, out = set(), []
    for v in vectors:
        if len(v) == 1:
            (k,) = v
            if k in seen:
                continue
            seen.add(k)
            out.append({k: ONE})
        else:
            out.append(v)
    return out


# --- decorated trees and rewriting ---------------------------------------------------

LEAF = "leaf"


def node(dec, left, right) -> tuple:
    return ("node", dec, left, right)


def tree_to_json(t):
    if t == LEAF:
        return LEAF
    _, dec, l, r = t
    return ["node", list(dec) if isinstance(dec, tuple) else dec, tree_to_json(l), tree_to_json(r)]


def tree_from_json(j):
    if j == LEAF:
        return LEAF
    tag, dec, l, r = j
    if tag != "node":
        raise ValueError(f"bad tree tag {tag!r}")
    return node(tuple(dec) if isinstance(dec, list) else dec, tree_from_json(l), tree_from_json(r))


def leaves(t) -> int:
    return 1 if t == LEAF else leaves(t[2]) + leaves(t[3])


def tree_shapes(n: int) -> list:
    """All planar binary trees with ``n`` leaves and ``None`` decorations."""
    if n == 1:
        return [LEAF]
    return [node(None, l, r) for k in range(1, n) for l in tree_shapes(k) for r in tree_shapes(n - k)]


def decorate(shape, decs: Iterable) -> list:
    """All decorations of ``shape`` with labels from ``decs``."""
    decs = list(decs)
    if shape == LEAF:
        return [LEAF]
    return [node(d, l, r) for d in decs for l in decorate(shape[2], decs) for r in decorate(shape[3], decs)]


def left_comb(decs: Sequence) -> tuple:
    t = LEAF
    for d in decs:
        t = node(d, t, LEAF)
    return t


class RuleSet(Protocol):
    def match(self, t) -> dict | None:
        """Rewrite of ``t`` at its root, or None if the root is not a redex."""


class AsPhiRules:
    """x *_a (y *_b z) -> sum Phi[(u,v),(a,b)] (x *_v y) *_u z."""

    def __init__(self, L: LinearEAS):
        self.L = L
        self.images = L.images()

    @property
    def alphabet(self) -> list:
        return list(range(self.L.dim))

    def match(self, t):
        if t == LEAF or t[3] == LEAF:
            return None
        _, a, x, (_, b, y, z) = t
        return {node(u, node(v, x, y), z): c for (u, v), c in self.images[a][b].items()}

    def critical_monomials(self):
        for a, b, c in product(self.alphabet, repeat=3):
            yield (a, b, c), node(a, LEAF, node(b, LEAF, node(c, LEAF, LEAF)))


class TwoParamRules:
    """(x *_{al,be} y) *_{al->be,ga} z -> x *_{al,be->ga} (y *_{be,ga} z)."""

    def __init__(self, sg: Semigroup):
        self.sg = sg

    @property
    def alphabet(self) -> list:
        return list(product(range(self.sg.size), repeat=2))

    def match(self, t):
        if t == LEAF or t[2] == LEAF:
            return None
        _, (d, ga), (_, (al, be), x, y), z = t
        if d != self.sg.mul(al, be):
            return None
        return {node((al, self.sg.mul(be, ga)), x, node((be, ga), y, z)): ONE}

    def critical_monomials(self):
        m = self.sg.mul
        n = self.sg.size
        for al, be, ga, de in product(range(n), repeat=4):
            t = node((m(m(al, be), ga), de), node((m(al, be), ga), node((al, be), LEAF, LEAF), LEAF), LEAF)
            yield (al, be, ga, de), t


def find_redex(rules: RuleSet, t, path=()):
    """Leftmost-innermost redex as (path, rewrite of the subtree), or None."""
    if t == LEAF:
        return None
    hit = find_redex(rules, t[2], path + (2,))
    if hit is not None:
        return hit
    hit = find_redex(rules, t[3], path + (3,))
    if hit is not None:
        return hit
    rw = rules.match(t)
    return None if rw is None else (path, rw)


def _replace(t, path, sub):
    if not path:
        return sub
    lst = list(t)
    lst[path[0]] = _replace(t[path[0]], path[1:], sub)
    return tuple(lst)


def rewrite_step(rules: RuleSet, t, path, rw: dict) -> dict:
    return {_replace(t, path, s): c for s, c in rw.items()}


def rewrite_normal_form(rules: RuleSet, t, memo: dict | None = None) -> FormalSum:
    """Normal form of a tree or of a FormalSum of trees."""
    memo = {} if memo is None else memo
    if isinstance(t, FormalSum):
        out: dict = {}
        for s, c in t:
            for k, v in _nf(rules, s, memo).items():
                out[k] = out.get(k, ZERO) + c * v
        return FormalSum(out)
    return FormalSum(_nf(rules, t, memo))


def _nf(rules, t, memo) -> dict:
    hit = memo.get(t)
    if hit is not None:
        return hit
    red = find_redex(rules, t)
    if red is None:
        out = {t: ONE}
    else:
        path, rw = red
        out = {}
        for s, c in rewrite_step(rules, t, path, rw).items():
            for k, v in _nf(rules, s, memo).items():
                out[k] = out.get(k, ZERO) + c * v
        out = {k: v for k, v in out.items() if v}
    memo[t] = out
    return out


def is_normal(rules: RuleSet, t) -> bool:
    return find_redex(rules, t) is None


@dataclass
class ConfluenceReport:
    confluent: bool
    checked: int
    witness: dict | None = None

    def __bool__(self):
        return self.confluent

    def to_json(self) -> dict:
        return {"confluent": self.confluent, "checked": self.checked, "witness": self.witness}


def _sum_json(d: dict) -> list:
    return [{"tree": tree_to_json(k), "coef": format_rational(v)} for k, v in sorted(d.items(), key=repr)]


def confluence_check(rules) -> ConfluenceReport:
    """Reduce every critical monomial by its root redex and by its inner redex, then compare."""
    memo: dict = {}
    checked = 0
    for label, t in rules.critical_monomials():
        outer = rules.match(t)
        inner_path = (3,) if isinstance(rules, AsPhiRules) else (2,)
        inner = rules.match(_subtree(t, inner_path))
        if outer is None or inner is None:
            continue
        checked += 1
        p1 = rewrite_normal_form(rules, FormalSum(outer), memo)
        p2 = rewrite_normal_form(rules, FormalSum(rewrite_step(rules, t, inner_path, inner)), memo)
        if p1 != p2:
            return ConfluenceReport(False, checked, {"triple": list(label),
                                                     "outer_first": _sum_json(p1.terms),
                                                     "inner_first": _sum_json(p2.terms)})
    return ConfluenceReport(True, checked)


def _subtree(t, path):
    for p in path:
        t = t[p]
    return t


def asphi_span_dimension(L: LinearEAS, n: int) -> int:
    """Rank of the normal forms of all decorated trees with ``n`` leaves."""
    rules = AsPhiRules(L)
    memo: dict = {}
    keys = [left_comb(decs) for decs in product(range(L.dim), repeat=n - 1)]
    idx = {k: i for i, k in enumerate(keys)}
    vecs = []
    for shape in tree_shapes(n):
        for t in decorate(shape, range(L.dim)):
            nf = rewrite_normal_form(rules, t, memo)
            row = [ZERO] * len(keys)
            for k, c in nf:
                if k not in idx:
                    raise AssertionError(f"normal form {k} is not a left comb")
                row[idx[k]] = c
            vecs.append(row)
    return rank_of_vectors(vecs, len(keys))


def count_normal_forms_two_param(omega: int, n: int) -> int:
    """Sum over planar binary trees of prod over vertices of omega * (omega or omega - 1).

    The second factor is omega when the vertex's left child is a leaf and
    omega - 1 otherwise.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 12:
        raise ValueError("n is limited to 12")
    # split by whether the tree is a leaf, so the left-child case is known
    total = [0] * (n + 1)
    total[1] = 1
    for m in range(2, n + 1):
        s = omega * omega * total[m - 1]  # left child a leaf
        for k in range(2, m):
            s += omega * (omega - 1) * total[k] * total[m - k]
        total[m] = s
    return total[n]


def enumerate_normal_forms_two_param(sg: Semigroup, n: int) -> list:
    """Brute force: decorated trees with ``n`` leaves containing no redex."""
    rules = TwoParamRules(sg)
    out = []
    for shape in tree_shapes(n):
        out += [t for t in decorate(shape, rules.alphabet) if is_normal(rules, t)]
    return out


def normal_forms_by_rewriting(sg: Semigroup, n: int) -> set:
    """Distinct normal forms reached from every decorated tree with ``n`` leaves."""
    rules = TwoParamRules(sg)
    memo: dict = {}
    out = set()
    for shape in tree_shapes(n):
        for t in decorate(shape, rules.alphabet):
            out.update(rewrite_normal_form(rules, t, memo).keys())
    return out


# --- Koszul orthogonality and recognition --------------------------------------------

@dataclass
class OrthogonalityReport:
    ok: bool
    dim_I: int
    dim_I_dual: int
    pairing_zero: bool

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "dim_I": self.dim_I, "dim_I_dual": self.dim_I_dual,
                "pairing_zero": self.pairing_zero}


def relation_spaces(L: LinearEAS) -> tuple[list[list], list[list]]:
    """Rows of I (for Phi) and I' (for the transpose) in the weight-2 free space.

    Coordinates: first block ``u o_1 v`` indexed ``u*d+v``, second block
    ``a o_2 b`` indexed ``a*d+b``.
    """
    d2 = L.dim ** 2
    cols = L.phi.columns()
    I, Id = [], []
    for ab in range(d2):
        row = [ZERO] * (2 * d2)
        for uv, c in cols[ab].items():
            row[uv] += c
        row[d2 + ab] -= ONE
        I.append(row)
    for fg in range(d2):
        row = [ZERO] * (2 * d2)
        row[fg] -= ONE
        for ab in range(d2):
            row[d2 + ab] += L.phi[fg, ab]
        Id.append(row)
    return I, Id


def koszul_orthogonality_check(L: LinearEAS) -> OrthogonalityReport:
    """I' is orthogonal to I under the pairing +1 on o_1 and -1 on o_2."""
    d2 = L.dim ** 2
    I, Id = relation_spaces(L)
    sign = [ONE] * d2 + [-ONE] * d2
    zero = all(sum(x * y * s for x, y, s in zip(r, q, sign)) == 0 for r in I for q in Id)
    rI = rank_of_vectors(I, 2 * d2)
    rJ = rank_of_vectors(Id, 2 * d2)
    return OrthogonalityReport(zero and rI == d2 and rJ == d2, rI, rJ, zero)


class NotRecognizable(ValueError):
    def __init__(self, reason: str, detail=None):
        super().__init__(reason)
        self.reason = reason
        self.detail = detail


def extract_leas(P: CompositionProvider, name: str | None = None) -> LinearEAS:
    """Recover Phi from o_1 and o_2 on arity 2, via iota_3(u (x) v) = u o_1 v."""
    A = list(P.basis(2))
    d = len(A)
    targets = list(P.basis(3))
    tidx = {k: i for i, k in enumerate(targets)}
    if len(targets) != d * d:
        raise NotRecognizable(f"arity-3 dimension {len(targets)} differs from dim(A)^2 = {d * d}",
                              {"dim_A": d, "dim_P3": len(targets)})

    def coords(vec: dict) -> list:
        row = [ZERO] * len(targets)
        for k, c in vec.items():
            row[tidx[k]] += c
        return row

    iota_cols = [coords(P.compose(u, 1, v)) for u in A for v in A]
    iota = RationalMatrix.from_rows([list(r) for r in zip(*iota_cols)])
    try:
        inv = invert(iota)
    except NotInvertible as exc:
        raise NotRecognizable("iota_3 is not invertible", {"rank": exc.rank}) from None
    images = [inv.apply(coords(P.compose(a, 2, b))) for a in A for b in A]
    phi = RationalMatrix.from_rows([list(r) for r in zip(*images)])
    L = LinearEAS(d, phi, name=name)
    rep = check_leas(L)
    if not rep:
        raise NotRecognizable("extracted map fails the braid identity",
                              {"row": list(rep.witness[0]), "col": list(rep.witness[1])})
    return L
