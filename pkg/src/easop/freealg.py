"""Free Phi-associative algebras on typed words, and their associative envelopes.

A typed word of length n is a pair ``(decs, letters)`` with ``len(decs) ==
n - 1``.  Appending ``a z`` to a word adds decoration ``a`` at the right end
of ``decs`` and letter ``z`` at the right end of ``letters``, so a word is the
left comb ``((x1 *_{d1} x2) *_{d2} x3) ...``.

The product ``u *_a v`` is defined by recursion on the length of ``v``::

    w *_a z          = w . a z
    u *_a (v . b z)  = sum (u *_{a|>b} v) . (a->b) z

where ``Phi(a (x) b) = sum (a->b) (x) (a|>b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, NamedTuple, Sequence

from .exactlin import ONE, ZERO, FormalSum, rank, to_rational
from .leas import LinearEAS


class TypedWord(NamedTuple):
    decs: tuple[int, ...]
    letters: tuple

    @classmethod
    def letter(cls, x) -> "TypedWord":
        return cls((), (x,))

    def __len__(self) -> int:  # length as in the free algebra grading
        return len(self.letters)

    def append(self, a: int, z) -> "TypedWord":
        return TypedWord(self.decs + (a,), self.letters + (z,))

    def to_json(self, coef=ONE) -> dict:
        from .exactlin import format_rational
        return {"dec": list(self.decs), "let": list(self.letters), "coef": format_rational(coef)}


def word_sum_to_json(s: FormalSum) -> list[dict]:
    return [w.to_json(c) for w, c in sorted(s, key=lambda kv: (len(kv[0].letters), kv[0]))]


def word_sum_from_json(items: list[dict]) -> FormalSum:
    return FormalSum((TypedWord(tuple(it["dec"]), tuple(it["let"])), to_rational(it["coef"])) for it in items)


def _as_vector(L: LinearEAS, a) -> dict[int, object]:
    """Accept a basis index, a coefficient list, or a sparse dict."""
    if isinstance(a, int):
        if not 0 <= a < L.dim:
            raise ValueError(f"decoration {a} out of range for dim {L.dim}")
        return {a: ONE}
    if isinstance(a, dict):
        vec = {int(k): to_rational(v) for k, v in a.items() if v}
    else:
        if len(a) != L.dim:
            raise ValueError(f"expected a vector of length {L.dim}")
        vec = {i: to_rational(v) for i, v in enumerate(a) if v}
    if any(not 0 <= k < L.dim for k in vec):
        raise ValueError("decoration index out of range")
    return vec


def _as_sum(u) -> FormalSum:
    if isinstance(u, FormalSum):
        return u
    if isinstance(u, TypedWord):
        return FormalSum.basis(u)
    return FormalSum.basis(TypedWord.letter(u))


class FreePhiAlgebra:
    """The free Phi-associative algebra T_A(V) for a fixed (A, Phi).

    The recursion only ever touches the decorations of the right factor,
    so the decoration part is cached as :meth:`staircase`.
    """

    def __init__(self, L: LinearEAS):
        self.L = L
        self.d = L.dim
        self._images = L.images()
        self._cache: dict[tuple[int, tuple[int, ...]], dict[tuple[int, ...], object]] = {}

    def staircase(self, a: int, decs: tuple[int, ...]) -> dict[tuple[int, ...], object]:
        """Decorations appended by ``u *_a v`` when ``v`` has decorations ``decs``."""
        key = (a, decs)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not decs:
            out = {(a,): ONE}
        else:
            out: dict = {}
            b = decs[-1]
            for (p, q), c in self._images[a][b].items():
                for s, cs in self.staircase(q, decs[:-1]).items():
                    k = s + (p,)
                    out[k] = out.get(k, ZERO) + c * cs
            out = {k: v for k, v in out.items() if v}
        self._cache[key] = out
        return out

    def star_words(self, a: int, u: TypedWord, v: TypedWord) -> dict[TypedWord, object]:
        letters = u.letters + v.letters
        return {TypedWord(u.decs + s, letters): c for s, c in self.staircase(a, v.decs).items()}

    def star(self, a, u, v) -> FormalSum:
        out: dict = {}
        for ai, ca in _as_vector(self.L, a).items():
            for wu, cu in _as_sum(u):
                for wv, cv in _as_sum(v):
                    c0 = ca * cu * cv
                    for w, c in self.star_words(ai, wu, wv).items():
                        out[w] = out.get(w, ZERO) + c0 * c
        return FormalSum(out)

    def op_star(self, a, u, v) -> FormalSum:
        """Opposite product ``u *op_a v = v *_a u``."""
        return self.star(a, v, u)

    def star_recursive(self, a: int, u: TypedWord, v: TypedWord) -> FormalSum:
        """Uncached literal recursion, kept as an independent check of :meth:`star`."""
        if len(v.letters) == 1:
            return FormalSum.basis(u.append(a, v.letters[0]))
        b, z = v.decs[-1], v.letters[-1]
        vp = TypedWord(v.decs[:-1], v.letters[:-1])
        out = FormalSum()
        for (p, q), c in self._images[a][b].items():
            inner = self.star_recursive(q, u, vp)
            out = out + inner.map_keys(lambda w: w.append(p, z)).scale(c)
        return out


@lru_cache(maxsize=32)
def free_algebra(L: LinearEAS) -> FreePhiAlgebra:
    return FreePhiAlgebra(L)


def star(L: LinearEAS, a, u, v) -> FormalSum:
    return free_algebra(L).star(a, u, v)


def typed_words(d: int, generators: Sequence, length: int) -> Iterable[TypedWord]:
    for decs in product(range(d), repeat=length - 1):
        for letters in product(generators, repeat=length):
            yield TypedWord(decs, letters)


def _length_triples(max_len: int):
    for n in range(3, max_len + 1):
        for i in range(1, n - 1):
            for j in range(1, n - i):
                yield i, j, n - i - j


@dataclass
class AssociativityReport:
    ok: bool
    checked: int
    counterexample: dict | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "counterexample": self.counterexample}


def _counterexample(a, b, x, y, z, lhs, rhs) -> dict:
    return {"a": a, "b": b, "x": x.to_json(), "y": y.to_json(), "z": z.to_json(),
            "lhs": word_sum_to_json(lhs), "rhs": word_sum_to_json(rhs)}


def check_phi_associativity(L: LinearEAS, max_len: int = 4, generators: Sequence = ("x", "y", "z")
                            ) -> AssociativityReport:
    """x *_a (y *_b z) == sum (x *_{a|>b} y) *_{a->b} z over basis words of total length <= max_len."""
    if max_len < 3:
        raise ValueError("max_len must be >= 3")
    F = FreePhiAlgebra(L)
    d = L.dim
    imgs = L.images()
    words = {n: list(typed_words(d, generators, n)) for n in range(1, max_len - 1)}
    checked = 0
    for i, j, k in _length_triples(max_len):
        for x, y, z in product(words[i], words[j], words[k]):
            for a, b in product(range(d), repeat=2):
                lhs = F.star(a, x, F.star(b, y, z))
                rhs = FormalSum()
                for (p, q), c in imgs[a][b].items():
                    rhs = rhs + F.star(p, F.star(q, x, y), z).scale(c)
                checked += 1
                if lhs != rhs:
                    return AssociativityReport(False, checked, _counterexample(a, b, x, y, z, lhs, rhs))
    return AssociativityReport(True, checked)


def check_opposite_phi_associativity(L: LinearEAS, max_len: int = 4, generators: Sequence = ("x", "y", "z"),
                                     product_of: LinearEAS | None = None) -> AssociativityReport:
    """sum x *op_{a->b} (y *op_{a|>b} z) == (x *op_b y) *op_a z.

    The opposite product is built from the free algebra of ``product_of``
    (default: ``L`` itself), so that e.g. the Phi^{-1}-associative free
    algebra can be tested for opposite Phi-associativity.
    """
    if max_len < 3:
        raise ValueError("max_len must be >= 3")
    F = FreePhiAlgebra(product_of or L)
    d = L.dim
    imgs = L.images()
    words = {n: list(typed_words(d, generators, n)) for n in range(1, max_len - 1)}
    checked = 0
    for i, j, k in _length_triples(max_len):
        for x, y, z in product(words[i], words[j], words[k]):
            for a, b in product(range(d), repeat=2):
                rhs = F.op_star(a, F.op_star(b, x, y), z)
                lhs = FormalSum()
                for (p, q), c in imgs[a][b].items():
                    lhs = lhs + F.op_star(p, x, F.op_star(q, y, z)).scale(c)
                checked += 1
                if lhs != rhs:
                    return AssociativityReport(False, checked, _counterexample(a, b, x, y, z, lhs, rhs))
    return AssociativityReport(True, checked)


# -- associative envelope T_A(V) (x) A ---------------------------------------------

def envelope_product(L: LinearEAS, xa, yb) -> FormalSum:
    """(w1, a) * (w2, b) = sum (w1 *_{a|>b} w2, a->b), extended bilinearly.

    Operands are FormalSums over ``(TypedWord, A-index)`` pairs (a bare pair
    is accepted as a basis element).
    """
    F = free_algebra(L)
    imgs = F._images
    xa = xa if isinstance(xa, FormalSum) else FormalSum.basis(xa)
    yb = yb if isinstance(yb, FormalSum) else FormalSum.basis(yb)
    out: dict = {}
    for (w1, a), c1 in xa:
        for (w2, b), c2 in yb:
            for (p, q), c in imgs[a][b].items():
                for w, cw in F.star_words(q, w1, w2).items():
                    key = (w, p)
                    out[key] = out.get(key, ZERO) + c1 * c2 * c * cw
    return FormalSum(out)


def check_envelope_associativity(L: LinearEAS, max_len: int = 2, generators: Sequence = ("x", "y")
                                 ) -> AssociativityReport:
    d = L.dim
    basis = [(w, a) for n in range(1, max_len + 1) for w in typed_words(d, generators, n) for a in range(d)]
    checked = 0
    for e1, e2, e3 in product(basis, repeat=3):
        left = envelope_product(L, envelope_product(L, e1, e2), FormalSum.basis(e3))
        right = envelope_product(L, FormalSum.basis(e1), envelope_product(L, e2, e3))
        checked += 1
        if left != right:
            return AssociativityReport(False, checked, {"triple": [[w.to_json(), a] for w, a in (e1, e2, e3)]})
    return AssociativityReport(True, checked)


@dataclass
class GenerationReport:
    generated: bool
    free: bool
    rank: int

    def to_json(self) -> dict:
        return {"generated": self.generated, "free": self.free, "rank": self.rank}


def generation_freeness_report(L: LinearEAS) -> GenerationReport:
    """Generation of T_A(V) (x) A by V (x) A <=> Phi onto; freeness <=> Phi one-to-one."""
    r = rank(L.phi)
    n = L.dim ** 2
    return GenerationReport(generated=(r == n), free=(n - r == 0), rank=r)


def envelope_subalgebra_rank(L: LinearEAS, length: int, generators: Sequence = ("x",)) -> int:
    """Dimension of the length-``length`` part of the subalgebra generated by V (x) A.

    Direct computation from the product, used to cross-check
    :func:`generation_freeness_report`.
    """
    from .exactlin import rank_of_vectors
    d = L.dim
    layer = {1: [FormalSum.basis((TypedWord.letter(g), a)) for g in generators for a in range(d)]}
    for n in range(2, length + 1):
        elems = []
        for left in layer[n - 1]:
            for right in layer[1]:
                elems.append(envelope_product(L, left, right))
        layer[n] = elems
    target = [(w, a) for w in typed_words(d, generators, length) for a in range(d)]
    index = {k: i for i, k in enumerate(target)}
    vecs = []
    for e in layer[length]:
        v = [ZERO] * len(target)
        for k, c in e:
            v[index[k]] = c
        vecs.append(v)
    return rank_of_vectors(vecs, len(target))


# -- two-parameter algebras and the free algebra over the dual operad ---------------

class Semigroup:
    """A finite semigroup given by its multiplication table on indices."""

    def __init__(self, labels: Sequence[str], table: Sequence[Sequence[int]]):
        from .eas import associativity_witness, NotAssociative, _as_table
        self.labels = tuple(labels)
        self.table = _as_table(table, len(self.labels))
        w = associativity_witness(self.table)
        if w is not None:
            raise NotAssociative(tuple(self.labels[i] for i in w))

    @property
    def size(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def fold(self, word: Sequence[int]) -> int:
        acc = word[0]
        for x in word[1:]:
            acc = self.table[acc][x]
        return acc

    @classmethod
    def cyclic_add(cls, n: int) -> "Semigroup":
        return cls([str(i) for i in range(n)], [[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def cyclic_mul(cls, n: int) -> "Semigroup":
        return cls([str(i) for i in range(n)], [[(i * j) % n for j in range(n)] for i in range(n)])


def two_param_star(sg: Semigroup, products: Callable[[int, int, int, int], dict], x: dict, y: dict) -> dict:
    """Graded product on V (x) K Omega: x alpha * y beta = (x *_{alpha,beta} y) (alpha -> beta).

    ``products(alpha, beta, i, j)`` returns ``e_i *_{alpha,beta} e_j`` as
    ``{k: coef}``; elements are dicts ``{(i, alpha): coef}``.
    """
    out: dict = {}
    for (i, al), ci in x.items():
        for (j, be), cj in y.items():
            g = sg.mul(al, be)
            for k, c in products(al, be, i, j).items():
                out[(k, g)] = out.get((k, g), ZERO) + ci * cj * to_rational(c)
    return {k: v for k, v in out.items() if v}


def two_param_axiom_failures(sg: Semigroup, products, dim: int) -> list:
    """Triples violating (x *_{a,b} y) *_{a->b,c} z == x *_{a,b->c} (y *_{b,c} z) on basis vectors."""

    def mul(al, be, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, ci in u.items():
            for j, cj in v.items():
                for k, c in products(al, be, i, j).items():
                    out[k] = out.get(k, ZERO) + ci * cj * to_rational(c)
        return {k: v for k, v in out.items() if v}

    fails = []
    n = sg.size
    for al, be, ga in product(range(n), repeat=3):
        for i, j, k in product(range(dim), repeat=3):
            left = mul(sg.mul(al, be), ga, mul(al, be, {i: ONE}, {j: ONE}), {k: ONE})
            right = mul(al, sg.mul(be, ga), {i: ONE}, mul(be, ga, {j: ONE}, {k: ONE}))
            if left != right:
                fails.append(((al, be, ga), (i, j, k)))
    return fails


def two_param_envelope_is_associative(sg: Semigroup, products, dim: int) -> bool:
    basis = [{(i, a): ONE} for i in range(dim) for a in range(sg.size)]
    for x, y, z in product(basis, repeat=3):
        if two_param_star(sg, products, two_param_star(sg, products, x, y), z) != \
                two_param_star(sg, products, x, two_param_star(sg, products, y, z)):
            return False
    return True


class TwoParamWord(NamedTuple):
    """A bare generator (``decs is None``) or a word alpha_1 u_1 ... alpha_k u_k."""

    decs: tuple[int, ...] | None
    letters: tuple

    @classmethod
    def generator(cls, u) -> "TwoParamWord":
        return cls(None, (u,))


def dual_free_product(sg: Semigroup, alpha: int, beta: int, u: TwoParamWord, v: TwoParamWord
                      ) -> TwoParamWord | None:
    """u *_{alpha,beta} v in the free algebra over the Koszul dual; None stands for 0."""
    if u.decs is None:
        left = (alpha,)
    elif sg.fold(u.decs) == alpha:
        left = u.decs
    else:
        return None
    if v.decs is None:
        right = (beta,)
    elif sg.fold(v.decs) == beta:
        right = v.decs
    else:
        return None
    return TwoParamWord(left + right, u.letters + v.letters)
