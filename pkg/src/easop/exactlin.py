"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Matrices are dense, immutable and
act on column coordinate vectors.  Tensor products use the left-factor-major
convention: ``e_i (x) e_j`` has flat index ``i*d + j``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class NotInvertible(ArithmeticError):
    """Raised by :func:`invert` on a singular matrix; ``rank`` is the witness."""

    def __init__(self, rank: int, size: int):
        super().__init__(f"matrix of size {size} has rank {rank}")
        self.rank = rank
        self.size = size


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class RationalMatrix:
    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        data = tuple(to_rational(x) for x in entries)
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self._data = data
        self._hash = None

    @classmethod
    def _raw(cls, rows: int, cols: int, data: tuple) -> "RationalMatrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m._data, m._hash = rows, cols, data, None
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        data = [ZERO] * (n * n)
        for i in range(n):
            data[i * n + i] = ONE
        return cls._raw(n, n, tuple(data))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls._raw(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def from_columns(cls, columns: Sequence[dict], rows: int) -> "RationalMatrix":
        """Build from sparse columns ``{row_index: value}``."""
        cols = len(columns)
        data = [ZERO] * (rows * cols)
        for j, col in enumerate(columns):
            for i, v in col.items():
                data[i * cols + j] = to_rational(v)
        return cls._raw(rows, cols, tuple(data))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def column(self, j: int) -> dict[int, Fraction]:
        """Nonzero entries of column ``j`` as ``{row: value}``."""
        c = self.cols
        return {i: self._data[i * c + j] for i in range(self.rows) if self._data[i * c + j]}

    def columns(self) -> list[dict[int, Fraction]]:
        cols = [dict() for _ in range(self.cols)]
        c = self.cols
        for k, v in enumerate(self._data):
            if v:
                cols[k % c][k // c] = v
        return cols

    def row_nonzeros(self, i: int) -> list[tuple[int, Fraction]]:
        return [(j, v) for j, v in enumerate(self.row(i)) if v]

    def transpose(self) -> "RationalMatrix":
        r, c, d = self.rows, self.cols, self._data
        return RationalMatrix._raw(c, r, tuple(d[i * c + j] for j in range(c) for i in range(r)))

    T = property(transpose)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        if self.rows * self.cols > 64:
            return f"RationalMatrix({self.rows}x{self.cols})"
        body = "; ".join(" ".join(format_rational(x) for x in self.row(i)) for i in range(self.rows))
        return f"RationalMatrix([{body}])"

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix._raw(self.rows, self.cols,
                                   tuple(a + b for a, b in zip(self._data, other._data)))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix._raw(self.rows, self.cols,
                                   tuple(a - b for a, b in zip(self._data, other._data)))

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix._raw(self.rows, self.cols, tuple(-a for a in self._data))

    def scale(self, s) -> "RationalMatrix":
        s = to_rational(s)
        return RationalMatrix._raw(self.rows, self.cols, tuple(s * a for a in self._data))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        # skip zeros on both sides; the matrices in this package are mostly 0/1
        other_rows = [other.row_nonzeros(k) for k in range(other.rows)]
        n = other.cols
        out = []
        for i in range(self.rows):
            acc = [ZERO] * n
            for k, a in self.row_nonzeros(i):
                for j, b in other_rows[k]:
                    acc[j] += a * b
            out.extend(acc)
        return RationalMatrix._raw(self.rows, n, tuple(out))

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        v = [to_rational(x) for x in vec]
        return [sum((a * v[j] for j, a in self.row_nonzeros(i)), ZERO) for i in range(self.rows)]

    def apply_sparse(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        """Image of a sparse coordinate vector ``{index: coef}``."""
        out: dict[int, Fraction] = {}
        c = self.cols
        for j, x in vec.items():
            if not x:
                continue
            for i in range(self.rows):
                a = self._data[i * c + j]
                if a:
                    out[i] = out.get(i, ZERO) + a * x
        return {i: v for i, v in out.items() if v}

    def first_difference(self, other: "RationalMatrix"):
        """Return the first ``(row, col)`` where the two matrices differ, or None."""
        for k, (a, b) in enumerate(zip(self._data, other._data)):
            if a != b:
                return divmod(k, self.cols)
        return None

    def is_zero(self) -> bool:
        return not any(self._data)


def kron(A: RationalMatrix, B: RationalMatrix) -> RationalMatrix:
    rA, cA, rB, cB = A.rows, A.cols, B.rows, B.cols
    rows, cols = rA * rB, cA * cB
    data = [ZERO] * (rows * cols)
    for i in range(rA):
        for j in range(cA):
            a = A[i, j]
            if not a:
                continue
            for k in range(rB):
                base = (i * rB + k) * cols + j * cB
                for l, b in enumerate(B.row(k)):
                    if b:
                        data[base + l] = a * b
    return RationalMatrix._raw(rows, cols, tuple(data))


def kron_all(*ms: RationalMatrix) -> RationalMatrix:
    out = ms[0]
    for m in ms[1:]:
        out = kron(out, m)
    return out


def flip_matrix(d: int) -> RationalMatrix:
    if d < 1:
        raise ValueError("d must be >= 1")
    n = d * d
    data = [ZERO] * (n * n)
    for i, j in product(range(d), repeat=2):
        data[(j * d + i) * n + (i * d + j)] = ONE
    return RationalMatrix._raw(n, n, tuple(data))


def _echelon(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(M: RationalMatrix) -> int:
    return len(_echelon(M.to_rows(), M.cols)[1])


def rank_of_vectors(vectors: Iterable[Sequence], dim: int) -> int:
    rows = [list(map(to_rational, v)) for v in vectors]
    if not rows:
        return 0
    return len(_echelon(rows, dim)[1])


def row_space_basis(vectors: Iterable[Sequence], dim: int) -> list[list[Fraction]]:
    rows = [list(map(to_rational, v)) for v in vectors]
    if not rows:
        return []
    return _echelon(rows, dim)[0]


def in_span(vector: Sequence, basis: list[list[Fraction]], dim: int) -> bool:
    return rank_of_vectors(basis + [list(vector)], dim) == rank_of_vectors(basis, dim)


def invert(M: RationalMatrix) -> RationalMatrix:
    if M.rows != M.cols:
        raise ValueError("invert needs a square matrix")
    n = M.rows
    aug = [list(M.row(i)) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    red, pivots = _echelon(aug, 2 * n)
    r = sum(1 for p in pivots if p < n)
    if r < n:
        raise NotInvertible(r, n)
    return RationalMatrix._raw(n, n, tuple(x for row in red for x in row[n:]))


def solve(M: RationalMatrix, b: Sequence) -> list[Fraction] | None:
    """One solution of ``M x = b`` or None if inconsistent."""
    n = M.cols
    aug = [list(M.row(i)) + [to_rational(b[i])] for i in range(M.rows)]
    red, pivots = _echelon(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [ZERO] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return x


def determinant_cofactor(M: RationalMatrix) -> Fraction:
    """Laplace expansion; only meant as an independent check for tiny matrices."""
    n = M.rows
    if n == 1:
        return M[0, 0]
    total = ZERO
    for j in range(n):
        a = M[0, j]
        if not a:
            continue
        minor = RationalMatrix(n - 1, n - 1,
                               [M[i, k] for i in range(1, n) for k in range(n) if k != j])
        total += (-1) ** j * a * determinant_cofactor(minor)
    return total


def apply_local(M: RationalMatrix, tensor: dict[tuple, Fraction], pos: int, d: int) -> dict[tuple, Fraction]:
    """Apply ``Id^{pos} (x) M (x) Id^{rest}`` to a sparse tensor.

    ``tensor`` maps index tuples (one basis index of a ``d``-dimensional space
    per factor) to coefficients; ``M`` is ``d^2 x d^2`` and hits factors
    ``pos`` and ``pos + 1``.
    """
    cols = M.columns()
    out: dict[tuple, Fraction] = {}
    for key, c in tensor.items():
        col = cols[key[pos] * d + key[pos + 1]]
        for flat, v in col.items():
            i, j = divmod(flat, d)
            nk = key[:pos] + (i, j) + key[pos + 2:]
            out[nk] = out.get(nk, ZERO) + c * v
    return {k: v for k, v in out.items() if v}


# -- integer polynomials -----------------------------------------------------

class IntPolynomial:
    """Polynomial with integer coefficients; ``coeffs[k]`` multiplies w^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coef: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coef])

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        return self + (-other)

    def __rsub__(self, other) -> "IntPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(x * other for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0 if isinstance(x, int) else to_rational(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def valuation(self) -> int:
        """Largest k with w^k dividing self (infinite for zero: returns -1)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def shift_down(self, k: int) -> "IntPolynomial":
        if any(self.coeffs[:k]):
            raise ValueError(f"not divisible by w^{k}")
        return IntPolynomial(self.coeffs[k:])

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*w^{k}" if k > 1 else f"{c}*w")
        return " + ".join(terms)


W = IntPolynomial([0, 1])


# -- truncated power series --------------------------------------------------

class TruncatedSeries:
    """Power series in X known up to and including X^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [to_rational(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        c = (c + [ZERO] * (order + 1))[:order + 1]
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({[format_rational(c) for c in self.coeffs]})"

    def _check(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def scale(self, s) -> "TruncatedSeries":
        s = to_rational(s)
        return TruncatedSeries([s * a for a in self.coeffs], self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.order
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, n)

    def negate_argument(self) -> "TruncatedSeries":
        """F(-X)."""
        return TruncatedSeries([(-1) ** k * a for k, a in enumerate(self.coeffs)], self.order)


def series_compose(F: TruncatedSeries, G: TruncatedSeries) -> TruncatedSeries:
    """Coefficients of F(G(X)) up to the common truncation order."""
    if F.order != G.order:
        raise ValueError("series must share a truncation order")
    if G.coeffs[0]:
        raise ValueError("inner series must have zero constant term")
    n = F.order
    out = TruncatedSeries([F.coeffs[0]], n)
    power = TruncatedSeries([1], n)
    for k in range(1, n + 1):
        power = power * G
        if F.coeffs[k]:
            out = out + power.scale(F.coeffs[k])
    return out


# -- formal linear combinations ----------------------------------------------

class FormalSum:
    """Finite rational combination of hashable basis objects; zero terms dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, v in items:
                v = to_rational(v)
                if v:
                    out[k] = out.get(k, ZERO) + v
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def basis(cls, key) -> "FormalSum":
        return cls({key: ONE})

    @classmethod
    def _clean(cls, d: dict) -> "FormalSum":
        s = cls.__new__(cls)
        s.terms = {k: v for k, v in d.items() if v}
        return s

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, key) -> Fraction:
        return self.terms.get(key, ZERO)

    def keys(self):
        return self.terms.keys()

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return FormalSum._clean(out)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) - v
        return FormalSum._clean(out)

    def __neg__(self) -> "FormalSum":
        return FormalSum._clean({k: -v for k, v in self.terms.items()})

    def scale(self, s) -> "FormalSum":
        s = to_rational(s)
        return FormalSum._clean({k: s * v for k, v in self.terms.items()})

    __rmul__ = scale

    def map_keys(self, f) -> "FormalSum":
        out: dict = {}
        for k, v in self.terms.items():
            nk = f(k)
            out[nk] = out.get(nk, ZERO) + v
        return FormalSum._clean(out)

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: repr(kv[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "FormalSum(0)"
        return "FormalSum(" + " + ".join(f"{format_rational(v)}*{k!r}" for k, v in self.sorted_items()) + ")"
