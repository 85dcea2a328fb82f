"""Finite extended associative semigroups.

An EAS is a set with two operations ``->`` (arrow) and ``|>`` (triangle)
subject to three identities, numbered 5, 6 and 7 in reports:

    5:  a -> (b -> c)                     == (a -> b) -> c
    6:  (a |> (b -> c)) -> (b |> c)       == (a -> b) |> c
    7:  (a |> (b -> c)) |> (b |> c)       == a |> b
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Sequence

Table = tuple[tuple[int, ...], ...]


class NotAssociative(ValueError):
    def __init__(self, witness):
        super().__init__(f"operation is not associative at {witness}")
        self.witness = witness


class NoRightInverses(ValueError):
    def __init__(self, witness):
        super().__init__(f"right translation by {witness[0]!r} is not bijective (collision {witness[1]})")
        self.witness = witness


class SizeLimitExceeded(ValueError):
    pass


class NotAnEAS(ValueError):
    def __init__(self, report):
        super().__init__(f"not an EAS: first failure {report.failures[0]}")
        self.report = report


def _as_table(rows: Sequence[Sequence[int]], n: int) -> Table:
    t = tuple(tuple(int(x) for x in r) for r in rows)
    if len(t) != n or any(len(r) != n for r in t):
        raise ValueError(f"table must be {n}x{n}")
    if any(not 0 <= x < n for r in t for x in r):
        raise ValueError("table entry out of range")
    return t


@dataclass(frozen=True)
class FiniteEAS:
    """A finite set with two binary operations, stored as index tables.

    ``arrow[i][j]`` is the index of ``elements[i] -> elements[j]``, and
    likewise for ``triangle``.  The axioms are not enforced here; see
    :func:`check_eas`.
    """

    elements: tuple[str, ...]
    arrow: Table
    triangle: Table
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.elements)
        if n < 1:
            raise ValueError("an EAS needs at least one element")
        if len(set(self.elements)) != n:
            raise ValueError("element labels must be distinct")
        object.__setattr__(self, "elements", tuple(str(e) for e in self.elements))
        object.__setattr__(self, "arrow", _as_table(self.arrow, n))
        object.__setattr__(self, "triangle", _as_table(self.triangle, n))

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def to_json(self) -> dict:
        e = self.elements
        out = {
            "elements": list(e),
            "arrow": [[e[x] for x in row] for row in self.arrow],
            "triangle": [[e[x] for x in row] for row in self.triangle],
        }
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "FiniteEAS":
        if isinstance(data, str):
            data = json.loads(data)
        elements = [str(x) for x in data["elements"]]
        pos = {e: i for i, e in enumerate(elements)}
        try:
            arrow = [[pos[str(x)] for x in row] for row in data["arrow"]]
            triangle = [[pos[str(x)] for x in row] for row in data["triangle"]]
        except KeyError as exc:
            raise ValueError(f"unknown element {exc.args[0]!r} in table") from None
        return cls(tuple(elements), arrow, triangle, name=data.get("name"))

    def relabel(self, perm: Sequence[int]) -> "FiniteEAS":
        """Transport the tables along ``i -> perm[i]`` keeping label positions."""
        n = self.size
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        A = tuple(tuple(perm[self.arrow[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        T = tuple(tuple(perm[self.triangle[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        return FiniteEAS(self.elements, A, T, name=self.name)


@dataclass
class EasReport:
    is_eas: bool
    failures: list[tuple[int, tuple[str, str, str]]]
    nondegenerate: bool | None

    def to_json(self) -> dict:
        return {
            "is_eas": self.is_eas,
            "failures": [{"axiom": ax, "witness": list(w)} for ax, w in self.failures],
            "nondegenerate": self.nondegenerate,
        }


def _axiom_failures(A: Table, T: Table, n: int, first_only: bool = False):
    out = []
    for a, b, c in product(range(n), repeat=3):
        bc = A[b][c]
        left = T[a][bc]
        tbc = T[b][c]
        if A[a][bc] != A[A[a][b]][c]:
            out.append((5, (a, b, c)))
        if A[left][tbc] != T[A[a][b]][c]:
            out.append((6, (a, b, c)))
        if T[left][tbc] != T[a][b]:
            out.append((7, (a, b, c)))
        if first_only and out:
            break
    return out


def _is_eas(A: Table, T: Table, n: int) -> bool:
    return not _axiom_failures(A, T, n, first_only=True)


def phi_map(S: FiniteEAS) -> dict[tuple[int, int], tuple[int, int]]:
    """The map (a, b) -> (a -> b, a |> b) on pairs of element indices."""
    n = S.size
    return {(a, b): (S.arrow[a][b], S.triangle[a][b]) for a, b in product(range(n), repeat=2)}


def phi_is_bijective(S: FiniteEAS) -> bool:
    return len(set(phi_map(S).values())) == S.size ** 2


def check_eas(S: FiniteEAS) -> EasReport:
    fails = _axiom_failures(S.arrow, S.triangle, S.size)
    e = S.elements
    failures = [(ax, (e[a], e[b], e[c])) for ax, (a, b, c) in fails]
    is_eas = not failures
    return EasReport(is_eas, failures, phi_is_bijective(S) if is_eas else None)


# -- constructors --------------------------------------------------------------

def _star_table(labels, star) -> tuple[tuple[str, ...], Table]:
    labels = tuple(str(x) for x in labels)
    pos = {e: i for i, e in enumerate(labels)}
    n = len(labels)
    rows = []
    for row in star:
        rows.append([pos[str(x)] if not isinstance(x, int) else x for x in row])
    return labels, _as_table(rows, n)


def associativity_witness(star: Table):
    n = len(star)
    for a, b, c in product(range(n), repeat=3):
        if star[a][star[b][c]] != star[star[a][b]][c]:
            return (a, b, c)
    return None


def make_trivial(labels) -> FiniteEAS:
    labels = tuple(str(x) for x in labels)
    n = len(labels)
    A = tuple(tuple(j for j in range(n)) for _ in range(n))
    T = tuple(tuple(i for _ in range(n)) for i in range(n))
    return FiniteEAS(labels, A, T)


def make_from_semigroup(labels, star) -> FiniteEAS:
    """EAS(Omega, *): arrow is the semigroup law, a |> b = a."""
    labels, S = _star_table(labels, star)
    w = associativity_witness(S)
    if w is not None:
        raise NotAssociative(tuple(labels[i] for i in w))
    n = len(labels)
    T = tuple(tuple(i for _ in range(n)) for i in range(n))
    return FiniteEAS(labels, S, T)


def make_semigroup_with_projection(labels, star, target: str) -> FiniteEAS:
    """Semigroup law for arrow and the constant map onto ``target`` for triangle."""
    labels, S = _star_table(labels, star)
    w = associativity_witness(S)
    if w is not None:
        raise NotAssociative(tuple(labels[i] for i in w))
    t = labels.index(str(target))
    n = len(labels)
    return FiniteEAS(labels, S, tuple(tuple(t for _ in range(n)) for _ in range(n)))


def right_division_table(labels, S: Table) -> Table:
    """``D[a][b]`` = the unique c with ``c * b == a``; raises if a right translation is not bijective."""
    n = len(S)
    D = [[None] * n for _ in range(n)]
    for b in range(n):
        for c in range(n):
            a = S[c][b]
            if D[a][b] is not None:
                raise NoRightInverses((labels[b], (labels[D[a][b]], labels[c])))
            D[a][b] = c
    return tuple(tuple(r) for r in D)


def make_prime(labels, star) -> FiniteEAS:
    """EAS'(Omega, *): a -> b = b and a |> b = a * b^{-1} (right division).

    Requires every right translation ``c -> c * b`` to be a bijection.
    """
    labels, S = _star_table(labels, star)
    w = associativity_witness(S)
    if w is not None:
        raise NotAssociative(tuple(labels[i] for i in w))
    D = right_division_table(labels, S)
    n = len(labels)
    A = tuple(tuple(j for j in range(n)) for _ in range(n))
    out = FiniteEAS(labels, A, D)
    rep = check_eas(out)
    if not rep.is_eas:
        raise NotAnEAS(rep)
    return out


def direct_product(S: FiniteEAS, T: FiniteEAS) -> FiniteEAS:
    for X in (S, T):
        rep = check_eas(X)
        if not rep.is_eas:
            raise NotAnEAS(rep)
    m = T.size
    pairs = list(product(range(S.size), range(m)))
    labels = tuple(f"({S.elements[i]},{T.elements[j]})" for i, j in pairs)
    A = tuple(tuple(S.arrow[a][c] * m + T.arrow[b][d] for c, d in pairs) for a, b in pairs)
    Tr = tuple(tuple(S.triangle[a][c] * m + T.triangle[b][d] for c, d in pairs) for a, b in pairs)
    return FiniteEAS(labels, A, Tr)


# -- isomorphism and classification -------------------------------------------

def are_isomorphic(S: FiniteEAS, T: FiniteEAS) -> tuple[bool, dict[str, str] | None]:
    """Brute force over bijections; the witness maps labels of S to labels of T."""
    n = S.size
    if T.size != n:
        return False, None
    for p in permutations(range(n)):
        if all(p[S.arrow[i][j]] == T.arrow[p[i]][p[j]] and p[S.triangle[i][j]] == T.triangle[p[i]][p[j]]
               for i in range(n) for j in range(n)):
            return True, {S.elements[i]: T.elements[p[i]] for i in range(n)}
    return False, None


def canonical_form(S: FiniteEAS) -> tuple[Table, Table]:
    """Lexicographically least (arrow, triangle) pair over all relabelings."""
    return min((R.arrow, R.triangle) for R in (S.relabel(p) for p in permutations(range(S.size))))


@dataclass
class Classification:
    size: int
    raw_count: int
    classes: list[FiniteEAS]

    @property
    def nondegenerate(self) -> list[FiniteEAS]:
        return [c for c in self.classes if phi_is_bijective(c)]


def _all_tables(n: int):
    for flat in product(range(n), repeat=n * n):
        yield tuple(flat[i * n:(i + 1) * n] for i in range(n))


def classify(n: int, full: bool = False, labels: Sequence[str] | None = None) -> Classification:
    """All EAS on ``n`` points up to isomorphism.

    Arrow tables are pre-filtered by associativity (axiom 5 involves only
    arrow), which is equivalent to the full enumeration but much faster.
    ``n = 3`` takes a few tens of seconds and needs ``full=True``.
    """
    if n > 3 or (n == 3 and not full):
        raise SizeLimitExceeded(f"classification of size {n} is gated" + ("" if n <= 3 else " (max 3)"))
    if n < 1:
        raise ValueError("size must be >= 1")
    if labels is None:
        labels = [chr(ord("a") + i) for i in range(n)]
    labels = tuple(labels)
    arrows = [A for A in _all_tables(n) if associativity_witness(A) is None]
    tris = list(_all_tables(n))
    raw = 0
    seen: dict[tuple, FiniteEAS] = {}
    perms = list(permutations(range(n)))
    for A in arrows:
        for T in tris:
            if not _is_eas(A, T, n):
                continue
            raw += 1
            S = FiniteEAS(labels, A, T)
            key = min((R.arrow, R.triangle) for R in (S.relabel(p) for p in perms))
            if key not in seen:
                seen[key] = FiniteEAS(labels, key[0], key[1])
    classes = sorted(seen.values(), key=lambda c: (phi_is_bijective(c), c.arrow, c.triangle))
    return Classification(n, raw, classes)
