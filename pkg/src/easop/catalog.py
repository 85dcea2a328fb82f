"""Shipped EAS and linear-EAS examples, plus the links to named algebra types."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .eas import FiniteEAS
from .leas import LinearEAS, linearize


class UnknownCatalogName(KeyError):
    pass


@lru_cache(maxsize=None)
def _load(fname: str) -> dict:
    return json.loads(resources.files("easop.data").joinpath(fname).read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def eas_entries() -> dict[str, dict]:
    return {d["name"]: d for d in _load("eas.json")["eas"]}


@lru_cache(maxsize=None)
def leas_entries() -> dict[str, dict]:
    return {d["name"]: d for d in _load("leas.json")["leas"]}


CARDINALITY_TWO = ("A1", "A2", "C1", "C3", "C5", "C6", "E1'-E2'", "E3'", "F1", "F3", "F4", "H1", "H2")
NONDEGENERATE_TWO = ("F3", "F4", "H2")


def get_eas(name: str) -> FiniteEAS:
    try:
        return FiniteEAS.from_json(eas_entries()[name])
    except KeyError:
        raise UnknownCatalogName(name) from None


def get_leas(name: str) -> LinearEAS:
    """A shipped matrix, or the linearization of a shipped EAS."""
    if name in leas_entries():
        return LinearEAS.from_json(leas_entries()[name])
    if name in eas_entries():
        return linearize(get_eas(name))
    raise UnknownCatalogName(name)


def leas_names(group: str | None = None) -> list[str]:
    return [n for n, d in leas_entries().items() if group is None or d.get("group") == group]


def eas_names(group: str | None = None) -> list[str]:
    return [n for n, d in eas_entries().items() if group is None or d.get("group") == group]


def all_leas() -> list[LinearEAS]:
    """Every shipped matrix followed by the linearizations of the cardinality-2 EAS."""
    return [get_leas(n) for n in leas_names()] + [get_leas(n) for n in CARDINALITY_TWO]


@dataclass(frozen=True)
class Link:
    """How a named algebra type relates to a (possibly opposite) Phi-associative structure.

    ``mode == "consequence"``: every axiom of the named type holds in every
    such algebra.  ``mode == "reformulation"``: the axioms in ``expected``
    hold there, and the Phi-relations lie in the span of the named axioms.
    """

    name: str
    relation_set: str
    target: str
    side: str
    ops: dict
    mode: str
    expected: tuple[str, ...] = ()
    isomorphic_to: str | None = None
    note: str = field(default="", compare=False)


def _links() -> list[Link]:
    D = {"<": 0, ">": 1}
    Dswap = {"<": 1, ">": 0}
    out = [
        Link("dendriform-1", "dendriform", "dendriform-1", "direct", D, "consequence"),
        Link("dendriform-2", "dendriform", "dendriform-2", "direct", D, "consequence"),
        Link("dendriform-3", "dendriform", "dendriform-3", "opposite", D, "consequence"),
        Link("dendriform-4", "dendriform", "dendriform-4", "opposite", D, "consequence"),
        Link("duplicial", "duplicial", "duplicial", "direct", D, "consequence"),
        Link("duplicial-op", "duplicial", "duplicial", "opposite", Dswap, "consequence"),
        Link("post-lie", "post-lie", "post-lie", "opposite", {"1": 0, "2": 1}, "consequence"),
        Link("dual-duplicial-op", "dual-duplicial", "dual-duplicial", "opposite", D, "reformulation",
             ("dualdup1", "dualdup2", "dualdup3", "dualdup5")),
        Link("dual-duplicial", "dual-duplicial", "dual-duplicial", "direct", Dswap, "reformulation",
             ("dualdup1", "dualdup3", "dualdup4", "dualdup5")),
        Link("comtrias", "comtrias", "C3", "direct", {"*": 0, ".": 1}, "reformulation",
             ("comtrias2", "comtrias3", "comtrias4", "comtrias5")),
    ]
    for k in (1, 2, 3):
        t = f"tridendriform-{k}"
        out.append(Link(t, "tridendriform", t, "direct", {"<": 0, ">": 1, ".": 2}, "consequence"))
        out.append(Link(t + "-op", "tridendriform", t, "opposite", {"<": 1, ">": 0, ".": 2}, "consequence"))
    l, r, p = "-|", "|-", "_|_"
    dias = {l: 0, r: 1}
    out += [
        Link("dias-op-1", "diassociative", "dias-op-1", "opposite", dias, "reformulation",
             ("dias1", "dias2", "dias3", "dias4"), "C3"),
        Link("dias-op-2", "diassociative", "dias-op-2", "opposite", dias, "reformulation",
             ("dias1bis", "dias2", "dias3", "dias4"), "C6"),
        Link("dias-1", "diassociative", "dias-1", "direct", dias, "reformulation",
             ("dias1", "dias1bis", "dias2", "dias3"), "C6"),
        Link("dias-2", "diassociative", "dias-2", "direct", dias, "reformulation",
             ("dias1", "dias1bis", "dias2", "dias4"), "C3"),
    ]
    rest_op = ("trias2", "trias3", "trias4", "trias5", "trias6", "trias6bis", "trias6ter")
    for k, first in enumerate(("trias1", "trias1bis", "trias1ter"), 1):
        out.append(Link(f"trias-op-{k}", "triassociative", f"trias-op-{k}", "opposite", {l: 0, r: 1, p: 2},
                        "reformulation", (first,) + rest_op))
    rest = ("trias1", "trias1bis", "trias1ter", "trias2", "trias3", "trias4", "trias5")
    for k, last in enumerate(("trias6ter", "trias6", "trias6bis"), 1):
        out.append(Link(f"trias-{k}", "triassociative", f"trias-{k}", "direct", {r: 0, l: 1, p: 2},
                        "reformulation", rest + (last,)))
    return out


@lru_cache(maxsize=None)
def links() -> dict[str, Link]:
    return {k.name: k for k in _links()}


def get_link(name: str) -> Link:
    try:
        return links()[name]
    except KeyError:
        raise UnknownCatalogName(name) from None
