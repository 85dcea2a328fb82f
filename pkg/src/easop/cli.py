"""Command-line front end.  Every command prints one JSON document (or TSV)."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from . import catalog
from .eas import (FiniteEAS, NotAnEAS, NoRightInverses, NotAssociative, SizeLimitExceeded, are_isomorphic,
                  check_eas, classify)
from .exactlin import NotInvertible
from .freealg import check_phi_associativity
from .leas import LinearEAS, check_leas, dualize, invert_leas, linearize
from .morphisms import associative_scan, theta_check, theta_prime_check, verify_link
from .operad import AsPhi, AsPhiRules, confluence_check, count_normal_forms_two_param, operad_axiom_check
from .series import (check_polynomial_properties, koszul_dual_series, koszul_inversion_check, p_narayana,
                     p_polynomial, p_recursive, table_rows, table_tsv)


class CliError(Exception):
    """Reported as status=error, exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(f"usage: {message}")


def result(status: str, payload, witnesses=None) -> dict:
    out = {"status": status, "payload": payload}
    if witnesses:
        out["witnesses"] = witnesses
    return out


# --- input resolution --------------------------------------------------------------

def _read_json(ref: str) -> dict:
    path = Path(ref)
    if not path.exists():
        raise CliError(f"unknown catalog name or missing file: {ref}")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON in {ref}: {exc}") from None


def load_eas(ref: str) -> FiniteEAS:
    if ref in catalog.eas_entries():
        return catalog.get_eas(ref)
    data = _read_json(ref)
    try:
        return FiniteEAS.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"not an EAS description: {exc}") from None


def load_leas(ref: str) -> LinearEAS:
    """Catalog names first, then files holding either a matrix or an EAS table."""
    try:
        return catalog.get_leas(ref)
    except catalog.UnknownCatalogName:
        pass
    data = _read_json(ref)
    try:
        if "phi" in data:
            return LinearEAS.from_json(data)
        return linearize(FiniteEAS.from_json(data))
    except NotAnEAS as exc:
        raise CliError(str(exc)) from None
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"not a linear EAS description: {exc}") from None


# --- commands ------------------------------------------------------------------------

def cmd_eas_check(a):
    rep = check_eas(load_eas(a.ref))
    return result("ok" if rep.is_eas else "fail", rep.to_json(),
                  [{"axiom": ax, "witness": list(w)} for ax, w in rep.failures[:10]])


def _class_name(S: FiniteEAS) -> str | None:
    if S.size != 2:
        return None
    for name in catalog.CARDINALITY_TWO:
        if are_isomorphic(S, catalog.get_eas(name))[0]:
            return name
    return None


def cmd_eas_classify(a):
    cl = classify(a.size, full=a.full)
    classes = []
    for S in cl.classes:
        d = S.to_json()
        d["nondegenerate"] = check_eas(S).nondegenerate
        name = _class_name(S)
        if name:
            d["name"] = name
        classes.append(d)
    payload = {"size": cl.size, "raw_count": cl.raw_count, "count": len(cl.classes), "classes": classes,
               "nondegenerate": [c.get("name", i) for i, c in enumerate(classes) if c["nondegenerate"]]}
    return result("ok", payload)


def cmd_leas_check(a):
    L = load_leas(a.ref)
    rep = check_leas(L)
    w = None if rep.ok else [rep.to_json()["witness"]]
    return result("ok" if rep.ok else "fail", {"name": L.name, **rep.to_json()}, w)


def cmd_leas_linearize(a):
    return result("ok", linearize_or_error(load_eas(a.ref)).to_json())


def linearize_or_error(S):
    try:
        return linearize(S)
    except NotAnEAS as exc:
        raise CliError(str(exc)) from None


def cmd_leas_dual(a):
    return result("ok", dualize(load_leas(a.ref)).to_json())


def cmd_leas_invert(a):
    L = load_leas(a.ref)
    try:
        return result("ok", invert_leas(L).to_json())
    except NotInvertible as exc:
        return result("fail", {"invertible": False, "rank": exc.rank, "size": exc.size},
                      [{"rank": exc.rank}])


def cmd_free_assoc(a):
    L = load_leas(a.ref)
    if a.max_len < 3:
        raise CliError("--max-len must be >= 3")
    rep = check_phi_associativity(L, a.max_len)
    return result("ok" if rep.ok else "fail", rep.to_json(), [rep.counterexample] if not rep.ok else None)


def cmd_operad_compose(a):
    L = load_leas(a.ref)
    if a.arity_check < 3:
        raise CliError("--arity-check must be >= 3")
    rep = operad_axiom_check(AsPhi(L), a.arity_check)
    return result("ok" if rep.ok else "fail", rep.to_json(), [rep.failure] if not rep.ok else None)


def cmd_operad_confluence(a):
    L = load_leas(a.ref)
    rep = confluence_check(AsPhiRules(L))
    payload = {**rep.to_json(), "braid_identity": check_leas(L).ok}
    return result("ok" if rep.confluent else "fail", payload, [rep.witness] if rep.witness else None)


def cmd_operad_count(a):
    if a.omega < 1 or a.n < 1:
        raise CliError("--omega and --n must be >= 1")
    try:
        c = count_normal_forms_two_param(a.omega, a.n)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    rec = p_recursive(a.omega, a.n)[a.n]
    return result("ok" if c == rec else "fail", {"omega": a.omega, "n": a.n, "count": c, "recursion": rec})


def cmd_series_table(a):
    if a.omega_max < 1 or a.n_max < 1:
        raise CliError("--omega-max and --n-max must be >= 1")
    rows = table_rows(a.omega_max, a.n_max)
    mism = [{"omega": w, "n": n} for w, row in enumerate(rows, 1) for n, v in enumerate(row, 1)
            if n >= 2 and p_narayana(w, n) != v]
    if a.tsv:
        return table_tsv(a.omega_max, a.n_max), (1 if mism else 0)
    payload = {"rows": [{"omega": w, "values": row} for w, row in enumerate(rows, 1)],
               "narayana_agrees": not mism}
    return result("fail" if mism else "ok", payload, mism or None)


def cmd_series_poly(a):
    if a.n < 1:
        raise CliError("--n must be >= 1")
    p = p_polynomial(a.n)
    payload = {"n": a.n, "coeffs": list(p.coeffs)}
    if a.n >= 2:
        rep = check_polynomial_properties(a.n)
        payload["properties"] = rep.details["checks"]
        return result("ok" if rep.ok else "fail", payload)
    return result("ok", payload)


def cmd_series_koszul(a):
    if a.order < 2 or a.order > 20:
        raise CliError("--order must be between 2 and 20")
    Q = koszul_dual_series(a.omega, a.order)
    rep = koszul_inversion_check(a.omega, a.order)
    payload = {"omega": a.omega, "order": a.order, "Q": [str(c) for c in Q.coeffs], "inverse_ok": rep.ok}
    return result("ok" if rep.ok else "fail", payload)


def cmd_assoc_scan(a):
    S = load_eas(a.ref)
    name = a.ref if a.ref in catalog.eas_entries() else _class_name(S)
    try:
        out = associative_scan(S, name)
    except SizeLimitExceeded as exc:
        raise CliError(str(exc)) from None
    status = "fail" if out.get("matches_table") is False else "ok"
    return result(status, out, [out["discrepancies"]] if status == "fail" else None)


def cmd_theta(a):
    rep = theta_check(load_eas(a.ref))
    return result("ok" if rep.ok else "fail", rep.to_json(), rep.failures[:10] or None)


def cmd_theta_prime(a):
    data = _read_json(a.ref)
    try:
        labels = [str(x) for x in data["elements"]]
        pos = {e: i for i, e in enumerate(labels)}
        table = [[pos[str(x)] for x in row] for row in data["table"]]
        rep = theta_prime_check(labels, table)
    except (NoRightInverses, NotAssociative) as exc:
        raise CliError(str(exc)) from None
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"not a semigroup description: {exc}") from None
    return result("ok" if rep.ok else "fail", rep.to_json(), rep.failures[:10] or None)


def cmd_links(a):
    names = [a.name] if a.name in catalog.links() else \
        [k for k, v in catalog.links().items() if a.name in ("all", v.relation_set)]
    if not names:
        raise CliError(f"unknown link or relation set: {a.name}")
    reports = {n: verify_link(n).to_json() for n in names}
    bad = [n for n, r in reports.items() if not r["ok"]]
    return result("fail" if bad else "ok", {"links": reports}, [{"link": n} for n in bad] or None)


def cmd_catalog(a):
    payload = {
        "eas": [{"name": n, "group": d.get("group"), "size": len(d["elements"])}
                for n, d in catalog.eas_entries().items()],
        "leas": [{"name": n, "group": d.get("group"), "dim": d["dim"], "provenance": d.get("provenance")}
                 for n, d in catalog.leas_entries().items()],
        "links": [{"name": k.name, "relation_set": k.relation_set, "target": k.target, "side": k.side,
                   "mode": k.mode} for k in catalog.links().values()],
    }
    return result("ok", payload)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="easop", description="Extended associative semigroups and their operads.")
    sub = p.add_subparsers(dest="group", required=True)

    def group(name, help_):
        g = sub.add_parser(name, help=help_)
        return g.add_subparsers(dest="cmd", required=True)

    def cmd(g, name, fn: Callable, help_=None, ref=True):
        c = g.add_parser(name, help=help_)
        if ref:
            c.add_argument("ref", help="catalog name or JSON file")
        c.set_defaults(fn=fn)
        return c

    g = group("eas", "finite EAS")
    cmd(g, "check", cmd_eas_check)
    c = cmd(g, "classify", cmd_eas_classify, ref=False)
    c.add_argument("--size", type=int, required=True)
    c.add_argument("--full", action="store_true", help="allow the slow size-3 enumeration")

    g = group("leas", "linear EAS")
    cmd(g, "check", cmd_leas_check)
    cmd(g, "linearize", cmd_leas_linearize)
    cmd(g, "dual", cmd_leas_dual)
    cmd(g, "invert", cmd_leas_invert)

    g = group("free", "free Phi-associative algebras")
    c = cmd(g, "assoc-check", cmd_free_assoc)
    c.add_argument("--max-len", type=int, default=4)

    g = group("operad", "operad structures")
    c = cmd(g, "compose", cmd_operad_compose)
    c.add_argument("--arity-check", type=int, default=4)
    cmd(g, "confluence", cmd_operad_confluence)
    c = cmd(g, "count", cmd_operad_count, ref=False)
    c.add_argument("--omega", type=int, required=True)
    c.add_argument("--n", type=int, required=True)

    g = group("series", "dimension series")
    c = cmd(g, "table", cmd_series_table, ref=False)
    c.add_argument("--omega-max", type=int, required=True)
    c.add_argument("--n-max", type=int, required=True)
    c.add_argument("--tsv", action="store_true")
    c = cmd(g, "poly", cmd_series_poly, ref=False)
    c.add_argument("--n", type=int, required=True)
    c = cmd(g, "koszul-check", cmd_series_koszul, ref=False)
    c.add_argument("--omega", type=int, required=True)
    c.add_argument("--order", type=int, required=True)

    g = group("assoc", "associative products")
    cmd(g, "scan", cmd_assoc_scan)

    g = group("morphism", "operad morphisms")
    cmd(g, "theta", cmd_theta)
    cmd(g, "theta-prime", cmd_theta_prime, help_="JSON file {\"elements\": [...], \"table\": [[...]]}")

    g = group("links", "links with named algebra types")
    c = g.add_parser("verify")
    c.add_argument("name", help="link name, relation-set name, or 'all'")
    c.set_defaults(fn=cmd_links)

    g = group("catalog", "shipped examples")
    cmd(g, "list", cmd_catalog, ref=False)
    return p


EXIT = {"ok": 0, "fail": 1, "error": 2}


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        res = args.fn(args)
    except CliError as exc:
        res = result("error", {"message": str(exc)})
    except (SizeLimitExceeded, catalog.UnknownCatalogName, ValueError) as exc:
        res = result("error", {"message": f"{type(exc).__name__}: {exc}"})
    if isinstance(res, tuple):  # raw TSV
        text, code = res
        out.write(text)
        return code
    out.write(json.dumps(res, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    return EXIT[res["status"]]


def main() -> None:
    sys.exit(run())
