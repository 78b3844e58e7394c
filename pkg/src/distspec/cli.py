"""Command-line entry point: ``distspec <group> <action> ...``.

Exit codes: 0 all counted checks pass, 1 some fail, 2 inconclusive but no
fail, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from . import forms, graphs as gr, harness as H
from .factor import amahashi_check, find_odd_factor
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .matching import berge_tutte, matching_number, maximum_matching
from .spectral import (DEFAULT_TOL, DisconnectedGraphError, PerronConvergenceError,
                       distance_matrix, mu, quotient_matrix, quotient_radius)

EXIT_USAGE = 3

# Result numbering used on the command line.
LEMMAS = {
    "2.1": "matching_agreement",
    "2.2": "odd_factor_criterion",
    "2.4": "quotient_consistency",
    "2.5": "edge_deletion",
    "2.6": "join_singletons",
    "2.7": "join_cliques",
    "3.1": "connectivity_vs_matching",
    "3.3": "matching_lower_bound",
    "3.4": "matching_family",
}
THEOREMS = {
    "3.2": "matching_theorem",
    "3.5": "perfect_matching_corollary",
    "4.1": "odd_factor_theorem",
    "4.2": "odd_factor_corollary",
}
PARAM_FLAGS = ("n", "s", "k", "t", "b", "delta")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _graph(text: str) -> gr.Graph:
    return parse_graph6(text.strip())


# -- graph -------------------------------------------------------------------


def cmd_graph_build(a) -> int:
    fam = a.family
    if fam == "complete":
        g = gr.complete(_need(a, "n"))
    elif fam == "path":
        g = gr.path(_need(a, "n"))
    elif fam == "cycle":
        g = gr.cycle(_need(a, "n"))
    elif fam == "star":
        g = gr.star(_need(a, "n") - 1)
    elif fam == "matching":
        g = gr.family_matching(_need(a, "n"), _need(a, "s"), _need(a, "k"))
    elif fam == "odd_factor":
        g = gr.family_odd_factor(_need(a, "n"), _need(a, "s"), _need(a, "b"))
    else:
        g = gr.family_case3(_need(a, "n"), _need(a, "s"), _need(a, "b"), _need(a, "delta"))
    print(write_graph6(g))
    if a.blocks and g.blocks is not None:
        _emit({"blocks": g.block_lists()})
    return 0


def cmd_graph_parse(a) -> int:
    g = _graph(a.graph6)
    _emit({"n": g.n, "edges": [list(e) for e in g.edges()]})
    return 0


def cmd_graph_info(a) -> int:
    g = _graph(a.graph6)
    connected = gr.is_connected(g)
    _emit({"n": g.n, "m": g.num_edges(), "connected": connected, "degrees": g.degrees(),
           "min_degree": gr.min_degree(g) if g.n else None,
           "connectivity": gr.vertex_connectivity(g) if g.n else None,
           "odd_components": gr.odd_components(g)[0]})
    return 0


# -- spectral ----------------------------------------------------------------


def cmd_spectral_radius(a) -> int:
    g = _graph(a.graph6)
    print(f"{mu(g, a.tol)!r} tol={a.tol:g}")
    return 0


def _partition(text: str) -> list[list[int]]:
    try:
        return [[int(v) for v in part.split(",") if v.strip()] for part in text.split(";")]
    except ValueError:
        raise UsageError(f"bad partition {text!r}; expected e.g. '0,1;2,3'") from None


def cmd_spectral_quotient(a) -> int:
    g = _graph(a.graph6)
    q, equitable = quotient_matrix(distance_matrix(g), _partition(a.partition))
    out = {"matrix": q.tolist(), "equitable": equitable}
    if equitable:
        out["radius"] = quotient_radius(q, a.tol)
        out["tol"] = forms.ROOT_TOL if q.shape[0] <= 3 else a.tol
    _emit(out)
    return 0


# -- forms -------------------------------------------------------------------


def _family(a) -> forms.FamilyParams:
    v = a.variant
    if v == "matching":
        return forms.FamilyParams(v, _need(a, "n"), _need(a, "s"), k=_need(a, "k"))
    if v == "odd_factor":
        return forms.FamilyParams(v, _need(a, "n"), _need(a, "s"), b=_need(a, "b"))
    s = 1 if v == "case31" else _need(a, "s")
    return forms.FamilyParams(v, _need(a, "n"), s, b=_need(a, "b"), delta=_need(a, "delta"))


def cmd_forms_charpoly(a) -> int:
    p = _family(a)
    _emit({"family": p.as_dict(), "matrix": [[str(v) for v in row] for row in p.matrix()],
           "coefficients": p.charpoly().as_strings()})
    return 0


def cmd_forms_root(a) -> int:
    p = _family(a)
    _emit({"family": p.as_dict(), "root": p.radius(), "tol": forms.ROOT_TOL})
    return 0


# -- matching and factors ----------------------------------------------------


def cmd_matching_alpha(a) -> int:
    g = _graph(a.graph6)
    _emit({"alpha": matching_number(g), "matching": [list(e) for e in maximum_matching(g)]})
    return 0


def cmd_matching_deficiency(a) -> int:
    g = _graph(a.graph6)
    d, S = berge_tutte(g)
    out = {"deficiency": d, "alpha": (g.n - d) // 2}
    if a.witness:
        out["witness"] = gr.mask_to_list(S)
        out["odd_components"] = gr.odd_components(g, S)[0]
    _emit(out)
    return 0


def cmd_factor_check(a) -> int:
    g = _graph(a.graph6)
    res = amahashi_check(g, a.b)
    out = {"b": a.b, "verdict": res.verdict}
    if not res.exists:
        out["witness"] = res.barrier_vertices()
        out["odd_components"] = gr.odd_components(g, res.barrier)[0]
    if a.construct:
        found = find_odd_factor(g, a.b)
        out["factor"] = [list(e) for e in found.factor] if found.exists else None
    _emit(out)
    return 0


# -- verify ------------------------------------------------------------------


def _config(a) -> H.Config:
    return H.Config.load(a.config, eps_cmp=a.eps_cmp, nmax=a.nmax, threads=a.threads, seed=a.seed)


def _resolve(kind: str, ident: str) -> str:
    table = LEMMAS if kind == "lemma" else THEOREMS
    if ident in table:
        return table[ident]
    if ident in H.CHECKS:
        return ident
    raise UsageError(f"unknown {kind} {ident!r}; known: {', '.join(table)}")


def _b_values(a) -> list[int] | None:
    if a.b_list is None:
        return None
    try:
        return [int(v) for v in a.b_list.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad --b-list {a.b_list!r}") from None


def _params_for(check_id: str, a, cfg: H.Config) -> list[dict]:
    """Explicit flags when they name every parameter of the check, otherwise the
    default plan filtered by whatever flags were given."""
    given = {f: getattr(a, f) for f in PARAM_FLAGS if getattr(a, f) is not None}
    bs = _b_values(a)
    sig = inspect.signature(H.CHECKS[check_id])
    names = [p for p in sig.parameters if p != "cfg"]
    required = [p for p in names if sig.parameters[p].default is inspect.Parameter.empty]
    extra = set(given) - set(names)
    if extra:
        raise UsageError(f"{check_id} does not take {sorted(extra)}")
    variants = [dict(given, b=b) for b in bs] if bs and "b" in names else [given]
    out = []
    for params in variants:
        if all(p in params for p in required) and params:
            out.append(params)
        else:
            out.extend(p for p in H.plan_for(check_id, cfg)
                       if all(p.get(k) == v for k, v in params.items()))
    if not out:
        raise UsageError(f"no {check_id} runs match the given parameters")
    return out


def _finish(reports, a, cfg) -> int:
    reports = sorted(reports, key=H.VerificationReport.sort_key)
    for r in reports:
        tag = "" if r.asserted else " (recorded only)"
        margin = "" if r.margin is None else f" margin={r.margin!r}"
        print(f"{r.outcome:<12} {r.check_id} {json.dumps(r.params, sort_keys=True)}{margin}"
              f" eps={cfg.eps_cmp:g}{tag}")
    if a.json:
        with open(a.json, "w") as fh:
            fh.write(H.reports_to_json(reports, cfg, timing=a.timing))
    if a.csv:
        with open(a.csv, "w", newline="") as fh:
            fh.write(H.reports_to_csv(reports))
    return H.exit_status(reports)


def cmd_verify(a) -> int:
    cfg = _config(a)
    if a.target == "all":
        reports = H.run_plan(cfg)
    elif a.target == "sweep":
        reports = _sweep(a, cfg)
    else:
        if a.ident is None:
            raise UsageError(f"verify {a.target} needs an id")
        check_id = _resolve(a.target, a.ident)
        reports = []
        for params in _params_for(check_id, a, cfg):
            reports.extend(H.run_check(cfg, check_id, **params))
    return _finish(reports, a, cfg)


def _sweep(a, cfg) -> list:
    reports = []
    if a.k is not None or a.t is not None:
        k, t = _need(a, "k"), _need(a, "t")
        orders = [a.n] if a.n is not None else H.matching_orders(k, t)
        for n in orders:
            reports.extend(H.run_check(cfg, "matching_family", n=n, k=k, t=t))
    elif a.delta is not None:
        bs = _b_values(a) or [_need(a, "b")]
        for b in bs:
            orders = [a.n] if a.n is not None else H.odd_factor_orders(b, a.delta)
            for n in orders:
                reports.extend(H.run_check(cfg, "odd_factor_theorem", n=n, b=b, delta=a.delta))
    else:
        raise UsageError("verify sweep needs --k/--t or --delta with --b/--b-list")
    if not a.csv:
        sys.stdout.write(H.reports_to_csv(reports))
    return reports


# -- parser ------------------------------------------------------------------


def _need(a, name: str) -> int:
    val = getattr(a, name, None)
    if val is None:
        raise UsageError(f"--{name} is required here")
    return val


def build_parser() -> argparse.ArgumentParser:
    params = argparse.ArgumentParser(add_help=False)
    for f in PARAM_FLAGS:
        params.add_argument(f"--{f}", type=int)

    top = _Parser(prog="distspec", description="Distance spectral radius workbench.")
    groups = top.add_subparsers(dest="group", required=True, parser_class=_Parser)

    g = groups.add_parser("graph").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = g.add_parser("build", parents=[params], help="print the graph6 code of a named graph")
    p.add_argument("family", choices=("complete", "path", "cycle", "star", "matching",
                                      "odd_factor", "case3"))
    p.add_argument("--blocks", action="store_true", help="also print the block partition")
    p.set_defaults(func=cmd_graph_build)
    for name, func in (("parse", cmd_graph_parse), ("info", cmd_graph_info)):
        p = g.add_parser(name)
        p.add_argument("graph6")
        p.set_defaults(func=func)

    s = groups.add_parser("spectral").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = s.add_parser("radius")
    p.add_argument("graph6")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_spectral_radius)
    p = s.add_parser("quotient")
    p.add_argument("graph6")
    p.add_argument("--partition", required=True, help="classes separated by ';', e.g. 0,1;2,3")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_spectral_quotient)

    f = groups.add_parser("forms").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, func in (("charpoly", cmd_forms_charpoly), ("root", cmd_forms_root)):
        p = f.add_parser(name, parents=[params])
        p.add_argument("--variant", choices=forms.VARIANTS, required=True)
        p.set_defaults(func=func)

    m = groups.add_parser("matching").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = m.add_parser("alpha")
    p.add_argument("graph6")
    p.set_defaults(func=cmd_matching_alpha)
    p = m.add_parser("deficiency")
    p.add_argument("graph6")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_matching_deficiency)

    x = groups.add_parser("factor").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = x.add_parser("check")
    p.add_argument("graph6")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--construct", action="store_true", help="also search for the factor itself")
    p.set_defaults(func=cmd_factor_check)

    p = groups.add_parser("verify", parents=[params])
    p.add_argument("target", choices=("all", "lemma", "theorem", "sweep"))
    p.add_argument("ident", nargs="?", help="result number such as 2.5, or a check name")
    p.add_argument("--nmax", type=int)
    p.add_argument("--b-list", dest="b_list")
    p.add_argument("--json")
    p.add_argument("--csv")
    p.add_argument("--threads", type=int)
    p.add_argument("--eps-cmp", dest="eps_cmp", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--config", help="JSON file of Config fields; flags take precedence")
    p.add_argument("--timing", action="store_true", help="include wall times in the JSON report")
    p.set_defaults(func=cmd_verify)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    try:
        return a.func(a)
    except (UsageError, Graph6Error, DisconnectedGraphError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"distspec: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except PerronConvergenceError as exc:
        print(f"distspec: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
