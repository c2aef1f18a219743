"""Command-line entry point.

Exit codes: 0 success, 1 a check found a violation, 2 usage error,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .complete import lambda_basis, membership_pbei_kn
from .errors import InvalidInput
from .graph import (
    Graph,
    enumerate_minimal_paths,
    enumerate_weakly_admissible_paths,
    graph_to_dict,
    parse_graph,
)
from .groebner import NormalForm, buchberger, reduce
from .ideals import (
    IdealSpec,
    closed_form_gb_bei,
    generators,
    membership_bei,
    pbei_path_binomials,
    s_set_bei,
    sigma_admissible_paths,
)
from .graver import (
    check,
    default_degree_bound,
    default_length_bound,
    default_order_grid,
    graver_layers,
    ugb_lex_family,
)
from .monomials import Binomial, LexOrder, Monomial, canonical, is_multihomogeneous, parse_polynomial

log = logging.getLogger("binedge")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class InternalError(RuntimeError):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(" ", ",").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def load_graph(args) -> Graph:
    sources = [s for s in (args.graph, args.edges, args.complete) if s is not None]
    if len(sources) != 1:
        raise InvalidInput("give exactly one of --graph, --edges, --complete")
    if args.complete is not None:
        return Graph.complete(args.complete)
    if args.edges is not None:
        edges = []
        for tok in args.edges.replace(" ", ",").split(","):
            if not tok:
                continue
            try:
                i, j = (int(t) for t in tok.split("-"))
            except ValueError:
                raise InvalidInput(f"edge {tok!r} is not of the form i-j") from None
            edges.append((i, j))
        n = args.n if args.n is not None else max((max(e) for e in edges), default=0)
        if len({(min(e), max(e)) for e in edges}) != len(edges):
            raise InvalidInput("duplicate edge")
        return Graph.from_edges(n, edges)
    text = sys.stdin.read() if args.graph == "-" else Path(args.graph).read_text(encoding="utf-8")
    return parse_graph(text)


def _order(args, n: int) -> LexOrder:
    sigma = tuple(args.sigma) if args.sigma else tuple(range(1, n + 1))
    if len(sigma) != n:
        raise InvalidInput(f"--sigma has {len(sigma)} entries, graph has n={n}")
    return LexOrder(sigma, frozenset(args.L or ()))


def _warn_bounds(args, spec: IdealSpec) -> tuple[int | None, int | None]:
    lb = getattr(args, "length_bound", None)
    if lb is not None and lb < default_length_bound(spec.n):
        log.warning("length bound %d is below the default %d", lb, default_length_bound(spec.n))
    db = getattr(args, "bound", None)
    if db is not None:
        ref = default_degree_bound(spec, lb)
        if db < ref:
            log.warning("degree bound %d is below the default %d", db, ref)
    return db, lb


def _binomials_out(items: list[Binomial]) -> list[dict]:
    return [{"text": str(b), **b.to_dict()} for b in items]


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


# -- subcommands ------------------------------------------------------------


def cmd_paths(args, G: Graph) -> int:
    if args.path_class == "weak":
        walks = enumerate_weakly_admissible_paths(G)
        bound = None
    elif args.path_class == "minimal":
        bound = args.length_bound if args.length_bound is not None else default_length_bound(G.n)
        walks = enumerate_minimal_paths(G, bound)
    else:
        walks = sigma_admissible_paths(G, _order(args, G.n).sigma)
        bound = None
    payload = {
        "graph": graph_to_dict(G),
        "class": args.path_class,
        "length_bound": bound,
        "count": len(walks),
        "paths": [list(w) for w in walks],
    }
    lines = [f"{args.path_class} paths: {len(walks)}" + (f" (length bound {bound})" if bound else "")]
    lines += ["(" + ",".join(map(str, w)) + ")" for w in walks]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_gens(args, G: Graph) -> int:
    gens = generators(IdealSpec(G, args.kind))
    _emit(args, {"kind": args.kind, "generators": _binomials_out(gens)}, [str(b) for b in gens])
    return EXIT_OK


def _closed_form(spec: IdealSpec, order: LexOrder) -> list[Binomial] | None:
    if spec.kind == "bei":
        return closed_form_gb_bei(spec.graph, order.sigma) if not order.L else None
    if spec.graph == Graph.complete(spec.n) and spec.n >= 2:
        return lambda_basis(spec.n, order)
    return None


def cmd_gb(args, G: Graph) -> int:
    spec = IdealSpec(G, args.kind)
    order = _order(args, G.n)
    gb = buchberger(generators(spec), order)
    closed = _closed_form(spec, order)
    agree = None if closed is None else closed == gb
    payload = {
        "kind": spec.kind,
        "order": {"sigma": list(order.sigma), "L": sorted(order.L)},
        "buchberger": _binomials_out(gb),
        "closed_form": None if closed is None else _binomials_out(closed),
        "agreement": agree,
    }
    lines = [f"reduced Groebner basis ({order}): {len(gb)} elements"] + [f"  {b}" for b in gb]
    if closed is None:
        lines.append("closed form: not available for this ideal/order")
    else:
        lines.append(f"closed form agrees with Buchberger: {'yes' if agree else 'NO'}")
    _emit(args, payload, lines)
    if agree is False:
        raise InternalError("closed-form basis disagrees with Buchberger")
    return EXIT_OK


def cmd_nf(args, G: Graph) -> int:
    spec = IdealSpec(G, args.kind)
    order = _order(args, G.n)
    f = parse_polynomial(args.poly, G.n)
    gb = buchberger(generators(spec), order)
    r = reduce(f, gb, order)
    shown = "0" if r is None else str(r)
    payload = {"input": str(f), "order": {"sigma": list(order.sigma), "L": sorted(order.L)}, "normal_form": shown}
    _emit(args, payload, [shown])
    return EXIT_OK


def cmd_sset(args, G: Graph) -> int:
    spec = IdealSpec(G, args.kind)
    _, lb = _warn_bounds(args, spec)
    if spec.kind == "bei":
        S = s_set_bei(G)
        walks = enumerate_weakly_admissible_paths(G)
        lb = None
    else:
        lb = default_length_bound(G.n) if lb is None else lb
        walks = enumerate_minimal_paths(G, lb)
        S = canonical(b for b, _, _ in pbei_path_binomials(G, lb))
    payload = {
        "graph": graph_to_dict(G),
        "kind": spec.kind,
        "length_bound": lb,
        "path_count": len(walks),
        "paths": [list(w) for w in walks],
        "count": len(S),
        "binomials": _binomials_out(S),
    }
    lines = [f"|S| = {len(S)}  ({len(walks)} paths)"] + [str(b) for b in S]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_graver(args, G: Graph) -> int:
    spec = IdealSpec(G, args.kind)
    db, _ = _warn_bounds(args, spec)
    db = default_degree_bound(spec) if db is None else db
    layers = graver_layers(spec, db)
    gr = canonical(b for layer in layers.values() for b in layer)
    payload = {
        "kind": spec.kind,
        "degree_bound": db,
        "complete_up_to_degree": db,
        "by_degree": {str(d): len(v) for d, v in layers.items()},
        "count": len(gr),
        "binomials": _binomials_out(gr),
    }
    lines = [f"|Graver| = {len(gr)} (complete up to degree {db})"] + [str(b) for b in gr]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_ugb(args, G: Graph) -> int:
    spec = IdealSpec(G, args.kind)
    orders = default_order_grid(spec)
    if args.sigma:
        orders = [_order(args, G.n)]
    U = ugb_lex_family(spec, orders, jobs=args.jobs)
    payload = {
        "kind": spec.kind,
        "scope": "lex-family lower bound",
        "orders": len(orders),
        "count": len(U),
        "binomials": _binomials_out(U),
    }
    lines = [f"|UGB| = {len(U)} over {len(orders)} lex orders (lower bound)"] + [str(b) for b in U]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_member(args, G: Graph) -> int:
    spec = IdealSpec(G, args.kind)
    f = parse_polynomial(args.poly, G.n)
    if isinstance(f, Monomial):
        raise InvalidInput("membership needs a binomial 'lead - trail'")
    order = LexOrder.identity(G.n)
    by_nf = NormalForm(buchberger(generators(spec), order), order).contains(f)
    if spec.kind == "bei":
        if is_multihomogeneous(f, "bei"):
            verdict, lemma = membership_bei(G, f), "component multidegree criterion"
        else:
            verdict, lemma = False, "homogeneity (J_G is multi-homogeneous and has no monomials)"
    elif G == Graph.complete(G.n):
        verdict = membership_pbei_kn(f)
        lemma = "K_n multi-homogeneity" if len(f.lead.support) > 2 else "K_n q-shift form"
    else:
        verdict, lemma = by_nf, "normal form modulo reduced Groebner basis"
    payload = {"input": str(f), "kind": spec.kind, "member": verdict, "lemma": lemma, "normal_form_agrees": verdict == by_nf}
    _emit(args, payload, [f"{'member' if verdict else 'not a member'} ({lemma})"])
    if verdict != by_nf:
        raise InternalError("membership lemma disagrees with normal-form membership")
    return EXIT_OK


def cmd_check(args, G: Graph) -> int:
    spec = IdealSpec(G, args.kind)
    db, lb = _warn_bounds(args, spec)
    report = check(spec, degree_bound=db, length_bound=lb, jobs=args.jobs, sufficiency=not args.no_sufficiency)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    if not report.passed:
        print(f"!!! S = Graver = UGB VIOLATED for {spec.kind} on {G}: see witnesses above", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


COMMANDS = {
    "paths": cmd_paths,
    "gens": cmd_gens,
    "gb": cmd_gb,
    "nf": cmd_nf,
    "sset": cmd_sset,
    "graver": cmd_graver,
    "ugb": cmd_ugb,
    "member": cmd_member,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("graph source (exactly one)")
    src.add_argument("--graph", "-g", help="graph file (text 'n m' + edge lines, or JSON); '-' for stdin")
    src.add_argument("--edges", help="inline edge list such as '1-2,1-3,2-3,2-4'")
    src.add_argument("--complete", type=int, metavar="N", help="the complete graph K_N")
    src.add_argument("--n", type=int, help="vertex count for --edges (default: largest endpoint)")
    common.add_argument("--kind", choices=("bei", "pbei"), default="bei")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-v", "--verbose", action="store_true")

    order = argparse.ArgumentParser(add_help=False)
    order.add_argument("--sigma", type=_int_list, help="permutation as images sigma(1),...,sigma(n)")
    order.add_argument("--L", type=_int_list, help="1-based priority positions whose y outranks x")

    degree = argparse.ArgumentParser(add_help=False)
    degree.add_argument("--bound", type=int, help="degree bound for the Graver oracle")
    length = argparse.ArgumentParser(add_help=False)
    length.add_argument("--length-bound", type=int, help="walk-length bound for minimal paths (default 2n)")
    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = argparse.ArgumentParser(prog="binedge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("paths", parents=[common, order, length], help="list a class of paths")
    sp.add_argument("--class", dest="path_class", choices=("weak", "minimal", "sigma"), default="weak")
    sub.add_parser("gens", parents=[common], help="ideal generators")
    sub.add_parser("gb", parents=[common, order], help="reduced Groebner basis, closed form vs Buchberger")
    sp = sub.add_parser("nf", parents=[common, order], help="normal form of a monomial or binomial")
    sp.add_argument("--poly", required=True, help="e.g. 'x1*x2*x3' or 'x1*y2 - x2*y1'")
    sub.add_parser("sset", parents=[common, length], help="path-indexed S-set")
    sub.add_parser("graver", parents=[common, degree], help="bounded Graver basis")
    sub.add_parser("ugb", parents=[common, order, jobs], help="lex-family universal Groebner basis")
    sp = sub.add_parser("member", parents=[common], help="ideal membership of a binomial")
    sp.add_argument("--poly", required=True)
    sp = sub.add_parser("check", parents=[common, degree, length, jobs], help="compare S-set, Graver basis and UGB")
    sp.add_argument("--no-sufficiency", action="store_true", help="skip the degree+1 self-check")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        G = load_graph(args)
        if args.command in ("sset", "graver", "ugb") and not G.is_connected():
            log.warning("graph %s is disconnected; the S-set results assume connectivity", G)
        return COMMANDS[args.command](args, G)
    except (InvalidInput, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - any other failure is a bug
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
