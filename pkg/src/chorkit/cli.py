"""Command-line front end; one subcommand per library pipeline.

Exit codes: 0 success / property holds, 1 property fails (witness in the
report), 2 input error, 3 budget exhausted (best-effort result reported).
Reports are stable, sorted JSON, so identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import coloring as coloring_mod
from . import engine as engine_mod
from . import formats, median, reduction
from .chordal import NotChordalError, clique_tree, recognize_chordal, recognize_interval
from .decomposition import is_path_decomposition, width
from .graphs import BudgetExceededError, Graph, GraphInputError

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _load_graph(args: argparse.Namespace, attr: str = "infile") -> Graph:
    path = getattr(args, attr)
    text = Path(path).read_text()
    fmt = args.format
    if fmt == "auto":
        fmt = "edges" if ("\n" in text.strip() or " " in text.strip()) else "g6"
    return formats.parse_graph(text, fmt)


def _load_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"malformed JSON in {path}: {exc}")


def _emit(report: dict[str, Any], args: argparse.Namespace) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _budget(args: argparse.Namespace) -> engine_mod.SearchBudget:
    return engine_mod.SearchBudget(
        max_triangulations=args.budget_triangulations,
        max_nodes=args.budget_nodes,
    )


def _cmd_recognize(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    witness = recognize_chordal(g)
    report: dict[str, Any] = {"n": g.n, "chordal": witness.is_chordal}
    if witness.is_chordal:
        report["peo"] = list(witness.peo)
    else:
        report["hole"] = list(witness.hole)
    code = EXIT_OK if witness.is_chordal else EXIT_FALSE
    if args.interval:
        res = recognize_interval(g)
        report["interval"] = res.is_interval
        if res.model is not None:
            report["interval_model"] = formats.interval_model_to_json(res.model)
        if res.asteroidal_triple is not None:
            report["asteroidal_triple"] = list(res.asteroidal_triple)
        if res.hole is not None:
            report["hole"] = list(res.hole)
        code = EXIT_OK if res.is_interval else EXIT_FALSE
    _emit(report, args)
    return code


def _cmd_chordality(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    result = engine_mod.chordality_exact(g, _budget(args))
    report = {
        "n": g.n,
        "k": result.k,
        "exact": result.exact,
        "certificate": formats.certificate_to_json(result.certificate),
    }
    if result.reason:
        report["reason"] = result.reason
    _emit(report, args)
    return EXIT_OK if result.exact else EXIT_BUDGET


def _cmd_decompose(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    try:
        td = clique_tree(g)
    except NotChordalError as exc:
        _emit({"error": "input graph is not chordal", "hole": list(exc.hole)}, args)
        return EXIT_INPUT
    _emit(
        {
            "decomposition": formats.td_to_json(td),
            "width": width(td),
            "path_decomposition": is_path_decomposition(td),
        },
        args,
    )
    return EXIT_OK


def _cmd_verify_cert(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    obj = _load_json(args.cert)
    if isinstance(obj, dict) and "certificate" in obj:
        obj = obj["certificate"]
    cert = formats.certificate_from_json(g, obj)
    verdict = engine_mod.verify_certificate(g, cert)
    report: dict[str, Any] = {"ok": verdict.ok, "k": cert.claimed_k}
    if not verdict.ok:
        report["violation"] = verdict.reason
        report["witness"] = _jsonable(verdict.witness)
    _emit(report, args)
    return EXIT_OK if verdict.ok else EXIT_FALSE


def _cmd_median_build(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if args.cert:
        obj = _load_json(args.cert)
        if isinstance(obj, dict) and "certificate" in obj:
            obj = obj["certificate"]
        cert = formats.certificate_from_json(g, obj)
        tds = engine_mod.certificate_to_td_family(g, cert)
    elif args.tds:
        tds = [formats.td_from_json(o, g.n) for o in _load_json(args.tds)]
    else:
        raise GraphInputError("median-build needs --cert or --tds")
    md = median.build_ktmd(g, tds)
    if args.paths and not median.factors_are_paths(md.product):
        _emit({"error": "a factor is not a path"}, args)
        return EXIT_FALSE
    _emit(
        {
            "median_decomposition": formats.md_to_json(md),
            "factors": len(md.product.factors),
            "product_size": md.product.size,
        },
        args,
    )
    return EXIT_OK


def _cmd_median_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    obj = _load_json(args.md)
    if isinstance(obj, dict) and "median_decomposition" in obj:
        obj = obj["median_decomposition"]
    md = formats.md_from_json(obj, g.n)
    verdict = median.verify_complete_ktmd(g, md, require_path_factors=args.paths)
    report: dict[str, Any] = {"ok": verdict.ok, "factors": len(md.product.factors)}
    if not verdict.ok:
        report["violation"] = verdict.reason
        report["witness"] = _jsonable(verdict.witness)
    _emit(report, args)
    return EXIT_OK if verdict.ok else EXIT_FALSE


def _cmd_color_pw(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    rep1 = formats.td_from_json(_load_json(args.rep1), g.n)
    rep2 = formats.td_from_json(_load_json(args.rep2), g.n)
    col = coloring_mod.color_via_pw(g, rep1, rep2)
    part = coloring_mod.pw_partition(g, rep1, rep2)
    report = formats.coloring_to_json(col)
    report["cells"] = len(part.cells)
    report["cell_bound"] = (part.k1 + 1) * (part.k2 + 1)
    _emit(report, args)
    return EXIT_OK


def _cmd_color_radius(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    rep1 = formats.td_from_json(_load_json(args.rep1), g.n)
    g2 = formats.parse_graph(Path(args.g2).read_text(), args.format if args.format != "auto" else "g6")
    col = coloring_mod.color_via_radius(g, rep1, g2)
    _emit(formats.coloring_to_json(col), args)
    return EXIT_OK


def _cmd_reduce(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    lp = reduction.coloring_to_chordality_instance(g)
    gadget_g6 = formats.emit_graph6(lp.product)
    fiber_map = {str(v): [lp.encode(v, 0), lp.encode(v, 1)] for v in range(g.n)}
    if args.gadget_out:
        Path(args.gadget_out).write_text(gadget_g6 + "\n")
    if args.map_out:
        Path(args.map_out).write_text(json.dumps({"fibers": fiber_map}, sort_keys=True, indent=2) + "\n")
    _emit(
        {
            "gadget_graph6": gadget_g6,
            "gadget_n": lp.product.n,
            "fibers": fiber_map,
        },
        args,
    )
    return EXIT_OK


def _cmd_decode(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    obj = _load_json(args.cert)
    if isinstance(obj, dict) and "certificate" in obj:
        obj = obj["certificate"]
    lp = reduction.coloring_to_chordality_instance(g)
    cert = formats.certificate_from_json(lp.product, obj)
    col = reduction.decode_coloring(g, cert)
    _emit(formats.coloring_to_json(col), args)
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace) -> int:
    g = formats.generate(
        args.family, n=args.n, p=args.p, rows=args.rows, cols=args.cols, seed=args.seed
    )
    text = formats.emit_graph(g, args.format if args.format != "auto" else "g6")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _jsonable(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(value)
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chorkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, needs_in: bool = True) -> None:
        if needs_in:
            p.add_argument("--in", dest="infile", required=True, help="input graph file")
        p.add_argument("--format", default="auto", choices=["auto", "g6", "edges"])
        p.add_argument("--out", default=None, help="write the JSON report here instead of stdout")

    p = sub.add_parser("recognize", help="chordality recognition with certificate")
    common(p)
    p.add_argument("--interval", action="store_true", help="also run interval recognition")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("chordality", help="exact chordality with certificate")
    common(p)
    p.add_argument("--budget-triangulations", type=int, default=20_000)
    p.add_argument("--budget-nodes", type=int, default=2_000_000)
    p.set_defaults(func=_cmd_chordality)

    p = sub.add_parser("decompose", help="clique tree of a chordal graph")
    common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify-cert", help="verify a chordality certificate")
    common(p)
    p.add_argument("--cert", required=True)
    p.set_defaults(func=_cmd_verify_cert)

    p = sub.add_parser("median-build", help="median decomposition from a certificate or decomposition family")
    common(p)
    p.add_argument("--cert", default=None)
    p.add_argument("--tds", default=None, help="JSON list of decompositions")
    p.add_argument("--paths", action="store_true", help="require path factors")
    p.set_defaults(func=_cmd_median_build)

    p = sub.add_parser("median-verify", help="verify a complete median decomposition")
    common(p)
    p.add_argument("--md", required=True)
    p.add_argument("--paths", action="store_true")
    p.set_defaults(func=_cmd_median_verify)

    p = sub.add_parser("color-pw", help="pathwidth-layer coloring pipeline")
    common(p)
    p.add_argument("--rep1", required=True)
    p.add_argument("--rep2", required=True)
    p.set_defaults(func=_cmd_color_pw)

    p = sub.add_parser("color-radius", help="radius-level coloring pipeline")
    common(p)
    p.add_argument("--rep1", required=True)
    p.add_argument("--g2", required=True, help="second (chordal) side graph file")
    p.set_defaults(func=_cmd_color_radius)

    p = sub.add_parser("reduce", help="build the coloring->chordality doubled graph")
    common(p)
    p.add_argument("--gadget-out", default=None, help="write the doubled graph (graph6) here")
    p.add_argument("--map-out", default=None, help="write the fiber map JSON here")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("decode", help="decode a coloring from a gadget certificate")
    common(p)
    p.add_argument("--cert", required=True)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("generate", help="graph family generator")
    p.add_argument("--family", required=True, choices=["cn", "kn", "kn_minus_edge", "gnp", "random_tree", "grid"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--rows", type=int, default=None)
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", default="auto", choices=["auto", "g6", "edges"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphInputError, FileNotFoundError) as exc:
        sys.stdout.write(json.dumps({"error": str(exc)}, sort_keys=True, indent=2) + "\n")
        return EXIT_INPUT
    except BudgetExceededError as exc:
        sys.stdout.write(json.dumps({"error": str(exc)}, sort_keys=True, indent=2) + "\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
