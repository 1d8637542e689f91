"""Command-line front end.

Subcommands: validate, graph, derivative, supp, jacquet, aubert,
det-formula, gl-det-formula.  Input is a JSON file path, "-" for stdin, or
an inline JSON object.  Output is deterministic: identical inputs produce
byte-identical output.  Exit codes: 0 success, 1 domain error (the message
names the violated clause), 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .core import HalfInt, LadderError
from .datum import LadderDatum, langlands_data_of, standard_module_of, validate_datum
from .formula import determinantal_formula, gl_determinantal_formula, sigma_table
from .graph import aubert_dual, build_graph, derivative, jacquet_expansion, supp_ladder
from . import jsonio, render
from .jsonio import SchemaError


def _read_input(source: str) -> Any:
    if source.lstrip().startswith("{"):
        return json.loads(source)
    if source == "-":
        return json.load(sys.stdin)
    with open(source, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(data: Any) -> None:
    sys.stdout.write(json.dumps(data, indent=2, sort_keys=True))
    sys.stdout.write("\n")


def _load_datum(source: str) -> LadderDatum:
    return jsonio.datum_from_json(_read_input(source))


def _pick_rho(d: LadderDatum, requested: str | None) -> str:
    if requested is not None:
        d.block(requested)
        return requested
    if len(d.blocks) == 1:
        return d.blocks[0].rho.id
    raise LadderError("datum has several labels; pass --rho to choose one")


def cmd_validate(args: argparse.Namespace) -> None:
    d = _load_datum(args.input)
    rank = validate_datum(d)
    if args.expect_rank is not None and rank != args.expect_rank:
        raise LadderError(f"[rank-mismatch]: computed rank {rank}, expected {args.expect_rank}")
    _emit({"ok": True, "group": d.group.value, "rank": rank, "datum": jsonio.datum_to_json(d)})


def cmd_graph(args: argparse.Namespace) -> None:
    d = _load_datum(args.input)
    validate_datum(d)
    blocks = [d.block(args.rho)] if args.rho else list(d.blocks)
    chunks = []
    for b in blocks:
        g = build_graph(b)
        if args.format == "dot":
            chunks.append(render.dot_graph(g))
        else:
            chunks.append(f"label {b.rho.id}:\n{render.ascii_graph(g)}")
    sys.stdout.write("\n\n".join(chunks) + "\n")


def cmd_derivative(args: argparse.Namespace) -> None:
    d = _load_datum(args.input)
    validate_datum(d)
    rho = _pick_rho(d, args.rho)
    result = derivative(d, rho, HalfInt.parse(args.x))
    if result is None:
        _emit({"zero": True})
    else:
        _emit({"zero": False, "datum": jsonio.datum_to_json(result)})


def cmd_supp(args: argparse.Namespace) -> None:
    d = _load_datum(args.input)
    s = supp_ladder(d)
    if args.format == "text":
        sys.stdout.write(render.render_support(s) + "\n")
    else:
        _emit(jsonio.support_to_json(s))


def cmd_jacquet(args: argparse.Namespace) -> None:
    d = _load_datum(args.input)
    rho = _pick_rho(d, args.rho)
    terms = jacquet_expansion(d, rho, merged=not args.raw)
    if args.k is not None:
        terms = [t for t in terms if t.gl_size == args.k]
    if args.format == "text":
        for t in terms:
            sys.stdout.write(render.render_jacquet_term(t) + "\n")
    else:
        _emit({"terms": [jsonio.jacquet_term_to_json(t) for t in terms]})


def cmd_aubert(args: argparse.Namespace) -> None:
    d = _load_datum(args.input)
    dual = aubert_dual(d)
    data = langlands_data_of(dual)
    _emit(
        {
            "datum": jsonio.datum_to_json(dual),
            "langlands": {
                "segments": [jsonio.segment_to_json(s) for s in data.segments],
                "tempered": jsonio.tempered_to_json(data.tempered),
            },
            "standard_module": jsonio.module_to_json(standard_module_of(dual)),
        }
    )


def cmd_det_formula(args: argparse.Namespace) -> None:
    d = _load_datum(args.input)
    if args.format == "table":
        sys.stdout.write(render.render_table(sigma_table(d)) + "\n")
        return
    element = determinantal_formula(d, projected=not args.raw)
    if args.format == "text":
        sys.stdout.write(render.render_element(element) + "\n")
    else:
        _emit(jsonio.element_to_json(element))


def cmd_gl_det_formula(args: argparse.Namespace) -> None:
    ladder = jsonio.gl_ladder_from_json(_read_input(args.input))
    combination = gl_determinantal_formula(ladder)
    if args.format == "text":
        sys.stdout.write(render.render_gl_combination(combination) + "\n")
    else:
        _emit(jsonio.gl_combination_to_json(combination))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ladderrep",
        description="Combinatorics of ladder representations of split odd "
        "orthogonal and symplectic p-adic groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="JSON file path, '-' for stdin, or an inline JSON object")
        p.set_defaults(handler=handler)
        return p

    p = add("validate", cmd_validate, "check a datum and report its rank")
    p.add_argument("--expect-rank", type=int, default=None)

    p = add("graph", cmd_graph, "render the colored graph of each block")
    p.add_argument("--rho", default=None, help="label id (default: all blocks)")
    p.add_argument("--format", choices=["ascii", "dot"], default="ascii")

    p = add("derivative", cmd_derivative, "derivative at a cuspidal twist")
    p.add_argument("--rho", default=None, help="label id (default: the unique label)")
    p.add_argument("--x", required=True, help="exponent, e.g. 2 or -3/2")

    p = add("supp", cmd_supp, "cuspidal support of the ladder representation")
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = add("jacquet", cmd_jacquet, "full Jacquet expansion along one label")
    p.add_argument("--rho", default=None)
    p.add_argument("--k", type=int, default=None, help="keep only GL size k terms")
    p.add_argument("--raw", action="store_true", help="per-tuple output, no merging")
    p.add_argument("--format", choices=["json", "text"], default="json")

    add("aubert", cmd_aubert, "dual datum and its Langlands data")

    p = add("det-formula", cmd_det_formula, "signed standard-module expansion")
    p.add_argument("--raw", action="store_true", help="skip the support projection")
    p.add_argument("--format", choices=["json", "text", "table"], default="json")

    p = add("gl-det-formula", cmd_gl_det_formula, "general-linear ladder expansion")
    p.add_argument("--format", choices=["json", "text"], default="json")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.handler(args)
    except LadderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SchemaError, json.JSONDecodeError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
