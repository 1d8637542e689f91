"""JSON encoding/decoding for every value type.

Half-integers travel as fraction strings ("3/2", "-1", "0"), signs as the
integers +1/-1, labels as {"id", "d", "parity"} objects.  Schema violations
raise :class:`SchemaError`, which the command line reports as a parse
failure (exit 2), distinct from domain validation failures (exit 1).
"""

from __future__ import annotations

from typing import Any, Mapping

from .core import (
    CuspidalLabel,
    GroupKind,
    GrothendieckElement,
    HalfInt,
    Parity,
    Segment,
    StandardModule,
    TemperedParam,
    TemperedPiece,
)
from .datum import DatumBlock, LadderDatum
from .formula import GLCombination, GLLadder
from .graph import JacquetTerm
from .support import SupportMultiset


class SchemaError(Exception):
    """Input JSON does not match the expected shape."""


def _require(data: Mapping[str, Any], key: str, context: str) -> Any:
    if not isinstance(data, Mapping) or key not in data:
        raise SchemaError(f"{context}: missing key {key!r}")
    return data[key]


def halfint_to_str(x: HalfInt) -> str:
    return str(x)


def halfint_from_json(value: Any, context: str = "half-integer") -> HalfInt:
    if isinstance(value, bool):
        raise SchemaError(f"{context}: expected a number or fraction string")
    if isinstance(value, int):
        return HalfInt.whole(value)
    if isinstance(value, str):
        try:
            return HalfInt.parse(value)
        except ValueError as exc:
            raise SchemaError(f"{context}: bad fraction string {value!r}") from exc
    raise SchemaError(f"{context}: expected a number or fraction string")


def _sign_from_json(value: Any, context: str) -> int:
    if value in (1, -1):
        return value
    if value in ("+", "+1"):
        return 1
    if value in ("-", "-1"):
        return -1
    raise SchemaError(f"{context}: expected +1 or -1")


def group_to_json(group: GroupKind) -> str:
    return group.value


def group_from_json(value: Any) -> GroupKind:
    for kind in GroupKind:
        if value == kind.value:
            return kind
    raise SchemaError(f"unknown group kind {value!r}")


def label_to_json(rho: CuspidalLabel) -> dict:
    return {"id": rho.id, "d": rho.d, "parity": rho.parity.value}


def label_from_json(data: Any) -> CuspidalLabel:
    ident = _require(data, "id", "label")
    d = _require(data, "d", "label")
    parity_text = _require(data, "parity", "label")
    for parity in Parity:
        if parity_text == parity.value:
            if not isinstance(d, int) or d < 1:
                raise SchemaError("label: d must be a positive integer")
            return CuspidalLabel(str(ident), d, parity)
    raise SchemaError(f"label: unknown parity {parity_text!r}")


def segment_to_json(seg: Segment) -> dict:
    return {"rho": label_to_json(seg.rho), "x": str(seg.x), "y": str(seg.y)}


def segment_from_json(data: Any) -> Segment:
    return Segment(
        label_from_json(_require(data, "rho", "segment")),
        halfint_from_json(_require(data, "x", "segment"), "segment x"),
        halfint_from_json(_require(data, "y", "segment"), "segment y"),
    )


def tempered_to_json(t: TemperedParam) -> dict:
    return {
        "group": group_to_json(t.group),
        "pieces": [
            {"rho": label_to_json(p.rho), "a": p.a, "sign": p.sign} for p in t.pieces
        ],
    }


def tempered_from_json(data: Any) -> TemperedParam:
    group = group_from_json(_require(data, "group", "tempered parameter"))
    pieces = []
    for entry in _require(data, "pieces", "tempered parameter"):
        a = _require(entry, "a", "tempered piece")
        if not isinstance(a, int) or a < 0:
            raise SchemaError("tempered piece: a must be a non-negative integer")
        pieces.append(
            TemperedPiece(
                label_from_json(_require(entry, "rho", "tempered piece")),
                a,
                _sign_from_json(_require(entry, "sign", "tempered piece"), "tempered piece"),
            )
        )
    return TemperedParam(group, tuple(pieces))


def module_to_json(m: StandardModule) -> dict:
    return {
        "segments": [segment_to_json(s) for s in m.segments],
        "tempered": tempered_to_json(m.tempered),
    }


def module_from_json(data: Any) -> StandardModule:
    return StandardModule(
        tuple(segment_from_json(s) for s in _require(data, "segments", "standard module")),
        tempered_from_json(_require(data, "tempered", "standard module")),
    )


def element_to_json(e: GrothendieckElement) -> dict:
    return {
        "rank": e.rank,
        "terms": [
            {"coefficient": c, "module": module_to_json(m)} for m, c in e.terms
        ],
    }


def block_to_json(b: DatumBlock) -> dict:
    return {
        "rho": label_to_json(b.rho),
        "X": [str(x) for x in b.exponents],
        "l": b.l,
        "eta": b.eta,
    }


def datum_to_json(d: LadderDatum) -> dict:
    return {
        "group": group_to_json(d.group),
        "blocks": [block_to_json(b) for b in d.blocks],
    }


def datum_from_json(data: Any) -> LadderDatum:
    """Accept the full schema, or the unipotent shorthand with a top-level X."""
    group = group_from_json(_require(data, "group", "datum"))
    if "blocks" not in data and "X" in data:
        data = {"group": group.value, "blocks": [dict(data, rho=label_to_json(_shorthand_label(data)))]}
    blocks = []
    for entry in _require(data, "blocks", "datum"):
        rho = label_from_json(_require(entry, "rho", "block"))
        exps = tuple(
            halfint_from_json(v, "block exponent") for v in _require(entry, "X", "block")
        )
        l = _require(entry, "l", "block")
        if not isinstance(l, int):
            raise SchemaError("block: l must be an integer")
        eta = _sign_from_json(_require(entry, "eta", "block"), "block eta")
        blocks.append(DatumBlock(rho, exps, l, eta))
    return LadderDatum.of(group, blocks)


def _shorthand_label(data: Mapping[str, Any]) -> CuspidalLabel:
    exps = [halfint_from_json(v, "shorthand exponent") for v in _require(data, "X", "datum")]
    parity = Parity.INTEGRAL
    if exps and not exps[0].is_integer:
        parity = Parity.HALF_INTEGRAL
    return CuspidalLabel("1", 1, parity)


def support_to_json(s: SupportMultiset) -> dict:
    return {
        "exponents": {rho.id: [str(v) for v in values] for rho, values in s.exponents},
        "labels": {rho.id: label_to_json(rho) for rho, _ in s.exponents},
        "core": datum_to_json(s.core),
    }


def jacquet_term_to_json(term: JacquetTerm) -> dict:
    return {
        "gl": [segment_to_json(s) for s in term.gl_segments],
        "gl_size": term.gl_size,
        "datum": datum_to_json(term.datum),
        "multiplicity": term.multiplicity,
    }


def gl_ladder_from_json(data: Any) -> GLLadder:
    if "rho" in data:
        rho = label_from_json(data["rho"])
    else:
        first = _require(data, "segments", "ladder")
        parity = Parity.INTEGRAL
        if first and not halfint_from_json(first[0][0], "ladder endpoint").is_integer:
            parity = Parity.HALF_INTEGRAL
        rho = CuspidalLabel("1", 1, parity)
    segments = []
    for entry in _require(data, "segments", "ladder"):
        if isinstance(entry, Mapping):
            x = halfint_from_json(_require(entry, "x", "ladder segment"), "ladder x")
            y = halfint_from_json(_require(entry, "y", "ladder segment"), "ladder y")
        else:
            if len(entry) != 2:
                raise SchemaError("ladder segment: expected a pair [x, y]")
            x = halfint_from_json(entry[0], "ladder x")
            y = halfint_from_json(entry[1], "ladder y")
        segments.append((x, y))
    return GLLadder(rho, tuple(segments))


def gl_combination_to_json(c: GLCombination) -> dict:
    return {
        "terms": [
            {"coefficient": coeff, "product": [segment_to_json(s) for s in product]}
            for product, coeff in c.terms
        ],
    }
