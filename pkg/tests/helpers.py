"""Shared test utilities: compact builders, golden-file loading, and a
deterministic generator of random valid ladder data."""

from __future__ import annotations

import json
import random
from pathlib import Path

from ladderrep import (
    CuspidalLabel,
    DatumBlock,
    GroupKind,
    LadderDatum,
    Parity,
    StandardModule,
    TemperedParam,
    TemperedPiece,
    Segment,
    hi,
    is_zero,
    make_standard_module,
    validate_datum,
)

GOLDEN_DIR = Path(__file__).parent / "golden"

INT_LABEL = CuspidalLabel("1", 1, Parity.INTEGRAL)
HALF_LABEL = CuspidalLabel("1", 1, Parity.HALF_INTEGRAL)


def unipotent(exponents, l, eta, group=None, parity=None):
    """Single-block datum over the trivial GL(1) label."""
    exps = tuple(hi(s) if isinstance(s, str) else hi(str(s)) for s in exponents)
    if parity is None:
        parity = Parity.INTEGRAL if (not exps or exps[0].is_integer) else Parity.HALF_INTEGRAL
    label = CuspidalLabel("1", 1, parity)
    block = DatumBlock(label, exps, l, eta)
    if group is None:
        group = GroupKind.SP if block.dimension % 2 else GroupKind.SO_ODD
    return LadderDatum.of(group, [block])


def module(group, rho, segs, temp) -> StandardModule:
    """Build a standard module from compact (x, y) and (exponent, sign) lists."""
    segments = [Segment(rho, hi(str(x)), hi(str(y))) for x, y in segs]
    pieces = tuple(TemperedPiece(rho, hi(str(e)).twice + 1, s) for e, s in temp)
    result = make_standard_module(segments, TemperedParam(group, pieces))
    assert not is_zero(result)
    return result


def load_golden(name: str) -> dict:
    with open(GOLDEN_DIR / name, "r", encoding="utf-8") as handle:
        return json.load(handle)


def golden_datum(data: dict) -> LadderDatum:
    group = GroupKind.SP if data["group"] == "Sp" else GroupKind.SO_ODD
    parity = Parity(data["rho"]["parity"])
    rho = CuspidalLabel(data["rho"]["id"], data["rho"]["d"], parity)
    block = DatumBlock(
        rho, tuple(hi(s) for s in data["datum"]["X"]), data["datum"]["l"], data["datum"]["eta"]
    )
    return LadderDatum.of(group, [block])


def golden_module(data: dict, group: GroupKind, rho: CuspidalLabel) -> StandardModule:
    return module(group, rho, [tuple(p) for p in data["segs"]], [tuple(p) for p in data["temp"]])


# ---------------------------------------------------------------------------
# random valid data


LABEL_POOL = (
    CuspidalLabel("a", 1, Parity.INTEGRAL),
    CuspidalLabel("b", 1, Parity.HALF_INTEGRAL),
    CuspidalLabel("c", 2, Parity.INTEGRAL),
    CuspidalLabel("d", 2, Parity.HALF_INTEGRAL),
)


def _random_block(rng: random.Random, label: CuspidalLabel, max_t: int) -> DatumBlock:
    """One valid block; middle exponents avoid -1/2 so the block is canonical."""
    integral = label.parity is Parity.INTEGRAL
    base = 0 if integral else 1  # twice of the smallest allowed middle exponent
    t = rng.randint(1, max_t)
    l = rng.randint(0, t // 2)
    mid_count = t - 2 * l
    mids: list[int] = []
    cursor = base + 2 * rng.randint(0, 2)
    for _ in range(mid_count):
        mids.append(cursor)
        cursor += 2 * rng.randint(1, 2)
    lows: list[int] = []
    highs: list[int] = []
    prev_low = mids[0] if mids else None
    prev_high = mids[-1] if mids else None
    for _ in range(l):
        floor = prev_high if prev_high is not None else base - 2
        high = floor + 2 * rng.randint(1, 2)
        high = max(high, 2 if integral else 1)  # highs are strictly positive
        if prev_low is not None:
            high = max(high, 2 - prev_low)  # keep the low range non-empty
        low_hi = (prev_low if prev_low is not None else high) - 2
        low = rng.randrange(-high, low_hi + 2, 2)
        lows.insert(0, low)
        highs.append(high)
        prev_low, prev_high = low, high
    exps = tuple(hi(f"{v}/2") if v % 2 else hi(str(v // 2)) for v in lows + mids + highs)
    if 2 * l == t:
        eta = -1
    else:
        eta = rng.choice((1, -1))
    return DatumBlock(label, exps, l, eta)


def random_datum(rng: random.Random, max_blocks: int = 2, max_t: int = 5) -> LadderDatum:
    """A random valid datum in canonical form; group follows the dimension."""
    while True:
        count = 1 if max_blocks == 1 or rng.random() < 0.75 else 2
        labels = rng.sample(LABEL_POOL, count)
        blocks = [_random_block(rng, lab, max_t) for lab in labels]
        sign = 1
        for b in blocks:
            sign *= (-1) ** (b.t // 2 + b.l) * b.eta**b.t
        if sign != 1:
            # flipping eta changes the product only for odd t with free eta
            flippable = [
                i for i, b in enumerate(blocks) if b.t % 2 and 2 * b.l != b.t
            ]
            if not flippable:
                continue
            b = blocks[flippable[0]]
            blocks[flippable[0]] = DatumBlock(b.rho, b.exponents, b.l, -b.eta)
        total = sum(b.dimension for b in blocks)
        group = GroupKind.SP if total % 2 else GroupKind.SO_ODD
        datum = LadderDatum.of(group, blocks)
        try:
            validate_datum(datum)
        except Exception:
            continue
        return datum


def build_corpus(seed: int = 20260808, size: int = 240, **kwargs) -> list[LadderDatum]:
    rng = random.Random(seed)
    return [random_datum(rng, **kwargs) for _ in range(size)]
