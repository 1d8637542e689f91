"""The colored ladder graph of a datum block and everything it computes.

Each block unfolds into a grid of vertices: one row per exponent, the row
for the pair (x_j, x_{t-j+1}) running from x_j on the right down to
-x_{t-j+1} on the left.  Arrows run leftward within a row and down-right
between consecutive rows, and a central band of rows carries alternating
+/- colors; everything outside the band is uncolored.  Derivatives live at
uncolored minimal vertices, the supercuspidal core is the colored part, the
full Jacquet expansion enumerates admissible exponent drops, and duality
reflects the grid through the line swap x+y <-> y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .core import CuspidalLabel, HalfInt, LadderError, Parity, Segment
from .datum import (
    DatumBlock,
    LadderDatum,
    canonical_form,
    validate_datum,
)
from .support import SupportMultiset

Vertex = tuple[HalfInt, int]  # (abscissa, height)


class GraphParseError(LadderError):
    """A colored vertex set that is not the graph of any block."""


@dataclass(frozen=True)
class GraphRow:
    """Row at canonical index i (height -i), spanning right down to left.

    The row is empty when right < left, which happens exactly for the formal
    central row of a block whose middle contains the exponent -1/2.
    """

    index: int
    right: HalfInt
    left: HalfInt

    @property
    def height(self) -> int:
        return -self.index

    @property
    def is_empty(self) -> bool:
        return self.right < self.left

    def abscissas(self) -> Iterator[HalfInt]:
        v = self.right
        while not v < self.left:
            yield v
            v = v - 1


@dataclass(frozen=True)
class LadderGraph:
    rho: CuspidalLabel
    t: int
    l: int
    eta: int
    rows: tuple[GraphRow, ...]

    def vertices(self) -> Iterator[Vertex]:
        for row in self.rows:
            for a in row.abscissas():
                yield (a, row.height)

    def has_vertex(self, a: HalfInt, h: int) -> bool:
        for row in self.rows:
            if row.height == h:
                return not (a < row.left or row.right < a)
        return False

    def color(self, a: HalfInt, h: int) -> int:
        """The coloring value in {-1, 0, +1} at an existing vertex."""
        i = -h
        band = self.t - 2 * self.l - 1
        if not 0 <= i <= band:
            return 0
        if self.rho.parity is Parity.INTEGRAL:
            j = a.twice // 2
            if not i - band <= j <= i:
                return 0
        else:
            j = (a.twice + self.eta) // 2
            if not i - band + self.eta <= j <= i:
                return 0
        return (-1) ** (j % 2) * self.eta

    def colored_map(self) -> dict[Vertex, int]:
        return {(a, h): self.color(a, h) for a, h in self.vertices()}

    @property
    def m(self) -> int:
        uncolored = sum(1 for a, h in self.vertices() if self.color(a, h) == 0)
        assert uncolored % 2 == 0
        return uncolored // 2

    def is_minimal(self, a: HalfInt, h: int) -> bool:
        """No predecessor: nothing to the right in the row, nothing up-left."""
        return not self.has_vertex(a + 1, h) and not self.has_vertex(a - 1, h + 1)

    def minimal_vertices(self) -> list[Vertex]:
        return [(a, h) for a, h in self.vertices() if self.is_minimal(a, h)]

    def partner(self, a: HalfInt, h: int) -> Vertex:
        """The reflection pairing uncolored vertices across the band center."""
        return (-a, -(self.t - 2 * self.l - 1) - h)

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        """All precedence pairs u -> v, horizontal then diagonal."""
        out: list[tuple[Vertex, Vertex]] = []
        for a, h in self.vertices():
            if self.has_vertex(a - 1, h):
                out.append(((a, h), (a - 1, h)))
            if self.has_vertex(a + 1, h - 1):
                out.append(((a, h), (a + 1, h - 1)))
        return out


def build_graph(block: DatumBlock) -> LadderGraph:
    """Unfold a validated block into its colored graph."""
    t, l = block.t, block.l
    rows = tuple(
        GraphRow(i, block.x(l + 1 + i), -block.x(t - l - i)) for i in range(-l, t - l)
    )
    return LadderGraph(block.rho, t, l, block.eta, rows)


def _group_rows(colored: Mapping[Vertex, int]) -> list[tuple[int, list[HalfInt]]]:
    by_height: dict[int, list[HalfInt]] = {}
    for (a, h), _ in colored.items():
        by_height.setdefault(h, []).append(a)
    rows = []
    for h in sorted(by_height, reverse=True):
        xs = sorted(by_height[h], key=lambda v: v.twice)
        for lo, hi_ in zip(xs, xs[1:]):
            if hi_.twice - lo.twice != 2:
                raise GraphParseError(f"row at height {h} is not a contiguous interval")
        rows.append((h, xs))
    return rows


def parse_colored_vertices(
    rho: CuspidalLabel, colored: Mapping[Vertex, int]
) -> DatumBlock:
    """Reconstruct the (X, l, eta) block from a colored vertex set.

    Heights matter only through the top-to-bottom order of the rows, so any
    translate (and any gap left by removing a whole row) parses identically;
    the result is therefore always in canonical form.
    """
    if not colored:
        return DatumBlock(rho, (), 0, 1)
    for (a, _h) in colored:
        if not rho.parity.matches(a):
            raise GraphParseError(f"abscissa {a} outside the parity class of {rho.id!r}")
    rows = _group_rows(colored)
    t = len(rows)
    colored_rows = [
        pos
        for pos, (h, xs) in enumerate(rows)
        if any(colored[(a, h)] != 0 for a in xs)
    ]
    integral = rho.parity is Parity.INTEGRAL

    if not colored_rows:
        if t % 2 == 0:
            l, eta = t // 2, -1
        else:
            if integral:
                raise GraphParseError("odd colorless graph is impossible for an integral label")
            l, eta = (t - 1) // 2, 1
    else:
        c = len(colored_rows)
        if colored_rows != list(range(colored_rows[0], colored_rows[0] + c)):
            raise GraphParseError("colored rows are not contiguous")
        if (t - c) % 2 != 0:
            raise GraphParseError("colored band size does not fit any pairing count")
        l = (t - c) // 2
        if colored_rows[0] != l:
            raise GraphParseError("colored band is not centered")
        top_h, top_xs = rows[l]
        top_colored = [a for a in top_xs if colored[(a, top_h)] != 0]
        a_max = top_colored[-1]
        if integral:
            if a_max.twice != 0:
                raise GraphParseError("band corner is misplaced for an integral label")
            eta = colored[(a_max, top_h)]
        else:
            eta = -a_max.twice
            if eta not in (1, -1):
                raise GraphParseError("band corner is misplaced for a half-integral label")

    exponents = tuple(xs[-1] for _h, xs in rows)
    for lo, hi_ in zip(exponents, exponents[1:]):
        if not lo < hi_:
            raise GraphParseError("row right endpoints do not strictly increase")
    block = DatumBlock(rho, exponents, l, eta)

    expected = build_graph(block)
    expected_rows = [r for r in expected.rows if not r.is_empty]
    if len(expected_rows) != t:
        raise GraphParseError("vertex set does not match the reconstructed block")
    for (h, xs), row in zip(rows, expected_rows):
        if xs[0] != row.left or xs[-1] != row.right:
            raise GraphParseError(
                f"row endpoints [{xs[0]}, {xs[-1]}] do not match the reconstructed block"
            )
        for a in xs:
            if colored[(a, h)] != expected.color(a, row.height):
                raise GraphParseError(f"coloring at abscissa {a} is inconsistent")
    return block


def graph_to_datum(g: LadderGraph) -> DatumBlock:
    """Inverse of :func:`build_graph` (up to canonical form on degenerate data)."""
    return parse_colored_vertices(g.rho, g.colored_map())


# ---------------------------------------------------------------------------
# derivatives and supports


def derivative(d: LadderDatum, rho_id: str, x: HalfInt) -> LadderDatum | None:
    """The leading Jacquet coefficient at the twist x of the given label.

    Returns None (the zero representation) unless the block graph has an
    uncolored minimal vertex at abscissa x; otherwise that vertex and its
    reflection partner are removed and the datum is rebuilt from what is
    left.  A label absent from the datum has an empty graph, so its
    derivative is zero.
    """
    if not d.has_block(rho_id):
        return None
    block = d.block(rho_id)
    g = build_graph(block)
    hits = [
        (a, h)
        for a, h in g.minimal_vertices()
        if a == x and g.color(a, h) == 0
    ]
    if not hits:
        return None
    assert len(hits) == 1, "at most one minimal vertex per abscissa"
    v = hits[0]
    p = g.partner(*v)
    assert p != v and g.has_vertex(*p) and g.color(*p) == 0
    colored = g.colored_map()
    del colored[v]
    del colored[p]
    new_block = parse_colored_vertices(block.rho, colored)
    result = d.replace_block(rho_id, new_block)
    validate_datum(result)
    return result


def is_supercuspidal(d: LadderDatum) -> bool:
    return all(build_graph(b).m == 0 for b in d.blocks)


def _first_removable(d: LadderDatum) -> tuple[str, HalfInt] | None:
    for b in d.blocks:
        g = build_graph(b)
        for a, h in g.minimal_vertices():
            if g.color(a, h) == 0:
                return (b.rho.id, a)
    return None


def supp_ladder(d: LadderDatum) -> SupportMultiset:
    """Cuspidal support: uncolored abscissas plus the colored core.

    Removing an uncolored minimal vertex contributes its abscissa and the
    partner's, and the partner involution pairs up the uncolored vertices,
    so the accumulated exponents are exactly the uncolored abscissas and the
    core is the colored part of each graph.  The step-by-step derivative
    route is :func:`supp_ladder_by_derivatives`, kept as a cross-check.
    """
    validate_datum(d)
    exponents: dict[CuspidalLabel, list[HalfInt]] = {}
    core_blocks = []
    for b in d.blocks:
        g = build_graph(b)
        colored: dict[Vertex, int] = {}
        removed: list[HalfInt] = []
        for v, c in g.colored_map().items():
            if c == 0:
                removed.append(v[0])
            else:
                colored[v] = c
        if removed:
            exponents[b.rho] = removed
        if colored:
            core_blocks.append(parse_colored_vertices(b.rho, colored))
    core = LadderDatum.of(d.group, core_blocks)
    validate_datum(core)
    return SupportMultiset.of(exponents, core)


def supp_ladder_by_derivatives(d: LadderDatum) -> SupportMultiset:
    """Cuspidal support by repeated derivatives down to the colored core."""
    validate_datum(d)
    exponents: dict[CuspidalLabel, list[HalfInt]] = {}
    current = d
    while True:
        pick = _first_removable(current)
        if pick is None:
            break
        rho_id, x = pick
        rho = current.block(rho_id).rho
        exponents.setdefault(rho, []).extend([x, -x])
        step = derivative(current, rho_id, x)
        assert step is not None
        current = step
    assert is_supercuspidal(current)
    return SupportMultiset.of(exponents, current)


# ---------------------------------------------------------------------------
# full Jacquet expansion


@dataclass(frozen=True)
class JacquetTerm:
    """One summand: a GL ladder tensored against a smaller ladder datum."""

    gl_segments: tuple[Segment, ...]
    datum: LadderDatum
    multiplicity: int

    @property
    def gl_size(self) -> int:
        return sum(s.rho.d * s.length for s in self.gl_segments)


def _jacquet_tuples(block: DatumBlock) -> Iterator[tuple[HalfInt, ...]]:
    t, l = block.t, block.l
    integral = block.rho.parity is Parity.INTEGRAL
    chosen: list[HalfInt] = []

    def bounds(i: int) -> tuple[int, int]:
        lo = -block.x(t - i + 1).twice - 2
        hi_ = block.x(i).twice
        if l + 1 <= i <= t - l:
            mid = 2 * (i - l - 1) if integral else 2 * (i - l - 1) - block.eta
            lo = max(lo, mid)
        if i > t - l:
            lo = max(lo, -2 - chosen[t - i].twice)
        if chosen:
            lo = max(lo, chosen[-1].twice + 2)
        return lo, hi_

    def rec(i: int) -> Iterator[tuple[HalfInt, ...]]:
        if i > t:
            yield tuple(chosen)
            return
        lo, hi_ = bounds(i)
        start = lo if (lo - block.x(i).twice) % 2 == 0 else lo + 1
        for tw in range(start, hi_ + 1, 2):
            chosen.append(HalfInt(tw))
            yield from rec(i + 1)
            chosen.pop()

    yield from rec(1)


def _jacquet_block(block: DatumBlock, ys: tuple[HalfInt, ...]) -> DatumBlock:
    t, l = block.t, block.l
    kept = [ys[i - 1] for i in range(1, t + 1) if ys[i - 1].twice + ys[t - i].twice >= 0]
    drops = sum(1 for i in range(1, l + 1) if ys[i - 1].twice + ys[t - i].twice == -2)
    new_l = l - drops
    if not kept:
        eta = 1
    elif 2 * new_l == len(kept):
        eta = -1
    else:
        eta = block.eta
    return DatumBlock(block.rho, tuple(kept), new_l, eta)


def jacquet_expansion(
    d: LadderDatum, rho_id: str, merged: bool = True
) -> list[JacquetTerm]:
    """All Jacquet summands supported on twists of one label.

    Each admissible exponent drop y of the block produces a GL ladder (the
    segments [x_i, y_i + 1], unit factors omitted) tensored with the datum
    whose block keeps the exponents with non-negative partner sum.  Terms
    are merged into multiplicities unless ``merged`` is false, and sorted by
    GL size, then canonically.
    """
    validate_datum(d)
    block = d.block(rho_id)
    t = block.t
    terms: list[JacquetTerm] = []
    for ys in _jacquet_tuples(block):
        segs = tuple(
            Segment(block.rho, block.x(i), ys[i - 1] + 1)
            for i in range(1, t + 1)
            if ys[i - 1] < block.x(i)
        )
        rest = d.replace_block(rho_id, _jacquet_block(block, ys))
        validate_datum(rest)
        terms.append(JacquetTerm(segs, rest, 1))
    if merged:
        acc: dict[tuple, JacquetTerm] = {}
        for term in terms:
            key = (term.gl_segments, term.datum)
            if key in acc:
                old = acc[key]
                acc[key] = JacquetTerm(old.gl_segments, old.datum, old.multiplicity + 1)
            else:
                acc[key] = term
        terms = list(acc.values())
    terms.sort(
        key=lambda tm: (
            tm.gl_size,
            tuple(s.sort_key() for s in tm.gl_segments),
            tm.datum.sort_key(),
        )
    )
    return terms


# ---------------------------------------------------------------------------
# duality


def aubert_dual(d: LadderDatum) -> LadderDatum:
    """The involution swapping horizontal and diagonal arrows, per block.

    Integral labels reflect through (x, y) -> (-x, x+y) with colors kept;
    half-integral labels shift the reflection by eta/2 and flip colors.  The
    image is parsed back into a block, and the result is returned in
    canonical form, which makes supercuspidal data honest fixed points.
    """
    validate_datum(d)
    blocks = []
    for b in d.blocks:
        g = build_graph(b)
        integral = b.rho.parity is Parity.INTEGRAL
        mapped: dict[Vertex, int] = {}
        for (a, h), color in g.colored_map().items():
            if integral:
                image = (-a, (a.twice + 2 * h) // 2)
                mapped[image] = color
            else:
                image = (-a, (a.twice + 2 * h + b.eta) // 2)
                mapped[image] = -color
        blocks.append(parse_colored_vertices(b.rho, mapped))
    result = canonical_form(LadderDatum.of(d.group, blocks))
    validate_datum(result)
    return result
