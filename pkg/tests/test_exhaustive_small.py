"""Exhaustive sweep over every small single-block datum.

The random corpus stays canonical by construction; this sweep enumerates
all valid (X, l, eta) over a small exponent window, including the formal
data whose middle contains -1/2, and pushes each one through every
operation.  Expectations on non-canonical data follow the documented
conventions: parses and duals land on canonical forms of the same
representation.
"""

import itertools

import pytest

from ladderrep import (
    DatumBlock,
    GroupKind,
    LadderDatum,
    build_graph,
    aubert_dual,
    canonical_form,
    derivative,
    determinantal_formula,
    enumerate_sigma,
    graph_to_datum,
    hi,
    is_canonical,
    jacquet_expansion,
    standard_module_of,
    supp_ladder,
    supp_standard_module,
    validate_datum,
)
from ladderrep.core import Parity

from helpers import HALF_LABEL, INT_LABEL


def _enumerate_small(parity, window, max_t=4):
    label = INT_LABEL if parity is Parity.INTEGRAL else HALF_LABEL
    values = [hi(s) for s in window]
    out = []
    for t in range(0, max_t + 1):
        for exps in itertools.combinations(values, t):
            for l in range(0, t // 2 + 1):
                for eta in (1, -1):
                    block = DatumBlock(label, exps, l, eta)
                    dim = block.dimension
                    group = GroupKind.SP if dim % 2 else GroupKind.SO_ODD
                    datum = LadderDatum.of(group, [block])
                    try:
                        validate_datum(datum)
                    except Exception:
                        continue
                    out.append(datum)
    return out


INTEGRAL_WINDOW = ["-4", "-3", "-2", "-1", "0", "1", "2", "3", "4"]
HALF_WINDOW = ["-7/2", "-5/2", "-3/2", "-1/2", "1/2", "3/2", "5/2", "7/2"]


@pytest.fixture(scope="module")
def small_data():
    data = _enumerate_small(Parity.INTEGRAL, INTEGRAL_WINDOW) + _enumerate_small(
        Parity.HALF_INTEGRAL, HALF_WINDOW
    )
    # duplicates cannot arise: (X, l, eta) determines the datum
    assert len(data) > 150
    assert any(not is_canonical(d) for d in data)
    return data


def test_graph_round_trip(small_data):
    # exact on every block whose rows are all non-empty (including the
    # formal data with a -1/2 middle exponent but intact rows); a block
    # with an empty central row parses to its reduced equivalent
    for d in small_data:
        for block in d.blocks:
            g = build_graph(block)
            parsed = graph_to_datum(g)
            if all(not row.is_empty for row in g.rows):
                assert parsed == block
            else:
                assert LadderDatum.of(d.group, [parsed]) == canonical_form(d)


def test_one_minimal_vertex_per_abscissa(small_data):
    for d in small_data:
        for block in d.blocks:
            g = build_graph(block)
            abscissas = [a for a, _ in g.minimal_vertices()]
            assert len(abscissas) == len(set(abscissas))
            zeros = sum(1 for v in g.vertices() if g.color(*v) == 0)
            assert zeros % 2 == 0


def test_support_routes_agree(small_data):
    for d in small_data:
        assert supp_ladder(d) == supp_standard_module(standard_module_of(d))


def test_duality_involution_up_to_canonical(small_data):
    for d in small_data:
        dual = aubert_dual(d)
        assert validate_datum(dual) == validate_datum(d)
        assert is_canonical(dual)
        assert aubert_dual(dual) == canonical_form(d)


def test_derivatives_lower_rank_and_square_to_zero(small_data):
    for d in small_data:
        n = validate_datum(d)
        for block in d.blocks:
            g = build_graph(block)
            for a, h in g.minimal_vertices():
                if g.color(a, h) != 0:
                    continue
                step = derivative(d, block.rho.id, a)
                assert step is not None
                assert validate_datum(step) == n - block.rho.d
                assert derivative(step, block.rho.id, a) is None


def test_formula_identity_and_rank(small_data):
    for d in small_data:
        n = validate_datum(d)
        element = determinantal_formula(d)
        assert element.coefficient(standard_module_of(d)) == 1
        for m, c in element.terms:
            assert m.rank == n
        assert len(enumerate_sigma(d)) >= 1


def test_jacquet_bookkeeping(small_data):
    for d in small_data:
        n = validate_datum(d)
        for block in d.blocks:
            terms = jacquet_expansion(d, block.rho.id)
            assert any(t.gl_size == 0 for t in terms)
            for term in terms:
                assert term.gl_size + validate_datum(term.datum) == n
