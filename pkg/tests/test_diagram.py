import pytest
from hypothesis import given, settings

from dunwoody.diagram import (
    LOWER_HORIZONTAL,
    OBLIQUE,
    UPPER_HORIZONTAL,
    VERTICAL,
    SixTuple,
    apply_rho,
    build_diagram,
    build_open_graph,
    is_shift_automorphism,
)

from strategies import six_tuples


class TestSixTuple:
    def test_reduces_r_and_s(self):
        sigma = SixTuple(1, 0, 1, 3, 7, -1)
        assert (sigma.r, sigma.s) == (1, 2)
        assert (sigma.given_r, sigma.given_s) == (7, -1)
        assert sigma == SixTuple(1, 0, 1, 3, 1, 2)

    @pytest.mark.parametrize(
        "args",
        [(0, 0, 0, 1, 0, 0), (1, 0, 0, 0, 0, 0), (-1, 2, 0, 1, 0, 0), (1, 0, 0, 1, 1.5, 0), (1, 0, True, 1, 0, 0)],
    )
    def test_rejects_invalid(self, args):
        with pytest.raises((ValueError, TypeError)):
            SixTuple(*args)

    def test_parse_and_str(self):
        sigma = SixTuple.parse(" 1, 2,3,4 ,4,4")
        assert str(sigma) == "(1,2,3,4,4,0)"
        with pytest.raises(ValueError):
            SixTuple.parse("1,2,3")
        with pytest.raises(ValueError):
            SixTuple.parse("1,2,3,x,4,4")

    def test_quotient_and_with_n(self):
        sigma = SixTuple(1, 2, 3, 4, 4, 3)
        assert sigma.quotient() == SixTuple(1, 2, 3, 1, 4, 0)
        assert sigma.with_n(2) == SixTuple(1, 2, 3, 2, 4, 1)


def test_open_graph_band_counts():
    graph = build_open_graph(SixTuple(2, 1, 3, 2, 0, 0))
    counts = graph.band_counts(1)
    assert counts == {UPPER_HORIZONTAL: 2, LOWER_HORIZONTAL: 2, OBLIQUE: 1, VERTICAL: 3}
    assert len(graph.arcs) == 2 * 8


def test_small_diagram_counts():
    diagram, curves = build_diagram(SixTuple(0, 0, 1, 1, 0, 0))
    assert diagram.vertex_count == 1
    assert diagram.euler_characteristic == 0
    assert curves.m == 1


@settings(max_examples=150, deadline=None)
@given(six_tuples())
def test_euler_characteristic_is_genus_n(sigma):
    diagram, _ = build_diagram(sigma)
    assert diagram.euler_characteristic == 2 - 2 * sigma.n


@settings(max_examples=150, deadline=None)
@given(six_tuples())
def test_index_shift_preserves_everything(sigma):
    diagram, curves = build_diagram(sigma)
    assert is_shift_automorphism(diagram)
    arcs = set(curves.arc_sets())
    for k in range(sigma.n):
        assert set(apply_rho(diagram, curves, k).arc_sets()) == arcs


@settings(max_examples=100, deadline=None)
@given(six_tuples())
def test_every_arc_is_used_once(sigma):
    diagram, curves = build_diagram(sigma)
    used = [st.arc for cycle in curves.cycles for st in cycle]
    assert sorted(used) == list(range(sigma.n * sigma.d))


def test_first_curve_starts_at_reference_vertex():
    sigma = SixTuple(1, 2, 3, 3, 4, 4)
    diagram, curves = build_diagram(sigma)
    assert curves.cycles[0][0].tail == diagram.vertex(1, sigma.a + sigma.b + 1)


def test_apply_rho_rejects_bad_power():
    diagram, curves = build_diagram(SixTuple(1, 0, 1, 2, 1, 0))
    with pytest.raises(ValueError):
        apply_rho(diagram, curves, 2)


@pytest.mark.parametrize("a", range(1, 7))
def test_balanced_tuples_split_into_a_cycles(a):
    _, curves = build_diagram(SixTuple(a, 0, a, 1, a, 0))
    assert curves.m == a


def test_vertex_table_lists_every_vertex():
    diagram, _ = build_diagram(SixTuple(1, 1, 1, 2, 1, 1))
    table = diagram.vertex_table()
    assert len(table) == diagram.vertex_count == 2 * 4
