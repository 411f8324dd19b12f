from math import gcd

import pytest
from hypothesis import given, settings

from dunwoody.admissibility import (
    UnionFind,
    check_conditions,
    compute_pq,
    is_admissible,
)
from dunwoody.diagram import SixTuple, build_diagram

from strategies import six_tuples


@pytest.mark.parametrize(
    "sigma, admissible, m",
    [
        ((0, 0, 1, 1, 0, 0), True, 1),
        ((2, 0, 2, 1, 2, 0), False, 2),
        ((1, 0, 2, 1, 2, 0), False, 1),
        ((1, 0, 3, 1, 2, 0), True, 1),
        ((1, 2, 3, 4, 4, 4), True, 4),
        ((1, 3, 4, 5, 5, 5), True, 5),
    ],
)
def test_known_tuples(sigma, admissible, m):
    rep = is_admissible(SixTuple(*sigma))
    assert rep.admissible is admissible
    assert rep.m_cycles == m


def test_even_d_shortcut_fails():
    rep = is_admissible(SixTuple(1, 0, 2, 1, 2, 0))
    assert rep.cond_i_prime and rep.cond_ii_prime
    assert rep.cond1 and not rep.complement_connected
    assert not rep.admissible


@pytest.mark.parametrize("a", range(0, 6))
def test_two_bridge_quotients_have_p_one(a):
    d = 2 * a + 1
    for r in range(d):
        if gcd(d, 2 * r) == 1:
            rep = is_admissible(SixTuple(a, 0, 1, 1, r, 0))
            assert rep.admissible and rep.p_sigma == 1


def test_pq_undefined_without_full_label_set():
    diagram, curves = build_diagram(SixTuple(2, 0, 2, 1, 2, 0))
    rep = check_conditions(diagram, curves)
    assert not rep.cond_i_prime
    assert rep.p_sigma is None and rep.q_sigma is None
    with pytest.raises(ValueError):
        compute_pq(curves, 6, cond_i_prime=False)


def test_counts_add_up():
    rep = is_admissible(SixTuple(1, 2, 3, 1, 4, 0))
    assert rep.p_sigma == rep.p_prime - rep.p_double_prime
    assert rep.q_sigma == rep.q_prime - rep.q_double_prime


@settings(max_examples=200, deadline=None)
@given(six_tuples())
def test_report_is_self_consistent(sigma):
    # is_admissible runs the internal cross-checks and raises on any disagreement
    rep = is_admissible(sigma)
    if rep.cond_i_prime:
        assert (rep.p_sigma - sigma.b - sigma.c) % 2 == 0
        assert (rep.q_sigma - sigma.b) % 2 == 0


@settings(max_examples=100, deadline=None)
@given(six_tuples(max_n=6))
def test_divisor_quotients_stay_admissible(sigma):
    if is_admissible(sigma).admissible:
        for k in range(1, sigma.n + 1):
            if sigma.n % k == 0:
                assert is_admissible(sigma.with_n(k, sigma.s)).admissible


def test_union_find():
    uf = UnionFind(5)
    assert uf.union(0, 1) and uf.union(3, 4)
    assert not uf.union(1, 0)
    assert uf.components == 3
    assert uf.find(4) == uf.find(3) != uf.find(0)


def test_as_dict_is_plain():
    data = is_admissible(SixTuple(0, 0, 1, 1, 0, 0)).as_dict()
    assert data["sigma"] == [0, 0, 1, 1, 0, 0]
    assert data["admissible"] is True
