import pytest

from dunwoody.classification import (
    GENUS_N,
    LENS,
    S1_X_S2,
    THREE_SPHERE,
    ManifoldClass,
    auto_s,
    classify,
    classify_genus_one,
    sphere_cover_family,
    covering_report,
    lens_equivalent,
)
from dunwoody.diagram import SixTuple
from dunwoody.presentation import NotAdmissibleError


@pytest.mark.parametrize(
    "a1, b1, a2, b2, same",
    [
        (5, 2, 5, 3, True),
        (5, 2, 5, 1, False),
        (7, 2, 7, 4, True),
        (7, 2, 7, 3, True),
        (7, 1, 7, 2, False),
        (5, 2, 7, 2, False),
    ],
)
def test_lens_equivalence(a1, b1, a2, b2, same):
    assert lens_equivalent(a1, b1, a2, b2) is same


def test_lens_equivalence_needs_coprime():
    with pytest.raises(ValueError):
        lens_equivalent(6, 2, 6, 4)


class TestManifoldClass:
    def test_validation(self):
        with pytest.raises(ValueError):
            ManifoldClass(LENS, 1, 0)
        with pytest.raises(ValueError):
            ManifoldClass(LENS, 6, 4)
        with pytest.raises(ValueError):
            ManifoldClass(GENUS_N)
        with pytest.raises(ValueError):
            ManifoldClass("torus")

    def test_round_trip_and_str(self):
        for cls in (ManifoldClass(THREE_SPHERE), ManifoldClass(S1_X_S2), ManifoldClass.lens(7, 9), ManifoldClass(GENUS_N, genus=3)):
            assert ManifoldClass.from_dict(cls.as_dict()) == cls
        assert str(ManifoldClass.lens(7, 9)) == "L(7,2)"
        assert ManifoldClass.lens(5, 2).same_manifold(ManifoldClass.lens(5, 3))


@pytest.mark.parametrize(
    "sigma, expected",
    [
        ((0, 0, 1, 1, 0, 0), ManifoldClass(THREE_SPHERE)),
        ((1, 0, 0, 1, 1, 0), ManifoldClass(S1_X_S2)),
        ((0, 0, 5, 1, 2, 0), ManifoldClass.lens(5, 2)),
        ((0, 0, 7, 1, 3, 0), ManifoldClass.lens(7, 3)),
        ((1, 2, 3, 1, 4, 0), ManifoldClass(THREE_SPHERE)),
    ],
)
def test_genus_one_classes(sigma, expected):
    assert classify_genus_one(SixTuple(*sigma)) == expected


def test_classify_higher_genus():
    assert classify(SixTuple(1, 2, 3, 4, 4, 4)) == ManifoldClass(GENUS_N, genus=4)
    with pytest.raises(NotAdmissibleError):
        classify(SixTuple(2, 0, 2, 3, 2, 0))
    with pytest.raises(ValueError):
        classify_genus_one(SixTuple(1, 2, 3, 4, 4, 4))


def test_covering_report_for_trefoil_triple_cover():
    s = auto_s(1, 0, 1, 1)
    rep = covering_report(SixTuple(1, 0, 1, 3, 1, s))
    assert rep.quotient_class == ManifoldClass(THREE_SPHERE)
    assert rep.fold_count == 3
    assert rep.branch_knot_id == (1, 0, 1, 1)
    assert [iq.n for iq in rep.intermediate_quotients] == [1, 3]
    assert all(iq.admissible for iq in rep.intermediate_quotients)
    assert rep.as_dict()["quotient_class"] == {"tag": THREE_SPHERE}


def test_intermediate_quotients_of_composite_n():
    rep = covering_report(SixTuple(1, 2, 3, 6, 4, 4))
    assert [iq.sigma.astuple() for iq in rep.intermediate_quotients] == [
        (1, 2, 3, 1, 4, 0),
        (1, 2, 3, 2, 4, 0),
        (1, 2, 3, 3, 4, 1),
        (1, 2, 3, 6, 4, 4),
    ]


def test_auto_s_matches_torus_families():
    assert auto_s(1, 2, 3, 4) == 4
    assert auto_s(1, 3, 4, 5) == 5
    with pytest.raises(NotAdmissibleError):
        auto_s(2, 0, 2, 2)


def test_sphere_cover_family():
    reports = sphere_cover_family(1, 2, 3, 4, 5)
    assert [r.sigma.n for r in reports] == [1, 2, 3, 4, 5]
    assert {r.branch_knot_id for r in reports} == {(1, 2, 3, 4)}
    with pytest.raises(ValueError):
        sphere_cover_family(0, 0, 5, 2, 3)


def test_two_bridge_quotient_is_the_sphere():
    # the genus-one member is S^3; the lens space L(2a+1, 2r) appears at n = 2
    for a, r in ((1, 1), (2, 1), (3, 2)):
        assert classify_genus_one(SixTuple(a, 0, 1, 1, r, 0)).tag == THREE_SPHERE
