"""Dunwoody Heegaard diagrams, their cyclic presentations and branched-covering structure."""
from .admissibility import AdmissibilityReport, is_admissible
from .classification import (
    CoveringReport,
    ManifoldClass,
    auto_s,
    classify,
    classify_genus_one,
    covering_report,
    lens_equivalent,
)
from .diagram import SixTuple, apply_rho, build_diagram
from .homology import INFINITE, AbelianGroup, first_homology, smith_normal_form
from .knots import (
    LaurentPoly,
    TwoBridgeKnot,
    alexander_torus,
    alexander_two_bridge,
    branched_cover_order,
)
from .presentation import CyclicPresentation, CyclicWord, build_presentation, exponent_sum

__all__ = [
    "AbelianGroup",
    "AdmissibilityReport",
    "CoveringReport",
    "CyclicPresentation",
    "CyclicWord",
    "INFINITE",
    "LaurentPoly",
    "ManifoldClass",
    "SixTuple",
    "TwoBridgeKnot",
    "alexander_torus",
    "alexander_two_bridge",
    "apply_rho",
    "auto_s",
    "branched_cover_order",
    "build_diagram",
    "build_presentation",
    "classify",
    "classify_genus_one",
    "covering_report",
    "exponent_sum",
    "first_homology",
    "is_admissible",
    "lens_equivalent",
    "smith_normal_form",
]
