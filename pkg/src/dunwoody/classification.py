"""Genus-one quotients and the branched-covering structure of Dunwoody manifolds."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd

from .admissibility import AdmissibilityReport, is_admissible
from .diagram import (
    SLOT_NEXT,
    SLOT_PREV,
    SLOT_UPPER,
    UPPER,
    DiagramDefect,
    GluedDiagram,
    SixTuple,
    TracedCurves,
    build_diagram,
)
from .presentation import NotAdmissibleError, exponent_sum, extract_word

THREE_SPHERE = "S3"
S1_X_S2 = "S1xS2"
LENS = "Lens"
GENUS_N = "GenusN"


@dataclass(frozen=True)
class ManifoldClass:
    tag: str
    alpha: int | None = None
    beta: int | None = None
    genus: int | None = None

    def __post_init__(self):
        if self.tag == LENS:
            if self.alpha is None or self.beta is None or self.alpha <= 1:
                raise ValueError("a lens space needs alpha > 1 and beta")
            if not 0 < self.beta < self.alpha or gcd(self.alpha, self.beta) != 1:
                raise ValueError(f"invalid lens parameters ({self.alpha}, {self.beta})")
        elif self.tag == GENUS_N:
            if self.genus is None:
                raise ValueError("GenusN needs a genus")
        elif self.tag not in (THREE_SPHERE, S1_X_S2):
            raise ValueError(f"unknown manifold tag {self.tag!r}")

    @classmethod
    def lens(cls, alpha: int, beta: int) -> ManifoldClass:
        return cls(LENS, alpha, beta % alpha)

    def same_manifold(self, other: ManifoldClass) -> bool:
        """Equality with lens spaces compared up to homeomorphism."""
        if self.tag == LENS and other.tag == LENS:
            return lens_equivalent(self.alpha, self.beta, other.alpha, other.beta)
        return self == other

    def as_dict(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.tag == LENS:
            out.update(alpha=self.alpha, beta=self.beta)
        if self.tag == GENUS_N:
            out["genus"] = self.genus
        return out

    @classmethod
    def from_dict(cls, data: dict) -> ManifoldClass:
        return cls(data["tag"], data.get("alpha"), data.get("beta"), data.get("genus"))

    def __str__(self) -> str:
        if self.tag == LENS:
            return f"L({self.alpha},{self.beta})"
        if self.tag == GENUS_N:
            return f"genus-{self.genus} (unclassified)"
        return {THREE_SPHERE: "S^3", S1_X_S2: "S^1xS^2"}[self.tag]


def lens_equivalent(alpha1: int, beta1: int, alpha2: int, beta2: int) -> bool:
    """Classical classification: ``L(α,β) ≅ L(α,β')`` iff ``β' ≡ ±β^{±1} (mod α)``."""
    if alpha1 != alpha2:
        return False
    a = alpha1
    b1, b2 = beta1 % a, beta2 % a
    if gcd(a, b1) != 1 or gcd(a, b2) != 1:
        raise ValueError("lens parameters must be coprime")
    inv = pow(b1, -1, a)
    return b2 in {b1, -b1 % a, inv, -inv % a}


def _departures(curves: TracedCurves) -> set[int]:
    """Half-edges through which some D-curve leaves its vertex."""
    out = set()
    for cycle in curves.cycles:
        for st in cycle:
            out.add(4 * st.tail + (SLOT_UPPER if st.tail_side == UPPER else 3))
    return out


def _crossing_sign(h: int, diagram: GluedDiagram, departures: set[int]) -> int:
    """Contribution of crossing edge ``h`` from its left face to its right face."""
    if diagram.arc_of[h] == -1:
        return 0
    return 1 if h in departures else -1


def curve_c_intersection(diagram: GluedDiagram, curves: TracedCurves) -> int:
    """Algebraic intersection of C_1 with the D-system, via a pushoff of C_1.

    The pushoff runs through the faces on the upper side of C_1 and crosses
    every edge there clockwise, i.e. from the left to the right of its
    outward dart.  The face sequence is checked to close up.
    """
    d, rot, faces, alpha = diagram.d, diagram.rotation, diagram.faces, diagram.alpha
    departures = _departures(curves)
    total = 0
    first = current = None
    for label in range(1, d + 1):
        v = diagram.vertex(1, label)
        # upper-side half-edges run from NEXT to PREV counterclockwise
        upper_side = []
        h = rot[4 * v + SLOT_NEXT]
        while h != 4 * v + SLOT_PREV:
            upper_side.append(h)
            h = rot[h]
        for h in reversed(upper_side):
            if current is None:
                first = faces[alpha[h]]
            elif faces[alpha[h]] != current:
                raise DiagramDefect("pushoff of C_1 does not follow adjacent faces")
            current = faces[h]
            total += _crossing_sign(h, diagram, departures)
    if current != first:
        raise DiagramDefect("pushoff of C_1 does not close up")
    return total


def dual_curve_intersection(diagram: GluedDiagram, curves: TracedCurves) -> int:
    """Algebraic intersection with D of a closed curve meeting C exactly once.

    The curve crosses one C-arc and comes back through the faces without
    crossing C again (the complement of C is connected).
    """
    faces, alpha = diagram.faces, diagram.alpha
    departures = _departures(curves)
    h0 = 4 * diagram.vertex(1, 1) + SLOT_NEXT
    start, goal = faces[h0], faces[alpha[h0]]
    adjacency: dict[int, list[int]] = {}
    for h in range(len(alpha)):
        if not diagram.is_curve_edge(h):
            adjacency.setdefault(faces[alpha[h]], []).append(h)
    parent: dict[int, int | None] = {start: None}
    queue = deque([start])
    while queue and goal not in parent:
        f = queue.popleft()
        for h in adjacency.get(f, ()):
            g = faces[h]
            if g not in parent:
                parent[g] = h
                queue.append(g)
    if goal not in parent:
        raise DiagramDefect("the complement of C is disconnected")
    total = 0
    f = goal
    while parent[f] is not None:
        h = parent[f]
        total += _crossing_sign(h, diagram, departures)
        f = faces[alpha[h]]
    return total


def classify_genus_one(sigma1: SixTuple) -> ManifoldClass:
    """Classify ``M(a, b, c, 1, r, 0)``.

    ``α`` is ``|ε_w|``; for a lens space ``β`` is the intersection number of
    D with a curve dual to C, which fixes the slope of D on the torus.
    """
    if sigma1.n != 1:
        raise ValueError(f"expected a genus-one tuple, got n={sigma1.n}")
    diagram, curves = build_diagram(sigma1)
    word = extract_word(diagram, curves, sigma1)
    alpha = abs(exponent_sum(word))
    slope_alpha = abs(curve_c_intersection(diagram, curves))
    if slope_alpha != alpha:
        raise DiagramDefect(f"|C.D| = {slope_alpha} but |ε_w| = {alpha} for {sigma1}")
    if alpha == 0:
        return ManifoldClass(S1_X_S2)
    if alpha == 1:
        return ManifoldClass(THREE_SPHERE)
    # orient the dual curve so that M(0,0,c,1,r,0) reads as L(c, r)
    beta = -dual_curve_intersection(diagram, curves) % alpha
    if gcd(alpha, beta) != 1:
        raise DiagramDefect(f"slope ({alpha}, {beta}) of D is not primitive for {sigma1}")
    return ManifoldClass.lens(alpha, beta)


def classify(sigma: SixTuple) -> ManifoldClass:
    """Class of M(sigma) itself: only genus-one tuples are identified."""
    if sigma.n == 1:
        return classify_genus_one(sigma)
    if not is_admissible(sigma).admissible:
        raise NotAdmissibleError(f"{sigma} is not admissible")
    return ManifoldClass(GENUS_N, genus=sigma.n)


@dataclass(frozen=True)
class IntermediateQuotient:
    n: int
    sigma: SixTuple
    admissible: bool


@dataclass(frozen=True)
class CoveringReport:
    sigma: SixTuple
    quotient_tuple: SixTuple
    quotient_class: ManifoldClass
    fold_count: int
    branch_knot_id: tuple[int, int, int, int]
    p_sigma: int
    q_sigma: int
    intermediate_quotients: tuple[IntermediateQuotient, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "sigma": list(self.sigma.astuple()),
            "quotient_tuple": list(self.quotient_tuple.astuple()),
            "quotient_class": self.quotient_class.as_dict(),
            "fold_count": self.fold_count,
            "branch_knot_id": list(self.branch_knot_id),
            "p_sigma": self.p_sigma,
            "q_sigma": self.q_sigma,
            "intermediate_quotients": [
                {"n": iq.n, "sigma": list(iq.sigma.astuple()), "admissible": iq.admissible}
                for iq in self.intermediate_quotients
            ],
        }


def _require_admissible(sigma: SixTuple) -> AdmissibilityReport:
    report = is_admissible(sigma)
    if not report.admissible:
        raise NotAdmissibleError(f"{sigma} is not admissible")
    return report


def covering_report(sigma: SixTuple) -> CoveringReport:
    """M(sigma) as an n-fold cyclic cover of M(a, b, c, 1, r, 0)."""
    report = _require_admissible(sigma)
    quotient = sigma.quotient()
    quotient_class = classify_genus_one(quotient)
    intermediates = []
    for k in range(1, sigma.n + 1):
        if sigma.n % k == 0:
            sub = sigma.with_n(k, sigma.s)
            ok = is_admissible(sub).admissible
            if not ok:
                raise DiagramDefect(f"intermediate quotient {sub} of {sigma} is not admissible")
            intermediates.append(IntermediateQuotient(k, sub, ok))
    return CoveringReport(
        sigma=sigma,
        quotient_tuple=quotient,
        quotient_class=quotient_class,
        fold_count=sigma.n,
        branch_knot_id=(sigma.a, sigma.b, sigma.c, sigma.r),
        p_sigma=report.p_sigma,
        q_sigma=report.q_sigma,
        intermediate_quotients=tuple(intermediates),
    )


def auto_s(a: int, b: int, c: int, r: int) -> int:
    """``s = -p q`` computed on the genus-one tuple."""
    report = _require_admissible(SixTuple(a, b, c, 1, r, 0))
    return -report.p_sigma * report.q_sigma


def sphere_cover_family(a: int, b: int, c: int, r: int, n_max: int) -> list[CoveringReport]:
    """Reports for ``(a, b, c, n, r, -pq)``, n = 1..n_max, when the quotient has ``p = ±1``."""
    base = _require_admissible(SixTuple(a, b, c, 1, r, 0))
    if abs(base.p_sigma) != 1:
        raise ValueError(f"p = {base.p_sigma} for {base.sigma}; the family needs p = ±1")
    s = -base.p_sigma * base.q_sigma
    reports = [covering_report(SixTuple(a, b, c, n, r, s)) for n in range(1, n_max + 1)]
    for rep in reports:
        if rep.branch_knot_id != reports[0].branch_knot_id or rep.quotient_class.tag != THREE_SPHERE:
            raise DiagramDefect(f"family member {rep.sigma} is not a cover of S^3 over the same knot")
    return reports
