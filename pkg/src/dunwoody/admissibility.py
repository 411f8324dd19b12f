"""Admissibility of Dunwoody 6-tuples and the arc-type invariants p and q."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .diagram import (
    TYPE_I,
    TYPE_II,
    TYPE_IIP,
    TYPE_IP,
    GluedDiagram,
    SixTuple,
    TracedCurves,
    build_diagram,
)


class ConsistencyError(AssertionError):
    """A result that must hold for every tuple was contradicted by the computation."""


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size
        self.components = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        self.components -= 1
        return True


@dataclass(frozen=True)
class AdmissibilityReport:
    sigma: SixTuple
    m_cycles: int
    complement_connected: bool
    cond1: bool
    cond2: bool
    cond_i_prime: bool
    cond_ii_prime: bool
    p_sigma: int | None
    q_sigma: int | None
    p_prime: int | None
    p_double_prime: int | None
    q_prime: int | None
    q_double_prime: int | None

    @property
    def admissible(self) -> bool:
        return self.cond1 and self.cond2

    def as_dict(self) -> dict:
        out = asdict(self)
        out["sigma"] = list(self.sigma.astuple())
        out["admissible"] = self.admissible
        return out


def complement_components(diagram: GluedDiagram) -> int:
    """Number of pieces of the surface cut along all D-curves.

    Faces of Γ' are discs bounded by pieces of C, D and phantom edges;
    removing D leaves them glued to each other across every other edge.
    """
    uf = UnionFind(diagram.face_count)
    for h, arc in enumerate(diagram.arc_of):
        if arc == -1:
            uf.union(diagram.faces[h], diagram.faces[diagram.alpha[h]])
    return uf.components


def labels_on_first_cycle(diagram: GluedDiagram, curves: TracedCurves) -> list[int]:
    return [diagram.label(step.tail) for step in curves.cycles[0]]


def compute_pq(curves: TracedCurves, d: int, *, cond_i_prime: bool = True) -> tuple[int, int, tuple[int, int, int, int]]:
    """Signed arc-type counts over the first ``d`` arcs of ``D_1``.

    Returns ``(p, q, (p', p'', q', q''))``.  Raises ``ValueError`` when the
    label set of ``D_1`` is not all of ``1..d``, since the initial segment is
    then not defined.
    """
    if not cond_i_prime:
        raise ValueError("D_1 does not meet every label; p and q are undefined")
    first = curves.cycles[0][:d]
    if len(first) < d:
        raise ValueError("D_1 has fewer than d arcs; p and q are undefined")
    p1 = p2 = q1 = q2 = 0
    for step in first:
        side_type, index_type = curves.arc_types(step)
        p1 += side_type == TYPE_I
        p2 += side_type == TYPE_II
        q1 += index_type == TYPE_IP
        q2 += index_type == TYPE_IIP
    return p1 - p2, q1 - q2, (p1, p2, q1, q2)


def check_ii_prime_formula(sigma: SixTuple, p: int, q: int) -> bool:
    """Whether ``q + s*p`` vanishes mod ``n``, i.e. ``D_1`` closes after ``d`` arcs."""
    return (q + sigma.s * p) % sigma.n == 0


def check_conditions(diagram: GluedDiagram, curves: TracedCurves) -> AdmissibilityReport:
    sigma = diagram.sigma
    d = sigma.d
    labels = labels_on_first_cycle(diagram, curves)
    cond_i = set(labels) == set(range(1, d + 1))
    cond_ii = len(labels) == len(set(labels))
    connected = complement_components(diagram) == 1
    p = q = None
    counts: tuple = (None, None, None, None)
    if cond_i:
        p, q, counts = compute_pq(curves, d)
    return AdmissibilityReport(
        sigma=sigma,
        m_cycles=curves.m,
        complement_connected=connected,
        cond1=curves.m == sigma.n,
        cond2=connected,
        cond_i_prime=cond_i,
        cond_ii_prime=cond_ii,
        p_sigma=p,
        q_sigma=q,
        p_prime=counts[0],
        p_double_prime=counts[1],
        q_prime=counts[2],
        q_double_prime=counts[3],
    )


def assert_consistent(report: AdmissibilityReport) -> None:
    """Cross-check the report against the results that hold for every tuple."""
    sigma = report.sigma
    if report.admissible and not (report.cond_i_prime and report.cond_ii_prime):
        raise ConsistencyError(f"{sigma} is admissible but violates (i') or (ii')")
    if report.cond_i_prime:
        if report.cond_ii_prime != check_ii_prime_formula(sigma, report.p_sigma, report.q_sigma):
            raise ConsistencyError(f"closing formula disagrees with the label trace for {sigma}")
        if (report.p_sigma - sigma.b - sigma.c) % 2 or (report.q_sigma - sigma.b) % 2:
            raise ConsistencyError(f"parity of p or q is wrong for {sigma}")
    if sigma.d % 2 == 1:
        if report.admissible != (report.cond_i_prime and report.cond_ii_prime):
            raise ConsistencyError(f"odd-d criterion fails for {sigma}")
        if sigma.n == 1 and report.admissible != (report.m_cycles == 1):
            raise ConsistencyError(f"genus-one odd-d criterion fails for {sigma}")


def is_admissible(sigma: SixTuple) -> AdmissibilityReport:
    diagram, curves = build_diagram(sigma)
    report = check_conditions(diagram, curves)
    assert_consistent(report)
    return report
