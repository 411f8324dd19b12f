"""Open Dunwoody graphs, the (r, s) gluing, and the traced curve systems.

Conventions used throughout the package:

* cycle indices ``i`` run over ``1..n`` and vertex labels over ``1..d``;
* ``"U"`` marks the upper cycle ``C'_i`` and ``"L"`` the lower cycle ``C''_i``;
* an *end* ``(side, i, label)`` is the endpoint of an A-arc on an open cycle;
* glued vertices are numbered ``(i - 1) * d + (label - 1)``.

At a glued vertex the four half-edges are stored in counterclockwise order
``C-next, A-upper, C-prev, A-lower`` (slots 0..3); half-edge ``h`` lives on
vertex ``h // 4`` in slot ``h % 4``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

UPPER = "U"
LOWER = "L"

UPPER_HORIZONTAL = "upper_horizontal"
LOWER_HORIZONTAL = "lower_horizontal"
OBLIQUE = "oblique"
VERTICAL = "vertical"

SLOT_NEXT, SLOT_UPPER, SLOT_PREV, SLOT_LOWER = range(4)


class DiagramDefect(RuntimeError):
    """An internal consistency check on a constructed diagram failed.

    This always signals a bug in the construction, never bad input.
    """


def wrap(x: int, m: int) -> int:
    """Representative of ``x`` modulo ``m`` in ``1..m``."""
    return (x - 1) % m + 1


@dataclass(frozen=True)
class SixTuple:
    """A Dunwoody parameter vector ``(a, b, c, n, r, s)``.

    ``r`` and ``s`` are reduced modulo ``d = 2a + b + c`` and ``n``; the values
    as given are kept in ``given_r`` / ``given_s`` for reporting.
    """

    a: int
    b: int
    c: int
    n: int
    r: int
    s: int
    given_r: int | None = field(default=None, compare=False, repr=False)
    given_s: int | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for name in ("a", "b", "c", "n", "r", "s"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an integer, got {value!r}")
        if self.n <= 0:
            raise ValueError(f"n must be positive, got n={self.n}")
        for name in ("a", "b", "c"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative, got {name}={getattr(self, name)}")
        if self.a + self.b + self.c == 0:
            raise ValueError("a + b + c must be positive")
        if self.given_r is None:
            object.__setattr__(self, "given_r", self.r)
        if self.given_s is None:
            object.__setattr__(self, "given_s", self.s)
        object.__setattr__(self, "r", self.r % self.d)
        object.__setattr__(self, "s", self.s % self.n)

    @property
    def d(self) -> int:
        return 2 * self.a + self.b + self.c

    def astuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.n, self.r, self.s)

    def with_n(self, n: int, s: int | None = None) -> SixTuple:
        return SixTuple(self.a, self.b, self.c, n, self.r, self.s if s is None else s)

    def quotient(self) -> SixTuple:
        """The genus-one tuple ``(a, b, c, 1, r, 0)``."""
        return SixTuple(self.a, self.b, self.c, 1, self.r, 0)

    @classmethod
    def parse(cls, text: str) -> SixTuple:
        parts = [p.strip() for p in text.replace(" ", ",").split(",") if p.strip()]
        if len(parts) != 6:
            raise ValueError(f"expected six comma-separated integers, got {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"expected six comma-separated integers, got {text!r}") from None
        return cls(*values)

    def __str__(self) -> str:
        return "({},{},{},{},{},{})".format(*self.astuple())


class BandArc(NamedTuple):
    """An arc of ``A``, oriented the way it was built (from ``source`` to ``target``).

    Horizontal and oblique arcs point from index ``i`` to ``i + 1``; vertical
    arcs point from ``C'_i`` down to ``C''_i``.
    """

    kind: str
    source: tuple[str, int, int]
    target: tuple[str, int, int]


@dataclass(frozen=True)
class OpenGraph:
    sigma: SixTuple
    arcs: tuple[BandArc, ...]
    # end -> (arc index, 0 for source / 1 for target)
    end_index: dict

    @property
    def n(self) -> int:
        return self.sigma.n

    @property
    def d(self) -> int:
        return self.sigma.d

    def band_counts(self, i: int = 1) -> dict[str, int]:
        counts = {UPPER_HORIZONTAL: 0, LOWER_HORIZONTAL: 0, OBLIQUE: 0, VERTICAL: 0}
        for arc in self.arcs:
            if arc.source[1] == i:
                counts[arc.kind] += 1
        return counts

    def cycle_slots(self, side: str, i: int) -> list[tuple[str, tuple[str, int, int]]]:
        """For each label ``1..d`` of a cycle, the band kind and far end of its arc."""
        out = []
        for label in range(1, self.d + 1):
            k, which = self.end_index[(side, i, label)]
            arc = self.arcs[k]
            out.append((arc.kind, arc.target if which == 0 else arc.source))
        return out


def build_open_graph(sigma: SixTuple) -> OpenGraph:
    """Lay out the planar trivalent graph for ``sigma``.

    Clockwise around ``C'_i`` from vertex 1 the arcs go: ``a`` horizontal to
    ``C'_{i+1}``, ``b`` oblique to ``C''_{i+1}``, ``c`` vertical to ``C''_i``
    and ``a`` horizontal from ``C'_{i-1}``.  Counterclockwise around ``C''_i``
    from vertex ``1 - r`` they go: ``a`` horizontal to ``C''_{i+1}``, ``c``
    vertical to ``C'_i``, ``b`` oblique to ``C'_{i-1}`` and ``a`` horizontal
    from ``C''_{i-1}``.  Parallel arcs between two cycles of the same row match
    labels in reverse order, arcs between the rows in the same order.
    """
    a, b, c, n, r = sigma.a, sigma.b, sigma.c, sigma.n, sigma.r
    d = sigma.d
    arcs: list[BandArc] = []
    for i in range(1, n + 1):
        nxt = wrap(i + 1, n)
        for k in range(1, a + 1):
            arcs.append(BandArc(UPPER_HORIZONTAL, (UPPER, i, k), (UPPER, nxt, d + 1 - k)))
        for k in range(1, b + 1):
            arcs.append(BandArc(OBLIQUE, (UPPER, i, a + k), (LOWER, nxt, wrap(a + c + k - r, d))))
        for k in range(1, c + 1):
            arcs.append(BandArc(VERTICAL, (UPPER, i, a + b + k), (LOWER, i, wrap(a + k - r, d))))
        for k in range(1, a + 1):
            arcs.append(
                BandArc(LOWER_HORIZONTAL, (LOWER, i, wrap(k - r, d)), (LOWER, nxt, wrap(d + 1 - k - r, d)))
            )
    end_index: dict = {}
    for idx, arc in enumerate(arcs):
        for which, end in enumerate((arc.source, arc.target)):
            if end in end_index:
                raise DiagramDefect(f"end {end} meets two arcs for {sigma}")
            end_index[end] = (idx, which)
    if len(end_index) != 2 * n * d:
        raise DiagramDefect(f"graph for {sigma} is not 3-regular")
    return OpenGraph(sigma, tuple(arcs), end_index)


@dataclass(frozen=True, eq=False)
class GluedDiagram:
    """The 4-valent graph Γ' on the genus-n surface, as a rotation system.

    ``alpha`` is the edge involution on half-edges and ``rotation`` the
    counterclockwise successor around each vertex.  Half-edges ``0..4V-1`` are
    the four slots of the glued vertices; any half-edges past that belong to
    phantom edges, which are added when the planar graph is disconnected so
    that every face is a disc.  Phantom edges are part of neither curve system.
    ``faces`` gives, for each half-edge ``h``, the face lying to the right of
    the dart from ``h`` towards ``alpha[h]``.
    """

    sigma: SixTuple
    graph: OpenGraph
    alpha: tuple[int, ...]
    rotation: tuple[int, ...]
    vertex_of: tuple[int, ...]
    arc_of: tuple[int, ...]  # A half-edge -> arc index, -1 otherwise
    source_he: tuple[int, ...]  # arc index -> half-edge at its built source
    faces: tuple[int, ...]
    face_count: int

    @property
    def n(self) -> int:
        return self.sigma.n

    @property
    def d(self) -> int:
        return self.sigma.d

    @property
    def vertex_count(self) -> int:
        return self.n * self.d

    @property
    def edge_count(self) -> int:
        return len(self.alpha) // 2

    @property
    def phantom_count(self) -> int:
        return (len(self.alpha) - 4 * self.vertex_count) // 2

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    def vertex(self, i: int, label: int) -> int:
        return (wrap(i, self.n) - 1) * self.d + wrap(label, self.d) - 1

    def curve_index(self, v: int) -> int:
        """Index ``i`` of the curve ``C_i`` through glued vertex ``v``."""
        return v // self.d + 1

    def label(self, v: int) -> int:
        return v % self.d + 1

    def is_curve_edge(self, h: int) -> bool:
        return h < 4 * self.vertex_count and h % 2 == 0

    def is_phantom(self, h: int) -> bool:
        return h >= 4 * self.vertex_count

    def shift_vertex(self, v: int, k: int = 1) -> int:
        return (v + k * self.d) % self.vertex_count

    def shift_halfedge(self, h: int, k: int = 1) -> int:
        nv4 = 4 * self.vertex_count
        if h < nv4:
            return 4 * self.shift_vertex(h // 4, k) + h % 4
        # phantom half-edges come in blocks of equal size per index
        block = (len(self.alpha) - nv4) // self.n
        return nv4 + (h - nv4 + k * block) % (len(self.alpha) - nv4)

    def shift_arc(self, arc: int, k: int = 1) -> int:
        return (arc + k * self.d) % (self.n * self.d)

    def vertex_table(self) -> list[dict]:
        rows = []
        for v in range(self.vertex_count):
            rows.append(
                {
                    "curve": self.curve_index(v),
                    "label": self.label(v),
                    "upper_arc": self.arc_of[4 * v + SLOT_UPPER],
                    "lower_arc": self.arc_of[4 * v + SLOT_LOWER],
                }
            )
        return rows


def _face_orbits(alpha: list[int], rotation: list[int]) -> tuple[list[int], int]:
    faces = [-1] * len(alpha)
    count = 0
    for start in range(len(alpha)):
        if faces[start] != -1:
            continue
        h = start
        while faces[h] == -1:
            faces[h] = count
            h = rotation[alpha[h]]
        count += 1
    return faces, count


def _planar_graph_connected(sigma: SixTuple) -> bool:
    a, b, c = sigma.a, sigma.b, sigma.c
    if a == 0:
        return b > 0 and c > 0
    return b + c > 0


def glue(graph: OpenGraph, sigma: SixTuple | None = None) -> GluedDiagram:
    """Identify ``C'_i`` with ``C''_{i-s}`` label by label."""
    sigma = graph.sigma if sigma is None else sigma
    if sigma != graph.sigma:
        raise DiagramDefect(f"graph was built for {graph.sigma}, not {sigma}")
    a, b, n, d, r, s = sigma.a, sigma.b, sigma.n, sigma.d, sigma.r, sigma.s
    nv = n * d
    alpha = [-1] * (4 * nv)
    arc_of = [-1] * (4 * nv)
    vertex_of = [h // 4 for h in range(4 * nv)]
    rotation = [(h & ~3) | ((h + 1) & 3) for h in range(4 * nv)]

    def vertex(i: int, label: int) -> int:
        return (wrap(i, n) - 1) * d + wrap(label, d) - 1

    for i in range(1, n + 1):
        for label in range(1, d + 1):
            here = vertex(i, label)
            there = vertex(i, label + 1)
            alpha[4 * here + SLOT_NEXT] = 4 * there + SLOT_PREV
            alpha[4 * there + SLOT_PREV] = 4 * here + SLOT_NEXT

    def halfedge(end):
        side, i, label = end
        if side == UPPER:
            return 4 * vertex(i, label) + SLOT_UPPER
        return 4 * vertex(i + s, label) + SLOT_LOWER

    source_he = []
    for idx, arc in enumerate(graph.arcs):
        h0, h1 = halfedge(arc.source), halfedge(arc.target)
        if alpha[h0] != -1 or alpha[h1] != -1:
            raise DiagramDefect(f"slot mismatch while gluing {sigma}")
        alpha[h0], alpha[h1] = h1, h0
        arc_of[h0] = arc_of[h1] = idx
        source_he.append(h0)
    if -1 in alpha:
        raise DiagramDefect(f"glued diagram for {sigma} has an unmatched half-edge")

    def insert_after(h: int, v: int) -> int:
        new = len(alpha)
        alpha.append(-1)
        arc_of.append(-1)
        vertex_of.append(v)
        rotation.append(rotation[h])
        rotation[h] = new
        return new

    def insert_before(h: int, v: int) -> int:
        pred = h
        while rotation[pred] != h:
            pred = rotation[pred]
        return insert_after(pred, v)

    if not _planar_graph_connected(sigma):
        for i in range(1, n + 1):
            if a == 0:
                # along the top of the upper row: gap (d, 1) of C'_i to gap (d, 1) of C'_{i+1}
                u = vertex(i, 1)
                w = vertex(i + 1, d)
                h0 = insert_after(4 * u + SLOT_UPPER, u)
                h1 = insert_before(4 * w + SLOT_UPPER, w)
            else:
                # between the rows: gap (a, a+1) of C'_i to gap (a-r, a+1-r) of C''_i
                u = vertex(i, a + b + 1)
                w = vertex(i + s, a + 1 - r)
                h0 = insert_after(4 * u + SLOT_UPPER, u)
                h1 = insert_before(4 * w + SLOT_LOWER, w)
            alpha[h0], alpha[h1] = h1, h0

    faces, face_count = _face_orbits(alpha, rotation)
    diagram = GluedDiagram(
        sigma,
        graph,
        tuple(alpha),
        tuple(rotation),
        tuple(vertex_of),
        tuple(arc_of),
        tuple(source_he),
        tuple(faces),
        face_count,
    )
    if diagram.euler_characteristic != 2 - 2 * n:
        raise DiagramDefect(
            f"Euler characteristic {diagram.euler_characteristic} != {2 - 2 * n} for {sigma}"
        )
    if n > 1 and not is_shift_automorphism(diagram):
        raise DiagramDefect(f"index shift is not an automorphism of the diagram for {sigma}")
    return diagram


def is_shift_automorphism(diagram: GluedDiagram) -> bool:
    """Whether the index shift commutes with the edge pairing and the rotation."""
    alpha, rotation, arc_of = diagram.alpha, diagram.rotation, diagram.arc_of
    shift = diagram.shift_halfedge
    for h in range(len(alpha)):
        g = shift(h)
        if alpha[g] != shift(alpha[h]) or rotation[g] != shift(rotation[h]):
            return False
        if diagram.vertex_of[g] != diagram.shift_vertex(diagram.vertex_of[h]):
            return False
        if arc_of[h] != -1 and arc_of[g] != diagram.shift_arc(arc_of[h]):
            return False
    return True


# Arc type tags.  Side type: I upper->lower, II lower->upper, III same side.
# Index type: I' index i -> i+1, II' i+1 -> i, III' vertical.
TYPE_I, TYPE_II, TYPE_III = "I", "II", "III"
TYPE_IP, TYPE_IIP, TYPE_IIIP = "I'", "II'", "III'"


class Step(NamedTuple):
    """One directed traversal of an A-arc along a D-curve."""

    arc: int
    forward: bool
    tail: int  # glued vertex the arc leaves
    tail_side: str
    head: int
    head_side: str

    @property
    def side_type(self) -> str:
        if self.tail_side == self.head_side:
            return TYPE_III
        return TYPE_I if self.tail_side == UPPER else TYPE_II


@dataclass(frozen=True)
class TracedCurves:
    cycles: tuple[tuple[Step, ...], ...]
    start_vertex: int
    index_types: dict  # (arc, forward) -> I' / II' / III'

    @property
    def m(self) -> int:
        return len(self.cycles)

    def arc_types(self, step: Step) -> tuple[str, str]:
        return step.side_type, self.index_types[(step.arc, step.forward)]

    def arc_sets(self) -> list[frozenset[int]]:
        return [frozenset(step.arc for step in cycle) for cycle in self.cycles]


def _index_type(kind: str, forward: bool) -> str:
    if kind == VERTICAL:
        return TYPE_IIIP
    return TYPE_IP if forward else TYPE_IIP


def _side(slot: int) -> str:
    return UPPER if slot == SLOT_UPPER else LOWER


def _walk(diagram: GluedDiagram, vertex: int, slot: int) -> list[Step]:
    """Follow a D-curve leaving ``vertex`` through its A half-edge in ``slot``."""
    alpha = diagram.alpha
    steps = []
    h = 4 * vertex + slot
    first = h
    while True:
        t = alpha[h]
        arc = diagram.arc_of[h]
        steps.append(Step(arc, diagram.source_he[arc] == h, h // 4, _side(h & 3), t // 4, _side(t & 3)))
        # cross C to the other A half-edge of the head vertex
        h = t ^ 2
        if h == first:
            return steps


def trace_d_cycles(diagram: GluedDiagram) -> TracedCurves:
    """Split the directed A-arcs into the closed curves ``D_1, ..., D_m``.

    ``D_1`` starts at the vertex of ``C_1`` labelled ``a + b + 1`` along its
    upper arc.  Images of already oriented curves under the index shift take
    the shifted orientation; any other leftover curve starts at its lowest
    vertex through the upper arc.
    """
    sigma = diagram.sigma
    n = sigma.n
    start = diagram.vertex(1, sigma.a + sigma.b + 1)
    seen = [False] * (n * sigma.d)
    cycles: list[tuple[Step, ...]] = []

    def take(v: int, slot: int) -> tuple[Step, ...] | None:
        if seen[diagram.arc_of[4 * v + slot]]:
            return None
        cycle = tuple(_walk(diagram, v, slot))
        for step in cycle:
            seen[step.arc] = True
        cycles.append(cycle)
        return cycle

    def take_orbit(v: int, slot: int) -> None:
        if take(v, slot) is None:
            return
        for k in range(1, n):
            take(diagram.shift_vertex(v, k), slot)

    take_orbit(start, SLOT_UPPER)
    for v in range(n * sigma.d):
        take_orbit(v, SLOT_UPPER)

    arcs = diagram.graph.arcs
    index_types = {}
    for idx, arc in enumerate(arcs):
        for forward in (True, False):
            index_types[(idx, forward)] = _index_type(arc.kind, forward)
    return TracedCurves(tuple(cycles), start, index_types)


def apply_rho(diagram: GluedDiagram, curves: TracedCurves, k: int) -> TracedCurves:
    """Image of every traced curve under the ``k``-th power of the index shift."""
    if not 0 <= k < diagram.n:
        raise ValueError(f"k must lie in [0, {diagram.n}), got {k}")
    if k == 0:
        return curves
    shifted = tuple(
        tuple(
            Step(
                diagram.shift_arc(st.arc, k),
                st.forward,
                diagram.shift_vertex(st.tail, k),
                st.tail_side,
                diagram.shift_vertex(st.head, k),
                st.head_side,
            )
            for st in cycle
        )
        for cycle in curves.cycles
    )
    return TracedCurves(shifted, diagram.shift_vertex(curves.start_vertex, k), curves.index_types)


def build_diagram(sigma: SixTuple) -> tuple[GluedDiagram, TracedCurves]:
    diagram = glue(build_open_graph(sigma), sigma)
    return diagram, trace_d_cycles(diagram)
