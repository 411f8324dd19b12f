"""Words and cyclic presentations read off admissible Dunwoody diagrams."""
from __future__ import annotations

from dataclasses import dataclass

from .admissibility import check_conditions
from .diagram import UPPER, GluedDiagram, SixTuple, Step, TracedCurves, build_diagram, wrap


class NotAdmissibleError(ValueError):
    pass


Letter = tuple[int, int]  # (generator index 1..n, exponent +1 / -1)


@dataclass(frozen=True)
class CyclicWord:
    letters: tuple[Letter, ...]
    n: int

    def __len__(self) -> int:
        return len(self.letters)

    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.letters)

    def shift(self, k: int) -> CyclicWord:
        """Apply the k-th power of the generator shift x_i -> x_{i+1}."""
        return CyclicWord(tuple((wrap(i + k, self.n), e) for i, e in self.letters), self.n)

    def to_text(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{i}" if e > 0 else f"X{i}" for i, e in self.letters)

    @classmethod
    def from_text(cls, text: str, n: int) -> CyclicWord:
        letters = []
        for token in text.split():
            if token == "1":
                continue
            if token[0] not in "xX" or not token[1:].isdigit():
                raise ValueError(f"bad letter {token!r}")
            i = int(token[1:])
            if not 1 <= i <= n:
                raise ValueError(f"generator index {i} out of range 1..{n}")
            letters.append((i, 1 if token[0] == "x" else -1))
        return cls(tuple(letters), n)

    def __str__(self) -> str:
        return self.to_text()


def exponent_sum(word: CyclicWord) -> int:
    return sum(e for _, e in word.letters)


def free_reduce(word: CyclicWord, *, cyclic: bool = True) -> CyclicWord:
    """Cancel adjacent inverse pairs (and, if ``cyclic``, across the ends)."""
    out: list[Letter] = []
    for i, e in word.letters:
        if out and out[-1] == (i, -e):
            out.pop()
        else:
            out.append((i, e))
    if cyclic:
        lo, hi = 0, len(out)
        while hi - lo >= 2 and out[lo] == (out[hi - 1][0], -out[hi - 1][1]):
            lo += 1
            hi -= 1
        out = out[lo:hi]
    return CyclicWord(tuple(out), word.n)


def read_curve(diagram: GluedDiagram, steps: tuple[Step, ...]) -> CyclicWord:
    """The word of a D-curve: one letter per arc, indexed by the curve C_i it leaves."""
    letters = tuple(
        (diagram.curve_index(st.tail), 1 if st.tail_side == UPPER else -1) for st in steps
    )
    return CyclicWord(letters, diagram.n)


def extract_word(diagram: GluedDiagram, curves: TracedCurves, sigma: SixTuple | None = None) -> CyclicWord:
    sigma = diagram.sigma if sigma is None else sigma
    report = check_conditions(diagram, curves)
    if not report.admissible:
        raise NotAdmissibleError(f"{sigma} is not admissible")
    return read_curve(diagram, curves.cycles[0])


@dataclass(frozen=True)
class CyclicPresentation:
    n: int
    base_word: CyclicWord

    @property
    def relators(self) -> tuple[CyclicWord, ...]:
        return tuple(self.base_word.shift(k) for k in range(self.n))

    def to_text(self) -> str:
        """One relator per line; ``x3`` is a generator and ``X3`` its inverse."""
        return "\n".join(rel.to_text() for rel in self.relators) + "\n"

    @classmethod
    def from_text(cls, text: str) -> CyclicPresentation:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        n = len(lines)
        pres = cls(n, CyclicWord.from_text(lines[0], n))
        if [r.to_text() for r in pres.relators] != [" ".join(ln.split()) for ln in lines]:
            raise ValueError("relators are not the cyclic shifts of the first line")
        return pres


def build_presentation(sigma: SixTuple) -> CyclicPresentation:
    """The geometric cyclic presentation of the fundamental group of M(sigma).

    Every relator is checked against the word read directly along the
    corresponding D-curve.
    """
    diagram, curves = build_diagram(sigma)
    word = extract_word(diagram, curves, sigma)
    pres = CyclicPresentation(sigma.n, word)
    start = curves.start_vertex
    by_start = {cycle[0].tail: cycle for cycle in curves.cycles}
    for k, relator in enumerate(pres.relators):
        cycle = by_start.get(diagram.shift_vertex(start, k))
        if cycle is None or read_curve(diagram, cycle) != relator:
            raise AssertionError(f"relator {k + 1} of {sigma} does not match D_{k + 1}")
    return pres
