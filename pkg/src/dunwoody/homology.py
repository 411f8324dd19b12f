"""First homology of Dunwoody manifolds via exact Smith normal form."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .presentation import CyclicPresentation, build_presentation


class _Infinite:
    """Order of an infinite group."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __str__(self) -> str:
        return "infinite"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def relation_matrix(pres: CyclicPresentation) -> list[list[int]]:
    """Row k holds the exponent sums of each generator in relator k."""
    n = pres.n
    rows = []
    for rel in pres.relators:
        row = [0] * n
        for i, e in rel.letters:
            row[i - 1] += e
        rows.append(row)
    for k in range(n):
        for i in range(n):
            if rows[k][i] != rows[0][(i - k) % n]:
                raise AssertionError("relation matrix is not circulant")
    return rows


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank`` plus ``Z/t`` for each torsion coefficient ``t`` (each dividing the next)."""

    torsion: tuple[int, ...]
    rank: int

    def __post_init__(self):
        for t in self.torsion:
            if t <= 1:
                raise ValueError(f"torsion coefficients must exceed 1, got {t}")
        for x, y in zip(self.torsion, self.torsion[1:]):
            if y % x:
                raise ValueError(f"{x} does not divide {y}")

    @property
    def order(self):
        return INFINITE if self.rank else prod(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = ["Z"] * self.rank + [f"Z_{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form (non-negative, divisibility chain, zeros last)."""
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        # pivot of smallest absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    ai, at = a[i], a[t]
                    for j in range(t, cols):
                        ai[j] -= q * at[j]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a[t:]:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                # enforce divisibility into the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                ai, at = a[bad[0]], a[t]
                for j in range(t, cols):
                    at[j] += ai[j]
                continue
            # move the smallest nonzero entry of row/column t onto the pivot
            best = (t, t)
            for i in range(t, rows):
                if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, cols):
                if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
    diag += [0] * (min(rows, cols) - len(diag))
    return diag


def smith_normal_form(matrix: list[list[int]]) -> AbelianGroup:
    """Cokernel of an integer matrix (rows are relations among the columns)."""
    cols = len(matrix[0]) if matrix else 0
    diag = smith_diagonal(matrix)
    nonzero = [x for x in diag if x]
    rank = cols - len(nonzero)
    return AbelianGroup(tuple(x for x in nonzero if x > 1), rank)


def determinant(matrix: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def first_homology(sigma) -> AbelianGroup:
    return smith_normal_form(relation_matrix(build_presentation(sigma)))
