"""Alexander polynomials of 2-bridge and torus knots, and cyclic branched cover orders.

This module knows nothing about Dunwoody diagrams; it is the independent
side of the end-to-end homology checks.
"""
from __future__ import annotations

from math import gcd

from .homology import INFINITE, determinant


class LaurentPoly:
    """Integer Laurent polynomial in one variable ``t``, stored sparsely."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs or [])
        self.coeffs = {int(k): int(v) for k, v in items if v}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        out: dict[int, int] = {}
        for i, x in self.coeffs.items():
            for j, y in other.coeffs.items():
                out[i + j] = out.get(i + j, 0) + x * y
        return LaurentPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def low(self) -> int:
        return min(self.coeffs)

    @property
    def high(self) -> int:
        return max(self.coeffs)

    @property
    def span(self) -> int:
        return self.high - self.low if self.coeffs else 0

    def __call__(self, t):
        return sum(v * t**k for k, v in self.coeffs.items())

    def at_one(self) -> int:
        return sum(self.coeffs.values())

    def at_minus_one(self) -> int:
        return sum(v if k % 2 == 0 else -v for k, v in self.coeffs.items())

    def inverse_variable(self) -> LaurentPoly:
        """``p(1/t)``."""
        return LaurentPoly({-k: v for k, v in self.coeffs.items()})

    def normalized(self) -> LaurentPoly:
        """Representative up to units ``±t^k``: lowest exponent 0, positive leading coefficient."""
        if not self.coeffs:
            return self
        lo = self.low
        sign = -1 if self.coeffs[self.high] < 0 else 1
        return LaurentPoly({k - lo: sign * v for k, v in self.coeffs.items()})

    def symmetrized(self) -> LaurentPoly:
        """Shift so the exponents run symmetrically about 0 (span must be even)."""
        if self.span % 2:
            raise ValueError("cannot centre a polynomial of odd span")
        shift = -(self.low + self.high) // 2
        return LaurentPoly({k + shift: v for k, v in self.coeffs.items()})

    def equal_up_to_units(self, other: LaurentPoly) -> bool:
        return self.normalized() == other.normalized()

    def is_symmetric(self) -> bool:
        """``p(t) = ±t^k p(1/t)`` for some ``k``."""
        return self.equal_up_to_units(self.inverse_variable())

    def dense(self) -> list[int]:
        """Coefficient list of the normalized polynomial, constant term first."""
        p = self.normalized()
        return [p.coeffs.get(k, 0) for k in range(p.span + 1)] if p.coeffs else []

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self.coeffs.items()))})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in sorted(self.coeffs, reverse=True):
            v = self.coeffs[k]
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append(("-" if v < 0 else "+", body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Long division of integer polynomials (constant term first) by a monic-up-to-sign divisor."""
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    lead = den[-1]
    if abs(lead) != 1:
        raise ValueError("divisor must have leading coefficient ±1")
    quot = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        q = num[k + len(den) - 1] * lead
        quot[k] = q
        if q:
            for j, c in enumerate(den):
                num[k + j] -= q * c
    rem = num[: len(den) - 1]
    return quot, rem


class TwoBridgeKnot:
    """The 2-bridge knot ``b(alpha, beta)`` with ``alpha`` odd and ``beta`` even."""

    def __init__(self, alpha: int, beta: int):
        if alpha <= 0 or alpha % 2 == 0:
            raise ValueError(f"alpha must be a positive odd integer, got {alpha}")
        if beta % 2:
            raise ValueError(f"beta must be even, got {beta}")
        if gcd(alpha, beta) != 1:
            raise ValueError(f"alpha and beta must be coprime, got ({alpha}, {beta})")
        self.alpha = alpha
        self.beta = beta % (2 * alpha)

    def __repr__(self) -> str:
        return f"TwoBridgeKnot({self.alpha}, {self.beta})"

    def schubert_signs(self) -> list[int]:
        """Exponents ``(-1)^floor(i*beta'/alpha)`` for ``i = 1..alpha-1``.

        The floor pattern describes the knot only for an odd parameter, so the
        even ``beta`` is replaced by ``beta + alpha``, which names the same knot.
        """
        b = (self.beta + self.alpha) % (2 * self.alpha)
        return [(-1) ** ((i * b) // self.alpha) for i in range(1, self.alpha)]


def _fox_derivative_u(word: list[tuple[str, int]]) -> LaurentPoly:
    """Fox derivative with respect to ``u``, abelianized by ``u, v -> t``."""
    total = LaurentPoly()
    prefix = 0  # abelianized exponent of the prefix read so far
    for gen, e in word:
        if gen == "u":
            if e > 0:
                total = total + LaurentPoly.monomial(prefix)
            else:
                total = total - LaurentPoly.monomial(prefix - 1)
        prefix += e
    return total


def alexander_two_bridge(knot: TwoBridgeKnot) -> LaurentPoly:
    """Alexander polynomial from the relator ``u W v^-1 W^-1`` of the 2-bridge group.

    ``W = v^{e_1} u^{e_2} v^{e_3} ... u^{e_{alpha-1}}``.  The result is
    centred on exponent 0 with ``Δ(1) = 1``.
    """
    signs = knot.schubert_signs()
    w = [("v" if i % 2 == 0 else "u", e) for i, e in enumerate(signs)]
    w_inv = [(g, -e) for g, e in reversed(w)]
    relator = [("u", 1)] + w + [("v", -1)] + w_inv
    delta = _fox_derivative_u(relator)
    if delta.at_one() < 0:
        delta = -delta
    return delta.symmetrized()


def alexander_torus(p: int, q: int) -> LaurentPoly:
    """``(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`` by exact division."""
    if p < 2 or q < 2:
        raise ValueError("torus knot parameters must be at least 2")
    if gcd(p, q) != 1:
        raise ValueError(f"torus knot parameters must be coprime, got ({p}, {q})")
    num = LaurentPoly({p * q + 1: 1, p * q: -1, 1: -1, 0: 1})
    den = LaurentPoly({p: 1, 0: -1}) * LaurentPoly({q: 1, 0: -1})
    quot, rem = poly_divmod(num.dense(), [den.coeffs.get(k, 0) for k in range(den.high + 1)])
    if any(rem):
        raise ArithmeticError("torus knot division left a remainder")
    return LaurentPoly(quot).symmetrized()


def branched_cover_order(delta: LaurentPoly, n: int):
    """Order of H_1 of the n-fold cyclic branched cover, or ``INFINITE``.

    Computed as ``|det Δ(P_n)| / |Δ(1)|`` with ``P_n`` the cyclic permutation
    matrix, so everything stays in exact integers.
    """
    if n < 1:
        raise ValueError("n must be positive")
    at_one = delta.at_one()
    if abs(at_one) != 1:
        raise ValueError(f"Δ(1) must be ±1, got {at_one}")
    if n == 1:
        return 1
    first_row = [0] * n
    for k, v in delta.coeffs.items():
        first_row[k % n] += v
    # Δ(P_n) is the circulant matrix with this first row
    matrix = [[first_row[(j - i) % n] for j in range(n)] for i in range(n)]
    det = abs(determinant(matrix))
    return INFINITE if det == 0 else det // abs(at_one)
