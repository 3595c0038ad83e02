"""Multivariate polynomials over the rationals, just enough for minors.

Terms are stored dense-by-dict: exponent tuple -> Fraction coefficient.
The moment matrix has affine entries in the chart variables, so a k x k
minor has total degree at most k; with at most 8 variables this stays tiny.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Poly:
    nvars: int
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]  # sorted by exponent

    @staticmethod
    def _build(nvars: int, mapping: dict) -> "Poly":
        cleaned = {e: c for e, c in mapping.items() if c != 0}
        return Poly(nvars, tuple(sorted(cleaned.items())))

    @staticmethod
    def const(nvars: int, value) -> "Poly":
        return Poly._build(nvars, {(0,) * nvars: Fraction(value)})

    @staticmethod
    def variable(nvars: int, i: int) -> "Poly":
        e = tuple(1 if k == i else 0 for k in range(nvars))
        return Poly._build(nvars, {e: Fraction(1)})

    @staticmethod
    def affine(constant, linear) -> "Poly":
        """constant + sum linear[i] * x_i."""
        nvars = len(linear)
        mapping = {(0,) * nvars: Fraction(constant)}
        for i, coeff in enumerate(linear):
            e = tuple(1 if k == i else 0 for k in range(nvars))
            mapping[e] = Fraction(coeff)
        return Poly._build(nvars, mapping)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Poly") -> "Poly":
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return Poly._build(self.nvars, acc)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        acc: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return Poly._build(self.nvars, acc)

    def evaluate(self, point) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("evaluation point has wrong arity")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms:
            term = c
            for base, power in zip(pt, e):
                for _ in range(power):
                    term *= base
            total += term
        return total

    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=-1)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            factors = [str(c)]
            for i, power in enumerate(e):
                if power == 1:
                    factors.append(f"x{i + 1}")
                elif power > 1:
                    factors.append(f"x{i + 1}^{power}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def determinant(rows: list[list[Poly]]) -> Poly:
    """Determinant of a square polynomial matrix.

    Dynamic programming over column subsets (Laplace expansion along rows),
    O(k * 2^k) polynomial operations — fine for the k <= 8 this package uses.
    """
    k = len(rows)
    if k == 0:
        raise ValueError("empty determinant")
    nvars = rows[0][0].nvars
    zero = Poly.const(nvars, 0)
    # state[mask] = det of the minor on the first popcount(mask) rows and
    # the column set given by mask
    state = {0: Poly.const(nvars, 1)}
    for i in range(k):
        nxt: dict = {}
        for mask, minor in state.items():
            if minor.is_zero:
                continue
            pos = 0
            for j in range(k):
                bit = 1 << j
                if mask & bit:
                    pos += 1
                    continue
                entry = rows[i][j]
                if not entry.is_zero:
                    contrib = entry * minor
                    if (i + pos) % 2:
                        contrib = -contrib
                    key = mask | bit
                    nxt[key] = nxt.get(key, zero) + contrib
        state = nxt
        if not state:
            return zero
    return state.get((1 << k) - 1, zero)
