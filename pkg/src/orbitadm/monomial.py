"""The induction datum (h, f): subalgebra, unitary character, adapted basis.

The representation under study is induced from the character
chi(exp Y) = e^{i f(Y)} of the subgroup H = exp(h).  This module validates
the two standing hypotheses (h is a subalgebra, f kills [h, h]), completes
the generators Y_1..Y_m to an adapted basis Y_1..Y_m, X_1..X_{n-m} of g,
and provides the affine chart x -> l for the spectral variety

    A_tau = { l in g* : l(Y) = f(Y) on h }  =  f + h^perp.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import DimensionMismatchError, LieAlgebra, bracket
from .linalg import (dot, in_row_space, invert, rank_exact,
                     reduce_against, rref, solve_exact)

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


class RankDeficientError(ValueError):
    """Candidate generators are linearly dependent."""


class NotClosedError(ValueError):
    """[Y_i, Y_j] escapes the candidate span."""

    def __init__(self, i: int, j: int, residual: Vector):
        self.i, self.j, self.residual = i, j, residual
        super().__init__(
            f"bracket of generators {i} and {j} leaves the span; "
            f"residual {tuple(str(x) for x in residual)}")


class NotACharacterError(ValueError):
    """f does not vanish on [h, h]."""

    def __init__(self, i: int, j: int, value: Fraction):
        self.i, self.j, self.value = i, j, value
        super().__init__(
            f"f([Y_{i}, Y_{j}]) = {value} != 0, so f is not a character "
            f"functional on the subalgebra")


@dataclass(frozen=True)
class Subalgebra:
    algebra: LieAlgebra
    rows: Matrix  # m x n generator coordinates, original basis
    rref_rows: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    pivots: tuple[int, ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        return in_row_space(v, self.rref_rows, self.pivots)

    def coordinates_of(self, v) -> list[Fraction]:
        """Coefficients a with v = sum a_i Y_i (raises if v is outside)."""
        if not self.rows:
            if any(Fraction(x) != 0 for x in v):
                raise ValueError("vector lies outside the trivial subalgebra")
            return []
        cols = [list(col) for col in zip(*self.rows)]
        return solve_exact(cols, list(v))


def check_subalgebra(L: LieAlgebra, candidate_rows) -> Subalgebra:
    """Validate generators: exact rank m and exact bracket closure.

    m = 0 (no generators) is the trivial subalgebra and always valid.
    """
    rows = tuple(tuple(Fraction(x) for x in row) for row in candidate_rows)
    for row in rows:
        if len(row) != L.dim:
            raise DimensionMismatchError(
                f"generator length {len(row)} != algebra dimension {L.dim}")
    if rank_exact(rows) != len(rows):
        raise RankDeficientError(
            f"{len(rows)} generators span only a "
            f"{rank_exact(rows)}-dimensional subspace")
    r, piv = rref(rows) if rows else ([], [])
    sub = Subalgebra(algebra=L, rows=rows,
                     rref_rows=tuple(tuple(x) for x in r),
                     pivots=tuple(piv))
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            w = bracket(L, rows[i], rows[j])
            res = reduce_against(w, sub.rref_rows, sub.pivots)
            if any(x != 0 for x in res):
                raise NotClosedError(i, j, tuple(res))
    return sub


@dataclass(frozen=True)
class CharacterFunctional:
    f_vals: Vector  # f_vals[j] = f(Y_j)

    @property
    def m(self) -> int:
        return len(self.f_vals)


def check_character(Hsub: Subalgebra, f_vals) -> CharacterFunctional:
    """f, given by its values on the generators, must kill [h, h]."""
    vals = tuple(Fraction(x) for x in f_vals)
    if len(vals) != Hsub.m:
        raise DimensionMismatchError(
            f"functional has {len(vals)} values for {Hsub.m} generators")
    L = Hsub.algebra
    for i in range(Hsub.m):
        for j in range(i + 1, Hsub.m):
            w = bracket(L, Hsub.rows[i], Hsub.rows[j])
            coords = Hsub.coordinates_of(w)
            value = sum((a * fv for a, fv in zip(coords, vals)), Fraction(0))
            if value != 0:
                raise NotACharacterError(i, j, value)
    return CharacterFunctional(f_vals=vals)


@dataclass(frozen=True)
class MonomialDatum:
    """Everything downstream analysis needs, precomputed exactly.

    adapted_rows: n x n invertible matrix; rows 0..m-1 are the generators
    Y_i, rows m..n-1 the greedy standard-vector completion X_r.
    adapted_inv is its exact inverse.  bracket_table[i][j] holds the
    original-basis coordinates of [Y_i, B_j] where B_j runs over the adapted
    basis — the moment matrix at l is just l applied to these.
    """

    algebra: LieAlgebra
    subalgebra: Subalgebra
    functional: CharacterFunctional
    adapted_rows: Matrix
    adapted_inv: Matrix
    bracket_table: tuple[tuple[Vector, ...], ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.algebra.dim

    @property
    def m(self) -> int:
        return self.subalgebra.m

    def adapted_vector(self, i: int) -> Vector:
        return self.adapted_rows[i]


def adapt_basis(L: LieAlgebra, Hsub: Subalgebra,
                f: CharacterFunctional) -> MonomialDatum:
    """Complete the generators to a basis of g, greedily and deterministically.

    Completion vectors are standard basis vectors e_k, taken in index order,
    each kept iff it is independent of what came before.
    """
    if Hsub.algebra is not L:
        raise ValueError("subalgebra was built over a different algebra")
    if f.m != Hsub.m:
        raise DimensionMismatchError("functional does not match subalgebra")
    n, m = L.dim, Hsub.m
    chosen = [list(r) for r in Hsub.rows]
    for k in range(n):
        if len(chosen) == n:
            break
        trial = chosen + [list(L.basis_vector(k))]
        if rank_exact(trial) == len(trial):
            chosen = trial
    adapted = tuple(tuple(x for x in row) for row in chosen)
    inv = tuple(tuple(row) for row in invert(adapted))
    table = tuple(
        tuple(bracket(L, Hsub.rows[i], adapted[j]) for j in range(n))
        for i in range(m))
    return MonomialDatum(algebra=L, subalgebra=Hsub, functional=f,
                         adapted_rows=adapted, adapted_inv=inv,
                         bracket_table=table)


def point_on_variety(D: MonomialDatum, x) -> Vector:
    """The chart of A_tau: x -> l with l(Y_j) = f_j and l(X_r) = x_r.

    Returned as a length-n row of values on the ORIGINAL basis.  Writing P
    for the adapted-rows matrix, the wanted l solves P l^T = (f, x), i.e.
    l = (f, x) applied through the inverse-transpose of P.
    """
    n, m = D.n, D.m
    if len(x) != n - m:
        raise DimensionMismatchError(
            f"chart point needs {n - m} coordinates, got {len(x)}")
    target = list(D.functional.f_vals) + [Fraction(v) for v in x]
    return tuple(dot(row, target) for row in D.adapted_inv)


def adapted_dual_coords(D: MonomialDatum, l) -> Vector:
    """Values of l on the adapted basis: (l(Y_1)..l(Y_m), l(X_1)..l(X_{n-m}))."""
    if len(l) != D.n:
        raise DimensionMismatchError(
            f"functional needs {D.n} coordinates, got {len(l)}")
    return tuple(dot(row, l) for row in D.adapted_rows)


def build_datum(L: LieAlgebra, candidate_rows, f_vals) -> MonomialDatum:
    """check_subalgebra + check_character + adapt_basis in one call."""
    sub = check_subalgebra(L, candidate_rows)
    f = check_character(sub, f_vals)
    return adapt_basis(L, sub, f)
