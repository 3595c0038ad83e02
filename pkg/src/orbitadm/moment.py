"""Moment matrix, stabilizers, orbit dimensions, generic rank over A_tau.

For l in g* the m x n moment matrix has entries M(l)[i][j] = l([Y_i, B_j])
with B_j running over the adapted basis.  Its exact rank equals the
dimension of the H-orbit of l, and the H-stabilizer subalgebra
h(l) = { Y in h : l([Y, .]) = 0 } is the left kernel of M(l) pushed through
the generators.  The generic value of that rank over the spectral variety,

    d_tau = max over l in A_tau of dim H.l,

is computed two independent ways: by seeded random evaluation (exact rank
at integer chart points, Schwartz-Zippel controlled) and, for small
dimensions, by exhibiting a not-identically-zero minor of the symbolic
matrix with polynomial entries.  The induced representation behaves
qualitatively differently according to whether d_tau reaches m — whether H
acts freely somewhere on A_tau — which is what the verdict layer consumes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import DimensionMismatchError
from .linalg import dot, left_nullspace, nullspace, rank_exact
from .monomial import MonomialDatum, point_on_variety
from .poly import Poly, determinant

Vector = tuple[Fraction, ...]

__all__ = [
    "MomentMatrix", "StabilizerReport", "GenericRankResult",
    "ThresholdExceededError", "moment_matrix", "rank_exact",
    "stabilizer_report", "generic_h_orbit_dim", "symbolic_generic_rank",
    "symbolic_moment_entries", "SYMBOLIC_DIM_THRESHOLD",
]

SYMBOLIC_DIM_THRESHOLD = 8


class ThresholdExceededError(ValueError):
    """Dimension too large for the exhaustive-minor symbolic path."""


@dataclass(frozen=True)
class MomentMatrix:
    entries: tuple[Vector, ...]  # m rows, n columns

    @property
    def m(self) -> int:
        return len(self.entries)

    def rank(self) -> int:
        return rank_exact(self.entries)


def moment_matrix(D: MonomialDatum, l) -> MomentMatrix:
    if len(l) != D.n:
        raise DimensionMismatchError(
            f"functional needs {D.n} coordinates, got {len(l)}")
    lv = [Fraction(v) for v in l]
    entries = tuple(
        tuple(dot(lv, D.bracket_table[i][j]) for j in range(D.n))
        for i in range(D.m))
    return MomentMatrix(entries=entries)


@dataclass(frozen=True)
class StabilizerReport:
    point: Vector
    rank_M: int
    dim_H_orbit: int
    h_stab_basis: tuple[Vector, ...]   # vectors in g, original coordinates
    dim_G_orbit: int
    g_stab_basis: tuple[Vector, ...]


def skew_form_matrix(D: MonomialDatum, l) -> list[list[Fraction]]:
    """B(l)[i][j] = l([Z_i, Z_j]) over the original basis; skew-symmetric."""
    L = D.algebra
    lv = [Fraction(v) for v in l]
    n = L.dim
    return [[sum((L.c[i][j][k] * lv[k] for k in range(n)), Fraction(0))
             for j in range(n)] for i in range(n)]


def stabilizer_report(D: MonomialDatum, l) -> StabilizerReport:
    """Orbit dimensions and stabilizer bases at one point of g*.

    h(l) comes from the left kernel of M(l): a row combination a with
    a M(l) = 0 corresponds to the element sum a_i Y_i.  g(l) is the kernel
    of the skew form B(l), whose rank (always even) is dim G.l.
    """
    M = moment_matrix(D, l)
    rank_M = M.rank()
    m, n = D.m, D.n
    h_basis = tuple(
        tuple(sum((a[i] * D.subalgebra.rows[i][k] for i in range(m)),
                  Fraction(0)) for k in range(n))
        for a in left_nullspace(M.entries, n_rows=m))
    B = skew_form_matrix(D, l)
    g_basis = tuple(tuple(v) for v in nullspace(B, n_cols=n))
    return StabilizerReport(
        point=tuple(Fraction(v) for v in l),
        rank_M=rank_M,
        dim_H_orbit=rank_M,
        h_stab_basis=h_basis,
        dim_G_orbit=n - len(g_basis),
        g_stab_basis=g_basis,
    )


@dataclass(frozen=True)
class GenericRankResult:
    d_tau: int
    witness: Vector           # chart coordinates of a point attaining d_tau
    method: str               # "probabilistic" or "symbolic"
    is_free: bool             # d_tau == m
    trials: int | None = None
    seed: int | None = None


def rank_at(D: MonomialDatum, x) -> int:
    return moment_matrix(D, point_on_variety(D, x)).rank()


def generic_h_orbit_dim(D: MonomialDatum, trials: int = 20,
                        bound: int = 10 ** 6, seed: int = 0) -> GenericRankResult:
    """Probabilistic generic rank by exact evaluation at random integer points.

    Each trial draws x uniformly from the integer box [-bound, bound]^(n-m)
    and computes rank M(l(x)) exactly.  Any single k x k minor that is not
    identically zero on A_tau misses its zero set with probability at least
    1 - k/(2*bound + 1), so the maximum over independent trials certifies
    d_tau except with vanishing probability.  Deterministic given the seed;
    the witness is the first sampled point attaining the maximum.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    nfree = D.n - D.m
    best = -1
    witness: Vector = ()
    for _ in range(trials):
        x = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(nfree))
        r = rank_at(D, x)
        if r > best:
            best, witness = r, x
    return GenericRankResult(d_tau=best, witness=witness,
                             method="probabilistic", is_free=best == D.m,
                             trials=trials, seed=seed)


def symbolic_moment_entries(D: MonomialDatum) -> list[list[Poly]]:
    """M as a polynomial matrix in the chart variables x_1..x_{n-m}.

    Entry (i, j) is l_x([Y_i, B_j]) with l_x affine in x: the constant part
    evaluates the chart at x = 0 and the x_r coefficient pairs the bracket
    with the r-th chart direction.
    """
    n, m = D.n, D.m
    nfree = n - m
    l0 = point_on_variety(D, (Fraction(0),) * nfree)
    # chart direction r = column m+r of the adapted inverse
    directions = [tuple(D.adapted_inv[k][m + r] for k in range(n))
                  for r in range(nfree)]
    rows = []
    for i in range(m):
        row = []
        for j in range(n):
            w = D.bracket_table[i][j]
            row.append(Poly.affine(dot(l0, w),
                                   [dot(d, w) for d in directions]))
        rows.append(row)
    return rows


def _witness_for_minor(D: MonomialDatum, minor: Poly, target: int) -> Vector:
    """A rational chart point where the certifying minor does not vanish.

    Deterministic search over integer points of growing radius; the minor is
    a nonzero polynomial, so some point in a large enough box works.
    """
    nfree = D.n - D.m
    if nfree == 0:
        return ()
    for radius in itertools.count(1):
        rng = random.Random(radius)
        for _ in range(32):
            x = tuple(Fraction(rng.randint(-radius, radius))
                      for _ in range(nfree))
            if minor.evaluate(x) != 0 and rank_at(D, x) == target:
                return x


def symbolic_generic_rank(D: MonomialDatum,
                          threshold: int = SYMBOLIC_DIM_THRESHOLD,
                          enforce_threshold: bool = True) -> GenericRankResult:
    """Certified generic rank: the largest k with a not-identically-zero minor.

    Entries of M are affine polynomials in x; minors are enumerated
    largest-first with early exit, each determinant computed by exact
    polynomial arithmetic.  The zero set of a nonzero minor is a proper
    subvariety, so the first size with a surviving minor is d_tau.
    """
    if enforce_threshold and D.n > threshold:
        raise ThresholdExceededError(
            f"dimension {D.n} exceeds the symbolic threshold {threshold}")
    entries = symbolic_moment_entries(D)
    m, n = D.m, D.n
    nfree = n - m
    for k in range(min(m, n), 0, -1):
        for rows_sel in itertools.combinations(range(m), k):
            for cols_sel in itertools.combinations(range(n), k):
                sub = [[entries[i][j] for j in cols_sel] for i in rows_sel]
                minor = determinant(sub)
                if not minor.is_zero:
                    witness = _witness_for_minor(D, minor, k)
                    return GenericRankResult(
                        d_tau=k, witness=witness, method="symbolic",
                        is_free=k == m)
    return GenericRankResult(d_tau=0, witness=(Fraction(0),) * nfree,
                             method="symbolic", is_free=m == 0)
