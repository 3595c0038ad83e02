"""Spectral and admissibility verdicts for the induced representation.

The decision rests on one geometric quantity: whether the generic H-orbit
dimension d_tau over the spectral variety reaches m = dim h, i.e. whether H
acts freely at some (equivalently, at Zariski-almost-every) point of A_tau.

    free somewhere      -> spectral measure absolutely continuous
    never free          -> spectral measure singular
    singular            -> no admissible vector (the representation cannot
                           embed into the regular representation)
    a.c. + nonunimodular-> admissible vectors exist
    a.c. + unimodular   -> conjectured: no admissible vector (open case)

full_report chains validation, structure classification, both generic-rank
routes, and the verdict table into one deterministic report object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (LieAlgebra, StructureReport, Violation,
                      structure_report, validate)
from .moment import (SYMBOLIC_DIM_THRESHOLD, GenericRankResult,
                     generic_h_orbit_dim, symbolic_generic_rank)
from .monomial import MonomialDatum, build_datum

ABSOLUTELY_CONTINUOUS = "AbsolutelyContinuous"
SINGULAR = "Singular"

ADMISSIBLE = "Admissible"
NOT_ADMISSIBLE = "NotAdmissible"
CONJECTURALLY_NOT_ADMISSIBLE = "ConjecturallyNotAdmissible"

RATIONALE_TEXT = {
    "free_and_nonunimodular":
        "the subgroup acts freely somewhere on the spectral variety and the "
        "group is nonunimodular, which characterizes admissibility",
    "singular_spectrum":
        "the spectral measure is singular, so the representation does not "
        "embed into the regular representation; admissibility needs that "
        "embedding regardless of unimodularity",
    "unimodular_free_conjectural":
        "unimodular case unresolved; conjectured to admit no admissible "
        "vector",
}


class InvalidAlgebraError(ValueError):
    def __init__(self, violations: list[Violation], names):
        self.violations = violations
        lines = "; ".join(v.describe(tuple(names)) for v in violations)
        super().__init__(f"structure constants are inconsistent: {lines}")


class StructuralPreconditionError(RuntimeError):
    """Solvability or exponentiality failed; the analysis does not apply."""

    def __init__(self, reason: str, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(reason)


class DisagreementError(RuntimeError):
    """Probabilistic and symbolic generic ranks differ — an internal bug."""

    def __init__(self, probabilistic: int, symbolic: int):
        self.probabilistic = probabilistic
        self.symbolic = symbolic
        super().__init__(
            f"generic rank mismatch: probabilistic {probabilistic} "
            f"vs symbolic {symbolic}")


@dataclass(frozen=True)
class SpectralVerdict:
    status: str                      # ABSOLUTELY_CONTINUOUS or SINGULAR
    d_tau: int
    m: int
    witness: tuple[Fraction, ...] | None  # present iff absolutely continuous


@dataclass(frozen=True)
class AdmissibilityVerdict:
    status: str
    unimodular: bool
    rationale: str                   # key into RATIONALE_TEXT


def spectral_verdict(D: MonomialDatum, G: GenericRankResult) -> SpectralVerdict:
    if G.is_free:
        return SpectralVerdict(status=ABSOLUTELY_CONTINUOUS, d_tau=G.d_tau,
                               m=D.m, witness=G.witness)
    return SpectralVerdict(status=SINGULAR, d_tau=G.d_tau, m=D.m, witness=None)


def admissibility_verdict(S: SpectralVerdict,
                          unimodular: bool) -> AdmissibilityVerdict:
    if S.status == SINGULAR:
        return AdmissibilityVerdict(status=NOT_ADMISSIBLE,
                                    unimodular=unimodular,
                                    rationale="singular_spectrum")
    if unimodular:
        return AdmissibilityVerdict(status=CONJECTURALLY_NOT_ADMISSIBLE,
                                    unimodular=True,
                                    rationale="unimodular_free_conjectural")
    return AdmissibilityVerdict(status=ADMISSIBLE, unimodular=False,
                                rationale="free_and_nonunimodular")


@dataclass(frozen=True)
class AnalysisConfig:
    trials: int = 20
    bound: int = 10 ** 6
    seed: int = 0
    force_symbolic: bool = False
    assume_exponential: bool = False
    exp_samples: int = 20
    symbolic_threshold: int = SYMBOLIC_DIM_THRESHOLD


@dataclass(frozen=True)
class FullReport:
    algebra: LieAlgebra
    datum: MonomialDatum
    structure: StructureReport
    generic: GenericRankResult            # the result the verdicts use
    generic_probabilistic: GenericRankResult
    generic_symbolic: GenericRankResult | None
    spectral: SpectralVerdict
    admissibility: AdmissibilityVerdict
    warnings: tuple[str, ...]
    seed: int
    trials: int
    bound: int


def full_report(L: LieAlgebra, h_rows, f_vals,
                config: AnalysisConfig = AnalysisConfig()) -> FullReport:
    """Validate, classify, rank both ways, decide.

    Raises InvalidAlgebraError / the datum validation errors for malformed
    input, StructuralPreconditionError when the algebra is not solvable or
    the exponentiality screen finds a witness (and no override is set), and
    DisagreementError if the two generic-rank routes ever disagree.
    """
    violations = validate(L)
    if violations:
        raise InvalidAlgebraError(violations, L.basis_names)
    datum = build_datum(L, h_rows, f_vals)

    exp_samples = 0 if config.assume_exponential else config.exp_samples
    structure = structure_report(L, exp_samples=exp_samples, seed=config.seed)
    if not structure.is_solvable:
        raise StructuralPreconditionError(
            "the algebra is not solvable; the analysis applies only to "
            "exponential solvable groups")
    if structure.exponentiality == "FailedWithWitness":
        names = ", ".join(L.basis_names)
        raise StructuralPreconditionError(
            "exponentiality screen found a witness direction with a nonzero "
            f"purely imaginary ad-eigenvalue (basis {names}); pass the "
            "assume-exponential override to proceed anyway",
            witness=structure.exponentiality_witness)

    warnings = []
    if structure.exponentiality == "PassedSampling":
        warnings.append("exponentiality verified by sampling only, "
                        "not certified")
    elif structure.exponentiality == "Skipped":
        warnings.append("exponentiality asserted by caller; screen skipped")

    prob = generic_h_orbit_dim(datum, trials=config.trials,
                               bound=config.bound, seed=config.seed)
    symbolic: GenericRankResult | None = None
    if config.force_symbolic:
        symbolic = symbolic_generic_rank(datum, enforce_threshold=False)
    elif datum.n <= config.symbolic_threshold:
        symbolic = symbolic_generic_rank(datum,
                                         threshold=config.symbolic_threshold)
    else:
        warnings.append("dimension exceeds the symbolic threshold; "
                        "generic rank certified probabilistically only")
    if symbolic is not None and symbolic.d_tau != prob.d_tau:
        raise DisagreementError(prob.d_tau, symbolic.d_tau)

    reported = symbolic if config.force_symbolic else prob
    spectral = spectral_verdict(datum, reported)
    admissibility = admissibility_verdict(spectral, structure.is_unimodular)
    return FullReport(
        algebra=L,
        datum=datum,
        structure=structure,
        generic=reported,
        generic_probabilistic=prob,
        generic_symbolic=symbolic,
        spectral=spectral,
        admissibility=admissibility,
        warnings=tuple(warnings),
        seed=config.seed,
        trials=config.trials,
        bound=config.bound,
    )
