"""orbitadm: spectral type and admissibility of induced representations.

Given an exponential solvable Lie group by rational structure constants, a
subalgebra h, and a character functional f, the induced ("monomial")
representation tau has a spectral measure that is either absolutely
continuous or singular with respect to Plancherel measure — decided by
whether the generic H-orbit dimension over the spectral variety
A_tau = f + h^perp reaches dim h — and tau admits a continuous-wavelet
admissible vector exactly in the nonunimodular absolutely continuous case
(the unimodular free case being conjecturally empty).

The computation is exact rational linear algebra end to end, with a
floating-point cross-check of the derivative structure of the coadjoint
action map.
"""

from .algebra import (DimensionMismatchError, LieAlgebra, StructureReport,
                      Violation, ad_matrix, bracket, from_brackets,
                      structure_report, validate)
from .geometry import (JacobianReport, ad_exp, coadjoint_apply,
                       coadjoint_apply_factors, expm, fd_jacobian,
                       numerical_rank, phi_in_chart)
from .linalg import rank_exact
from .moment import (GenericRankResult, MomentMatrix, StabilizerReport,
                     ThresholdExceededError, generic_h_orbit_dim,
                     moment_matrix, rank_at, skew_form_matrix,
                     stabilizer_report, symbolic_generic_rank)
from .monomial import (CharacterFunctional, MonomialDatum, NotACharacterError,
                       NotClosedError, RankDeficientError, Subalgebra,
                       adapt_basis, adapted_dual_coords, build_datum,
                       check_character, check_subalgebra, point_on_variety)
from .problemfile import ParseError, ProblemFile, parse, serialize
from .verdict import (AnalysisConfig, AdmissibilityVerdict, DisagreementError,
                      FullReport, InvalidAlgebraError, SpectralVerdict,
                      StructuralPreconditionError, admissibility_verdict,
                      full_report, spectral_verdict)

__version__ = "0.1.0"

__all__ = [
    "LieAlgebra", "Violation", "StructureReport", "DimensionMismatchError",
    "from_brackets", "validate", "bracket", "ad_matrix", "structure_report",
    "Subalgebra", "CharacterFunctional", "MonomialDatum",
    "RankDeficientError", "NotClosedError", "NotACharacterError",
    "check_subalgebra", "check_character", "adapt_basis", "build_datum",
    "point_on_variety", "adapted_dual_coords",
    "MomentMatrix", "StabilizerReport", "GenericRankResult",
    "ThresholdExceededError", "moment_matrix", "skew_form_matrix",
    "rank_exact", "rank_at", "stabilizer_report", "generic_h_orbit_dim",
    "symbolic_generic_rank",
    "SpectralVerdict", "AdmissibilityVerdict", "FullReport",
    "AnalysisConfig", "InvalidAlgebraError", "StructuralPreconditionError",
    "DisagreementError", "spectral_verdict", "admissibility_verdict",
    "full_report",
    "JacobianReport", "expm", "ad_exp", "coadjoint_apply",
    "coadjoint_apply_factors", "phi_in_chart", "fd_jacobian",
    "numerical_rank",
    "ProblemFile", "ParseError", "parse", "serialize",
    "__version__",
]
