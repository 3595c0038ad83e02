"""Deterministic report rendering.

The JSON document is the source of truth; the text rendering is the same
tree flattened to ``dotted.path: value`` lines, so the two stay in
field-for-field agreement by construction.  All ordering is fixed and all
values are rendered reproducibly, making repeated runs byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .geometry import JacobianReport
from .moment import StabilizerReport
from .problemfile import ProblemFile, _format_combo
from .verdict import RATIONALE_TEXT, FullReport


def _frac_str(q: Fraction) -> str:
    return str(q)


def _combo_strings(rows, basis_names) -> list:
    return [_format_combo(row, basis_names) for row in rows]


def report_dict(rep: FullReport) -> dict:
    L = rep.algebra
    sub = rep.datum.subalgebra
    structure = {
        "algebra": L.name,
        "dim": L.dim,
        "basis": list(L.basis_names),
        "generators": _combo_strings(sub.rows, L.basis_names),
        "functional": [_frac_str(v) for v in rep.datum.functional.f_vals],
        "is_valid": rep.structure.is_valid,
        "is_solvable": rep.structure.is_solvable,
        "derived_series_dims": list(rep.structure.derived_series_dims),
        "lower_central_dims": list(rep.structure.lower_central_dims),
        "is_nilpotent": rep.structure.is_nilpotent,
        "is_unimodular": rep.structure.is_unimodular,
        "exponentiality": rep.structure.exponentiality,
    }
    witness = None
    if rep.spectral.witness is not None:
        witness = [_frac_str(v) for v in rep.spectral.witness]
    return {
        "structure": structure,
        "d_tau": rep.spectral.d_tau,
        "m": rep.spectral.m,
        "witness": witness,
        "spectral": rep.spectral.status,
        "admissibility": {
            "status": rep.admissibility.status,
            "unimodular": rep.admissibility.unimodular,
            "rationale": rep.admissibility.rationale,
            "rationale_text": RATIONALE_TEXT[rep.admissibility.rationale],
        },
        "warnings": list(rep.warnings),
        "seed": rep.seed,
        "trials": rep.trials,
    }


def _scalar(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value)


def _flatten(prefix: str, value, lines: list) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            path = f"{prefix}.{key}" if prefix else key
            _flatten(path, item, lines)
    elif isinstance(value, list):
        lines.append(f"{prefix}: "
                     + json.dumps(value, separators=(", ", ": ")))
    else:
        lines.append(f"{prefix}: {_scalar(value)}")


def render_json(rep: FullReport) -> str:
    return json.dumps(report_dict(rep), indent=2) + "\n"


def render_text(rep: FullReport) -> str:
    lines: list = []
    _flatten("", report_dict(rep), lines)
    return "\n".join(lines) + "\n"


def render_stabilizer_text(sr: StabilizerReport, basis_names) -> str:
    lines = [
        "point: " + json.dumps([_frac_str(v) for v in sr.point],
                               separators=(", ", ": ")),
        f"rank_M: {sr.rank_M}",
        f"dim_H_orbit: {sr.dim_H_orbit}",
        "h_stab_basis: " + json.dumps(_combo_strings(sr.h_stab_basis,
                                                     basis_names),
                                      separators=(", ", ": ")),
        f"dim_G_orbit: {sr.dim_G_orbit}",
        "g_stab_basis: " + json.dumps(_combo_strings(sr.g_stab_basis,
                                                     basis_names),
                                      separators=(", ", ": ")),
    ]
    return "\n".join(lines) + "\n"


def render_jacobian_text(jr: JacobianReport, point, h: float,
                         rel_tol: float) -> str:
    lines = [
        "point: " + json.dumps([_frac_str(Fraction(v)) for v in point],
                               separators=(", ", ": ")),
        f"step: {h!r}",
        f"rank_tolerance: {rel_tol!r}",
        f"max_dev_topleft: {jr.max_dev_topleft!r}",
        f"max_dev_topright: {jr.max_dev_topright!r}",
        f"max_dev_bottomright: {jr.max_dev_bottomright!r}",
        f"numerical_rank_J: {jr.numerical_rank_J}",
        f"expected_rank: {jr.expected_rank}",
        f"rank_matches: {json.dumps(jr.numerical_rank_J == jr.expected_rank)}",
    ]
    return "\n".join(lines) + "\n"


def render_problem_summary(pf: ProblemFile) -> str:
    L = pf.algebra
    lines = [
        f"algebra: {pf.name}",
        f"dim: {L.dim}",
        "basis: " + " ".join(L.basis_names),
        "generators: " + json.dumps(
            _combo_strings(pf.subalgebra_rows, L.basis_names),
            separators=(", ", ": ")),
        "functional: " + json.dumps(
            [_frac_str(v) for v in pf.functional_vals],
            separators=(", ", ": ")),
    ]
    return "\n".join(lines) + "\n"
