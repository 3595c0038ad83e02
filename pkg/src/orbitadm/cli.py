"""Command-line interface.

Subcommands: validate, verdict, rank, jacobian, corpus.  Exit codes:
0 success; 1 parse/validation error (also bad usage); 2 structural
precondition failed (not solvable, or the exponentiality screen found a
witness and no override was given); 3 internal disagreement between the
probabilistic and symbolic generic ranks (never expected).
"""

from __future__ import annotations

import argparse
import os
import sys
from importlib import resources
from pathlib import Path

from .algebra import DimensionMismatchError, structure_report, validate
from .geometry import fd_jacobian
from .moment import stabilizer_report
from .monomial import (NotACharacterError, NotClosedError, RankDeficientError,
                       build_datum, point_on_variety)
from .problemfile import ParseError, parse, parse_rational_list
from .report import (render_jacobian_text, render_json,
                     render_problem_summary, render_stabilizer_text,
                     render_text)
from .verdict import (AnalysisConfig, DisagreementError, InvalidAlgebraError,
                      StructuralPreconditionError, full_report)

SEED_ENV_VAR = "ORBITADM_SEED"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PRECONDITION = 2
EXIT_DISAGREEMENT = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we map usage to 1
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="orbitadm",
        description="Spectral type and wavelet admissibility of induced "
                    "representations of exponential solvable Lie groups, "
                    "from rational structure constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser(
        "validate", help="check structure constants, subalgebra, character, "
                         "and structural preconditions")
    p_validate.add_argument("file")
    p_validate.add_argument("--seed", type=int, default=None)
    p_validate.add_argument("--assume-exponential", action="store_true")

    p_verdict = sub.add_parser(
        "verdict", help="full analysis: generic orbit rank and verdicts")
    p_verdict.add_argument("file")
    p_verdict.add_argument("--trials", type=int, default=None)
    p_verdict.add_argument("--bound", type=int, default=None)
    p_verdict.add_argument("--seed", type=int, default=None)
    p_verdict.add_argument("--symbolic", action="store_true",
                           help="certify the generic rank symbolically and "
                                "report that route (bypasses the dimension "
                                "threshold)")
    p_verdict.add_argument("--assume-exponential", action="store_true")
    p_verdict.add_argument("--json", action="store_true")

    p_rank = sub.add_parser(
        "rank", help="moment-matrix rank and stabilizers at one chart point")
    p_rank.add_argument("file")
    p_rank.add_argument("--point", required=True,
                        help="comma-separated chart coordinates, "
                             "e.g. '1,-2/3'")

    p_jac = sub.add_parser(
        "jacobian", help="finite-difference Jacobian of the action map at a "
                         "chart point, with block deviations")
    p_jac.add_argument("file")
    p_jac.add_argument("--point", required=True)
    p_jac.add_argument("--step", type=float, default=1e-4)
    p_jac.add_argument("--tol", type=float, default=1e-8)

    sub.add_parser("corpus", help="list the bundled example files")
    return parser


def corpus_dir():
    return resources.files(__package__).joinpath("corpus")


def corpus_path(name: str) -> Path:
    path = Path(str(corpus_dir().joinpath(name + ".alg")))
    if not path.exists():
        raise FileNotFoundError(f"no bundled example named {name!r}")
    return path


def _resolve_seed(flag_value, file_config: dict, stderr) -> int:
    if flag_value is not None:
        return flag_value
    if "seed" in file_config:
        return file_config["seed"]
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _UsageError(
                f"{SEED_ENV_VAR} must be an integer, got {env!r}")
    return 0


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}")
    return parse(text)


def _cmd_validate(args, out, err) -> int:
    pf = _load(args.file)
    violations = validate(pf.algebra)
    if violations:
        for v in violations:
            print("invalid: " + v.describe(pf.algebra.basis_names), file=err)
        return EXIT_INVALID
    build_datum(pf.algebra, pf.subalgebra_rows, pf.functional_vals)
    assume = args.assume_exponential or pf.config.get("assume_exponential",
                                                      False)
    seed = _resolve_seed(args.seed, pf.config, err)
    report = structure_report(pf.algebra, exp_samples=0 if assume else 20,
                              seed=seed)
    if not report.is_solvable:
        print("precondition failed: the algebra is not solvable "
              f"(derived series dims {list(report.derived_series_dims)})",
              file=err)
        return EXIT_PRECONDITION
    if report.exponentiality == "FailedWithWitness":
        witness = ", ".join(str(x) for x in report.exponentiality_witness)
        print("precondition failed: exponentiality screen found a witness "
              f"({witness}); rerun with --assume-exponential to override",
              file=err)
        return EXIT_PRECONDITION
    out.write(render_problem_summary(pf))
    out.write(f"is_solvable: true\n"
              f"is_nilpotent: {'true' if report.is_nilpotent else 'false'}\n"
              f"is_unimodular: "
              f"{'true' if report.is_unimodular else 'false'}\n"
              f"exponentiality: {report.exponentiality}\n"
              f"ok\n")
    return EXIT_OK


def _cmd_verdict(args, out, err) -> int:
    pf = _load(args.file)
    seed = _resolve_seed(args.seed, pf.config, err)
    config = AnalysisConfig(
        trials=args.trials if args.trials is not None
        else pf.config.get("trials", 20),
        bound=args.bound if args.bound is not None
        else pf.config.get("bound", 10 ** 6),
        seed=seed,
        force_symbolic=args.symbolic or pf.config.get("symbolic", False),
        assume_exponential=args.assume_exponential
        or pf.config.get("assume_exponential", False),
    )
    if config.trials < 1:
        raise _UsageError("--trials must be at least 1")
    if config.bound < 1:
        raise _UsageError("--bound must be at least 1")
    rep = full_report(pf.algebra, pf.subalgebra_rows, pf.functional_vals,
                      config)
    out.write(render_json(rep) if args.json else render_text(rep))
    return EXIT_OK


def _datum_and_point(args):
    pf = _load(args.file)
    datum = build_datum(pf.algebra, pf.subalgebra_rows, pf.functional_vals)
    try:
        x = parse_rational_list(args.point)
    except ValueError as exc:
        raise _UsageError(f"--point: {exc}")
    if len(x) != datum.n - datum.m:
        raise _UsageError(
            f"--point needs {datum.n - datum.m} coordinates for this datum, "
            f"got {len(x)}")
    return datum, x


def _cmd_rank(args, out, err) -> int:
    datum, x = _datum_and_point(args)
    sr = stabilizer_report(datum, point_on_variety(datum, x))
    out.write(render_stabilizer_text(sr, datum.algebra.basis_names))
    return EXIT_OK


def _cmd_jacobian(args, out, err) -> int:
    if args.step <= 0:
        raise _UsageError("--step must be positive")
    if args.tol <= 0:
        raise _UsageError("--tol must be positive")
    datum, x = _datum_and_point(args)
    jr = fd_jacobian(datum, x, h=args.step, rel_tol=args.tol)
    out.write(render_jacobian_text(jr, x, args.step, args.tol))
    return EXIT_OK


def _cmd_corpus(args, out, err) -> int:
    entries = sorted(p for p in corpus_dir().iterdir()
                     if p.name.endswith(".alg"))
    for entry in entries:
        pf = parse(entry.read_text())
        out.write(f"{entry.name[:-4]:<16} dim {pf.algebra.dim}  "
                  f"m {pf.m}  {entry}\n")
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "verdict": _cmd_verdict,
    "rank": _cmd_rank,
    "jacobian": _cmd_jacobian,
    "corpus": _cmd_corpus,
}


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out, err)
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_INVALID
    except (InvalidAlgebraError, NotClosedError, RankDeficientError,
            NotACharacterError, DimensionMismatchError) as exc:
        print(f"invalid: {exc}", file=err)
        return EXIT_INVALID
    except StructuralPreconditionError as exc:
        print(f"precondition failed: {exc}", file=err)
        return EXIT_PRECONDITION
    except DisagreementError as exc:
        print(f"internal disagreement: {exc}", file=err)
        return EXIT_DISAGREEMENT


def run() -> None:
    sys.exit(main())
