#!/usr/bin/env python3
"""
q-GT toolkit - Main Orchestrator

Command-line access to exact computations on the q-Gelfand-Tsetlin graph:
q-dimensions, Schur and interpolation polynomials, coherent systems,
extreme measures, q-Toeplitz matrices, path sampling and the identity
battery.
"""

import argparse
import json
import sys
from typing import List, Optional, Tuple

from src.config_loader import (
    DEFAULT_CONFIG_PATH,
    configure_logging,
    get_config_value,
    load_qgt_config,
    update_config_section,
)
from src.errors import InvalidMeasure, ParseError, QGTError
from src.format_output import (
    emit,
    encode_measure,
    encode_path,
    encode_qtoeplitz,
    encode_scalar,
    encode_signature,
    encode_tiling,
    encode_verify_results,
    format_measure_table,
    format_verify_table,
    parse_nu,
    parse_q,
    parse_scalar_list,
    parse_signature,
    report_error,
    status,
)
from src.gt import enumerate_partitions, shift_path, tiling_coords
from src.interp import interp_schur
from src.measures import NuSeq, cotransition_row, extreme_projection, primitive_system, shift_measure
from src.qtoeplitz import c_lambda, d_nu, from_first_column, initial_minors, newton_expand_1d
from src.sampling import MixtureSpec, sample_tiling
from src.schur import dim_q, schur_eval
from src.tiling_svg import render_tiling, write_svg
from src.verify import SUITES, run_verify

config = load_qgt_config()
DEFAULT_Q = config["arithmetic_settings"]["default_q"]


def show_help():
    print("""
📐 q-GT toolkit

Usage:
  python main.py [command] [options]

Commands:
  dimq          - q-dimension Dim_q(λ) = s_λ(1, q, ..., q^{N-1})
  schur         - Evaluate s_λ at a rational point
  interp        - Evaluate the interpolation polynomial s*_μ(x; q or 1/q)
  cotransition  - The distribution P(λ → μ) over μ ≺ λ
  primitive     - The primitive system P_k^λ at level k
  extreme       - Exact projection E^ν_k of an extreme measure
  expand        - Table of c_λ for H(x_1)...H(x_N)
  qtoeplitz     - q-Toeplitz matrix from ν or from H, with initial minors
  sample        - Sample random paths / lozenge tilings
  verify        - Run the identity battery
  config        - Show or change toolkit settings (show | get SECTION KEY | set SECTION KEY VALUE)
  help          - Show this help message

Options shared by the numeric commands:
  --q           - Deformation parameter 0 < q < 1 as "p/r" (default from config)
  --error-json  - Print errors as JSON on stdout

Input conventions:
  signatures    - space-separated integers in quotes, e.g. "2 0 -1"
  ν             - "prefix;tail", e.g. "0 1;3" means (0, 1, 3, 3, ...)
  rationals     - "p/r", integers or finite decimals

Examples:
  python main.py dimq "2 0" --q 1/2
  python main.py schur "2 1 0" --at 1 2 3
  python main.py interp "1 0" --at 1/2 2 --param qinv
  python main.py extreme --nu "0;1" --level 1 --q 1/2 --eps 1/1000
  python main.py expand --H "1 -1/2" --level 2
  python main.py qtoeplitz --nu "0 1;3" --rows 7 --cols 4 --minors 4
  python main.py sample --nu "0;1" --N 6 --count 100 --seed 7 --svg tiling.svg
  python main.py verify --suite all --q 2/5 --seed 7
  python main.py config set extreme_settings cap 16

Environment Variables:
  QGT_CONFIG_PATH       - Alternative configuration file
  QGT_VERIFY_BUDGET_MS  - Time budget for verify in milliseconds
""")


def numeric_parser(description: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=description)
    parser.add_argument("--q", default=DEFAULT_Q, help="Deformation parameter 0 < q < 1")
    parser.add_argument("--error-json", action="store_true", help="Print errors as JSON")
    parser.add_argument("--json", action="store_true", help="Print results as JSON")
    return parser


def resolve_nu(*nus: NuSeq) -> Tuple[Tuple[NuSeq, ...], int]:
    """Shift ν's with a negative first entry by one common amount; returns (shifted ν's, shift back)."""
    low = min(nu.value(1) for nu in nus)
    if low >= 0:
        return nus, 0
    status(f"⚠️  smallest ν_1 = {low} < 0: computing for ν + {-low} and shifting the result back")
    return tuple(nu.shift(-low) for nu in nus), low


def command_dimq(argv: List[str]) -> int:
    parser = numeric_parser("q-dimension of a signature")
    parser.add_argument("signature", help='Signature, e.g. "2 0"')
    args = parser.parse_args(argv)
    value = dim_q(parse_signature(args.signature), parse_q(args.q))
    emit(encode_scalar(value) if args.json else str(value))
    return 0


def command_schur(argv: List[str]) -> int:
    parser = numeric_parser("Evaluate a rational Schur function")
    parser.add_argument("signature")
    parser.add_argument("--at", nargs="+", required=True, help="Evaluation point")
    args = parser.parse_args(argv)
    value = schur_eval(parse_signature(args.signature), parse_scalar_list(args.at))
    emit(encode_scalar(value) if args.json else str(value))
    return 0


def command_interp(argv: List[str]) -> int:
    parser = numeric_parser("Evaluate a q-interpolation Schur polynomial")
    parser.add_argument("signature")
    parser.add_argument("--at", nargs="+", required=True, help="Evaluation point")
    parser.add_argument("--param", choices=["q", "qinv"], default="q", help="Use q or 1/q as parameter")
    args = parser.parse_args(argv)
    q = parse_q(args.q)
    param = q.q if args.param == "q" else q.inverse
    value = interp_schur(parse_signature(args.signature), parse_scalar_list(args.at), param)
    emit(encode_scalar(value) if args.json else str(value))
    return 0


def command_cotransition(argv: List[str]) -> int:
    parser = numeric_parser("Cotransition distribution below a signature")
    parser.add_argument("signature")
    args = parser.parse_args(argv)
    row = cotransition_row(parse_signature(args.signature), parse_q(args.q))
    if args.json:
        emit([[encode_signature(mu), encode_scalar(p)] for mu, p in row])
    else:
        emit("\n".join(f"{str(mu):<24} {p}" for mu, p in row))
    return 0


def command_primitive(argv: List[str]) -> int:
    parser = numeric_parser("Primitive coherent system")
    parser.add_argument("signature")
    parser.add_argument("--level", type=int, required=True, help="Target level k")
    args = parser.parse_args(argv)
    measure = primitive_system(parse_signature(args.signature), args.level, parse_q(args.q))
    emit(encode_measure(measure) if args.json else format_measure_table(measure))
    return 0


def command_extreme(argv: List[str]) -> int:
    parser = numeric_parser("Projection of an extreme q-central measure")
    parser.add_argument("--nu", required=True, help='ν as "prefix;tail"')
    parser.add_argument("--level", type=int, required=True, help="Level k")
    parser.add_argument("--eps", default=None, help="Tolerated tail mass")
    parser.add_argument("--cap", type=int, default=None, help="Largest first coordinate visited")
    args = parser.parse_args(argv)
    (nu,), offset = resolve_nu(parse_nu(args.nu))
    epsilon = parse_scalar_list([args.eps])[0] if args.eps is not None else None
    status(f"📐 Computing E^ν_{args.level} for ν = {nu}...")
    measure = extreme_projection(nu, args.level, parse_q(args.q), epsilon, args.cap)
    if offset:
        measure = shift_measure(measure, offset)
    emit(encode_measure(measure) if args.json else format_measure_table(measure))
    status(f"✅ {len(measure.masses)} masses, tail {measure.tail}")
    return 0


def command_expand(argv: List[str]) -> int:
    parser = numeric_parser("Coefficients c_λ of H(x_1)...H(x_N)")
    parser.add_argument("--H", required=True, help='Coefficients of H, lowest degree first, e.g. "1 -1/2"')
    parser.add_argument("--level", type=int, required=True, help="Number of variables N")
    args = parser.parse_args(argv)
    q = parse_q(args.q)
    poly = parse_scalar_list([args.H])
    table = [(lam, c_lambda(poly, lam, q)) for lam in enumerate_partitions(args.level, len(poly) - 1)]
    if args.json:
        emit([[encode_signature(lam), encode_scalar(c)] for lam, c in table])
    else:
        emit("\n".join(f"{str(lam):<24} {c}" for lam, c in table))
    return 0


def command_qtoeplitz(argv: List[str]) -> int:
    parser = numeric_parser("q-Toeplitz matrix and its initial minors")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--nu", help='Build from H^ν, ν as "prefix;tail"')
    source.add_argument("--H", help="Build from the polynomial H, lowest degree first")
    parser.add_argument("--rows", type=int, default=7)
    parser.add_argument("--cols", type=int, default=4)
    parser.add_argument("--minors", type=int, default=0, help="List initial minors up to this size")
    args = parser.parse_args(argv)
    q = parse_q(args.q)
    if args.nu is not None:
        matrix = d_nu(parse_nu(args.nu), args.rows, args.cols, q)
    else:
        matrix = from_first_column(newton_expand_1d(parse_scalar_list([args.H]), q), args.rows, args.cols)
    minors = initial_minors(matrix, args.minors) if args.minors else {}
    if args.json:
        payload = encode_qtoeplitz(matrix)
        if minors:
            payload["minors"] = [[list(rows), encode_scalar(v)] for rows, v in minors.items()]
        emit(payload)
    else:
        emit("\n".join("  ".join(f"{str(v):>12}" for v in row) for row in matrix.entries))
        if minors:
            emit("\n".join(f"rows {rows}: {value}" for rows, value in minors.items()))
            negative = [rows for rows, value in minors.items() if value < 0]
            status("✅ all initial minors are nonnegative" if not negative
                   else f"⚠️  {len(negative)} negative initial minors")
    return 0


def command_sample(argv: List[str]) -> int:
    parser = numeric_parser("Sample paths and lozenge tilings")
    parser.add_argument("--nu", action="append", required=True,
                        help='ν as "prefix;tail"; repeat with --weights for a mixture')
    parser.add_argument("--weights", nargs="+", default=None, help="Mixture weights summing to 1")
    parser.add_argument("--N", type=int, required=True, help="Top level")
    parser.add_argument("--count", type=int, default=config["sampling_settings"]["count"])
    parser.add_argument("--seed", type=int, default=config["sampling_settings"]["seed"])
    parser.add_argument("--eps", default=None, help="Tolerated tail mass")
    parser.add_argument("--cap", type=int, default=None)
    parser.add_argument("--svg", default=None, help="Write the first tiling to this SVG file")
    args = parser.parse_args(argv)
    q = parse_q(args.q)
    given = [parse_nu(text) for text in args.nu]
    nus, offset = resolve_nu(*given)
    if len(nus) > 1 or args.weights:
        weights = parse_scalar_list(args.weights or [])
        if len(weights) != len(nus):
            raise InvalidMeasure(f"{len(nus)} mixture components need {len(nus)} weights, got {len(weights)}",
                                 components=len(nus), weights=len(weights))
        spec = MixtureSpec(tuple(zip(nus, weights)))
    else:
        spec = nus[0]
    epsilon = parse_scalar_list([args.eps])[0] if args.eps is not None else None
    status(f"🎲 Sampling {args.count} paths of length {args.N} (seed {args.seed})...")
    run, tilings = sample_tiling(spec, args.N, q, args.count, args.seed, epsilon, args.cap)
    if offset:
        run.paths = [shift_path(p, offset) for p in run.paths]
        tilings = [tiling_coords(p) for p in run.paths]
        run.provenance["spec"] = str(MixtureSpec(tuple(zip(given, weights))) if isinstance(spec, MixtureSpec)
                                     else given[0])
    if args.json:
        emit({
            "manifest": run.manifest(),
            "paths": [encode_path(p) for p in run.paths],
            "tilings": [encode_tiling(t) for t in tilings],
        })
    else:
        emit("\n".join(str(p.top) for p in run.paths))
    if args.svg and run.paths:
        write_svg(render_tiling(run.paths[0]), args.svg)
        status(f"🖼️  Wrote {args.svg}")
    status("✅ Sampling finished")
    return 0


def command_verify(argv: List[str]) -> int:
    parser = argparse.ArgumentParser(description="Run the identity battery")
    parser.add_argument("--suite", default=config["verify_settings"]["default_suite"],
                        choices=["all"] + list(SUITES))
    parser.add_argument("--q", default=DEFAULT_Q)
    parser.add_argument("--seed", type=int, default=config["verify_settings"]["seed"])
    parser.add_argument("--error-json", action="store_true", help="Print errors as JSON")
    parser.add_argument("--json", action="store_true", help="Print results and a status summary as JSON")
    args = parser.parse_args(argv)
    status(f"🔎 Running verify suite '{args.suite}' at q = {args.q}, seed {args.seed}...")
    results = run_verify(args.suite, parse_q(args.q), args.seed)
    emit(encode_verify_results(results) if args.json else format_verify_table(results))
    failed = [r.suite for r in results if r.failed]
    if failed:
        status(f"❌ {len(failed)} suite(s) failed: {', '.join(failed)}")
        return 1
    skipped = [r.suite for r in results if r.status == "skip"]
    if skipped:
        status(f"⏭ Time budget spent: {len(skipped)} of {len(results)} suite(s) skipped ({', '.join(skipped)}); "
               "raise QGT_VERIFY_BUDGET_MS to run them")
        return 0
    status("✅ All checks passed")
    return 0


def command_config(argv: List[str]) -> int:
    parser = argparse.ArgumentParser(description="Show or change toolkit settings")
    parser.add_argument("action", choices=["show", "get", "set"])
    parser.add_argument("section", nargs="?", help="Section, e.g. extreme_settings")
    parser.add_argument("key", nargs="?")
    parser.add_argument("value", nargs="?", help="New value; JSON literals are decoded")
    parser.add_argument("--path", default=DEFAULT_CONFIG_PATH, help="Configuration file")
    parser.add_argument("--error-json", action="store_true", help="Print errors as JSON")
    args = parser.parse_args(argv)

    if args.action == "show":
        emit(load_qgt_config(args.path))
        return 0
    if not args.section or not args.key:
        raise ParseError(f"config {args.action} needs a section and a key")
    if args.action == "get":
        value = get_config_value(args.section, args.key, args.path)
        if value is None:
            raise ParseError(f"no setting {args.section}.{args.key}", section=args.section, key=args.key)
        emit(value)
        return 0
    if args.value is None:
        raise ParseError("config set needs a value")
    try:
        value = json.loads(args.value)
    except ValueError:
        value = args.value
    if not update_config_section(args.section, args.key, value, args.path):
        return 1
    status(f"✅ Set {args.section}.{args.key} = {value!r} in {args.path}")
    return 0


COMMANDS = {
    "dimq": command_dimq,
    "schur": command_schur,
    "interp": command_interp,
    "cotransition": command_cotransition,
    "primitive": command_primitive,
    "extreme": command_extreme,
    "expand": command_expand,
    "qtoeplitz": command_qtoeplitz,
    "sample": command_sample,
    "verify": command_verify,
    "config": command_config,
}


def run(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        show_help()
        return 0

    command = argv[0].lower()
    if command == "help":
        show_help()
        return 0
    if command not in COMMANDS:
        status(f"❌ Unknown command: {command}")
        show_help()
        return 2

    configure_logging(config)
    as_json = "--error-json" in argv
    try:
        return COMMANDS[command](argv[1:])
    except QGTError as e:
        return report_error(e, as_json)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
