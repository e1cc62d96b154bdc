"""Batch command line front end.

Subcommands read JSON input files (schemas in ``serialize``), run one
computation, and print a deterministic report: series as ascending
"exponent<TAB>coefficient" lines followed by a "cutoff<TAB>value" line,
barcodes as JSON, comparisons as EQUAL or the first differing exponent.

Exit codes: 0 success; 1 parse or validation error (bad flags, unreadable
or schema-violating files); 2 violated mathematical precondition (e.g.
inverting a non-unit, level on the spectrum); 3 internal consistency
failure (the exp and product zeta forms disagree under --form both).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import domains, orbits, persistence, serialize
from .errors import ReebZetaError
from .mobius import mobius_product
from .novikov import NovikovSeries
from .serialize import SchemaError, format_ratio

PARSE_ERROR, MATH_ERROR, CONSISTENCY_ERROR = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    # Exit code 2 is reserved for mathematical preconditions, so flag
    # errors must exit 1 rather than argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(PARSE_ERROR, f"{self.prog}: error: {message}\n")


def _ratio_flag(text: str) -> Fraction:
    try:
        return serialize.parse_ratio(text)
    except SchemaError:
        raise argparse.ArgumentTypeError(
            f"expected a rational like 3 or 3/2, got {text!r}") from None


def _positive_ratio_flag(text: str) -> Fraction:
    value = _ratio_flag(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reebzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def cutoff_arg(p):
        p.add_argument("--cutoff", type=_positive_ratio_flag, required=True,
                       metavar="p/q", help="action cutoff (positive rational)")

    def out_arg(p):
        p.add_argument("--out", metavar="PATH",
                       help="also write the result as a JSON series file")

    p = sub.add_parser("zeta-orbits", help="zeta function of an orbit set file")
    p.add_argument("file")
    cutoff_arg(p)
    p.add_argument("--form", choices=("exp", "product", "ech", "both"),
                   default="both",
                   help="computation route; 'both' runs exp and product "
                        "and fails if they disagree (default)")
    out_arg(p)
    p.set_defaults(func=_cmd_zeta_orbits)

    p = sub.add_parser("zeta-toric", help="zeta of a toric domain from axis actions")
    p.add_argument("--a", type=_positive_ratio_flag, required=True, metavar="p/q")
    p.add_argument("--b", type=_positive_ratio_flag, required=True, metavar="p/q")
    cutoff_arg(p)
    out_arg(p)
    p.set_defaults(func=_cmd_zeta_toric)

    p = sub.add_parser("zeta-s1", help="zeta of a circle-invariant domain "
                                       "from a Morse data file")
    p.add_argument("file")
    cutoff_arg(p)
    out_arg(p)
    p.set_defaults(func=_cmd_zeta_s1)

    p = sub.add_parser("barcode", help="barcode of a filtered complex file")
    p.add_argument("file")
    p.add_argument("--out", metavar="PATH",
                   help="also write the barcode as a JSON file")
    p.set_defaults(func=_cmd_barcode)

    p = sub.add_parser("zeta-persistence",
                       help="zeta of the persistence module of a complex file")
    p.add_argument("file")
    cutoff_arg(p)
    out_arg(p)
    p.set_defaults(func=_cmd_zeta_persistence)

    p = sub.add_parser("mobius-transform",
                       help="Moebius product transform of an integer series file")
    p.add_argument("file")
    cutoff_arg(p)
    out_arg(p)
    p.set_defaults(func=_cmd_mobius)

    p = sub.add_parser("compare", help="compare two series files up to a cutoff")
    p.add_argument("file_a")
    p.add_argument("file_b")
    cutoff_arg(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("distinguish",
                       help="test a zeta series file against the toric form")
    p.add_argument("file")
    cutoff_arg(p)
    p.set_defaults(func=_cmd_distinguish)

    return parser


def _fail(code: int, message: str) -> int:
    print(f"reebzeta: error: {message}", file=sys.stderr)
    return code


def _load(path: str, from_obj):
    """Read and validate an input file; any library error here counts as
    a validation failure of the file, not a mathematical one."""
    obj = serialize.load_json(path)
    try:
        return from_obj(obj, path)
    except SchemaError:
        raise
    except ReebZetaError as exc:
        raise SchemaError(path, f"{type(exc).__name__}: {exc}") from exc


def _load_complex(path: str):
    obj = serialize.load_json(path)
    try:
        return serialize.complex_from_obj(obj, path).validate()
    except SchemaError:
        raise
    except ReebZetaError as exc:
        raise SchemaError(path, f"{type(exc).__name__}: {exc}") from exc


def _print_series(series: NovikovSeries) -> None:
    for s, c in series.items():
        print(f"{format_ratio(s)}\t{format_ratio(c)}")
    print(f"cutoff\t{format_ratio(series.cutoff)}")


def _emit_series(series: NovikovSeries, out_path) -> None:
    _print_series(series)
    if out_path:
        serialize.dump_json(serialize.series_to_obj(series), out_path)


def _first_difference(a: NovikovSeries, b: NovikovSeries):
    for s in sorted(set(a.support()) | set(b.support())):
        ca, cb = a.coefficient(s), b.coefficient(s)
        if ca != cb:
            return s, ca, cb
    return None


def _cmd_zeta_orbits(args) -> int:
    orbit_set = _load(args.file, serialize.orbit_set_from_obj)
    if args.form == "exp":
        result = orbits.zeta_exp_form(orbit_set, args.cutoff)
    elif args.form == "product":
        result = orbits.zeta_product_form(orbit_set, args.cutoff)
    elif args.form == "ech":
        result = orbits.zeta_ech_form(orbit_set, args.cutoff)
    else:
        exp_form = orbits.zeta_exp_form(orbit_set, args.cutoff)
        result = orbits.zeta_product_form(orbit_set, args.cutoff)
        if exp_form != result:
            diff = _first_difference(exp_form, result)
            return _fail(CONSISTENCY_ERROR,
                         f"exp and product forms disagree at t^{format_ratio(diff[0])}: "
                         f"{format_ratio(diff[1])} vs {format_ratio(diff[2])}")
    _emit_series(result, args.out)
    return 0


def _cmd_zeta_toric(args) -> int:
    domain = domains.ToricDomain(args.a, args.b)
    _emit_series(domains.toric_zeta(domain, args.cutoff), args.out)
    return 0


def _cmd_zeta_s1(args) -> int:
    morse = _load(args.file, serialize.morse_from_obj)
    _emit_series(domains.s1_invariant_zeta(morse, args.cutoff), args.out)
    return 0


def _cmd_barcode(args) -> int:
    complex_ = _load_complex(args.file)
    barcode = persistence.barcode_decompose(complex_)
    obj = serialize.barcode_to_obj(barcode)
    print(json.dumps(obj, indent=2))
    if args.out:
        serialize.dump_json(obj, args.out)
    return 0


def _cmd_zeta_persistence(args) -> int:
    complex_ = _load_complex(args.file)
    _emit_series(persistence.zeta_persistence(complex_, args.cutoff), args.out)
    return 0


def _cmd_mobius(args) -> int:
    series = _load(args.file, serialize.series_from_obj)
    _emit_series(mobius_product(series, args.cutoff), args.out)
    return 0


def _cmd_compare(args) -> int:
    series_a = _load(args.file_a, serialize.series_from_obj)
    series_b = _load(args.file_b, serialize.series_from_obj)
    limit = min(series_a.cutoff, series_b.cutoff)
    if args.cutoff > limit:
        return _fail(MATH_ERROR,
                     f"cutoff {format_ratio(args.cutoff)} exceeds the "
                     f"validity {format_ratio(limit)} of the inputs")
    series_a = series_a.truncate(args.cutoff)
    series_b = series_b.truncate(args.cutoff)
    if series_a == series_b:
        print("EQUAL")
    else:
        s, ca, cb = _first_difference(series_a, series_b)
        print(f"DIFFER\t{format_ratio(s)}\t{format_ratio(ca)}\t{format_ratio(cb)}")
    return 0


def _cmd_distinguish(args) -> int:
    series = _load(args.file, serialize.series_from_obj)
    if args.cutoff > series.cutoff:
        return _fail(MATH_ERROR,
                     f"cutoff {format_ratio(args.cutoff)} exceeds the "
                     f"series validity {format_ratio(series.cutoff)}")
    result = domains.distinguish_from_toric(series.truncate(args.cutoff))
    if result.witness is None:
        print(result.verdict.value)
    else:
        print(f"{result.verdict.value}\t{format_ratio(result.witness)}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, SchemaError) as exc:
        return _fail(PARSE_ERROR, str(exc))
    except ReebZetaError as exc:
        # Precondition of a computation on valid inputs; file-content
        # problems were already routed to SchemaError by the loaders.
        return _fail(MATH_ERROR, f"{type(exc).__name__}: {exc}")


if __name__ == "__main__":
    sys.exit(main())
