"""Command-line front end: params, table, orbit, render, classify, validate.

Every command is a thin adapter over one library call; no numeric logic
lives here.  Exit codes: 0 success, 1 usage error, 2 domain error,
3 when `validate` finds an unexplained discrepancy.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import IO, Iterator

from .core import QuantumNumbers, orbit_for
from .elements import Z_FIRST, Z_LAST, classify
from .errors import DegenerateError, DomainError, NotFoundError, ResolutionError
from .geometry import sample_trajectory
from .output import (
    FORMATS,
    default_revolutions,
    parameter_rows,
    render_svg,
    row_to_dict,
    write_parameter_table,
    write_trajectory_csv,
)
from .reference import Verdict, errata_report, validate_all

PROG = "sommerfeld"

_PARAMS_LINES = (
    ("omega", "omega"),
    ("epsilon", "epsilon"),
    ("a/a0", "a_over_a0"),
    ("r_min", "r_min"),
    ("r_max", "r_max"),
    ("delta_theta", "delta_theta"),
    ("v/c", "ground_speed"),
    ("E/mc^2", "energy_ratio"),
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; the contract reserves 2 for domain errors
    def error(self, message: str) -> None:
        raise _UsageError(f"{self.format_usage().rstrip()}\n{self.prog}: error: {message}")


def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    return parse


def _add_qn_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--nr", type=_int_at_least(0), default=1, metavar="N",
                        help="radial quantum number (default 1)")
    parser.add_argument("--ntheta", type=_int_at_least(1), default=1, metavar="N",
                        help="azimuthal quantum number (default 1)")


def _add_format_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--format", dest="fmt", choices=FORMATS, default="text",
                       help="output format (default text)")
    group.add_argument("--json", action="store_true", help="shorthand for --format json")


def _add_out_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", metavar="PATH", default=None,
                        help="write to PATH instead of standard output")


def _add_sampling_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--revolutions", type=_int_at_least(1), default=None, metavar="N",
                        help="radial periods to trace (default: enough to close the rosette, capped)")
    parser.add_argument("--samples", type=_int_at_least(16), default=1024, metavar="N",
                        help="polyline samples per radial period (default 1024)")


def build_parser() -> _Parser:
    parser = _Parser(prog=PROG, description="Relativistic Kepler orbits of hydrogen-like ions")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("params", help="orbit parameters for one ion")
    p.add_argument("--z", type=int, required=True, help="nuclear charge")
    _add_qn_flags(p)
    _add_format_flags(p)
    _add_out_flag(p)
    p.set_defaults(handler=_cmd_params)

    p = sub.add_parser("table", help="parameter table over a Z range")
    p.add_argument("--z-from", type=int, default=Z_FIRST, metavar="Z")
    p.add_argument("--z-to", type=int, default=Z_LAST, metavar="Z")
    _add_qn_flags(p)
    _add_format_flags(p)
    _add_out_flag(p)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("orbit", help="sample a trajectory to CSV")
    p.add_argument("--z", type=int, required=True)
    _add_qn_flags(p)
    _add_sampling_flags(p)
    _add_out_flag(p)
    p.set_defaults(handler=_cmd_orbit)

    p = sub.add_parser("render", help="render a trajectory as SVG")
    p.add_argument("--z", type=int, required=True)
    _add_qn_flags(p)
    _add_sampling_flags(p)
    _add_out_flag(p)
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("classify", help="Coulomb field-strength tier for Z")
    p.add_argument("--z", type=int, required=True)
    _add_out_flag(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("validate", help="recompute the published tables and report errata")
    _add_out_flag(p)
    p.set_defaults(handler=_cmd_validate)

    return parser


@contextmanager
def _out_stream(args: argparse.Namespace) -> Iterator[IO[str]]:
    if args.out is None:
        yield sys.stdout
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _chosen_format(args: argparse.Namespace) -> str:
    return "json" if args.json else args.fmt


def _cmd_params(args: argparse.Namespace) -> int:
    rows = parameter_rows([args.z], QuantumNumbers(args.nr, args.ntheta))
    fmt = _chosen_format(args)
    with _out_stream(args) as out:
        if fmt == "text":
            p = rows[0].params
            for label, attr in _PARAMS_LINES:
                out.write(f"{label:<12} = {getattr(p, attr):.6g}\n")
            out.write(f"{'winding':<12} = {p.winding_raw:.6g} (rounds to {p.winding})\n")
        elif fmt == "json":
            out.write(json.dumps(row_to_dict(rows[0]), indent=2, allow_nan=False) + "\n")
        else:
            write_parameter_table(rows, fmt, out)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.z_from > args.z_to:
        raise _UsageError(f"{PROG} table: error: --z-from {args.z_from} exceeds --z-to {args.z_to}")
    rows = parameter_rows(range(args.z_from, args.z_to + 1), QuantumNumbers(args.nr, args.ntheta))
    with _out_stream(args) as out:
        write_parameter_table(rows, _chosen_format(args), out)
    return 0


def _sampled(args: argparse.Namespace):
    params = orbit_for(args.z, args.nr, args.ntheta)
    revolutions = args.revolutions or default_revolutions(params)
    return sample_trajectory(params, revolutions=revolutions, samples_per_rev=args.samples)


def _cmd_orbit(args: argparse.Namespace) -> int:
    poly = _sampled(args)
    with _out_stream(args) as out:
        write_trajectory_csv(poly, out)
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    poly = _sampled(args)
    with _out_stream(args) as out:
        out.write(render_svg(poly))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    tier = classify(args.z)
    with _out_stream(args) as out:
        out.write(tier.describe() + "\n")
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    discrepancies = validate_all()
    with _out_stream(args) as out:
        out.write(errata_report(discrepancies))
    if any(d.verdict is Verdict.NEW_DISCREPANCY for d in discrepancies):
        return 3
    return 0


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (DomainError, NotFoundError, ResolutionError, DegenerateError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(argv=None))


if __name__ == "__main__":
    main()
