###
# Copyright 2026-present The galepoly Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
###
"""Command-line front end for generating polytopes, checking their properties, and running the
geometric oracle.

Exit status 0 means success or that the checked property holds, 1 that it does not, and 2 that the
command could not be carried out.
"""

import argparse
import csv
import fractions
import io
import json
import pathlib
import sys
import typing

from galepoly import __version__
from galepoly.families import braxtope_facets, classify_gale_braxial, is_braxial, is_braxtope
from galepoly.families import is_multiplex, is_multiplicial, is_ordinary, multiplex_facets
from galepoly.families import ordinary_char_d_facets
from galepoly.facet_list import FacetList, sort_key
from galepoly.gale import DEFAULT_MAX_GALE_SEARCH, characteristic, cyclic_facets, find_gale_order
from galepoly.gale import is_gale, is_reversal_closed
from galepoly.hull import hull_facets
from galepoly.lattice import build_lattice, classify_by_universal_edges, f_vector, flag_vector
from galepoly.lattice import is_isomorphic, is_neighbourly, is_self_dual, is_simplicial, polygon
from galepoly.lattice import pyramid, universal_edges
from galepoly.points import DEFAULT_EPS, DEFAULT_PRECISION_BITS, PointConfig, interior_angles
from galepoly.points import moment_points, psi_points, sigma_points, trig_moment4_points
from galepoly.realization import bicyclic_report, detect_period, verify_pc_step
from galepoly.repro import format_table, run_all

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2

Row = typing.Tuple[str, int]

CHECKS: typing.Mapping[str, typing.Callable[[FacetList, bool], bool]] = {
    "gale": lambda fl, strict: is_gale(fl),
    "ordinary": lambda fl, strict: is_ordinary(fl, strict=strict),
    "multiplicial": lambda fl, strict: is_multiplicial(fl, strict=strict),
    "braxial": lambda fl, strict: is_braxial(fl, strict=strict),
    "multiplex": lambda fl, strict: is_multiplex(fl),
    "braxtope": lambda fl, strict: is_braxtope(fl),
    "neighbourly": lambda fl, strict: is_neighbourly(build_lattice(fl)),
    "selfdual": lambda fl, strict: bool(is_self_dual(build_lattice(fl))),
    "simplicial": lambda fl, strict: is_simplicial(fl),
    "reversal": lambda fl, strict: is_reversal_closed(fl),
}


class CommandError(Exception):
    """A command was given arguments it cannot act on."""


def _read_facets(path: str, /) -> FacetList:
    return FacetList.from_json(pathlib.Path(path).read_text(encoding="utf-8"))


def _read_points(path: str, /) -> PointConfig:
    return PointConfig.from_json(pathlib.Path(path).read_text(encoding="utf-8"))


def _emit(args: argparse.Namespace, text: str, /) -> None:
    if getattr(args, "output", None):
        pathlib.Path(args.output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _render(args: argparse.Namespace, payload: typing.Mapping[str, typing.Any], /, *,
            rows: typing.Optional[typing.Sequence[Row]] = None) -> str:
    fmt = getattr(args, "format", "json")
    if fmt == "csv":
        if rows is None:
            raise CommandError(f"CSV output is not available for '{args.command}'")

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["dimension-set", "count"])
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")

    if fmt == "text":
        return "\n".join(f"{key}: {json.dumps(value)}" for (key, value) in payload.items())

    return json.dumps(payload, sort_keys=True)


def _gen(args: argparse.Namespace) -> int:
    family = args.family
    if family == "cyclic":
        fl = cyclic_facets(args.n, args.d)
    elif family == "multiplex":
        fl = multiplex_facets(args.n, args.d)
    elif family == "ordinary":
        fl = ordinary_char_d_facets(args.n, args.d)
    elif family == "braxtope":
        fl = braxtope_facets(args.v, args.e)
    elif family == "polygon":
        fl = polygon(args.g)
    else:
        if args.base is None:
            raise CommandError("'gen pyramid' needs a base polytope file")
        fl = pyramid(_read_facets(args.base))

    _emit(args, fl.to_json())
    return EXIT_TRUE


def _parse_parameters(text: str, /) -> typing.List[fractions.Fraction]:
    try:
        return [fractions.Fraction(t) for t in text.split(",")]
    except ValueError as err:
        raise CommandError(f"Cannot parse curve parameters {text!r}: {err}") from err


def _points(args: argparse.Namespace) -> int:
    curve = args.curve
    if curve == "moment":
        ts = _parse_parameters(args.ts) if args.ts else list(range(1, args.n + 1))
        pc = moment_points(ts, args.d)
    elif curve == "psi":
        pc = psi_points(args.m, interior_angles(args.n, bits=args.bits), bits=args.bits,
                        eps=args.eps)
    elif curve == "trig4":
        pc = trig_moment4_points(args.n, bits=args.bits, eps=args.eps)
    else:
        pc = sigma_points(args.p, args.q, args.n, bits=args.bits, eps=args.eps)

    _emit(args, pc.to_json())
    return EXIT_TRUE


def _hull(args: argparse.Namespace) -> int:
    _emit(args, hull_facets(_read_points(args.points)).to_json())
    return EXIT_TRUE


def _check(args: argparse.Namespace) -> int:
    holds = CHECKS[args.property](_read_facets(args.facets), args.strict)
    _emit(args, f"{args.property}: {json.dumps(holds)}")
    return EXIT_TRUE if holds else EXIT_FALSE


def _analyze(args: argparse.Namespace) -> int:
    fl = _read_facets(args.facets)
    quantity = args.quantity
    rows: typing.Optional[typing.List[Row]] = None
    if quantity == "fvector":
        counts = f_vector(build_lattice(fl)).proper
        payload: typing.Dict[str, typing.Any] = {"f_vector": list(counts)}
        rows = [(str(j), count) for (j, count) in enumerate(counts)]
    elif quantity == "flagvector":
        entries = flag_vector(build_lattice(fl)).rows()
        payload = {"flag_vector": [[list(dims), count] for (dims, count) in entries]}
        rows = [(" ".join(map(str, dims)), count) for (dims, count) in entries]
    elif quantity == "char":
        payload = {"characteristic": characteristic(fl)}
    elif quantity == "gale-order":
        order = find_gale_order(fl, max_n=args.max_n)
        payload = {"order": None if order is None else list(order)}
    elif quantity == "universal-edges":
        edges = universal_edges(build_lattice(fl))
        payload = {"count": len(edges), "universal_edges": [list(sort_key(e)) for e in edges]}
    elif quantity == "universal-class":
        payload = {"class": classify_by_universal_edges(build_lattice(fl)).value}
    else:
        classification = classify_gale_braxial(fl)
        payload = {
            "s": classification.s,
            "kind": classification.kind.value,
            "period": classification.period,
        }

    _emit(args, _render(args, payload, rows=rows))
    return EXIT_TRUE


def _period(args: argparse.Namespace) -> int:
    _emit(args, _render(args, {"period": detect_period(_read_points(args.points))}))
    return EXIT_TRUE


def _bicyclic(args: argparse.Namespace) -> int:
    report = bicyclic_report(args.p, args.q, args.n, bits=args.bits, eps=args.eps,
                             recheck_precision=args.recheck)
    _emit(args, _render(args, report.to_dict()))
    return EXIT_TRUE


def _compare(args: argparse.Namespace) -> int:
    (first, second) = (_read_facets(path) for path in args.files)
    witness = is_isomorphic(build_lattice(first), build_lattice(second))
    payload: typing.Dict[str, typing.Any] = {"isomorphic": witness.found}
    if witness.vertex_map is not None:
        payload["vertex_map"] = [[v, witness.vertex_map[v]] for v in sorted(witness.vertex_map)]

    _emit(args, _render(args, payload))
    return EXIT_TRUE if witness else EXIT_FALSE


def _verify_pc(args: argparse.Namespace) -> int:
    report = verify_pc_step(_read_points(args.points), args.k)
    _emit(args, _render(args, report.to_dict()))
    return EXIT_TRUE if report.passed else EXIT_FALSE


def _repro(args: argparse.Namespace) -> int:
    results = run_all(include_slow=not args.skip_slow)
    _emit(args, format_table(results))
    return EXIT_TRUE if all(result.passed for result in results) else EXIT_FALSE


def _add_output(parser: argparse.ArgumentParser, /, *, formats: bool = False) -> None:
    parser.add_argument("-o", "--output", help="write to this file instead of stdout")
    if formats:
        parser.add_argument("--format", choices=("json", "csv", "text"), default="json")


def _add_precision(parser: argparse.ArgumentParser, /) -> None:
    parser.add_argument("--bits", type=int, default=DEFAULT_PRECISION_BITS,
                        help=f"mantissa bits of float mode (default: {DEFAULT_PRECISION_BITS})")
    parser.add_argument("--eps", default=DEFAULT_EPS,
                        help=f"absolute tolerance of float mode (default: {DEFAULT_EPS})")


def build_parser() -> argparse.ArgumentParser:
    """Return the parser for every subcommand."""
    parser = argparse.ArgumentParser(prog="galepoly", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generate the facet list of a polytope family")
    gen.add_argument("family",
                     choices=("cyclic", "multiplex", "ordinary", "braxtope", "polygon", "pyramid"))
    gen.add_argument("base", nargs="?", help="facet list file of the base of a pyramid")
    for name in ("n", "d", "v", "e", "g"):
        gen.add_argument(f"--{name}", type=int)
    _add_output(gen)
    gen.set_defaults(handler=_gen)

    points = commands.add_parser("points", help="generate points on a curve")
    points.add_argument("curve", choices=("moment", "psi", "trig4", "sigma"))
    points.add_argument("--ts", help="comma-separated moment curve parameters, e.g. 1,2,7/2")
    for name in ("n", "d", "m", "p", "q"):
        points.add_argument(f"--{name}", type=int)
    _add_precision(points)
    _add_output(points)
    points.set_defaults(handler=_points)

    hull = commands.add_parser("hull", help="compute the facets of the hull of a point file")
    hull.add_argument("points")
    _add_output(hull)
    hull.set_defaults(handler=_hull)

    check = commands.add_parser("check", help="check a property of a facet list file")
    check.add_argument("property", choices=sorted(CHECKS))
    check.add_argument("facets")
    check.add_argument("--strict", action="store_true",
                       help="check every proper face rather than only the facets")
    _add_output(check)
    check.set_defaults(handler=_check)

    analyze = commands.add_parser("analyze", help="compute an invariant of a facet list file")
    analyze.add_argument(
        "quantity", choices=("fvector", "flagvector", "char", "gale-order", "universal-edges",
                             "universal-class", "classify"))
    analyze.add_argument("facets")
    analyze.add_argument(
        "--max-n", type=int, default=DEFAULT_MAX_GALE_SEARCH,
        help="largest polytope whose vertex arrays gale-order searches"
        f" (default: {DEFAULT_MAX_GALE_SEARCH})")
    _add_output(analyze, formats=True)
    analyze.set_defaults(handler=_analyze)

    period = commands.add_parser("period", help="detect the period of a point file")
    period.add_argument("points")
    _add_output(period, formats=True)
    period.set_defaults(handler=_period)

    bicyclic = commands.add_parser("bicyclic", help="report on the bi-cyclic polytope B(p,q,n)")
    for name in ("p", "q", "n"):
        bicyclic.add_argument(f"--{name}", type=int, required=True)
    bicyclic.add_argument("--recheck", action="store_true",
                          help="recompute the hull at twice the precision")
    _add_precision(bicyclic)
    _add_output(bicyclic, formats=True)
    bicyclic.set_defaults(handler=_bicyclic)

    compare = commands.add_parser("compare", help="compare two facet list files")
    compare.add_argument("--iso", action="store_true", required=True,
                         help="test the face lattices for isomorphism")
    compare.add_argument("files", nargs=2)
    _add_output(compare, formats=True)
    compare.set_defaults(handler=_compare)

    verify_pc = commands.add_parser("verify-pc",
                                    help="check the last point of a periodically-cyclic sequence")
    verify_pc.add_argument("points")
    verify_pc.add_argument("--k", type=int, required=True)
    _add_output(verify_pc, formats=True)
    verify_pc.set_defaults(handler=_verify_pc)

    repro = commands.add_parser("repro", help="run the acceptance suite")
    repro.add_argument("suite", choices=("all", ))
    repro.add_argument("--skip-slow", action="store_true")
    _add_output(repro)
    repro.set_defaults(handler=_repro)

    return parser


def _missing_parameters(args: argparse.Namespace, /) -> typing.List[str]:
    required = {
        ("gen", "cyclic"): ("n", "d"),
        ("gen", "multiplex"): ("n", "d"),
        ("gen", "ordinary"): ("n", "d"),
        ("gen", "braxtope"): ("v", "e"),
        ("gen", "polygon"): ("g", ),
        ("points", "psi"): ("m", "n"),
        ("points", "trig4"): ("n", ),
        ("points", "sigma"): ("p", "q", "n"),
    }
    key = (args.command, getattr(args, "family", getattr(args, "curve", None)))
    names = list(required.get(key, ()))
    if key == ("points", "moment"):
        names = ["d"] if args.ts else ["n", "d"]

    return [f"--{name}" for name in names if getattr(args, name) is None]


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """Run the command line and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_ERROR

    if missing := _missing_parameters(args):
        print(f"galepoly: error: '{args.command}' needs {', '.join(missing)}", file=sys.stderr)
        return EXIT_ERROR

    try:
        return typing.cast(int, args.handler(args))
    except (CommandError, OSError, ValueError) as err:
        print(f"galepoly: error: {err}", file=sys.stderr)
        return EXIT_ERROR
