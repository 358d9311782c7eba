import argparse
import logging
import sys
from typing import Callable, Sequence

from .identities import run_identity_suite
from .output import CommandOutput, render
from ..bijections.BijectionError import BijectionError
from ..bijections.gamma import gamma, gamma_trace
from ..bijections.theta import theta, theta_inverse, theta_trace
from ..distributions.PolyError import PolyError
from ..distributions.UnknownStatisticError import UnknownStatisticError
from ..distributions.catalan import catalan_by_enumeration, catalan_qp
from ..distributions.cfrac import cfrac_series, qp_catalan_levels
from ..distributions.distribution import default_variables, distribution, resolve_statistics
from ..distributions.multipoly import MultiPoly
from ..distributions.wilf import wilf_partition
from ..dyck.DyckError import DyckError
from ..dyck.dyck import centered_multitunnels, parse, tunnel_counts, tunnels
from ..dyck.phi import phi_inv
from ..parsing.LexerError import LexerError
from ..parsing.ParserError import ParserError
from ..perm.PermutationError import PermutationError
from ..perm.operators import complement, inverse, rc, rci, reverse
from ..perm.permutation import Permutation, parse_patterns, parse_permutation
from ..perm.statistics import arc_pairs, statistics
from ..tableaux.TableauError import TableauError
from ..tableaux.psi import psi
from ..utils.config import default_jobs

_logger = logging.getLogger(__name__)

DOMAIN_ERRORS = (LexerError, ParserError, PermutationError, DyckError, TableauError, BijectionError, PolyError)

PERMUTATION_MAPS: dict[str, Callable[[Permutation], Permutation]] = {
    "theta": theta,
    "theta-inv": theta_inverse,
    "gamma": gamma,
    "r": reverse,
    "c": complement,
    "i": inverse,
    "rc": rc,
    "rci": rci,
}
MAPS = [*PERMUTATION_MAPS, "psi", "phi-inv"]
ALL_PATTERNS = "123,132,213,231,312,321"


class UsageError(Exception):
    pass


def _word(sigma: Permutation) -> str:
    return str(sigma)


def _label(pattern: Permutation) -> str:
    return "".join(map(str, pattern))


def parse_vars(text: str | None, stats: Sequence[str]) -> dict[str, str]:
    """
    Read "crs=x,nes=y"; statistics left out keep their default variable.

    Raises:
        UsageError: On a malformed pair.
        UnknownStatisticError: On a statistic that is not requested.
    """
    mapping = default_variables(stats)
    if not text:
        return mapping
    for item in text.split(","):
        stat, sep, var = item.partition("=")
        stat, var = stat.strip(), var.strip()
        if not sep or not stat or not var:
            raise UsageError(f"malformed --vars entry {item!r}, expected stat=var")
        resolve_statistics([stat])
        if stat not in stats:
            raise UsageError(f"--vars names {stat}, which is not in --stats")
        mapping[stat] = var
    return mapping


def _poly_output(record: dict, poly: MultiPoly) -> CommandOutput:
    record["poly"] = poly.to_json()
    record["pretty"] = poly.pretty()
    return CommandOutput(record, poly.csv_rows(), poly.pretty())


def cmd_stats(args: argparse.Namespace) -> CommandOutput:
    sigma = parse_permutation(args.permutation)
    values = statistics(sigma).as_dict()
    arcs = [{"i": pair.i, "j": pair.j, "kind": pair.kind} for pair in arc_pairs(sigma)]
    record = {"permutation": _word(sigma), **values, "arcs": arcs}
    rows = [["statistic", "value"], *([name, value] for name, value in values.items())]
    return CommandOutput(record, rows)


def cmd_apply(args: argparse.Namespace) -> CommandOutput:
    if args.trace and args.map not in ("theta", "gamma"):
        raise UsageError(f"--trace is only available for theta and gamma, not {args.map}")
    if args.map == "phi-inv":
        path = parse(args.input)
        image = _word(phi_inv(path))
        source = path.steps
    elif args.map == "psi":
        sigma = parse_permutation(args.input)
        image = psi(sigma).steps
        source = _word(sigma)
    else:
        sigma = parse_permutation(args.input)
        image = _word(PERMUTATION_MAPS[args.map](sigma))
        source = _word(sigma)
    record: dict = {"map": args.map, "input": source, "image": image}
    rows: list[list] = [["map", "input", "image"], [args.map, source, image]]

    if args.trace and args.map == "theta":
        trace = theta_trace(sigma)
        record["trace"] = [{"l": row.l, "prefix": _word(row.prefix),
                            "insertion": list(row.insertion) if row.insertion else None,
                            "image": _word(row.image)} for row in trace.rows]
        rows = [["l", "prefix", "insertion", "image"]]
        rows.extend([row.l, _word(row.prefix), f"({row.insertion[0]},{row.insertion[1]})" if row.insertion else "",
                     _word(row.image)] for row in trace.rows)
    elif args.trace:
        steps = [_word(step) for step in gamma_trace(sigma).steps]
        record["trace"] = steps
        rows = [["step", "permutation"], *([index, step] for index, step in enumerate(steps))]
    return CommandOutput(record, rows, image)


def cmd_dist(args: argparse.Namespace) -> CommandOutput:
    stats = resolve_statistics([s.strip() for s in args.stats.split(",") if s.strip()])
    patterns = parse_patterns(args.avoid) if args.avoid else []
    variables = parse_vars(args.vars, stats)
    poly = distribution(args.n, patterns, stats, variables, args.jobs)
    record = {"n": args.n, "avoid": [_label(tau) for tau in patterns], "stats": stats, "vars": variables}
    return _poly_output(record, poly)


def cmd_wilf(args: argparse.Namespace) -> CommandOutput:
    stats = resolve_statistics([s.strip() for s in args.stats.split(",") if s.strip()])
    report = wilf_partition(parse_patterns(args.patterns), stats, args.n_max, args.jobs)
    classes = [{"members": wilf_class.labels, "witness": [poly.pretty() for poly in wilf_class.witness]}
               for wilf_class in report.classes]
    record = {"stats": stats, "n_max": args.n_max, "classes": classes}
    rows = [["class", "members", "n", "poly"]]
    for index, wilf_class in enumerate(report.classes, start=1):
        for n, poly in enumerate(wilf_class.witness, start=1):
            rows.append([index, " ".join(wilf_class.labels), n, poly.pretty()])
    text = "\n".join("{" + ", ".join(c["members"]) + "}" for c in classes)
    return CommandOutput(record, rows, text)


def cmd_catalan(args: argparse.Namespace) -> CommandOutput:
    match args.mode:
        case "recurrence":
            poly = catalan_qp(args.n).poly
        case "cfrac":
            poly = cfrac_series(qp_catalan_levels(), args.n)[args.n]
        case _:
            poly = catalan_by_enumeration(args.n, jobs=args.jobs)
    return _poly_output({"n": args.n, "mode": args.mode}, poly)


def cmd_dyck(args: argparse.Namespace) -> CommandOutput:
    match args.dyck_command:
        case "tunnels":
            path = parse(args.word)
            lt, ct, rt = tunnel_counts(path)
            found = [{"up": t.up_index, "down": t.down_index, "start": t.start, "end": t.end, "side": t.side}
                     for t in tunnels(path)]
            record = {"word": path.steps, "lt": lt, "ct": ct, "rt": rt, "tunnels": found}
            rows = [["up", "down", "start", "end", "side"], *([t["up"], t["down"], t["start"], t["end"], t["side"]]
                                                              for t in found)]
            return CommandOutput(record, rows, f"lt {lt}, ct {ct}, rt {rt}")
        case "to-perm":
            path = parse(args.word)
            image = _word(phi_inv(path))
            return CommandOutput({"word": path.steps, "permutation": image},
                                 [["word", "permutation"], [path.steps, image]], image)
        case "from-perm":
            sigma = parse_permutation(args.permutation)
            word = psi(sigma).steps
            return CommandOutput({"permutation": _word(sigma), "word": word},
                                 [["permutation", "word"], [_word(sigma), word]], word)
        case _:
            path = parse(args.word)
            splits = centered_multitunnels(path)
            record = {"word": path.steps, "count": len(splits),
                      "splits": [{"prefix": s.prefix, "middle": s.middle, "suffix": s.suffix} for s in splits]}
            rows = [["prefix", "middle", "suffix"], *([s.prefix, s.middle, s.suffix] for s in splits)]
            return CommandOutput(record, rows, str(len(splits)))


def cmd_verify(args: argparse.Namespace) -> CommandOutput:
    results = run_identity_suite(args.n_max, args.jobs)
    record = {"n_max": args.n_max, "passed": all(r.passed for r in results),
              "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}
    rows = [["name", "passed", "detail"], *([r.name, r.passed, r.detail] for r in results)]
    text = "\n".join(f"{'pass' if r.passed else 'FAIL'}  {r.name}  {r.detail}" for r in results)
    return CommandOutput(record, rows, text)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text} is not a non-negative integer")
    return value


def _add_output_flags(parser: argparse.ArgumentParser, top_level: bool) -> None:
    # Subcommands repeat the flags with suppressed defaults so a value given
    # before the subcommand survives.
    def default(value):
        return value if top_level else argparse.SUPPRESS

    parser.add_argument("--format", choices=["json", "csv"], default=default("json"), help="Output format.")
    parser.add_argument("--pretty", action="store_true", default=default(False),
                        help="Human-readable polynomials and images.")
    parser.add_argument("--jobs", type=_positive, default=default(None),
                        help="Worker processes for enumeration (default: PERMLAB_JOBS or 1).")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permlab",
                                     description="Crossings, nestings and pattern-avoiding permutations.")
    _add_output_flags(parser, top_level=True)
    shared = argparse.ArgumentParser(add_help=False)
    _add_output_flags(shared, top_level=False)
    commands = parser.add_subparsers(dest="command", required=True)

    stats = commands.add_parser("stats", help="All statistics and arc pairs of a permutation.", parents=[shared])
    stats.add_argument("permutation")
    stats.set_defaults(handler=cmd_stats)

    apply = commands.add_parser("apply", help="Apply a bijection or symmetry.", parents=[shared])
    apply.add_argument("map", choices=MAPS)
    apply.add_argument("input", help="A permutation, or a Dyck word for phi-inv.")
    apply.add_argument("--trace", action="store_true", help="Show the recursion (theta) or rewrites (gamma).")
    apply.set_defaults(handler=cmd_apply)

    dist = commands.add_parser("dist", help="Joint distribution polynomial.", parents=[shared])
    dist.add_argument("--n", type=_non_negative, required=True)
    dist.add_argument("--avoid", default="", help="Patterns such as 123,132; empty means all of S_n.")
    dist.add_argument("--stats", required=True, help="Statistics such as crs,nes.")
    dist.add_argument("--vars", default=None, help="Variables such as crs=x,nes=y.")
    dist.set_defaults(handler=cmd_dist)

    wilf = commands.add_parser("wilf", help="Wilf classes modulo statistics.", parents=[shared])
    wilf.add_argument("--n-max", type=_positive, required=True)
    wilf.add_argument("--patterns", default=ALL_PATTERNS)
    wilf.add_argument("--stats", required=True)
    wilf.set_defaults(handler=cmd_wilf)

    catalan = commands.add_parser("catalan", help="The q,p-Catalan polynomial C_n(q,p).", parents=[shared])
    catalan.add_argument("--n", type=_non_negative, required=True)
    catalan.add_argument("--mode", choices=["recurrence", "cfrac", "enumerate"], default="recurrence")
    catalan.set_defaults(handler=cmd_catalan)

    dyck = commands.add_parser("dyck", help="Dyck path tools.", parents=[shared])
    dyck_commands = dyck.add_subparsers(dest="dyck_command", required=True)
    for name, help_text in (("tunnels", "Left, centered and right tunnels."),
                            ("to-perm", "The 132-avoiding permutation of a path."),
                            ("multitunnels", "Centered multitunnels.")):
        sub = dyck_commands.add_parser(name, help=help_text, parents=[shared])
        sub.add_argument("word")
    from_perm = dyck_commands.add_parser("from-perm", help="The path of a 321-avoiding permutation.",
                                         parents=[shared])
    from_perm.add_argument("permutation")
    dyck.set_defaults(handler=cmd_dyck)

    verify = commands.add_parser("verify", help="Run the identity suite.", parents=[shared])
    verify.add_argument("--n-max", type=_positive, default=7)
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one command.

    Returns:
        int: 0 on success, 1 on a domain or parse error (or a failed verify),
        2 on a usage error. argparse exits with 2 by itself.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs is None:
        args.jobs = default_jobs()
    _logger.debug("command %s with %s", args.command, vars(args))
    try:
        output = args.handler(args)
    except UnknownStatisticError as error:
        print(error, file=sys.stderr)
        return 2
    except UsageError as error:
        print(f"UsageError: {error}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as error:
        print(error, file=sys.stderr)
        return 1
    render(output, args.format, args.pretty)
    if args.command == "verify" and not output.record["passed"]:
        return 1
    return 0
