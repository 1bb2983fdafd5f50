"""Command-line front end: validation, graphs, chords, searches, audio."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .audio import RenderPlan, envelope_from_dict, render, write_wav
from .cayley import CayleyGraph, export_dot
from .counterpoint import (
    ConsonantSeed,
    Dichotomy,
    enumerate_weak_witnesses,
    extend_to_partitions,
    fux_dichotomy,
    maximal_consonant_extension,
    minimal_oriented_refinement,
    strong_search_report,
)
from .modular import AffineMap
from .music import (
    MAJOR,
    MINOR,
    MusicalSystem,
    chord_catalog,
    circle_of_fifths,
    interval_table,
    largest_chord_within_octave,
    scale,
    system_from_factors,
    triad,
)


class CliError(Exception):
    """A user-input problem reported as a one-line diagnostic (exit 2)."""


class _Parser(argparse.ArgumentParser):
    # Route argparse's own failures through the one-line/exit-2 path.
    def error(self, message: str) -> None:
        raise CliError(message)


def _system(args: argparse.Namespace) -> MusicalSystem:
    if args.n is not None:
        raise CliError("n is derived from -p and -q; pass -p P -q Q")
    if args.p is None or args.q is None:
        raise CliError("a system needs both -p and -q")
    return system_from_factors(args.p, args.q, args.s, args.f0)


def _indent(args: argparse.Namespace) -> Optional[int]:
    return 2 if args.pretty else None


def _human_active(args: argparse.Namespace) -> bool:
    """Reports print tables only on a terminal or under --pretty."""
    if args.json:
        return False
    return args.pretty or sys.stdout.isatty()


def _cmd_validate(args: argparse.Namespace) -> int:
    system = _system(args)
    if args.json:
        print(json.dumps(system.to_dict(), indent=_indent(args)))
    else:
        print(
            f"ok: n={system.n} p={system.p} q={system.q} "
            f"s={system.s} f0={system.f0}"
        )
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    system = _system(args)
    graph = CayleyGraph(system.generator_set, oriented=args.oriented)
    dot = export_dot(graph)
    if args.out:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(dot)
    else:
        sys.stdout.write(dot)
    return 0


def _cmd_distance(args: argparse.Namespace) -> int:
    system = _system(args)
    if args.oriented:
        graph = CayleyGraph(system.generator_set, oriented=True)
        length = graph.oriented_path_length(args.a, args.b)
    else:
        graph = CayleyGraph(system.generator_set, oriented=False)
        length = graph.distance(args.a, args.b)
    if args.json:
        print(
            json.dumps(
                {
                    "from": args.a,
                    "to": args.b,
                    "oriented": args.oriented,
                    "length": length,
                },
                indent=_indent(args),
            )
        )
    else:
        print(length)
    return 0


def _cmd_chords(args: argparse.Namespace) -> int:
    system = _system(args)
    if args.quality is None:
        if args.root is not None:
            raise CliError("--root requires --quality")
        entries = chord_catalog(system)
        if args.json:
            print(
                json.dumps([entry.to_dict() for entry in entries], indent=_indent(args))
            )
        else:
            for entry in entries:
                pattern = " ".join(f"+{w}" for w in entry.steps)
                print(f"{entry.name}: {pattern}")
        return 0
    root = args.root if args.root is not None else 0
    small = triad(system, root, args.quality)
    big = largest_chord_within_octave(system, root, args.quality)
    if args.json:
        print(
            json.dumps(
                {"triad": small.to_dict(), "largest_within_octave": big.to_dict()},
                indent=_indent(args),
            )
        )
    else:
        print("triad: " + " ".join(str(x) for x in small.notes))
        print("largest within octave: " + " ".join(str(x) for x in big.notes))
    return 0


def _cmd_scale(args: argparse.Namespace) -> int:
    system = _system(args)
    result = scale(system, args.root, args.quality)
    if args.json:
        print(result.to_json(indent=_indent(args)))
    else:
        print(" ".join(str(x) for x in result.notes))
    return 0


def _cmd_circle(args: argparse.Namespace) -> int:
    system = _system(args)
    circle = circle_of_fifths(system)
    if args.json:
        print(circle.to_json(indent=_indent(args)))
    else:
        print(" ".join(str(x) for x in circle.sequence[: system.n]))
    return 0


def _parse_residues(text: str, n: int) -> frozenset[int]:
    try:
        values = [int(token) for token in text.replace(",", " ").split()]
    except ValueError:
        raise CliError(f"could not parse residue list {text!r}") from None
    return frozenset(value % n for value in values)


def _report_lines(report) -> list[str]:
    generators = ",".join(str(s) for s in report.generators)
    lines = [f"n={report.n} S={{{generators}}} examined={report.examined}"]
    for witness in report.witnesses:
        lines.append(f"witness {witness.multiplier}x+{witness.offset}")
    for record in report.partitions:
        consonant = ",".join(str(x) for x in record.consonant)
        dissonant = ",".join(str(x) for x in record.dissonant)
        lines.append(
            f"K={{{consonant}}} D={{{dissonant}}} "
            f"via {record.multiplier}x+{record.offset} "
            f"strong_witnesses={record.strong_witness_count}"
        )
    for note in report.notes:
        lines.append(f"note: {note}")
    return lines


def _emit_report(args: argparse.Namespace, report) -> None:
    if _human_active(args):
        for line in _report_lines(report):
            print(line)
    else:
        print(report.to_json(indent=_indent(args) if args.json else None))


def _cmd_counterpoint(args: argparse.Namespace) -> int:
    system = _system(args)
    seed = ConsonantSeed(system.symmetric_generator_set)
    graph = CayleyGraph(system.symmetric_generator_set, oriented=False)
    if args.mode == "weak":
        report = enumerate_weak_witnesses(system.n, seed.generators.elements)
        _emit_report(args, report)
        return 0
    if args.mode == "strong":
        if args.consonants:
            consonant = _parse_residues(args.consonants, system.n)
        elif (system.p, system.q) == (4, 3):
            consonant = fux_dichotomy().consonant
        else:
            raise CliError(
                "--strong needs --consonants for systems other than -p 4 -q 3"
            )
        dissonant = frozenset(range(system.n)) - consonant
        dichotomy = Dichotomy(system.ring, consonant, dissonant)
        _emit_report(args, strong_search_report(dichotomy, graph))
        return 0
    if args.mode == "maximal":
        if (args.multiplier is None) != (args.offset is None):
            raise CliError("--maximal takes both --multiplier and --offset")
        if args.multiplier is not None:
            witness = AffineMap(system.ring, args.multiplier, args.offset)
        else:
            weak = enumerate_weak_witnesses(system.n, seed.generators.elements)
            if not weak.witnesses:
                raise CliError(f"Z_{system.n} admits no weak witness to extend")
            witness = weak.witnesses[0]
        _emit_report(args, maximal_consonant_extension(seed, witness, graph))
        return 0
    if args.mode == "refine":
        report = extend_to_partitions(seed, graph)
        oriented = CayleyGraph(system.generator_set, oriented=True)
        dichotomy = minimal_oriented_refinement(report, oriented)
        if _human_active(args):
            print("K = " + " ".join(str(x) for x in sorted(dichotomy.consonant)))
            print("D = " + " ".join(str(x) for x in sorted(dichotomy.dissonant)))
        else:
            print(dichotomy.to_json(indent=_indent(args) if args.json else None))
        return 0
    _emit_report(args, extend_to_partitions(seed, graph))
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    with open(args.plan, encoding="utf-8") as handle:
        data = json.load(handle)
    plan = RenderPlan.from_dict(data)
    buffer = render(
        plan,
        envelope_from_dict(data.get("envelope")),
        float(data.get("modulation_depth", 0.0)),
    )
    write_wav(buffer, args.out)
    if args.json:
        print(
            json.dumps(
                {
                    "out": args.out,
                    "samples": len(buffer),
                    "sample_rate": buffer.sample_rate,
                },
                indent=_indent(args),
            )
        )
    else:
        print(f"wrote {args.out}: {len(buffer)} samples at {buffer.sample_rate} Hz")
    return 0


def _cmd_intervals(args: argparse.Namespace) -> int:
    rows = interval_table()
    if args.json:
        print(json.dumps([row.to_dict() for row in rows], indent=_indent(args)))
    else:
        for row in rows:
            ratio = f"{row.pythagorean.numerator}/{row.pythagorean.denominator}"
            print(f"{row.index:2d} {row.name:<14} {ratio:>8} deviation {row.deviation:.6f}")
    return 0


def _build_parser() -> _Parser:
    system_flags = argparse.ArgumentParser(add_help=False)
    system_flags.add_argument("-p", type=int, help="larger step factor")
    system_flags.add_argument("-q", type=int, help="smaller step factor")
    system_flags.add_argument(
        "-s", type=float, default=2.0, help="octave frequency ratio (default 2)"
    )
    system_flags.add_argument(
        "--f0", type=float, default=440.0, help="base frequency in Hz (default 440)"
    )
    system_flags.add_argument(
        "-n", type=int, help="rejected; the modulus is always derived as p*q"
    )

    output_flags = argparse.ArgumentParser(add_help=False)
    output_flags.add_argument(
        "--json", action="store_true", help="machine-readable JSON on stdout"
    )
    output_flags.add_argument(
        "--pretty", action="store_true", help="indent JSON / prefer tables"
    )

    parser = _Parser(
        prog="cayleytones",
        description="Musical systems on Z_n = Z_pq: graphs, chords, "
        "counterpoint searches, and WAV rendering.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    cmd = sub.add_parser(
        "validate",
        parents=[system_flags, output_flags],
        help="check system parameters and report the normalized system",
    )
    cmd.set_defaults(handler=_cmd_validate)

    cmd = sub.add_parser(
        "graph",
        parents=[system_flags, output_flags],
        help="export the step graph as DOT",
    )
    cmd.add_argument("--oriented", action="store_true", help="keep edge directions")
    cmd.add_argument("--out", help="write DOT to this file instead of stdout")
    cmd.set_defaults(handler=_cmd_graph)

    cmd = sub.add_parser(
        "distance",
        parents=[system_flags, output_flags],
        help="path length between two notes",
    )
    cmd.add_argument("a", type=int, help="start note")
    cmd.add_argument("b", type=int, help="end note")
    cmd.add_argument("--oriented", action="store_true", help="directed paths only")
    cmd.set_defaults(handler=_cmd_distance)

    cmd = sub.add_parser(
        "chords",
        parents=[system_flags, output_flags],
        help="chord catalog, or one root's triad and largest chord",
    )
    cmd.add_argument("--root", type=int, help="root note (with --quality)")
    cmd.add_argument("--quality", choices=[MAJOR, MINOR])
    cmd.set_defaults(handler=_cmd_chords)

    cmd = sub.add_parser(
        "scale",
        parents=[system_flags, output_flags],
        help="scale notes for a root and quality",
    )
    cmd.add_argument("--root", type=int, default=0, help="root note (default 0)")
    cmd.add_argument("--quality", choices=[MAJOR, MINOR], required=True)
    cmd.set_defaults(handler=_cmd_scale)

    cmd = sub.add_parser(
        "circle",
        parents=[system_flags, output_flags],
        help="circle-of-fifths sequence",
    )
    cmd.set_defaults(handler=_cmd_circle)

    cmd = sub.add_parser(
        "counterpoint",
        parents=[system_flags, output_flags],
        help="affine witness and partition searches",
    )
    cmd.add_argument("action", choices=["search"], help="only 'search' exists")
    mode = cmd.add_mutually_exclusive_group()
    mode.add_argument(
        "--weak",
        dest="mode",
        action="store_const",
        const="weak",
        help="enumerate weak witnesses over {0} union S",
    )
    mode.add_argument(
        "--strong",
        dest="mode",
        action="store_const",
        const="strong",
        help="scan for strong witnesses of one partition",
    )
    mode.add_argument(
        "--extend",
        dest="mode",
        action="store_const",
        const="extend",
        help="grow the seed to full partitions (default)",
    )
    mode.add_argument(
        "--maximal",
        dest="mode",
        action="store_const",
        const="maximal",
        help="maximal consonant supersets under one involution",
    )
    mode.add_argument(
        "--refine",
        dest="mode",
        action="store_const",
        const="refine",
        help="pick the partition minimizing oriented lengths",
    )
    cmd.add_argument(
        "--consonants",
        help="comma-separated consonant residues (required by --strong off Z_12)",
    )
    cmd.add_argument("--multiplier", type=int, help="h of the map used by --maximal")
    cmd.add_argument("--offset", type=int, help="w of the map used by --maximal")
    cmd.set_defaults(handler=_cmd_counterpoint, mode="extend")

    cmd = sub.add_parser(
        "render",
        parents=[output_flags],
        help="render a JSON plan file to a WAV file",
    )
    cmd.add_argument("--plan", required=True, help="JSON plan file")
    cmd.add_argument("--out", required=True, help="output WAV path")
    cmd.set_defaults(handler=_cmd_render)

    cmd = sub.add_parser(
        "intervals",
        parents=[output_flags],
        help="Pythagorean vs equal-temperament reference table",
    )
    cmd.set_defaults(handler=_cmd_intervals)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: missing field {exc} in input", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
