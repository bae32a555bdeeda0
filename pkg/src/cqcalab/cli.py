"""Command-line interface wiring the library to files and pipelines.

Every run is fully determined by its arguments; randomized subcommands
require an explicit seed.  Exit codes: 0 success, 1 validation failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import automaton, finite_chain, render, stabilizer
from .automaton import CqcaMatrix, CqcaValidationError, ValidatedCqca
from .finite_chain import (
    BoundaryBreaksAutomorphism,
    FiniteOperator,
    GeneratorsDoNotCommute,
    NotPure,
)
from .laurent import PolySyntaxError, render_poly
from .phase_space import parse_observable
from .stabilizer import StateValidationError


def _add_matrix_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "matrix",
        nargs="?",
        help="built-in name (glider, fractal, identity, swap, shear:<poly>) or matrix file",
    )
    for key in ("t11", "t12", "t21", "t22"):
        parser.add_argument(f"--{key}", help=f"entry {key} in the polynomial grammar")


def _matrix_from_args(args: argparse.Namespace) -> ValidatedCqca:
    entries = [args.t11, args.t12, args.t21, args.t22]
    if any(e is not None for e in entries):
        if args.matrix is not None or any(e is None for e in entries):
            raise UsageError("give either a matrix source or all four --tij entries")
        return automaton.validate(CqcaMatrix.from_strings(*entries))
    if args.matrix is None:
        raise UsageError("a matrix source is required")
    return automaton.resolve_matrix(args.matrix)


class UsageError(Exception):
    pass


def _write_output(data: bytes, path: str | None) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as handle:
            handle.write(data)


def _cmd_validate(args: argparse.Namespace) -> int:
    t = _matrix_from_args(args)
    print(f"valid, class={t.class_tag}, tr={render_poly(t.trace())}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    t = _matrix_from_args(args)
    line = str(t.class_tag)
    if isinstance(t.class_tag, automaton.Periodic):
        p = automaton.period(t, args.cap)
        line += f", period={p}" if p is not None else f", period>{args.cap}"
    print(line)
    return 0


def _cmd_evolve(args: argparse.Namespace) -> int:
    t = _matrix_from_args(args)
    v = parse_observable(args.obs)
    for k in range(args.steps + 1):
        print(f"{k}\t{v}")
        v = t.apply(v)
    return 0


def _cmd_diagram(args: argparse.Namespace) -> int:
    t = _matrix_from_args(args)
    diagram = render.build_diagram(t, parse_observable(args.obs), args.steps)
    _write_output(render.emit(diagram, args.format), args.output)
    return 0


def _cmd_entangle(args: argparse.Namespace) -> int:
    t = _matrix_from_args(args)
    state = stabilizer.validate_state(parse_observable(args.state))
    points = stabilizer.entanglement_trajectory(t, state, args.steps, args.region)
    _write_output(stabilizer.trajectory_csv(points).encode("ascii"), args.output)
    return 0


def _cmd_rate(args: argparse.Namespace) -> int:
    t = _matrix_from_args(args)
    state = stabilizer.validate_state(parse_observable(args.state))
    predicted, empirical = stabilizer.asymptotic_rate(t, state, args.steps)
    print(f"predicted={predicted} empirical={empirical}")
    return 0


def _parse_site_letter(text: str, origin: int) -> tuple[int, str]:
    site_text, sep, letter = text.rpartition(":")
    if not sep or letter not in ("X", "Y", "Z"):
        raise UsageError(f"expected SITE:LETTER with letter X, Y or Z, got {text!r}")
    return int(site_text) - origin, letter


def _cmd_finite(args: argparse.Namespace) -> int:
    t = _matrix_from_args(args)
    rule = finite_chain.truncate_rule(t, args.sites, args.boundary)
    origin = args.origin
    did_something = False
    if args.obs is not None:
        did_something = True
        v = parse_observable(args.obs)
        span = v.support()
        x_mask = z_mask = 0
        if span is not None:
            for site in range(span[0], span[1] + 1):
                letter = v.letter_at(site)
                index = site - origin
                if not 0 <= index < args.sites:
                    raise UsageError(f"observable site {site} falls off the chain")
                if letter in ("X", "Y"):
                    x_mask |= 1 << index
                if letter in ("Z", "Y"):
                    z_mask |= 1 << index
        op = FiniteOperator.hermitian(args.sites, x_mask, z_mask)
        for k, evolved in enumerate(finite_chain.evolve_finite(rule, op, args.steps)):
            print(f"{k}\t{evolved}")
    if args.mirror is not None:
        did_something = True
        site, letter = _parse_site_letter(args.mirror, origin)
        found = finite_chain.mirror_time(rule, site, letter)
        if found is None:
            print(f"mirror {args.mirror}: not mirrored within {2 * args.sites + 2} steps")
        else:
            print(f"mirror {args.mirror}: step {found}")
    if args.parity is not None:
        did_something = True
        site, letter = _parse_site_letter(args.parity, origin)
        op = FiniteOperator.single_site(args.sites, site, letter)
        for k, evolved in enumerate(finite_chain.evolve_finite(rule, op, args.steps)):
            print(f"{k}\t{finite_chain.global_y_parity(evolved):+d}")
    if not did_something:
        print(f"valid rule on {args.sites} sites ({args.boundary} boundary)")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    region_sizes = [int(part) for part in args.regions.split(",") if part]
    if not region_sizes:
        raise UsageError("--regions must list at least one region size")
    mismatches = 0
    checks = 0
    for sample in range(args.samples):
        t = automaton.random_cqca(args.seed + sample, args.word_length, args.shear_degree)
        states = stabilizer.evolve(stabilizer.all_spins_up(), t, args.steps)
        for k, state in enumerate(states):
            if args.ring < 2 * (2 * state.n + 1):
                break
            for size in region_sizes:
                if not 2 * state.n <= size <= args.ring - 2 * state.n - 2:
                    continue
                measured = finite_chain.ring_state_entropy(
                    state, args.ring, range(size)
                )
                expected = min(2 * state.n, size)
                checks += 1
                if measured != expected:
                    mismatches += 1
                    print(
                        f"MISMATCH sample={sample} step={k} region={size}: "
                        f"rank oracle {measured} vs closed form {expected}"
                    )
    print(f"{checks} checks, {mismatches} mismatches")
    return 1 if mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cqca", description="Clifford cellular automaton laboratory"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the automaton conditions")
    _add_matrix_arguments(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("classify", help="report the dynamical class")
    _add_matrix_arguments(p)
    p.add_argument("--cap", type=int, default=64, help="period search bound")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("evolve", help="print an observable trajectory")
    _add_matrix_arguments(p)
    p.add_argument("--obs", required=True, help="observable literal, e.g. ZYX@-1")
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=_cmd_evolve)

    p = sub.add_parser("diagram", help="render a space-time diagram")
    _add_matrix_arguments(p)
    p.add_argument("--obs", default="Z@0")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--format", choices=("ascii", "ppm"), default="ascii")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("entangle", help="entanglement trajectory as CSV")
    _add_matrix_arguments(p)
    p.add_argument("--state", default="Z@0", help="generator seed literal")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--region", type=int, help="finite region length L for E_tri")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_entangle)

    p = sub.add_parser("rate", help="predicted vs empirical entanglement rate")
    _add_matrix_arguments(p)
    p.add_argument("--state", default="Z@0")
    p.add_argument("--steps", type=int, default=256)
    p.set_defaults(func=_cmd_rate)

    p = sub.add_parser("finite", help="finite-chain simulation and diagnostics")
    _add_matrix_arguments(p)
    p.add_argument("--sites", type=int, required=True)
    p.add_argument("--boundary", choices=("open", "ring"), default="open")
    p.add_argument("--origin", type=int, default=0, help="label of the leftmost site")
    p.add_argument("--obs", help="observable to evolve")
    p.add_argument("--steps", type=int, default=0)
    p.add_argument("--mirror", metavar="SITE:LETTER", help="search for the mirror step")
    p.add_argument("--parity", metavar="SITE:LETTER", help="global-Y parity table")
    p.set_defaults(func=_cmd_finite)

    p = sub.add_parser("oracle", help="symbolic-vs-ring equivalence sweep")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--ring", type=int, default=64)
    p.add_argument("--steps", type=int, default=20)
    p.add_argument("--word-length", type=int, default=6)
    p.add_argument("--shear-degree", type=int, default=2)
    p.add_argument("--regions", default="8,16,24,32,40")
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (
        CqcaValidationError,
        StateValidationError,
        BoundaryBreaksAutomorphism,
        GeneratorsDoNotCommute,
        NotPure,
        PolySyntaxError,
    ) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
