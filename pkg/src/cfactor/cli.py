"""Command-line entry points: ``cfactor solve`` and ``cfactor gen``.

Exit codes of ``solve``: 0 found, 1 none, 2 input error, 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from collections.abc import Sequence
from fractions import Fraction
from typing import TextIO

from cfactor.fileformat import ParseError, parse_instance, read_instance, write_instance
from cfactor.graph import Partition, ValidationError, Weight
from cfactor.oracle import brute_force_connected_f_factor
from cfactor.reduction import ReductionParams, generate_family
from cfactor.solver import (
    NO_F_FACTOR,
    SolveResult,
    connected_f_factor,
    min_connected_f_factor,
)

__all__ = ["ParseError", "parse_instance", "solve_command", "gen_command", "main"]

EXIT_FOUND = 0
EXIT_NONE = 1
EXIT_INPUT = 2
EXIT_ORACLE = 3

log = logging.getLogger("cfactor")


def format_partition(Q: Partition) -> str:
    return " | ".join("{" + ",".join(map(str, sorted(p))) + "}" for p in Q.parts)


def _json_weight(w: Weight | None):
    if w is None or isinstance(w, int):
        return w
    return str(w)


def report(result: SolveResult) -> dict:
    """Machine-readable summary of a solver run."""
    H = result.factor
    witness = result.trace.witness
    return {
        "outcome": result.trace.outcome,
        "edges": None if H is None else [list(e) for e in H.sorted_edges()],
        "weight": _json_weight(result.weight),
        "witness_partition": None if witness is None else witness.as_lists(),
        "trace": result.trace.to_dict(),
    }


def solve_command(
    path: str,
    *,
    min_weight: bool = False,
    as_json: bool = False,
    oracle: bool = False,
    threads: int = 1,
    out: TextIO | None = None,
) -> int:
    """Solve the instance stored at ``path`` and print a report to ``out``."""
    out = out or sys.stdout
    try:
        G, f = read_instance(path)
        if min_weight and not G.weighted:
            raise ValidationError("--min-weight needs a weighted instance")
        f.check_length(G)
        if threads < 1:
            raise ValidationError("--threads must be at least 1")
    except (OSError, UnicodeDecodeError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if min_weight:
        result = min_connected_f_factor(G, f, threads=threads)
    else:
        result = connected_f_factor(G, f, threads=threads)
    doc = report(result)
    code = EXIT_FOUND if result.found else EXIT_NONE

    if oracle:
        truth = brute_force_connected_f_factor(G if min_weight else G.unweighted(), f)
        agree = truth.exists == result.found
        if agree and min_weight and truth.exists:
            agree = truth.best[1] == result.weight
        doc["oracle"] = {
            "exists": truth.exists,
            "weight": _json_weight(truth.best[1]) if truth.best else None,
            "agrees": agree,
        }
        if not agree:
            print("error: solver disagrees with brute-force oracle", file=sys.stderr)
            code = EXIT_ORACLE

    if as_json:
        print(json.dumps(doc, indent=2), file=out)
        return code
    if result.found:
        print("FOUND", file=out)
        if min_weight:
            print(f"weight {result.weight}", file=out)
        for u, v in result.factor.sorted_edges():
            print(f"{u} {v}", file=out)
    elif result.trace.outcome == NO_F_FACTOR:
        print("NO-F-FACTOR", file=out)
    else:
        print("NONE", file=out)
        if result.trace.witness is not None:
            print(f"witness {format_partition(result.trace.witness)}", file=out)
    if oracle:
        print(f"oracle {'agrees' if code != EXIT_ORACLE else 'MISMATCH'}", file=out)
    return code


def gen_command(
    path: str,
    out_dir: str,
    *,
    epsilon: Fraction = Fraction(1),
    part_size: int | None = None,
    max_output: int | None = None,
    out: TextIO | None = None,
) -> int:
    """Write one instance file per reduction instance plus ``manifest.json``."""
    out = out or sys.stdout
    try:
        G, _ = read_instance(path)
        params = ReductionParams(epsilon, part_size, max_output)
        instances = list(generate_family(G.unweighted(), params))
    except (OSError, UnicodeDecodeError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    os.makedirs(out_dir, exist_ok=True)
    entries = []
    for inst in instances:
        name = "path_" + "-".join(map(str, inst.path_witness)) + ".ffactor"
        write_instance(
            os.path.join(out_dir, name),
            inst.graph,
            inst.f,
            comments=[f"path witness {' '.join(map(str, inst.path_witness))}"],
        )
        entries.append(
            {
                "file": name,
                "path_witness": list(inst.path_witness),
                "sigma": {str(k): v for k, v in sorted(inst.sigma.items())},
                "representatives": list(inst.representatives),
                "n": inst.graph.n,
                "m": inst.graph.m,
            }
        )
    manifest = {
        "source": os.path.basename(path),
        "source_vertices": G.n,
        "epsilon": str(params.epsilon),
        "part_size": part_size,
        "instances": entries,
    }
    with open(os.path.join(out_dir, "manifest.json"), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
    print(f"wrote {len(entries)} instance(s) to {out_dir}", file=out)
    return EXIT_FOUND


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfactor", description="Connected f-factor tools.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log solver progress")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="find a connected f-factor")
    s.add_argument("path")
    s.add_argument("--min-weight", action="store_true", help="minimize total edge weight")
    s.add_argument("--json", action="store_true", help="print a JSON report")
    s.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    s.add_argument("--threads", type=int, default=1, help="worker threads for tree search")

    g = sub.add_parser("gen", help="emit reduction instances for a source graph")
    g.add_argument("path")
    g.add_argument("--epsilon", type=_fraction, default=Fraction(1))
    g.add_argument("--part-size", type=int, default=None, help="clique size (desk mode)")
    g.add_argument("--max-output", type=int, default=None)
    g.add_argument("-o", "--output", required=True, help="output directory")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    if args.command == "solve":
        return solve_command(
            args.path,
            min_weight=args.min_weight,
            as_json=args.json,
            oracle=args.oracle,
            threads=args.threads,
        )
    return gen_command(
        args.path,
        args.output,
        epsilon=args.epsilon,
        part_size=args.part_size,
        max_output=args.max_output,
    )


if __name__ == "__main__":
    sys.exit(main())
