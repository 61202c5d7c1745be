"""Command-line front end.

Subcommands: generate, verify, sweep, weights, unknowns, oracle.  Data goes
to standard output (or --output), diagnostics to standard error.  Exit codes:
0 success / all checks pass, 1 verification failure, 2 usage error.

All output is exact by default; --approx appends floating-point columns for
human convenience.  Identical invocations produce byte-identical output
(except the timing column of sweep).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .generators import (
    GELL_MANN_NAMES,
    MATRIX_NAMES,
    build_generator_set,
    to_gell_mann,
)
from .structure import dimension, weight_multiplicities
from .unknowns import block_unknown_squares
from .verify import (
    CheckReport,
    casimir_eigenvalue,
    oracle_solve,
    sweep,
    verify_irrep,
)


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su3rep",
        description="Exact su(3) irreducible-representation matrices: "
        "generation and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_label(p: argparse.ArgumentParser) -> None:
        p.add_argument("--p", type=_nonnegative, required=True)
        p.add_argument("--q", type=_nonnegative, required=True)

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("-o", "--output", default=None, help="write to file instead of stdout")

    gen = sub.add_parser("generate", help="emit one basis matrix")
    add_label(gen)
    gen.add_argument(
        "--matrix", required=True, choices=MATRIX_NAMES + GELL_MANN_NAMES
    )
    gen.add_argument("--format", choices=("json", "csv"), default="json")
    gen.add_argument(
        "--approx",
        action="store_true",
        help="append a floating-point column to the exact output",
    )
    add_output(gen)

    ver = sub.add_parser("verify", help="run the exact checks for one irrep")
    add_label(ver)
    ver.add_argument(
        "--oracle",
        action="store_true",
        help="also solve the commutation relations directly and compare",
    )

    swp = sub.add_parser("sweep", help="verify every irrep below a dimension bound")
    swp.add_argument("--max-d", type=_positive, required=True)
    swp.add_argument("--jobs", type=_positive, default=1)

    wts = sub.add_parser("weights", help="emit weight multiplicities as CSV")
    add_label(wts)
    add_output(wts)

    unk = sub.add_parser("unknowns", help="emit the squared block unknowns as CSV")
    add_label(unk)
    add_output(unk)

    orc = sub.add_parser(
        "oracle", help="emit brute-force-solved squared block unknowns as CSV"
    )
    add_label(orc)
    add_output(orc)

    return parser


def _usage_error(message: str) -> int:
    print(f"su3rep: error: {message}", file=sys.stderr)
    return 2


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# generate


def _term_triples(value) -> list[dict[str, int]]:
    return [{"num": num, "den": den, "sf": sf} for num, den, sf in value.to_triples()]


def _generate_payload(p: int, q: int, name: str, approx: bool) -> dict:
    gs = build_generator_set(p, q)
    entries = []
    if name in MATRIX_NAMES:
        mat = gs.matrices()[name]
        for r, c, v in mat.items():
            entry = {"row": r + 1, "col": c + 1, "value": _term_triples(v)}
            if approx:
                entry["approx"] = v.to_float()
            entries.append(entry)
    else:
        fmat = to_gell_mann(gs)[int(name[1:])]
        positions = sorted(
            {(r, c) for r, c, _ in fmat.re.items()}
            | {(r, c) for r, c, _ in fmat.im.items()}
        )
        for r, c in positions:
            entry = {
                "row": r + 1,
                "col": c + 1,
                "re": _term_triples(fmat.re.get(r, c)),
                "im": _term_triples(fmat.im.get(r, c)),
            }
            if approx:
                entry["approx"] = {
                    "re": fmat.re.get(r, c).to_float(),
                    "im": fmat.im.get(r, c).to_float(),
                }
            entries.append(entry)
    return {
        "p": p,
        "q": q,
        "d": dimension(p, q),
        "matrix": name,
        "entries": entries,
    }


def _generate_csv(p: int, q: int, name: str, approx: bool) -> str:
    gs = build_generator_set(p, q)
    lines = []
    if name in MATRIX_NAMES:
        header = "row,col,num,den,sf"
        lines.append(header + ",approx" if approx else header)
        for r, c, v in gs.matrices()[name].items():
            for num, den, sf in v.to_triples():
                line = f"{r + 1},{c + 1},{num},{den},{sf}"
                if approx:
                    line += f",{Fraction(num, den) * sf ** 0.5!r}"
                lines.append(line)
    else:
        header = "row,col,part,num,den,sf"
        lines.append(header + ",approx" if approx else header)
        fmat = to_gell_mann(gs)[int(name[1:])]
        positions = sorted(
            {(r, c) for r, c, _ in fmat.re.items()}
            | {(r, c) for r, c, _ in fmat.im.items()}
        )
        for r, c in positions:
            for part, mat in (("re", fmat.re), ("im", fmat.im)):
                for num, den, sf in mat.get(r, c).to_triples():
                    line = f"{r + 1},{c + 1},{part},{num},{den},{sf}"
                    if approx:
                        line += f",{Fraction(num, den) * sf ** 0.5!r}"
                    lines.append(line)
    return "\n".join(lines) + "\n"


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.format == "json":
        payload = _generate_payload(args.p, args.q, args.matrix, args.approx)
        _write(json.dumps(payload) + "\n", args.output)
    else:
        _write(_generate_csv(args.p, args.q, args.matrix, args.approx), args.output)
    return 0


# ---------------------------------------------------------------------------
# verify / sweep


def render_report(report: CheckReport, with_oracle: bool) -> str:
    commutators = [r for r in report.relations if r.name.startswith("[")]
    comm_ok = sum(1 for r in commutators if r.exact)
    lines = [
        f"irrep ({report.p}, {report.q}): d = {dimension(report.p, report.q)}",
        f"commutators: {comm_ok}/{len(commutators)} exact",
    ]
    casimir = next(r for r in report.relations if r.name.startswith("casimir"))
    lines.append(
        f"casimir: {'exact' if casimir.exact else 'FAILED'}, "
        f"eigenvalue {casimir_eigenvalue(report.p, report.q)}"
    )
    structure = [
        r
        for r in report.relations
        if not r.name.startswith("[") and not r.name.startswith("casimir")
        and not r.name.startswith(("block unknowns", "oracle"))
    ]
    struct_ok = sum(1 for r in structure if r.exact)
    lines.append(f"structure: {struct_ok}/{len(structure)} exact")
    if with_oracle:
        oracle = report.relations[-1]
        lines.append(
            "oracle: block unknowns match brute-force solve"
            if oracle.exact
            else f"oracle: {oracle.name}"
        )
    for failure in report.failures():
        lines.append(f"FAILED: {failure.name} (|residual| ~ {failure.residual:g})")
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines) + "\n"


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.oracle and dimension(args.p, args.q) > 64:
        return _usage_error("--oracle is desk-scale only (d <= 64)")
    report = verify_irrep(args.p, args.q, with_oracle=args.oracle)
    sys.stdout.write(render_report(report, args.oracle))
    return 0 if report.passed else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    summary = sweep(args.max_d, jobs=args.jobs)
    lines = ["p,q,d,commutators,casimir,structure,ms"]
    for row in summary.rows:
        lines.append(
            f"{row.p},{row.q},{row.d},"
            f"{'pass' if row.commutators_ok else 'fail'},"
            f"{'pass' if row.casimir_ok else 'fail'},"
            f"{'pass' if row.structure_ok else 'fail'},"
            f"{row.millis}"
        )
    sys.stdout.write("\n".join(lines) + "\n")
    n = len(summary.rows)
    print(
        f"{n} irreps checked below d = {args.max_d}: "
        + ("all pass" if summary.passed else "FAILURES PRESENT"),
        file=sys.stderr,
    )
    return 0 if summary.passed else 1


# ---------------------------------------------------------------------------
# weights / unknowns / oracle


def _cmd_weights(args: argparse.Namespace) -> int:
    counts = weight_multiplicities(args.p, args.q)
    lines = ["two_t3,three_y,count"]
    for (two_t3, three_y), count in sorted(counts.items()):
        lines.append(f"{two_t3},{three_y},{count}")
    _write("\n".join(lines) + "\n", args.output)
    return 0


def _squares_csv(squares: dict[tuple[int, int], Fraction]) -> str:
    lines = ["i,j,num,den"]
    for (i, j), value in sorted(squares.items()):
        lines.append(f"{i},{j},{value.numerator},{value.denominator}")
    return "\n".join(lines) + "\n"


def _cmd_unknowns(args: argparse.Namespace) -> int:
    if args.p < args.q:
        return _usage_error("unknowns requires p >= q (use the (q, p) irrep)")
    _write(_squares_csv(block_unknown_squares(args.p, args.q)), args.output)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.p < args.q:
        return _usage_error("oracle requires p >= q (use the (q, p) irrep)")
    if dimension(args.p, args.q) > 64:
        return _usage_error("oracle is desk-scale only (d <= 64)")
    _write(_squares_csv(oracle_solve(args.p, args.q)), args.output)
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "weights": _cmd_weights,
    "unknowns": _cmd_unknowns,
    "oracle": _cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
