"""Command-line interface: ``liesheets <subcommand> ...`` or ``python -m liesheets``.

Exit status is 0 on success (booleans print ``true``/``false``), 1 on a
domain error or a failed verification, 2 on unparseable arguments.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import classical, exceptional, matrix_oracle, partitions, type_a
from .partitions import LieAlgebraKind, Partition

# subcommand -> library operations it reaches
COMMAND_OPERATIONS = {
    "dual": ["partitions.dual"],
    "dominance": ["partitions.dominates"],
    "partitions": ["partitions.enumerate_partitions"],
    "valid": ["partitions.is_valid"],
    "collapse": ["partitions.collapse"],
    "dim": ["partitions.orbit_dimension"],
    "sheet": ["type_a.sheet_from_orbit"],
    "sheet-order": ["type_a.sheet_precedes"],
    "sheet-closure": ["type_a.sheet_closure"],
    "sheet-poset": ["type_a.sheet_poset_dot"],
    "counterexamples": [
        "type_a.phenomenon2_counterexamples",
        "classical.phenomenon1_counterexamples",
    ],
    "orbit-closure": ["classical.orbit_closure_leq"],
    "rigid": ["classical.is_rigid"],
    "induced": ["classical.is_induced"],
    "induce": ["classical.induce"],
    "verify-exceptional": [
        "exceptional.load_catalog",
        "exceptional.verify_paper_examples",
    ],
    "exceptional-closure": ["exceptional.closure_contains"],
    "oracle-check": [
        "matrix_oracle.jordan_matrix",
        "matrix_oracle.centralizer_dim",
        "matrix_oracle.closure_leq_via_ranks",
    ],
}


class DomainError(Exception):
    """Valid syntax, but the request makes no sense for the given algebra."""


def _partition_arg(text: str) -> Partition:
    try:
        return partitions.parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _kind_arg(text: str) -> LieAlgebraKind:
    try:
        return partitions.parse_kind(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list_arg(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("block sizes must be positive")
    return values


def _orbits_arg(text: str) -> list[Partition]:
    return [_partition_arg(t) for t in text.split("/")]


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _orbit(kind: LieAlgebraKind, lam: Partition) -> classical.NilpotentOrbit:
    return classical.NilpotentOrbit(kind, lam)


def _load(path: Path | None) -> exceptional.Catalog:
    if path is None:
        return exceptional.load_bundled_catalog()
    with open(path, encoding="utf-8") as fh:
        return exceptional.load_catalog(fh)


# Each handler returns (json-friendly result, text to print, exit status).

def cmd_dual(a):
    res = partitions.dual(a.lam)
    return str(res), str(res), 0


def cmd_dominance(a):
    res = partitions.dominates(a.lam, a.mu)
    return res, _bool(res), 0


def cmd_partitions(a):
    res = [str(p) for p in partitions.enumerate_partitions(a.n)]
    return res, "\n".join(res), 0


def cmd_valid(a):
    res = partitions.is_valid(a.lam, a.kind)
    return res, _bool(res), 0


def cmd_collapse(a):
    if a.kind.family == "A":
        raise DomainError("collapse is defined for families B, C, D only")
    res = partitions.collapse(a.lam, a.kind)
    return str(res), str(res), 0


def cmd_dim(a):
    res = partitions.orbit_dimension(a.lam, a.kind)
    return res, str(res), 0


def cmd_sheet(a):
    s = type_a.sheet_from_orbit(a.lam)
    res = {"orbit": str(s.lam), "levi_blocks": str(s.levi_blocks), "orbit_dim": s.orbit_dim}
    text = f"orbit {s.lam}\nlevi_blocks {s.levi_blocks}\norbit_dim {s.orbit_dim}"
    return res, text, 0


def cmd_sheet_order(a):
    res = type_a.sheet_precedes(a.lam, a.lam_prime)
    return res, _bool(res), 0


def cmd_sheet_closure(a):
    res = [str(p) for p in sorted(type_a.sheet_closure(a.lam_prime), reverse=True)]
    return res, "\n".join(res), 0


def cmd_sheet_poset(a):
    dot = type_a.sheet_poset_dot(a.n, workers=a.threads)
    if a.dot:
        Path(a.dot).write_text(dot, encoding="utf-8")
        return {"dot_file": str(a.dot)}, f"wrote {a.dot}", 0
    return dot, dot.rstrip("\n"), 0


def cmd_counterexamples(a):
    if a.kind is not None:
        pairs = classical.phenomenon1_counterexamples(a.kind)
        res = [{"rigid": str(hi.lam), "non_rigid": str(lo.lam)} for hi, lo in pairs]
        text = "\n".join(f"{hi.lam} > {lo.lam}" for hi, lo in pairs)
        return res, text, 0
    if a.family != "A" or a.n is None:
        raise DomainError("use --family A --n <n> or --kind <B|C|D>:<N>")
    if a.n < 1:
        raise DomainError("n must be >= 1")
    pairs = type_a.phenomenon2_counterexamples(a.n, workers=a.threads)
    res = [{"orbit": str(lam), "sheet": str(lp)} for lam, lp in pairs]
    text = "\n".join(f"{lam} < {lp}" for lam, lp in pairs)
    return res, text, 0


def cmd_orbit_closure(a):
    res = classical.orbit_closure_leq(_orbit(a.kind, a.lower), _orbit(a.kind, a.upper))
    return res, _bool(res), 0


def cmd_rigid(a):
    res = classical.is_rigid(_orbit(a.kind, a.lam))
    return res, _bool(res), 0


def cmd_induced(a):
    res = classical.is_induced(_orbit(a.kind, a.lam))
    return res, _bool(res), 0


def cmd_induce(a):
    kind, blocks = a.kind, a.blocks
    tail_N = 0 if kind.family == "A" else kind.N - 2 * sum(blocks)
    if tail_N < 0:
        raise DomainError(f"blocks {blocks} do not fit in {kind}")
    levi = classical.LeviSpec(kind, blocks, tail_N)
    res = classical.induce(levi, a.orbits, a.tail)
    return str(res.lam), str(res.lam), 0


def cmd_verify_exceptional(a):
    report = exceptional.verify_paper_examples(_load(a.data))
    res = {
        "passed": report.passed,
        "total": report.total,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks],
    }
    return res, report.render().rstrip("\n"), 0 if report.ok else 1


def cmd_exceptional_closure(a):
    try:
        res = exceptional.closure_contains(_load(a.data), a.algebra, a.upper, a.lower)
    except KeyError as exc:
        raise DomainError(exc.args[0]) from None
    return res, _bool(res), 0


def cmd_oracle_check(a):
    if a.max_n < 1:
        raise DomainError("--max-n must be >= 1")
    report = matrix_oracle.oracle_check(a.max_n)
    res = {"passed": report.passed, "total": report.total}
    return res, report.render().rstrip("\n"), 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liesheets",
        description="Sheets, nilpotent orbits and rigidity in classical Lie algebras.",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON object per result")
    parser.add_argument("--threads", type=int, default=1, help="worker threads for exhaustive searches")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help):
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=func)
        return p

    p = add("dual", cmd_dual, "dual (conjugate) partition")
    p.add_argument("lam", type=_partition_arg)

    p = add("dominance", cmd_dominance, "does LAM dominate MU")
    p.add_argument("lam", type=_partition_arg)
    p.add_argument("mu", type=_partition_arg)

    p = add("partitions", cmd_partitions, "list partitions of N, reverse-lexicographic")
    p.add_argument("n", type=int)

    p = add("valid", cmd_valid, "is LAM a nilpotent orbit of KIND")
    p.add_argument("kind", type=_kind_arg)
    p.add_argument("lam", type=_partition_arg)

    p = add("collapse", cmd_collapse, "B/C/D collapse of LAM")
    p.add_argument("kind", type=_kind_arg)
    p.add_argument("lam", type=_partition_arg)

    p = add("dim", cmd_dim, "dimension of the orbit LAM of KIND")
    p.add_argument("kind", type=_kind_arg)
    p.add_argument("lam", type=_partition_arg)

    p = add("sheet", cmd_sheet, "the sl_n sheet through the orbit LAM")
    p.add_argument("lam", type=_partition_arg)

    p = add("sheet-order", cmd_sheet_order, "is the sheet of LAM in the closure of the sheet of LAM'")
    p.add_argument("lam", type=_partition_arg)
    p.add_argument("lam_prime", type=_partition_arg, metavar="lam'")

    p = add("sheet-closure", cmd_sheet_closure, "sheets in the closure of the sheet of LAM'")
    p.add_argument("lam_prime", type=_partition_arg, metavar="lam'")

    p = add("sheet-poset", cmd_sheet_poset, "Hasse diagram of sl_n sheet closures as DOT")
    p.add_argument("n", type=int)
    p.add_argument("--dot", metavar="FILE", help="write DOT to FILE instead of stdout")

    p = add("counterexamples", cmd_counterexamples, "sheets whose closure is not a union of sheets")
    p.add_argument("--family", choices=["A"])
    p.add_argument("--n", type=int)
    p.add_argument("--kind", type=_kind_arg)

    p = add("orbit-closure", cmd_orbit_closure, "is orbit LOWER in the closure of orbit UPPER")
    p.add_argument("kind", type=_kind_arg)
    p.add_argument("lower", type=_partition_arg)
    p.add_argument("upper", type=_partition_arg)

    p = add("rigid", cmd_rigid, "is the orbit LAM of KIND rigid")
    p.add_argument("kind", type=_kind_arg)
    p.add_argument("lam", type=_partition_arg)

    p = add("induced", cmd_induced, "is the orbit induced from a proper Levi (exhaustive search)")
    p.add_argument("kind", type=_kind_arg)
    p.add_argument("lam", type=_partition_arg)

    p = add("induce", cmd_induce, "induce an orbit from a Levi subalgebra")
    p.add_argument("kind", type=_kind_arg)
    p.add_argument("--blocks", type=_int_list_arg, required=True, help="gl block sizes a1,a2,...")
    p.add_argument("--orbits", type=_orbits_arg, help="block orbits separated by '/', e.g. 2,1/1^2")
    p.add_argument("--tail", type=_partition_arg, help="orbit of the residual factor")

    p = add("verify-exceptional", cmd_verify_exceptional, "check the exceptional rigid/non-rigid pairs")
    p.add_argument("--data", type=Path, help="catalog file (default: bundled data)")

    p = add("exceptional-closure", cmd_exceptional_closure, "is LOWER in the closure of UPPER in the catalog")
    p.add_argument("algebra", choices=exceptional.EXCEPTIONAL_ALGEBRAS)
    p.add_argument("upper")
    p.add_argument("lower")
    p.add_argument("--data", type=Path, help="catalog file (default: bundled data)")

    p = add("oracle-check", cmd_oracle_check, "cross-check type A formulas against exact matrices")
    p.add_argument("--max-n", type=int, required=True)
    return parser


def _inputs(args: argparse.Namespace) -> dict:
    skip = {"func", "command", "json", "threads"}
    out = {}
    for key, value in vars(args).items():
        if key in skip or value is None:
            continue
        if isinstance(value, (list, tuple)) and value and isinstance(value[0], Partition):
            value = [str(v) for v in value]
        elif isinstance(value, tuple):
            value = list(value)
        elif not isinstance(value, (int, bool)):
            value = str(value)
        out[key] = value
    return out


@dataclass
class RunResult:
    status: int
    output: str
    error: str = ""


def run(argv: list[str]) -> RunResult:
    """Run one command and capture what it would print."""
    stdout, stderr = io.StringIO(), io.StringIO()
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return RunResult(int(exc.code or 0), stdout.getvalue(), stderr.getvalue())
    if args.threads < 1:
        return RunResult(2, "", "liesheets: error: --threads must be >= 1\n")

    try:
        result, text, status = args.func(args)
    except (DomainError, ValueError, OSError) as exc:
        return RunResult(1, "", f"liesheets: {exc}\n")

    if args.json:
        payload = {"command": args.command, "inputs": _inputs(args), "result": result}
        return RunResult(status, json.dumps(payload, sort_keys=True) + "\n")
    return RunResult(status, text + "\n" if text else "")


def main(argv: list[str] | None = None) -> None:
    res = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.output)
    sys.stderr.write(res.error)
    sys.exit(res.status)
