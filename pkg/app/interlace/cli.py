"""
Command-line entry point.

    interlace spectrum  --graph c4.el [--laplacian]
    interlace quotient  --matrix a.mat --partition p.part [--col-partition q.part]
    interlace interlace --alpha 2,0,0,-2 --beta 2,-2
    interlace bounds    --graph k3.el --partition p.part
    interlace audit     --theorem 3 --graph c4.el --partition bip.part
    interlace refine    --graph k4e.el [--partition seed.part] [--max-k 2]
    interlace search    --graph c4.el --k 2 --bound lapl2
    interlace join-mu1  --r1 2 --n1 4 --r2 1 --n2 2
    interlace sweep     --kind bounds --max-n 5

Reports go to stdout (or --out), logs to stderr. Exit status: 0 on success,
1 when an audit conclusion fails under satisfied hypotheses, 2 on input or
usage errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import yaml
from pydantic import ValidationError

from ..schema.audit import AuditReport, AuditVerdict, JoinReport, SweepSummary
from ..schema.common import MatrixSource, Tolerance
from ..schema.search import EquitableListing, RefinementReport
from ..schema.spectral import QuotientReport, SpectrumReport
from .audit import (
    audit_corollary1,
    audit_haemers,
    audit_join,
    audit_theorem1,
    audit_theorem2,
    audit_theorem3,
    audit_theorem4,
    audit_theorem5,
    evaluate_all_bounds,
    evaluate_bound,
    finck_grohmann_mu1,
    join_mu1,
    sweep_blow_ups,
    sweep_bounds,
    sweep_haemers,
    sweep_joins,
    sweep_singular,
)
from .config.settings import InterlaceSettings, load_settings
from .core.types import BoundId, DenseMatrix, TolerancePolicy, as_dense
from .exceptions import InterlaceException, MatrixShapeError, UsageError
from .graph.model import Graph, adjacency_matrix, laplacian_matrix
from .interlacing import interlacing_report, quotient_interlacing
from .io.parsers import parse_inputs, parse_spectrum_text
from .io.render import OutputFormat, Renderable, render
from .numeric.eigen import check_symmetric, eigenvalues
from .numeric.singular import singular_values
from .partition.enumeration import stirling2
from .partition.model import Partition, ProductPartition
from .partition.regularity import classify_graph_partition, first_irregular_block
from .quotient.quotient import quotient_matrix
from .search import find_equitable_partitions, maximize_bound, refine
from .utils.logging import get_interlace_logger, setup_interlace_logger

logger = get_interlace_logger(__name__)

EXIT_OK = 0
EXIT_AUDIT_FAILED = 1
EXIT_INPUT_ERROR = 2

THEOREMS = ["1", "2", "3", "4", "5", "c1", "H", "join"]
SWEEPS = ["bounds", "haemers", "blow-ups", "singular", "joins"]


@dataclass(frozen=True)
class RunContext:
    settings: InterlaceSettings
    policy: TolerancePolicy
    override: bool

    @property
    def tolerance(self) -> Tolerance:
        return Tolerance(eigen_tol=self.policy.eigen_tol, eq_tol=self.policy.eq_tol)


Outcome = Tuple[Renderable, int]


# --- inputs


def _graph(args: argparse.Namespace) -> Graph:
    graphs: Optional[List[str]] = args.graph
    if not graphs:
        raise UsageError(f"'{args.command}' needs --graph")
    if len(graphs) > 1:
        raise UsageError(f"'{args.command}' takes a single --graph")
    return parse_inputs(graphs[0], "graph")


def _source(args: argparse.Namespace) -> Tuple[DenseMatrix, MatrixSource]:
    """The matrix a subcommand works on: --matrix, or A(G) / L(G) of --graph."""
    if args.matrix and args.graph:
        raise UsageError("Give either --graph or --matrix, not both")
    if args.matrix:
        if args.laplacian:
            raise UsageError("--laplacian applies to --graph input only")
        return parse_inputs(args.matrix, "matrix"), "matrix"
    graph = _graph(args)
    if args.laplacian:
        return laplacian_matrix(graph), "laplacian"
    return adjacency_matrix(graph), "adjacency"


def _partition(args: argparse.Namespace, ground: int) -> Partition:
    if not args.partition:
        raise UsageError(f"'{args.command}' needs --partition")
    return parse_inputs(args.partition, "partition", ground)


def _col_partition(args: argparse.Namespace, ground: int, rows: Partition) -> Partition:
    if args.col_partition:
        return parse_inputs(args.col_partition, "partition", ground)
    if ground != rows.ground:
        raise UsageError("A rectangular matrix needs --col-partition")
    return rows


# --- subcommands


def cmd_spectrum(args: argparse.Namespace, ctx: RunContext) -> Outcome:
    matrix, source = _source(args)
    rows, cols = int(matrix.shape[0]), int(matrix.shape[1])
    if args.singular or rows != cols:
        values = singular_values(matrix, ctx.policy)
        kind = "singular_values"
    else:
        values = eigenvalues(matrix, ctx.policy)
        kind = "eigenvalues"
    report = SpectrumReport(
        kind=kind, source=source, rows=rows, cols=cols, values=values.tolist(), tolerance=ctx.tolerance
    )
    return report, EXIT_OK


def cmd_quotient(args: argparse.Namespace, ctx: RunContext) -> Outcome:
    matrix, source = _source(args)
    rows = _partition(args, int(matrix.shape[0]))
    cols = _col_partition(args, int(matrix.shape[1]), rows)
    product = ProductPartition(rows=rows, cols=cols)
    quotient = quotient_matrix(matrix, product).matrix
    irregular = first_irregular_block(matrix, product, ctx.policy)

    symmetric = product.is_square and _is_symmetric(matrix, ctx.policy)
    values = eigenvalues(quotient, ctx.policy) if symmetric else singular_values(quotient, ctx.policy)
    report = QuotientReport(
        source=source,
        row_partition=rows.one_based(),
        col_partition=cols.one_based(),
        matrix=quotient.tolist(),
        equitable=irregular is None,
        values=values.tolist(),
        irregular_block=None if irregular is None else [irregular[0] + 1, irregular[1] + 1],
        tolerance=ctx.tolerance,
    )
    return report, EXIT_OK


def _is_symmetric(matrix: DenseMatrix, policy: TolerancePolicy) -> bool:
    try:
        check_symmetric(matrix, policy)
    except InterlaceException:
        return False
    return True


def cmd_interlace(args: argparse.Namespace, ctx: RunContext) -> Outcome:
    if args.alpha is not None or args.beta is not None:
        if args.alpha is None or args.beta is None:
            raise UsageError("--alpha and --beta must be given together")
        alpha = parse_spectrum_text(args.alpha, "--alpha")
        beta = parse_spectrum_text(args.beta, "--beta")
        return interlacing_report(alpha, beta, ctx.policy), EXIT_OK
    matrix, _ = _source(args)
    return quotient_interlacing(matrix, _partition(args, int(matrix.shape[0])), ctx.policy), EXIT_OK


def cmd_bounds(args: argparse.Namespace, ctx: RunContext) -> Outcome:
    graph = _graph(args)
    partition = _partition(args, graph.n)
    if args.bound:
        return [evaluate_bound(graph, partition, BoundId(args.bound), ctx.policy)], EXIT_OK
    return evaluate_all_bounds(graph, partition, ctx.policy), EXIT_OK


def _square_matrix(args: argparse.Namespace) -> Tuple[DenseMatrix, Partition]:
    matrix, _ = _source(args)
    if matrix.shape[0] != matrix.shape[1]:
        raise MatrixShapeError(f"Theorem '{args.theorem}' needs a square matrix, got {matrix.shape}")
    return as_dense(matrix, square=True), _partition(args, int(matrix.shape[0]))


def cmd_audit(args: argparse.Namespace, ctx: RunContext) -> Outcome:
    theorem: str = args.theorem
    policy = ctx.policy
    verdicts: List[AuditVerdict]
    if theorem in ("1", "2", "c1"):
        graph = _graph(args)
        partition = _partition(args, graph.n)
        if theorem == "1":
            verdicts = audit_theorem1(graph, partition, policy)
        elif theorem == "2":
            verdicts = [audit_theorem2(graph, partition, policy)]
        else:
            verdicts = [audit_corollary1(graph, partition, policy)]
    elif theorem == "4":
        matrix, _ = _source(args)
        rows = _partition(args, int(matrix.shape[0]))
        cols = _col_partition(args, int(matrix.shape[1]), rows)
        verdicts = audit_theorem4(matrix, rows, cols, policy)
    elif theorem == "join":
        paths: List[str] = args.graph or []
        if len(paths) < 2:
            raise UsageError("'audit --theorem join' needs at least two --graph files")
        verdicts = [audit_join([parse_inputs(path, "graph") for path in paths], policy)]
    else:
        matrix, partition = _square_matrix(args)
        audit = {"3": audit_theorem3, "5": audit_theorem5, "H": audit_haemers}[theorem]
        verdicts = [audit(matrix, partition, policy)]

    passed = not any(verdict.counterexample for verdict in verdicts)
    report = AuditReport(theorem=verdicts[0].theorem, verdicts=verdicts, passed=passed)
    return report, EXIT_OK if passed else EXIT_AUDIT_FAILED


def cmd_refine(args: argparse.Namespace, ctx: RunContext) -> Outcome:
    graph = _graph(args)
    if args.max_k is not None:
        found = find_equitable_partitions(graph, args.max_k, cap=ctx.settings.enumeration_cap, override=ctx.override)
        examined = sum(stirling2(graph.n, k) for k in range(1, min(args.max_k, graph.n) + 1))
        listing = EquitableListing(
            max_k=args.max_k, partitions=[p.one_based() for p in found], candidates_examined=examined
        )
        return listing, EXIT_OK

    seed = _partition(args, graph.n) if args.partition else Partition.single_block(graph.n)
    result, rounds = refine(graph, seed)
    report = RefinementReport(
        seed=seed.one_based(),
        partition=result.one_based(),
        classification=classify_graph_partition(graph, result).value,
        rounds=rounds,
    )
    return report, EXIT_OK


def cmd_search(args: argparse.Namespace, ctx: RunContext) -> Outcome:
    graph = _graph(args)
    result = maximize_bound(
        graph,
        args.k,
        BoundId(args.bound),
        ctx.policy,
        workers=ctx.settings.workers,
        cap=ctx.settings.enumeration_cap,
        override=ctx.override,
    )
    return result, EXIT_OK


def _integer_list(text: str, flag: str) -> List[int]:
    values = parse_spectrum_text(text, flag)
    fractional = [x for x in values if not x.is_integer()]
    if fractional:
        raise UsageError(f"{flag} takes integers, got {fractional[0]:g}")
    return [int(x) for x in values]


def cmd_join_mu1(args: argparse.Namespace, ctx: RunContext) -> Outcome:
    if args.degrees or args.orders:
        degrees = _integer_list(args.degrees or "", "--degrees")
        orders = _integer_list(args.orders or "", "--orders")
        return JoinReport(degrees=degrees, orders=orders, mu1=join_mu1(degrees, orders, ctx.policy)), EXIT_OK
    if None in (args.r1, args.n1, args.r2, args.n2):
        raise UsageError("join-mu1 needs --r1 --n1 --r2 --n2, or --degrees and --orders")
    mu1 = finck_grohmann_mu1(args.r1, args.n1, args.r2, args.n2)
    return JoinReport(degrees=[args.r1, args.r2], orders=[args.n1, args.n2], mu1=mu1), EXIT_OK


def cmd_sweep(args: argparse.Namespace, ctx: RunContext) -> Outcome:
    workers = ctx.settings.workers
    policy = ctx.policy
    summary: SweepSummary
    if args.kind == "bounds":
        summary = sweep_bounds(
            args.max_n or 6,
            not args.all_graphs,
            policy,
            cap=ctx.settings.enumeration_cap,
            override=ctx.override,
            workers=workers,
        )
    elif args.kind == "haemers":
        summary = sweep_haemers(args.count or 1000, args.max_n or 12, seed=args.seed, policy=policy, workers=workers)
    elif args.kind == "blow-ups":
        summary = sweep_blow_ups(args.max_k or 4, args.max_size or 3, policy, workers=workers)
    elif args.kind == "singular":
        summary = sweep_singular(args.count or 500, args.max_n or 10, seed=args.seed, policy=policy, workers=workers)
    else:
        summary = sweep_joins(args.max_n or 8, policy, workers=workers)
    return summary, EXIT_OK if summary.passed else EXIT_AUDIT_FAILED


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunContext], Outcome]] = {
    "spectrum": cmd_spectrum,
    "quotient": cmd_quotient,
    "interlace": cmd_interlace,
    "bounds": cmd_bounds,
    "audit": cmd_audit,
    "refine": cmd_refine,
    "search": cmd_search,
    "join-mu1": cmd_join_mu1,
    "sweep": cmd_sweep,
}


# --- parser


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="json", help="Report format")
    common.add_argument("--out", type=Path, help="Write the report here instead of stdout")
    common.add_argument("--tol", type=float, help="Override eq_tol")
    common.add_argument("--cap-override", action="store_true", help="Allow enumeration above the configured cap")
    common.add_argument("--workers", type=int, help="Worker processes for enumerations and sweeps")
    common.add_argument("--config", type=Path, help="YAML settings file")
    common.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], help="Logging level"
    )
    common.add_argument("--json-logs", action="store_true", default=None, help="Output logs in JSON format")
    return common


def _input_options() -> argparse.ArgumentParser:
    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("--graph", action="append", help="Edge-list file (repeat for 'audit --theorem join')")
    inputs.add_argument("--matrix", help="Dense matrix file")
    inputs.add_argument("--partition", help="Partition file (rows)")
    inputs.add_argument("--col-partition", help="Partition file for the columns of a rectangular matrix")
    inputs.add_argument("--laplacian", action="store_true", help="Use L(G) instead of A(G)")
    return inputs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interlace",
        description="Quotient matrices, eigenvalue interlacing and equality audits",
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")
    common = _common_options()
    inputs = _input_options()
    both = [common, inputs]

    spectrum = subparsers.add_parser("spectrum", parents=both, help="Eigenvalues or singular values")
    spectrum.add_argument("--singular", action="store_true", help="Singular values even for a square matrix")

    subparsers.add_parser("quotient", parents=both, help="Quotient matrix of a partition")

    interlace = subparsers.add_parser("interlace", parents=both, help="Classify interlacing")
    interlace.add_argument("--alpha", help="Descending eigenvalues of A, comma separated")
    interlace.add_argument("--beta", help="Descending eigenvalues of B, comma separated")

    bounds = subparsers.add_parser("bounds", parents=both, help="Evaluate the partition bounds")
    bounds.add_argument("--bound", choices=[b.value for b in BoundId], help="Only this bound")

    audit = subparsers.add_parser("audit", parents=both, help="Audit an equality statement")
    audit.add_argument("--theorem", required=True, choices=THEOREMS)

    refine_parser = subparsers.add_parser("refine", parents=both, help="Coarsest equitable refinement")
    refine_parser.add_argument("--max-k", type=int, help="List every equitable partition with at most this many blocks")

    search = subparsers.add_parser("search", parents=both, help="Best partition for a bound")
    search.add_argument("--k", type=int, required=True, help="Number of blocks")
    search.add_argument("--bound", required=True, choices=[b.value for b in BoundId])

    join_parser = subparsers.add_parser("join-mu1", parents=[common], help="mu_1 of a join of regular graphs")
    for name in ("--r1", "--n1", "--r2", "--n2"):
        join_parser.add_argument(name, type=int)
    join_parser.add_argument("--degrees", help="Degrees of several constituents, comma separated")
    join_parser.add_argument("--orders", help="Orders of several constituents, comma separated")

    sweep = subparsers.add_parser("sweep", parents=[common], help="Exhaustive or randomized audit sweep")
    sweep.add_argument("--kind", required=True, choices=SWEEPS)
    sweep.add_argument("--max-n", type=int, help="Largest order or dimension")
    sweep.add_argument("--max-k", type=int, help="Largest template order (blow-ups)")
    sweep.add_argument("--max-size", type=int, help="Largest block size (blow-ups)")
    sweep.add_argument("--count", type=int, help="Number of random instances")
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--all-graphs", action="store_true", help="Include disconnected graphs (bounds)")
    return parser


def _context(args: argparse.Namespace) -> RunContext:
    settings = load_settings(
        config_file=args.config,
        eq_tol=args.tol,
        log_level=args.log_level,
        json_logs=args.json_logs,
        workers=args.workers,
    )
    setup_interlace_logger("interlace", level=settings.log_level, json_logs=settings.json_logs)
    return RunContext(settings=settings, policy=settings.to_policy(), override=args.cap_override)


def _emit(report: Renderable, fmt: OutputFormat, digits: int, out: Optional[Path]) -> None:
    text = render(report, fmt, digits)
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, execute the subcommand and return the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        ctx = _context(args)
    except ValidationError as e:
        sys.stderr.write(f"error: invalid settings\n{e}\n")
        return EXIT_INPUT_ERROR
    except (OSError, ValueError, yaml.YAMLError) as e:
        sys.stderr.write(f"error: cannot load settings: {e}\n")
        return EXIT_INPUT_ERROR

    try:
        report, status = COMMANDS[args.command](args, ctx)
    except InterlaceException as e:
        logger.error("command_failed", command=args.command, error=str(e))
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT_ERROR

    _emit(report, args.format, ctx.settings.significant_digits, args.out)
    logger.info("command_completed", command=args.command, status=status)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
