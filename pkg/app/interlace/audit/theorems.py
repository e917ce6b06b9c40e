"""
Audits of equality conditions for quotient-matrix interlacing.

An audit never raises on a false hypothesis or a failed conclusion: both are
verdict data. Hypotheses are checked first, the conclusion is evaluated only
when every hypothesis holds, and each check carries the numbers that decided
it. Malformed input (shape or partition mismatch) still raises.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ...schema.audit import AuditVerdict, TheoremId
from ...schema.common import Check
from ..core.types import (
    DEFAULT_POLICY,
    BoundId,
    DenseMatrix,
    PartitionClass,
    TolerancePolicy,
    as_dense,
    is_integral,
)
from ..exceptions import AsymmetryError, DimensionMismatchError
from ..graph.model import Graph, adjacency_matrix, edge_counts, laplacian_matrix
from ..graph.operations import join
from ..interlacing.classify import quotient_interlacing
from ..numeric.eigen import check_symmetric, eigenvalues, symmetric_eigen
from ..numeric.irreducible import is_irreducible, is_nonnegative
from ..numeric.singular import hermitian_embedding, largest_singular_value
from ..partition.model import Partition, ProductPartition
from ..partition.regularity import (
    GraphPartitionReport,
    block_is_regular,
    first_irregular_block,
    inspect_graph_partition,
)
from ..quotient.quotient import (
    block_size_vector,
    embedded_quotient_identity_gap,
    embedding_partition,
    lift_vector,
    quotient_matrix,
    square_quotient,
)
from ..utils.logging import get_interlace_logger, log_audit_event
from .bounds import cross_terms, evaluate_all_bounds, evaluate_bound, graph_spectrum, within_terms
from .finck_grohmann import join_mu1

logger = get_interlace_logger(__name__)

REGULAR_IN_A_FLAG = "term 'regular in A' read as 'equitable for A'"
OBSERVED_ONLY_FLAG = "literal equality claims observed, not asserted"


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _check(name: str, holds: bool, detail: Optional[str] = None) -> Check:
    return Check(name=name, holds=bool(holds), detail=detail)


def _finish(
    theorem: TheoremId,
    hypotheses: List[Check],
    conclusion: List[Check],
    tolerance: float,
    *,
    case: Optional[str] = None,
    observations: Optional[List[Check]] = None,
    witness: Optional[Dict[str, Any]] = None,
    flags: Optional[List[str]] = None,
) -> AuditVerdict:
    hypotheses_hold = all(check.holds for check in hypotheses)
    verdict = AuditVerdict(
        theorem=theorem,
        case=case,
        hypotheses=hypotheses,
        hypotheses_hold=hypotheses_hold,
        conclusion=conclusion if hypotheses_hold else [],
        conclusion_holds=all(check.holds for check in conclusion) if hypotheses_hold else None,
        observations=observations or [],
        witness=witness or {},
        flags=flags or [],
        tolerance=tolerance,
    )
    if verdict.counterexample:
        log_audit_event(logger, "audit_counterexample", theorem, case=case, witness=verdict.witness)
    else:
        logger.debug("audit_completed", theorem=theorem, case=case, hypotheses_hold=hypotheses_hold)
    return verdict


def _require_square_partition(source: DenseMatrix, partition: Partition) -> None:
    if source.shape[0] != source.shape[1]:
        raise DimensionMismatchError(f"Expected a square matrix, got {source.shape[0]}x{source.shape[1]}")
    if partition.ground != source.shape[0]:
        raise DimensionMismatchError(
            f"Partition over [{partition.ground}] does not match a {source.shape[0]}x{source.shape[0]} matrix"
        )


def _symmetry_check(source: DenseMatrix, policy: TolerancePolicy) -> Check:
    try:
        check_symmetric(source, policy)
    except AsymmetryError as e:
        return _check("A symmetric", False, f"||A - A^T||_inf = {_fmt(e.deviation)}")
    return _check("A symmetric", True)


def _irreducibility_check(name: str, matrix: DenseMatrix, nonnegative: bool) -> Check:
    if not nonnegative:
        return _check(name, False, "not evaluated: negative entries")
    return _check(name, is_irreducible(matrix))


def _perron_hypotheses(source: DenseMatrix, policy: TolerancePolicy) -> List[Check]:
    nonnegative = is_nonnegative(source)
    return [
        _symmetry_check(source, policy),
        _check("A nonnegative", nonnegative),
        _irreducibility_check("A irreducible", source, nonnegative),
    ]


def _mu1_gap(source: DenseMatrix, partition: Partition, policy: TolerancePolicy) -> Dict[str, float]:
    mu_a = symmetric_eigen(source, policy).mu(1)
    mu_q = symmetric_eigen(square_quotient(source, partition).matrix, policy).mu(1)
    return {"mu1_A": mu_a, "mu1_quotient": mu_q, "gap": mu_a - mu_q, "tolerance": policy.scaled(policy.eq_tol, mu_a)}


def _structure_witness(structure: GraphPartitionReport) -> Dict[str, Any]:
    return {
        "classification": structure.classification.value,
        "irregular_blocks": [i + 1 for i in structure.irregular_blocks],
        "non_semiregular_pairs": [[i + 1, j + 1] for i, j in structure.non_semiregular_pairs],
    }


# --- Theorem 1: equality in a partition bound forces (semi)equitable structure


def theorem1_conclusion(graph: Graph, bound: BoundId, structure: GraphPartitionReport) -> List[Check]:
    """What equality in ``bound`` is claimed to imply about the partition (and, for ineq3, the graph)."""
    classification = structure.classification
    if bound in (BoundId.INEQ4, BoundId.INEQ3):
        checks = [
            _check("partition equitable for G", classification is PartitionClass.EQUITABLE, classification.value)
        ]
        if bound is BoundId.INEQ3:
            checks.append(_check("G regular", graph.is_regular(), f"degrees {sorted(set(graph.degrees()))}"))
        return checks
    return [_check("partition semiequitable for G", classification is not PartitionClass.NEITHER, classification.value)]


def _theorem1_identities(graph: Graph, partition: Partition, policy: TolerancePolicy) -> List[Check]:
    adjacency_quotient = square_quotient(adjacency_matrix(graph), partition).matrix
    laplacian_quotient = square_quotient(laplacian_matrix(graph), partition).matrix

    within = float(sum((value for _, value in within_terms(graph, partition)), Fraction(0)))
    cross = float(sum((value for _, value in cross_terms(graph, partition)), Fraction(0)))
    trace_a = math.fsum(np.diag(adjacency_quotient).tolist())
    trace_l = math.fsum(np.diag(laplacian_quotient).tolist())
    mu1_q = float(eigenvalues(adjacency_quotient, policy)[0])
    average = 2.0 * graph.edge_count / graph.n
    kernel = float(np.linalg.norm(laplacian_quotient @ block_size_vector(partition)))

    return [
        _check(
            "mu_1(A|PxP) >= 2e(G)/n",
            mu1_q >= average - policy.scaled(policy.eq_tol, mu1_q),
            f"{_fmt(mu1_q)} vs {_fmt(average)}",
        ),
        _check(
            "tr(A|PxP) = sum 2e(P_i)/|P_i|",
            abs(trace_a - within) <= policy.scaled(policy.eq_tol, within),
            f"{_fmt(trace_a)} vs {_fmt(within)}",
        ),
        _check(
            "tr(L|PxP) = sum e(P_i,P_j)(1/|P_i|+1/|P_j|)",
            abs(trace_l - cross) <= policy.scaled(policy.eq_tol, cross),
            f"{_fmt(trace_l)} vs {_fmt(cross)}",
        ),
        _check(
            "L|PxP (sqrt|P_1|,...,sqrt|P_k|) = 0",
            kernel <= policy.scaled(policy.eq_tol, graph.n),
            f"residual {_fmt(kernel)}",
        ),
    ]


def audit_theorem1(graph: Graph, partition: Partition, policy: TolerancePolicy = DEFAULT_POLICY) -> List[AuditVerdict]:
    """
    One verdict per inequality: when equality holds, check the structure it is claimed to force.

    Raises:
        DimensionMismatchError: If the partition does not cover the graph's vertices
        PartitionError: If k is outside 1 < k <= n
    """
    reports = evaluate_all_bounds(graph, partition, policy)
    structure = inspect_graph_partition(graph, partition)
    identities = _theorem1_identities(graph, partition, policy)

    verdicts: List[AuditVerdict] = []
    for bound, report in zip(BoundId, reports):
        hypotheses = [
            _check(
                f"equality in {bound.value}",
                report.equality,
                f"lhs={_fmt(report.lhs)} rhs={_fmt(report.rhs)} gap={_fmt(report.gap)}",
            )
        ]
        conclusion = theorem1_conclusion(graph, bound, structure) if report.equality else []
        witness: Dict[str, Any] = {
            "lhs": report.lhs,
            "rhs": report.rhs,
            "gap": report.gap,
            "degrees": list(graph.degrees()),
            **_structure_witness(structure),
        }
        verdicts.append(
            _finish(
                "1",
                hypotheses,
                conclusion,
                report.tolerance,
                case=bound.value,
                observations=identities,
                witness=witness,
            )
        )
    return verdicts


# --- Theorem 2: blow-ups share their nonzero spectrum with the quotient


def blow_up_structure(graph: Graph, partition: Partition) -> List[Check]:
    """Every G[P_i] empty and every G[P_i, P_j] empty or complete."""
    blocks = partition.blocks
    occupied = [i + 1 for i, block in enumerate(blocks) if edge_counts(graph, block) > 0]
    mixed = [
        [i + 1, j + 1]
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
        if edge_counts(graph, blocks[i], blocks[j]) not in (0, len(blocks[i]) * len(blocks[j]))
    ]
    return [
        _check("every G[P_i] empty", not occupied, f"blocks with edges: {occupied}" if occupied else None),
        _check("every G[P_i,P_j] empty or complete", not mixed, f"partial pairs: {mixed}" if mixed else None),
    ]


def nonzero_eigenvalues(values: Sequence[float], tolerance: float) -> List[float]:
    return [float(v) for v in values if abs(v) > tolerance]


def squared_trace(matrix: DenseMatrix) -> Fraction:
    """tr(M^2) = sum of squared entries for symmetric M, exact for integral M."""
    if is_integral(matrix):
        return Fraction(int(np.sum(matrix.astype(np.int64) ** 2)))
    return Fraction(math.fsum((matrix * matrix).ravel().tolist()))


def quotient_squared_trace(matrix: DenseMatrix, partition: Partition) -> Fraction:
    """tr((A|PxP)^2) = sum_{p,q} s_pq^2 / (|P_p| |P_q|), exact when the block sums s_pq are integers."""
    source = as_dense(matrix)
    integral = is_integral(source)
    total = Fraction(0)
    for row_block in partition.blocks:
        rows = source[list(row_block), :]
        for col_block in partition.blocks:
            block_sum = math.fsum(rows[:, list(col_block)].ravel().tolist())
            exact = Fraction(int(round(block_sum))) if integral else Fraction(block_sum)
            total += exact * exact / (len(row_block) * len(col_block))
    return total


def audit_theorem2(
    graph: Graph,
    partition: Partition,
    policy: TolerancePolicy = DEFAULT_POLICY,
    *,
    observe: bool = True,
) -> AuditVerdict:
    """
    Blow-up structure => A and A|PxP have the same nonzero eigenvalues and tr(A^2) = tr((A|PxP)^2).

    The stated equalities in the four bounds are recorded as observations only, and
    skipped entirely when ``observe`` is False.
    """
    adjacency = adjacency_matrix(graph)
    _require_square_partition(adjacency, partition)
    hypotheses = blow_up_structure(graph, partition)
    if not all(check.holds for check in hypotheses):
        structure = inspect_graph_partition(graph, partition)
        return _finish("2", hypotheses, [], policy.eq_tol, witness=_structure_witness(structure))

    spectrum = symmetric_eigen(adjacency, policy)
    quotient = square_quotient(adjacency, partition).matrix
    beta = eigenvalues(quotient, policy)
    tolerance = policy.scaled(policy.eq_tol, spectrum.mu(1), spectrum.mu(spectrum.n))

    nonzero_a = nonzero_eigenvalues(spectrum.values.tolist(), tolerance)
    nonzero_q = nonzero_eigenvalues(beta.tolist(), tolerance)
    same = len(nonzero_a) == len(nonzero_q) and all(abs(a - b) <= tolerance for a, b in zip(nonzero_a, nonzero_q))
    trace_a = squared_trace(adjacency)
    trace_q = quotient_squared_trace(adjacency, partition)

    conclusion = [
        _check("A and A|PxP have the same nonzero eigenvalues", same, f"{len(nonzero_a)} vs {len(nonzero_q)} values"),
        _check("tr(A^2) = tr((A|PxP)^2)", trace_a == trace_q, f"{trace_a} vs {trace_q}"),
    ]

    observations: List[Check] = []
    gaps: Dict[str, float] = {}
    flags = [OBSERVED_ONLY_FLAG]
    if not observe:
        flags.append("bound equalities not evaluated")
    elif partition.k >= 2:
        laplacian = graph_spectrum(graph, True, policy)
        claimed = [BoundId.INEQ4, BoundId.LAPL1, BoundId.LAPL2]
        if graph.is_regular():
            claimed.append(BoundId.INEQ3)
        for bound in claimed:
            source = laplacian if bound in (BoundId.LAPL1, BoundId.LAPL2) else spectrum
            report = evaluate_bound(graph, partition, bound, policy, source)
            gaps[bound.value] = report.gap
            observations.append(_check(f"equality in {bound.value}", report.equality, f"gap={_fmt(report.gap)}"))
    else:
        flags.append("single block: bound equalities not evaluated")

    witness: Dict[str, Any] = {
        "nonzero_eigenvalues_A": nonzero_a,
        "nonzero_eigenvalues_quotient": nonzero_q,
        "trace_A2": str(trace_a),
        "trace_quotient2": str(trace_q),
        "bound_gaps": gaps,
    }
    return _finish("2", hypotheses, conclusion, tolerance, observations=observations, witness=witness, flags=flags)


# --- Theorem 3: equitable partitions of irreducible nonnegative matrices keep mu_1


def audit_theorem3(matrix: DenseMatrix, partition: Partition, policy: TolerancePolicy = DEFAULT_POLICY) -> AuditVerdict:
    source = as_dense(matrix)
    _require_square_partition(source, partition)
    product = ProductPartition.square(partition)
    irregular = first_irregular_block(source, product, policy)
    hypotheses = _perron_hypotheses(source, policy) + [
        _check(
            "PxP equitable for A",
            irregular is None,
            None if irregular is None else f"block ({irregular[0] + 1},{irregular[1] + 1}) not regular",
        )
    ]
    if not all(check.holds for check in hypotheses):
        return _finish("3", hypotheses, [], policy.eq_tol)

    spectrum = symmetric_eigen(source, policy)
    quotient_spectrum = symmetric_eigen(square_quotient(source, partition).matrix, policy)
    mu_a, mu_q = spectrum.mu(1), quotient_spectrum.mu(1)
    tolerance = policy.scaled(policy.eq_tol, mu_a)

    lifted = lift_vector(quotient_spectrum.vectors[:, 0], partition)
    residual = float(np.linalg.norm(source @ lifted - mu_q * lifted))
    positive = bool(np.all(lifted > 0.0))

    conclusion = [
        _check("mu_1(A) = mu_1(A|PxP)", abs(mu_a - mu_q) <= tolerance, f"{_fmt(mu_a)} vs {_fmt(mu_q)}"),
        _check(
            "lifted quotient Perron vector is a positive eigenvector of A",
            positive and residual <= tolerance,
            f"min entry {_fmt(float(lifted.min()))}, residual {_fmt(residual)}",
        ),
    ]
    witness: Dict[str, Any] = {
        "mu1_A": mu_a,
        "mu1_quotient": mu_q,
        "gap": mu_a - mu_q,
        "lifted_vector": lifted.tolist(),
    }
    return _finish("3", hypotheses, conclusion, tolerance, witness=witness)


# --- Theorem 4: largest singular value of a quotient


def audit_theorem4(
    matrix: DenseMatrix,
    rows: Partition,
    cols: Partition,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> List[AuditVerdict]:
    """
    Two verdicts: ``inequality`` (sigma_1(A) >= sigma_1(A|PxQ), unconditional) and
    ``equality`` (under nonnegativity, irreducible AA^T and A^TA, and equitability).
    """
    source = as_dense(matrix)
    product = ProductPartition(rows=rows, cols=cols)
    quotient = quotient_matrix(source, product).matrix
    sigma_a = largest_singular_value(source, policy)
    sigma_q = largest_singular_value(quotient, policy)
    tolerance = policy.scaled(policy.eq_tol, sigma_a)

    nonnegative = is_nonnegative(source)
    identity_gap = embedded_quotient_identity_gap(source, product)
    embedded = hermitian_embedding(source)
    witness: Dict[str, Any] = {
        "sigma1_A": sigma_a,
        "sigma1_quotient": sigma_q,
        "gap": sigma_a - sigma_q,
        "embedding_identity_gap": identity_gap,
        "embedding_partition": embedding_partition(rows, cols).one_based(),
    }
    identity = _check(
        "B|RxR equals the embedding of A|PxQ",
        identity_gap <= policy.scaled(policy.eigen_tol, float(np.max(np.abs(source)))),
        f"max deviation {_fmt(identity_gap)}",
    )

    inequality = _finish(
        "4",
        [],
        [_check("sigma_1(A) >= sigma_1(A|PxQ)", sigma_a >= sigma_q - tolerance, f"{_fmt(sigma_a)} vs {_fmt(sigma_q)}")],
        tolerance,
        case="inequality",
        observations=[identity],
        witness=witness,
    )

    irregular = first_irregular_block(source, product, policy)
    hypotheses = [
        _check("A nonnegative", nonnegative),
        _irreducibility_check("AA^T irreducible", source @ source.T, nonnegative),
        _irreducibility_check("A^TA irreducible", source.T @ source, nonnegative),
        _check(
            "PxQ equitable for A",
            irregular is None,
            None if irregular is None else f"block ({irregular[0] + 1},{irregular[1] + 1}) not regular",
        ),
    ]
    observations = [_irreducibility_check("B irreducible", embedded, nonnegative)]
    same = _check(
        "sigma_1(A) = sigma_1(A|PxQ)", abs(sigma_a - sigma_q) <= tolerance, f"{_fmt(sigma_a)} vs {_fmt(sigma_q)}"
    )
    equality = _finish(
        "4",
        hypotheses,
        [same],
        tolerance,
        case="equality",
        observations=observations,
        witness=witness,
    )
    return [inequality, equality]


# --- Theorem 5: regular cross blocks; mu_1 equality iff regular diagonal blocks


def audit_theorem5(matrix: DenseMatrix, partition: Partition, policy: TolerancePolicy = DEFAULT_POLICY) -> AuditVerdict:
    source = as_dense(matrix)
    _require_square_partition(source, partition)
    blocks = partition.blocks
    irregular_cross = [
        [i + 1, j + 1]
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
        if not block_is_regular(source, blocks[i], blocks[j], policy)
    ]
    hypotheses = _perron_hypotheses(source, policy) + [
        _check(
            "A[P_i,P_j] regular for all i < j",
            not irregular_cross,
            f"irregular pairs: {irregular_cross}" if irregular_cross else None,
        )
    ]
    if not all(check.holds for check in hypotheses):
        return _finish("5", hypotheses, [], policy.eq_tol, flags=[REGULAR_IN_A_FLAG])

    irregular_diagonal = [i + 1 for i, block in enumerate(blocks) if not block_is_regular(source, block, block, policy)]
    numbers = _mu1_gap(source, partition, policy)
    equal = abs(numbers["gap"]) <= numbers["tolerance"]
    diagonal_regular = not irregular_diagonal

    conclusion = [
        _check(
            "mu_1(A) = mu_1(A|PxP) iff every A[P_i,P_i] regular",
            equal == diagonal_regular,
            f"equality={equal}, diagonal blocks regular={diagonal_regular}",
        )
    ]
    witness: Dict[str, Any] = {
        "mu1_A": numbers["mu1_A"],
        "mu1_quotient": numbers["mu1_quotient"],
        "gap": numbers["gap"],
        "first_irregular_diagonal_block": irregular_diagonal[0] if irregular_diagonal else None,
    }
    return _finish("5", hypotheses, conclusion, numbers["tolerance"], witness=witness, flags=[REGULAR_IN_A_FLAG])


def audit_corollary1(graph: Graph, partition: Partition, policy: TolerancePolicy = DEFAULT_POLICY) -> AuditVerdict:
    """Connected G, semiequitable P: mu_1(G) = mu_1(A(G)|PxP) iff P is equitable for G."""
    adjacency = adjacency_matrix(graph)
    _require_square_partition(adjacency, partition)
    structure = inspect_graph_partition(graph, partition)
    classification = structure.classification
    hypotheses = [
        _check("G connected", graph.is_connected()),
        _check("partition semiequitable for G", classification is not PartitionClass.NEITHER, classification.value),
    ]
    if not all(check.holds for check in hypotheses):
        return _finish("c1", hypotheses, [], policy.eq_tol, witness=_structure_witness(structure))

    numbers = _mu1_gap(adjacency, partition, policy)
    equal = abs(numbers["gap"]) <= numbers["tolerance"]
    equitable = classification is PartitionClass.EQUITABLE
    conclusion = [
        _check(
            "mu_1(G) = mu_1(A(G)|PxP) iff partition equitable",
            equal == equitable,
            f"equality={equal}, equitable={equitable}",
        )
    ]
    witness: Dict[str, Any] = {
        "mu1_A": numbers["mu1_A"],
        "mu1_quotient": numbers["mu1_quotient"],
        "gap": numbers["gap"],
        **_structure_witness(structure),
    }
    return _finish("c1", hypotheses, conclusion, numbers["tolerance"], witness=witness)


def audit_haemers(matrix: DenseMatrix, partition: Partition, policy: TolerancePolicy = DEFAULT_POLICY) -> AuditVerdict:
    """Spectra of A and A|PxP interlace; tight interlacing forces PxP equitable for A."""
    source = as_dense(matrix)
    _require_square_partition(source, partition)
    hypotheses = [_symmetry_check(source, policy)]
    if not hypotheses[0].holds:
        return _finish("H", hypotheses, [], policy.eq_tol)

    report = quotient_interlacing(source, partition, policy)
    equitable = first_irregular_block(source, ProductPartition.square(partition), policy) is None
    conclusion = [
        _check("spectra interlaced", report.holds),
        _check(
            "tight interlacing implies PxP equitable for A",
            not report.tight or equitable,
            f"tight r values {report.tight_r_values}, equitable={equitable}",
        ),
    ]
    flags = ["degenerate block count (k = 1 or k = n)"] if report.degenerate else []
    witness: Dict[str, Any] = {"interlacing": report.model_dump(), "equitable": equitable}
    return _finish("H", hypotheses, conclusion, report.tolerance, witness=witness, flags=flags)


def audit_join(graphs: Sequence[Graph], policy: TolerancePolicy = DEFAULT_POLICY) -> AuditVerdict:
    """
    mu_1 of a join equals mu_1 of its constituent quotient iff every constituent is regular;
    in the regular case it also matches the join formula.

    Raises:
        GraphError: If fewer than two graphs are given
    """
    blocked = join(*graphs)
    adjacency = adjacency_matrix(blocked.graph)
    numbers = _mu1_gap(adjacency, blocked.blocks, policy)
    equal = abs(numbers["gap"]) <= numbers["tolerance"]
    regular = [g.is_regular() for g in graphs]

    hypotheses = [_check("join is connected", blocked.graph.is_connected())]
    conclusion = [
        _check(
            "mu_1(G) = mu_1(A(G)|PxP) iff every constituent regular",
            equal == all(regular),
            f"equality={equal}, regular constituents={regular}",
        )
    ]
    witness: Dict[str, Any] = {
        "mu1_A": numbers["mu1_A"],
        "mu1_quotient": numbers["mu1_quotient"],
        "gap": numbers["gap"],
        "orders": [g.n for g in graphs],
        "regular": regular,
    }
    if all(regular):
        degrees = [g.degree(0) for g in graphs]
        formula = join_mu1(degrees, [g.n for g in graphs], policy)
        witness["mu1_formula"] = formula
        conclusion.append(
            _check(
                "mu_1(G) matches the join formula",
                abs(numbers["mu1_A"] - formula) <= numbers["tolerance"],
                f"{_fmt(numbers['mu1_A'])} vs {_fmt(formula)}",
            )
        )
    return _finish("join", hypotheses, conclusion, numbers["tolerance"], witness=witness)
