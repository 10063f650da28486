"""Exact linear algebra over QQ(q) on top of sympy's ``DomainMatrix``.

Columns are passed as sparse dicts keyed by arbitrary hashable row labels
(monomials, pairs of monomials, ...). The helpers assign row indices in
first-seen order, so callers never handle positions themselves.
"""

import logging
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from .coefficients import ONE, ZERO, ScalarQ
from .coefficients.scalar import Q_FIELD
from .errors import GramSingularError

logger = logging.getLogger(__name__)

DOMAIN = Q_FIELD.to_domain()

Column = Dict[Hashable, ScalarQ]


def _index_rows(columns: Sequence[Column]) -> Dict[Hashable, int]:
    rows: Dict[Hashable, int] = {}
    for column in columns:
        for label in column:
            if label not in rows:
                rows[label] = len(rows)
    return rows


def columns_to_matrix(
    columns: Sequence[Column], rows: Optional[Dict[Hashable, int]] = None
) -> Tuple[DomainMatrix, Dict[Hashable, int]]:
    """Builds a sparse ``DomainMatrix`` whose j-th column is ``columns[j]``."""
    if rows is None:
        rows = _index_rows(columns)
    data: Dict[int, Dict[int, object]] = {}
    for j, column in enumerate(columns):
        for label, value in column.items():
            if value.is_zero():
                continue
            data.setdefault(rows[label], {})[j] = value.to_field()
    shape = (max(len(rows), 1), len(columns))
    return DomainMatrix(data, shape, DOMAIN), rows


def rows_to_matrix(rows: Sequence[Sequence[ScalarQ]]) -> DomainMatrix:
    data: Dict[int, Dict[int, object]] = {}
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            if not value.is_zero():
                data.setdefault(i, {})[j] = value.to_field()
    width = len(rows[0]) if rows else 0
    return DomainMatrix(data, (len(rows), width), DOMAIN)


def matrix_to_rows(matrix: DomainMatrix) -> List[List[ScalarQ]]:
    return [
        [ScalarQ(value) for value in row] for row in matrix.to_dense().rep
    ]


def rref(columns: Sequence[Column]) -> Tuple[List[List[ScalarQ]], Tuple[int, ...]]:
    """Reduced row echelon form of the matrix with the given columns."""
    matrix, _ = columns_to_matrix(columns)
    reduced, pivots = matrix.rref()
    return matrix_to_rows(reduced), tuple(pivots)


def rank(columns: Sequence[Column]) -> int:
    if not columns:
        return 0
    matrix, _ = columns_to_matrix(columns)
    return matrix.rank()


def solve(columns: Sequence[Column], rhs: Column) -> Optional[List[ScalarQ]]:
    """One solution x of Σ_j x_j columns[j] = rhs, free variables set to 0.

    Returns:
        The list of coefficients, or None when the system is inconsistent.
    """
    solutions = solve_many(columns, [rhs])
    return solutions[0]


def solve_many(
    columns: Sequence[Column], rhs_list: Sequence[Column]
) -> List[Optional[List[ScalarQ]]]:
    """Solves against several right-hand sides with a single elimination."""
    n = len(columns)
    reduced, pivots = rref(list(columns) + list(rhs_list))
    pivot_row = {col: row for row, col in enumerate(pivots)}
    solutions: List[Optional[List[ScalarQ]]] = []
    for offset in range(len(rhs_list)):
        target = n + offset
        # rows pivoting on an rhs column have no support in the columns
        consistent = target not in pivots and not any(
            col >= n and not reduced[row][target].is_zero()
            for row, col in enumerate(pivots)
        )
        if not consistent:
            solutions.append(None)
            continue
        values = [ZERO] * n
        for col in pivots:
            if col < n:
                values[col] = reduced[pivot_row[col]][target]
        solutions.append(values)
    return solutions


def nullspace(columns: Sequence[Column]) -> List[List[ScalarQ]]:
    """A basis of {x : Σ_j x_j columns[j] = 0}, one list per basis vector."""
    if not columns:
        return []
    matrix, rows = columns_to_matrix(columns)
    if not rows:
        return [[ONE if i == j else ZERO for i in range(len(columns))]
                for j in range(len(columns))]
    basis = matrix.nullspace()
    if basis.shape[0] == 0:
        return []
    return matrix_to_rows(basis)


def inverse(rows: Sequence[Sequence[ScalarQ]]) -> List[List[ScalarQ]]:
    """Inverse of a square matrix given by rows.

    Raises:
        GramSingularError: if the matrix is singular.
    """
    matrix = rows_to_matrix(rows)
    if matrix.rank() < len(rows):
        raise GramSingularError(f"singular {len(rows)}x{len(rows)} matrix")
    return matrix_to_rows(matrix.to_dense().inv())


def matmul(
    left: Sequence[Sequence[ScalarQ]], right: Sequence[Sequence[ScalarQ]]
) -> List[List[ScalarQ]]:
    inner = len(right)
    width = len(right[0]) if right else 0
    out = []
    for row in left:
        out_row = []
        for j in range(width):
            total = ZERO
            for k in range(inner):
                if not row[k].is_zero() and not right[k][j].is_zero():
                    total = total + row[k] * right[k][j]
            out_row.append(total)
        out.append(out_row)
    return out
