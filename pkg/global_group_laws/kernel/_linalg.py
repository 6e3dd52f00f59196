"""
Global Group Laws: Exact Linear Algebra Module

Integer lattice and field linear algebra used by the group, presentation
and Lazard-desk layers.

Functions Overview
------------------
- hermite_rows: row Hermite normal form of an integer matrix.
- reduce_by_hermite / in_lattice: canonical residues modulo a row lattice.
- smith_with_transforms: U·A·W = D with U, W unimodular.
- unimodular_inverse: exact inverse of a unimodular integer matrix.
- integer_solve: integral solutions of A·x = b through the Smith form.
- field_rref / field_rank / field_nullspace / field_solve: DomainMatrix
  based elimination over Q and F_p.
"""

# Standard library imports
from typing import List, Optional, Sequence, Tuple

# Third-party library imports
from sympy import Matrix, eye
from sympy.polys.matrices import DomainMatrix

IntMatrix = List[List[int]]


# region integer lattices
def hermite_rows(rows: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Row Hermite normal form.

    Returns the nonzero rows of the echelon basis of the row lattice.
    Pivots are positive, pivot columns strictly increase, and entries above
    a pivot lie in [0, pivot).
    """
    work = [[int(v) for v in row] for row in rows if any(row)]
    top = 0
    for col in range(ncols):
        while True:
            active = [i for i in range(top, len(work)) if work[i][col] != 0]
            if not active:
                break
            pivot = min(active, key=lambda i: abs(work[i][col]))
            work[top], work[pivot] = work[pivot], work[top]
            done = True
            for i in range(top + 1, len(work)):
                if work[i][col]:
                    q = work[i][col] // work[top][col]
                    work[i] = [a - q * b for a, b in zip(work[i], work[top])]
                    if work[i][col]:
                        done = False
            if done:
                break
        if top < len(work) and work[top][col] != 0:
            if work[top][col] < 0:
                work[top] = [-a for a in work[top]]
            for i in range(top):
                q = work[i][col] // work[top][col]
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[top])]
            top += 1
        work = work[:top] + [row for row in work[top:] if any(row)]
    return work[:top]


def pivot_columns(hnf: IntMatrix) -> List[int]:
    return [next(j for j, v in enumerate(row) if v) for row in hnf]


def reduce_by_hermite(vector: Sequence[int], hnf: IntMatrix) -> Tuple[int, ...]:
    """Canonical representative of `vector` modulo the row lattice of `hnf`."""
    vec = [int(v) for v in vector]
    for row, col in zip(hnf, pivot_columns(hnf)):
        q = vec[col] // row[col]
        if q:
            vec = [a - q * b for a, b in zip(vec, row)]
    return tuple(vec)


def in_lattice(vector: Sequence[int], hnf: IntMatrix) -> bool:
    return not any(reduce_by_hermite(vector, hnf))


def smith_with_transforms(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with unimodular transforms.

    Parameters
    ----------
    rows : sequence of integer rows
        The m-by-n matrix A (m may be 0).
    ncols : int
        n, needed when there are no rows.

    Returns
    -------
    (U, D, W) : integer matrices with U·A·W = D, D diagonal with
        nonnegative entries each dividing the next.
    """
    m = len(rows)
    A = Matrix(m, ncols, [int(v) for row in rows for v in row])
    U = eye(m)
    W = eye(ncols)
    for s in range(min(m, ncols)):
        while True:
            block = [(abs(A[i, j]), i, j) for i in range(s, m) for j in range(s, ncols) if A[i, j] != 0]
            if not block:
                return _as_lists(U), _as_lists(A), _as_lists(W)
            _, pi, pj = min(block)
            if pi != s:
                A.row_swap(s, pi)
                U.row_swap(s, pi)
            if pj != s:
                A.col_swap(s, pj)
                W.col_swap(s, pj)
            for i in range(s + 1, m):
                if A[i, s] != 0:
                    q = A[i, s] // A[s, s]
                    A.row_op(i, lambda v, j: v - q * A[s, j])
                    U.row_op(i, lambda v, j: v - q * U[s, j])
            for j in range(s + 1, ncols):
                if A[s, j] != 0:
                    q = A[s, j] // A[s, s]
                    A.col_op(j, lambda v, i: v - q * A[i, s])
                    W.col_op(j, lambda v, i: v - q * W[i, s])
            if any(A[i, s] != 0 for i in range(s + 1, m)) or any(A[s, j] != 0 for j in range(s + 1, ncols)):
                continue
            bad = next(((i, j) for i in range(s + 1, m) for j in range(s + 1, ncols)
                        if A[i, j] % A[s, s] != 0), None)
            if bad is None:
                break
            i = bad[0]
            A.row_op(s, lambda v, j: v + A[i, j])
            U.row_op(s, lambda v, j: v + U[i, j])
        if A[s, s] < 0:
            A.row_op(s, lambda v, j: -v)
            U.row_op(s, lambda v, j: -v)
    return _as_lists(U), _as_lists(A), _as_lists(W)


def _as_lists(M: Matrix) -> IntMatrix:
    return [[int(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]


def smith_diagonal(rows: Sequence[Sequence[int]], ncols: int) -> List[int]:
    _, D, _ = smith_with_transforms(rows, ncols)
    return [D[i][i] for i in range(min(len(D), ncols))]


def unimodular_inverse(M: IntMatrix) -> IntMatrix:
    if not M:
        return []
    return _as_lists(Matrix(M).inv())


def integer_solve(rows: Sequence[Sequence[int]], ncols: int, rhs: Sequence[int]) -> Optional[List[int]]:
    """An integral x with A·x = rhs, or None when none exists."""
    U, D, W = smith_with_transforms(rows, ncols)
    m = len(rows)
    ub = [sum(U[i][k] * int(rhs[k]) for k in range(m)) for i in range(m)]
    y = [0] * ncols
    for i in range(m):
        d = D[i][i] if i < ncols else 0
        if d == 0:
            if ub[i] != 0:
                return None
        elif ub[i] % d:
            return None
        else:
            y[i] = ub[i] // d
    return [sum(W[i][k] * y[k] for k in range(ncols)) for i in range(ncols)]
# endregion


# region field elimination
def _domain_matrix(rows, ncols, domain) -> DomainMatrix:
    return DomainMatrix([[domain.convert(v) for v in row] for row in rows], (len(rows), ncols), domain)


def field_rref(rows, ncols, domain) -> Tuple[list, Tuple[int, ...]]:
    """Reduced row echelon form over a field; returns (nonzero rows, pivots)."""
    if not rows:
        return [], ()
    dm, pivots = _domain_matrix(rows, ncols, domain).rref()
    reduced = [[dm[i, j].element for j in range(ncols)] for i in range(len(pivots))]
    return reduced, tuple(pivots)


def field_rank(rows, ncols, domain) -> int:
    if not rows or not ncols:
        return 0
    return _domain_matrix(rows, ncols, domain).rank()


def field_nullspace(rows, ncols, domain) -> list:
    """Basis of {x : A·x = 0}, one vector per free column."""
    reduced, pivots = field_rref(rows, ncols, domain)
    basis = []
    for free in (j for j in range(ncols) if j not in pivots):
        vec = [domain.zero] * ncols
        vec[free] = domain.one
        for row, col in zip(reduced, pivots):
            vec[col] = -row[free]
        basis.append(vec)
    return basis


def field_solve(rows, ncols, rhs, domain) -> Optional[list]:
    """A solution of A·x = rhs over a field, or None."""
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = field_rref(augmented, ncols + 1, domain)
    if ncols in pivots:
        return None
    x = [domain.zero] * ncols
    for row, col in zip(reduced, pivots):
        x[col] = row[ncols]
    return x
# endregion


def is_integral_domain_lattice(rows: Sequence[Sequence[int]], ncols: int) -> bool:
    """True when Z^n modulo the row lattice is torsion free."""
    return all(d in (0, 1) for d in smith_diagonal(rows, ncols))


__all__ = [
    'hermite_rows', 'pivot_columns', 'reduce_by_hermite', 'in_lattice',
    'smith_with_transforms', 'smith_diagonal', 'unimodular_inverse', 'integer_solve',
    'field_rref', 'field_rank', 'field_nullspace', 'field_solve', 'is_integral_domain_lattice',
]
