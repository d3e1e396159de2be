"""Exact and numerical rank computations.

Exact routines work over any field whose elements support ``+ - * /`` and
``== 0`` (Fraction, CyclotomicNumber). Rows are sparse dicts ``{col: value}``
and are reduced one at a time against a growing echelon basis, so sparse
relation matrices stay sparse for as long as possible.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

__all__ = [
    "RankAmbiguityError",
    "EchelonBasis",
    "exact_rank",
    "exact_solve",
    "exact_nullspace",
    "numeric_rank",
]

ZERO_RTOL = 1e-8
AMBIGUOUS_RTOL = 1e-6


class RankAmbiguityError(ArithmeticError):
    """Singular values fall inside the band where zero/nonzero is undecidable."""


def _sparse(row) -> dict:
    if isinstance(row, dict):
        return {c: v for c, v in row.items() if not v == 0}
    return {c: v for c, v in enumerate(row) if not v == 0}


class EchelonBasis:
    """Incrementally built reduced echelon basis of a row space.

    Each stored row is normalized to 1 at its pivot column (the smallest
    column in the row at insertion time).
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            f = row[c]
            for k, v in piv.items():
                nv = row.get(k, 0) - f * v
                if nv == 0:
                    row.pop(k, None)
                else:
                    row[k] = nv
        return row

    def insert(self, row) -> bool:
        """Add a row; return True if it increased the rank."""
        row = self.reduce(_sparse(row))
        if not row:
            return False
        c = min(row)
        inv = 1 / row[c] if not isinstance(row[c], int) else Fraction(1, row[c])
        self.pivots[c] = {k: v * inv for k, v in row.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def exact_rank(rows) -> int:
    basis = EchelonBasis()
    for row in rows:
        basis.insert(row)
    return basis.rank


def _rref(rows, ncols):
    """Dense reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if not m[i][c] == 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c] if not isinstance(m[r][c], int) else Fraction(1, m[r][c])
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c] == 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def exact_solve(A, B):
    """Solve A X = B exactly.

    ``A`` is a list of rows (n x k), ``B`` a list of rows (n x r). Returns the
    k x r solution with free variables set to zero, or None if inconsistent.
    """
    n = len(A)
    k = len(A[0]) if n else 0
    r = len(B[0]) if n else 0
    aug = [list(A[i]) + list(B[i]) for i in range(n)]
    m, pivots = _rref(aug, k)
    for i in range(len(pivots), n):
        if any(not v == 0 for v in m[i][k:]):
            return None
    X = [[0] * r for _ in range(k)]
    for i, c in enumerate(pivots):
        X[c] = m[i][k:]
    return X


def exact_nullspace(A, ncols: int):
    """Basis of {x : A x = 0} as a list of vectors."""
    m, pivots = _rref(A, ncols) if A else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        basis.append(v)
    return basis


def numeric_rank(M, rtol: float = ZERO_RTOL, ambiguous_rtol: float = AMBIGUOUS_RTOL) -> int:
    """Rank from singular values relative to the largest one.

    Values below ``rtol`` count as zero, values above ``ambiguous_rtol`` as
    nonzero, and anything in between raises RankAmbiguityError.
    """
    M = np.asarray(M, dtype=complex)
    if M.size == 0:
        return 0
    sv = np.linalg.svd(M, compute_uv=False)
    top = sv[0]
    if top == 0:
        return 0
    rel = sv / top
    bad = rel[(rel >= rtol) & (rel <= ambiguous_rtol)]
    if bad.size:
        raise RankAmbiguityError(f"singular values {bad.tolist()} (relative) sit in the ambiguity band "
                                 f"[{rtol}, {ambiguous_rtol}]")
    return int(np.count_nonzero(rel > ambiguous_rtol))
