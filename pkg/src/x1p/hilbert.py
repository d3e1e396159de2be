"""Hilbert function of C[r_0..r_{p-1}] / I_{s,t} in low degrees.

The ideal is homogeneous for the total degree and for the Z/p-weight
sum(index * exponent) mod p, so each (n, w) block is handled separately:
the quotient dimension of a block is the number of monomials minus the rank
of the degree-n multiples of the quadric r-relations landing in it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .cyclotomic import as_level
from .cusps import is_exact
from .linalg import EchelonBasis, numeric_rank
from .ode import build_r_generators
from .polys import ModuliPoint

__all__ = [
    "GradedBlock",
    "graded_monomials",
    "graded_block",
    "graded_component_dimension",
    "quotient_dimension",
    "hilbert_table",
    "DEFAULT_MAX_DEGREE",
]

DEFAULT_MAX_DEGREE = 4


@lru_cache(maxsize=None)
def _monomials(p: int, n: int) -> dict[int, tuple]:
    """Degree-n exponent vectors in p variables, bucketed by weight."""
    buckets: dict[int, list] = {w: [] for w in range(p)}
    for combo in combinations_with_replacement(range(p), n):
        e = [0] * p
        for i in combo:
            e[i] += 1
        buckets[sum(combo) % p].append(tuple(e))
    return {w: tuple(sorted(v)) for w, v in buckets.items()}


def graded_monomials(lvl, n: int, w: int) -> list[tuple]:
    """Monomials of total degree n and weight w, as exponent tuples over r_0..r_{p-1}."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    p = as_level(lvl).p
    return list(_monomials(p, n)[w % p])


@dataclass(frozen=True)
class GradedBlock:
    n: int
    w: int
    monomials: tuple
    rows: list  # sparse {column: coefficient} relation multiples

    @property
    def size(self) -> tuple[int, int]:
        return len(self.rows), len(self.monomials)


def _weight(e) -> int:
    return sum(i * k for i, k in enumerate(e))


def _relations(point: ModuliPoint):
    out = []
    p = point.level.p
    for f in build_r_generators(point).polys():
        if f.is_zero():
            continue
        (wt,) = {_weight(e) % p for e in f.terms}
        out.append((wt, f))
    return out


def graded_block(point: ModuliPoint, n: int, w: int, relations=None) -> GradedBlock:
    p = point.level.p
    w %= p
    monos = tuple(graded_monomials(p, n, w))
    col = {e: i for i, e in enumerate(monos)}
    rows = []
    if n >= 2:
        for wt, f in relations if relations is not None else _relations(point):
            for mult in _monomials(p, n - 2)[(w - wt) % p]:
                row = {}
                for e, c in f.terms.items():
                    j = col[tuple(a + b for a, b in zip(e, mult))]
                    row[j] = row[j] + c if j in row else c
                rows.append(row)
    return GradedBlock(n, w, monos, rows)


def _mode_for(point: ModuliPoint, mode: str) -> str:
    if mode == "auto":
        return "exact" if all(is_exact(x) for x in point.coordinates()) else "numeric"
    if mode not in ("exact", "numeric"):
        raise ValueError(f"unknown rank mode {mode!r}")
    return mode


def _block_rank(block: GradedBlock, mode: str) -> int:
    if not block.rows:
        return 0
    if mode == "exact":
        basis = EchelonBasis()
        for row in block.rows:
            basis.insert(row)
            if basis.rank == len(block.monomials):
                break
        return basis.rank
    dense = [[0j] * len(block.monomials) for _ in block.rows]
    for i, row in enumerate(block.rows):
        for j, c in row.items():
            dense[i][j] = complex(c)
    return numeric_rank(dense)


def graded_component_dimension(point: ModuliPoint, n: int, w: int, mode: str = "auto", relations=None) -> int:
    """dim of the weight-w part of the degree-n quotient."""
    mode = _mode_for(point, mode)
    block = graded_block(point, n, w, relations)
    return len(block.monomials) - _block_rank(block, mode)


def quotient_dimension(point: ModuliPoint, n: int, mode: str = "auto") -> int:
    rels = _relations(point) if n >= 2 else []
    return sum(graded_component_dimension(point, n, w, mode, rels) for w in range(point.level.p))


def hilbert_table(point: ModuliPoint, max_degree: int = DEFAULT_MAX_DEGREE, mode: str = "auto") -> list[tuple[int, int, int]]:
    """Rows (n, w, dim) for 0 <= n <= max_degree and every weight w."""
    rels = _relations(point)
    out = []
    for n in range(max_degree + 1):
        for w in range(point.level.p):
            out.append((n, w, graded_component_dimension(point, n, w, mode, rels)))
    return out
