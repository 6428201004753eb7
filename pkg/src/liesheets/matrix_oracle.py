"""Exact linear algebra checks for type A, independent of the partition formulas.

Everything here works over the rationals; ranks come from fraction-free
(Bareiss) elimination on integer rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .partitions import Partition, dominates, dual, enumerate_partitions
from .report import CheckResult, VerificationReport

__all__ = [
    "ExactMatrix",
    "bareiss_rank",
    "jordan_matrix",
    "jordan_power",
    "commutator_operator",
    "centralizer_dim",
    "power_ranks",
    "closure_leq_via_ranks",
    "oracle_check",
]


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            f = m[r][col]
            row, top = m[r], m[rank]
            for c in range(col, n_cols):
                # exact: Bareiss guarantees divisibility by the previous pivot
                row[c] = (p * row[c] - f * top[c]) // prev
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        entries = tuple(tuple(Fraction(x) for x in r) for r in rows)
        return cls(len(entries), len(entries[0]) if entries else 0, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls.from_rows([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries))
        return ExactMatrix.from_rows(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.entries]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix.from_rows(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def power(self, k: int) -> "ExactMatrix":
        """M**k by repeated squaring."""
        if not self.is_square or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        result, base = ExactMatrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def rank(self) -> int:
        int_rows = []
        for r in self.entries:
            scale = lcm(*(x.denominator for x in r)) if r else 1
            int_rows.append([int(x * scale) for x in r])
        return bareiss_rank(int_rows)


def jordan_matrix(lam: Partition) -> ExactMatrix:
    """Block-diagonal nilpotent matrix with a Jordan block of size p for each part p."""
    return jordan_power(lam, 1)


def jordan_power(lam: Partition, k: int) -> ExactMatrix:
    """The k-th power of ``jordan_matrix(lam)``, written down directly (1s on the k-th superdiagonal of each block)."""
    if not lam.parts:
        raise ValueError("empty partition")
    n = lam.n
    rows = [[0] * n for _ in range(n)]
    start = 0
    for p in lam:
        for i in range(p - k):
            rows[start + i][start + i + k] = 1
        start += p
    return ExactMatrix.from_rows(rows)


def commutator_operator(M: ExactMatrix) -> ExactMatrix:
    """Matrix of X -> XM - MX on n x n matrices, X flattened row-major."""
    if not M.is_square:
        raise ValueError("commutator needs a square matrix")
    n = M.rows
    ops = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            out = i * n + j
            # (XM)_ij = sum_k X_ik M_kj ; (MX)_ij = sum_k M_ik X_kj
            for k in range(n):
                ops[out][i * n + k] += M[k, j]
                ops[out][k * n + j] -= M[i, k]
    return ExactMatrix.from_rows(ops)


def centralizer_dim(M: ExactMatrix) -> int:
    """Dimension of the space of matrices commuting with M."""
    n = M.rows
    return n * n - commutator_operator(M).rank()


@lru_cache(maxsize=None)
def power_ranks(lam: Partition) -> tuple[int, ...]:
    """rank(J^k) for k = 1..n, J = jordan_matrix(lam), by repeated multiplication."""
    J = jordan_matrix(lam)
    ranks, P = [], J
    for _ in range(lam.n):
        ranks.append(P.rank())
        P = P @ J
    return tuple(ranks)


def closure_leq_via_ranks(mu: Partition, lam: Partition) -> bool:
    """Whether the orbit of ``mu`` lies in the closure of the orbit of ``lam`` in gl_n.

    Decided by comparing ranks of powers of the Jordan matrices.
    """
    if mu.n != lam.n:
        raise ValueError(f"weight mismatch: {mu} vs {lam}")
    return all(a <= b for a, b in zip(power_ranks(mu), power_ranks(lam)))


def oracle_check(max_n: int) -> VerificationReport:
    """Compare the matrix computations with the partition formulas for every n <= max_n.

    One check per n for each of: centralizer dimensions, closure order, and
    rank of powers computed by repeated multiplication vs the direct power.
    """
    report = VerificationReport()
    for n in range(1, max_n + 1):
        parts = enumerate_partitions(n)

        bad = [str(lam) for lam in parts
               if centralizer_dim(jordan_matrix(lam)) != sum(d * d for d in dual(lam))]
        report.checks.append(CheckResult(
            f"n={n}: centralizer dimension = sum of squared dual parts ({len(parts)} partitions)",
            not bad, ", ".join(bad)))

        mismatched = [
            f"{mu} vs {lam}" for mu in parts for lam in parts
            if closure_leq_via_ranks(mu, lam) != dominates(lam, mu)
        ]
        report.checks.append(CheckResult(
            f"n={n}: rank-of-powers closure order = dominance ({len(parts) ** 2} pairs)",
            not mismatched, ", ".join(mismatched[:5])))

        power_bad = [
            str(lam) for lam in parts
            if power_ranks(lam) != tuple(jordan_power(lam, k).rank() for k in range(1, n + 1))
            or power_ranks(lam) != tuple(jordan_matrix(lam).power(k).rank() for k in range(1, n + 1))
        ]
        report.checks.append(CheckResult(
            f"n={n}: rank of powers agrees across three computations", not power_bad,
            ", ".join(power_bad)))
    return report
