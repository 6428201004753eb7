"""Nilpotent orbits of the classical algebras: closure, induction, rigidity.

An orbit is rigid when it is a sheet by itself, i.e. when it is not induced
from any proper Levi subalgebra.  Two independent routes decide rigidity:
the closed-form partition criterion in :func:`is_rigid` and the exhaustive
induction search in :func:`is_induced`.  The test suite holds them equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Sequence

from .partitions import (
    LieAlgebraKind,
    Partition,
    collapse,
    dominates,
    enumerate_partitions,
    is_valid,
)

__all__ = [
    "NilpotentOrbit",
    "LeviSpec",
    "valid_orbits",
    "orbit_closure_leq",
    "induce",
    "induced_partitions",
    "is_induced",
    "is_rigid",
    "phenomenon1_counterexamples",
]


@dataclass(frozen=True)
class NilpotentOrbit:
    kind: LieAlgebraKind
    lam: Partition

    def __post_init__(self):
        if not is_valid(self.lam, self.kind):
            raise ValueError(f"{self.lam} does not label a nilpotent orbit of {self.kind}")

    def __str__(self) -> str:
        return f"{self.kind} [{self.lam}]"


@dataclass(frozen=True)
class LeviSpec:
    """Levi subalgebra gl_{a_1} x ... x gl_{a_r} x g(tail_N) of ``kind``.

    In type A there is no residual factor: tail_N is 0 and the blocks sum to N.
    Otherwise 2 * sum(blocks) + tail_N == N and the residual factor has the
    family of ``kind``.
    """

    kind: LieAlgebraKind
    gl_blocks: tuple[int, ...]
    tail_N: int = 0

    def __post_init__(self):
        object.__setattr__(self, "gl_blocks", tuple(self.gl_blocks))
        if any(a < 1 for a in self.gl_blocks):
            raise ValueError(f"gl blocks must be positive: {self.gl_blocks}")
        total = sum(self.gl_blocks)
        if self.kind.family == "A":
            if self.tail_N != 0 or total != self.kind.N:
                raise ValueError(f"type A Levi blocks must sum to {self.kind.N} with no tail")
        else:
            if 2 * total + self.tail_N != self.kind.N:
                raise ValueError(
                    f"2*{total} + {self.tail_N} != {self.kind.N} for Levi of {self.kind}"
                )
            # raises on a parity mismatch
            self.tail_kind

    @property
    def tail_kind(self) -> LieAlgebraKind | None:
        if self.kind.family == "A":
            return None
        return self.kind.with_dim(self.tail_N)

    @property
    def dim(self) -> int:
        gl = sum(a * a for a in self.gl_blocks)
        if self.kind.family == "A":
            return gl - 1
        return gl + self.tail_kind.adjoint_dim

    @property
    def nilradical_dim(self) -> int:
        return (self.kind.adjoint_dim - self.dim) // 2


def valid_orbits(kind: LieAlgebraKind) -> list[NilpotentOrbit]:
    """Every nilpotent orbit of ``kind``, in reverse-lexicographic partition order."""
    return [NilpotentOrbit(kind, lam) for lam in enumerate_partitions(kind.N) if is_valid(lam, kind)]


def orbit_closure_leq(lower: NilpotentOrbit, upper: NilpotentOrbit) -> bool:
    """Whether ``lower`` lies in the closure of ``upper``."""
    if lower.kind != upper.kind:
        raise ValueError(f"kind mismatch: {lower.kind} vs {upper.kind}")
    return dominates(upper.lam, lower.lam)


def _add(lam: Sequence[int], nu: Sequence[int], scale: int = 1) -> list[int]:
    return [a + scale * b for a, b in zip_longest(lam, nu, fillvalue=0)]


def induce(
    levi: LeviSpec,
    gl_orbits: Sequence[Partition] | None = None,
    tail_orbit: Partition | None = None,
) -> NilpotentOrbit:
    """Induce an orbit of ``levi.kind`` from an orbit of the Levi subalgebra.

    ``gl_orbits[i]`` is a partition of ``gl_blocks[i]`` and defaults to the zero
    orbit; ``tail_orbit`` defaults to the zero orbit of the residual factor.
    """
    kind = levi.kind
    if gl_orbits is None:
        gl_orbits = [Partition([1] * a) for a in levi.gl_blocks]
    gl_orbits = list(gl_orbits)
    if len(gl_orbits) != len(levi.gl_blocks):
        raise ValueError(f"{len(gl_orbits)} block orbits for {len(levi.gl_blocks)} blocks")
    for a, nu in zip(levi.gl_blocks, gl_orbits):
        if nu.n != a:
            raise ValueError(f"block orbit {nu} is not a partition of {a}")

    if kind.family == "A":
        if tail_orbit is not None and tail_orbit.parts:
            raise ValueError("type A Levis have no residual factor")
        total: list[int] = []
        for nu in gl_orbits:
            total = _add(total, nu)
        return NilpotentOrbit(kind, Partition(sorted(total, reverse=True)))

    tail_kind = levi.tail_kind
    if tail_orbit is None:
        tail_orbit = Partition([1] * tail_kind.N)
    if not is_valid(tail_orbit, tail_kind):
        raise ValueError(f"{tail_orbit} is not an orbit of the residual factor {tail_kind}")

    current, N = tail_orbit, tail_kind.N
    for a, nu in zip(levi.gl_blocks, gl_orbits):
        N += 2 * a
        current = collapse(Partition(_add(current, nu, 2)), kind.with_dim(N))
    return NilpotentOrbit(kind, current)


@lru_cache(maxsize=None)
def induced_partitions(kind: LieAlgebraKind) -> frozenset[Partition]:
    """Partitions of all orbits induced from a proper Levi subalgebra.

    Induction is transitive and every proper Levi sits inside a maximal one,
    so it is enough to run over maximal Levis and all orbits on them.
    """
    found: set[Partition] = set()
    N = kind.N
    if kind.family == "A":
        for a in range(1, N // 2 + 1):
            levi = LeviSpec(kind, (a, N - a))
            for nu in enumerate_partitions(a):
                for nu2 in enumerate_partitions(N - a):
                    found.add(induce(levi, [nu, nu2]).lam)
        return frozenset(found)

    for a in range(1, N // 2 + 1):
        levi = LeviSpec(kind, (a,), N - 2 * a)
        tails = [t for t in enumerate_partitions(levi.tail_N) if is_valid(t, levi.tail_kind)]
        for nu in enumerate_partitions(a):
            for tail in tails:
                found.add(induce(levi, [nu], tail).lam)
    return frozenset(found)


def is_induced(orbit: NilpotentOrbit) -> bool:
    """Brute-force test: is ``orbit`` induced from some proper Levi subalgebra?"""
    return orbit.lam in induced_partitions(orbit.kind)


def is_rigid(orbit: NilpotentOrbit) -> bool:
    """Closed-form rigidity test.

    In type A only the zero orbit is rigid.  In types B, C, D the partition
    must have no jump larger than one between consecutive parts (the last
    part counting as a jump down to 0), and no part of the unconstrained
    parity (odd for B and D, even for C) may occur exactly twice.
    """
    lam = orbit.lam
    if orbit.kind.family == "A":
        return all(p == 1 for p in lam)
    padded = list(lam) + [0]
    if any(a - b > 1 for a, b in zip(padded, padded[1:])):
        return False
    free_parity = 1 if orbit.kind.is_orthogonal else 0
    return not any(
        c == 2 for p, c in lam.multiplicities().items() if p % 2 == free_parity
    )


def phenomenon1_counterexamples(kind: LieAlgebraKind) -> list[tuple[NilpotentOrbit, NilpotentOrbit]]:
    """Pairs (rigid O1, non-rigid O2) with O2 in the closure of O1.

    O1 is a sheet on its own, and its closure holds O2 but none of the
    non-nilpotent elements of the sheets through O2, so the closure of O1 is
    not a union of sheets.  Sorted by (upper, lower) partition strings.
    """
    orbits = valid_orbits(kind)
    rigid = [o for o in orbits if is_rigid(o)]
    flexible = [o for o in orbits if not is_rigid(o)]
    pairs = [(hi, lo) for hi in rigid for lo in flexible if orbit_closure_leq(lo, hi)]
    return sorted(pairs, key=lambda p: (str(p[0].lam), str(p[1].lam)))
