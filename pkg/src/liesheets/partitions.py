"""Integer partitions and the classical-type bookkeeping built on them.

Partitions are stored as weakly decreasing tuples of positive integers with
no trailing zeros, so two partitions are equal exactly when their parts are.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "LieAlgebraKind",
    "FAMILIES",
    "dual",
    "dominates",
    "enumerate_partitions",
    "is_valid",
    "collapse",
    "orbit_dimension",
    "parse_partition",
    "parse_kind",
]

FAMILIES = ("A", "B", "C", "D")

_TOKEN = re.compile(r"^([1-9][0-9]*)(?:\^([0-9]+))?$")


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers.

    Zeros in the input are dropped, so ``Partition([2, 1, 0])`` is ``2,1``.
    Ordering compares parts lexicographically; sorting in reverse gives the
    reverse-lexicographic order used throughout the package.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = tuple(int(p) for p in parts if p != 0)
        if any(p < 0 for p in cleaned):
            raise ValueError(f"negative part in {cleaned}")
        if any(a < b for a, b in zip(cleaned, cleaned[1:])):
            raise ValueError(f"parts are not weakly decreasing: {cleaned}")
        object.__setattr__(self, "parts", cleaned)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __le__(self, other: "Partition") -> bool:
        return self.parts <= other.parts

    def __gt__(self, other: "Partition") -> bool:
        return self.parts > other.parts

    def __ge__(self, other: "Partition") -> bool:
        return self.parts >= other.parts

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition([{self}])"

    def part(self, i: int) -> int:
        """The i-th part (0-based), or 0 past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def exponent_str(self) -> str:
        """Render with exponent sugar, e.g. ``3,2^2,1``."""
        out = []
        for value, count in sorted(self.multiplicities().items(), reverse=True):
            out.append(str(value) if count == 1 else f"{value}^{count}")
        return ",".join(out)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return parse_partition(text)


@dataclass(frozen=True)
class LieAlgebraKind:
    """A classical simple Lie algebra, given by family and natural dimension.

    ``A:n`` is sl_n, ``B:N`` is so_N (N odd), ``C:N`` is sp_N (N even) and
    ``D:N`` is so_N (N even).  The constructor checks parity only; the small
    degenerate cases (so_1, so_2, sp_0, so_0) are accepted because they show
    up as residual factors of Levi subalgebras.  Use :func:`parse_kind` or
    :meth:`check_simple` for user input.
    """

    family: str
    N: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.N < 0:
            raise ValueError("N must be non-negative")
        if self.family == "A" and self.N < 1:
            raise ValueError("type A needs n >= 1")
        if self.family == "B" and self.N % 2 != 1:
            raise ValueError(f"type B needs odd N, got {self.N}")
        if self.family in "CD" and self.N % 2 != 0:
            raise ValueError(f"type {self.family} needs even N, got {self.N}")

    def __str__(self) -> str:
        return f"{self.family}:{self.N}"

    @property
    def is_orthogonal(self) -> bool:
        return self.family in "BD"

    @property
    def adjoint_dim(self) -> int:
        N = self.N
        if self.family == "A":
            return N * N - 1
        if self.family == "C":
            return N * (N + 1) // 2
        return N * (N - 1) // 2

    def check_simple(self) -> "LieAlgebraKind":
        minimum = {"A": 1, "B": 3, "C": 2, "D": 4}[self.family]
        if self.N < minimum:
            raise ValueError(f"{self} is below the smallest {self.family}-type algebra")
        return self

    def with_dim(self, N: int) -> "LieAlgebraKind":
        return LieAlgebraKind(self.family, N)


def parse_partition(text: str) -> Partition:
    """Parse ``3,2,2,1`` or ``3,2^2,1``; the empty string is the empty partition."""
    if text == "":
        return Partition()
    parts: list[int] = []
    for token in text.split(","):
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"bad partition token {token!r} in {text!r}")
        parts.extend([int(m.group(1))] * int(m.group(2) or 1))
    return Partition(parts)


def parse_kind(text: str) -> LieAlgebraKind:
    family, sep, N = text.partition(":")
    if not sep or not N.isdigit():
        raise ValueError(f"bad kind {text!r}, expected e.g. D:8")
    return LieAlgebraKind(family, int(N)).check_simple()


def _require_same_weight(lam: Partition, mu: Partition) -> None:
    if lam.n != mu.n:
        raise ValueError(f"weight mismatch: {lam} has weight {lam.n}, {mu} has weight {mu.n}")


def _require_weight(lam: Partition, kind: LieAlgebraKind) -> None:
    if lam.n != kind.N:
        raise ValueError(f"{lam} has weight {lam.n} but {kind} needs {kind.N}")


def dual(lam: Partition) -> Partition:
    """Conjugate partition: the i-th part counts the parts of lam that are >= i."""
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam.part(0) + 1))


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff mu is below lam in dominance order (every partial sum of mu is <= lam's)."""
    _require_same_weight(lam, mu)
    s_lam = s_mu = 0
    for a, b in zip_longest(lam, mu, fillvalue=0):
        s_lam += a
        s_mu += b
        if s_mu > s_lam:
            return False
    return True


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order ([n] first, [1^n] last)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions_bounded(n, n)]


def _bad_parity(kind: LieAlgebraKind) -> int:
    # Parity whose parts must occur with even multiplicity.
    return 0 if kind.is_orthogonal else 1


def is_valid(lam: Partition, kind: LieAlgebraKind) -> bool:
    """Whether lam labels a nilpotent orbit of the algebra."""
    _require_weight(lam, kind)
    if kind.family == "A":
        return True
    parity = _bad_parity(kind)
    return all(c % 2 == 0 for p, c in lam.multiplicities().items() if p % 2 == parity)


def collapse(lam: Partition, kind: LieAlgebraKind) -> Partition:
    """The largest valid partition for ``kind`` dominated by lam.

    Repair loop: take the largest part q of the constrained parity that has
    odd multiplicity, lower its last occurrence by one and raise the first
    later part that is below q - 1 by one.
    """
    _require_weight(lam, kind)
    if kind.family == "A":
        raise ValueError("collapse is only defined for families B, C, D")
    parity = _bad_parity(kind)
    parts = list(lam) + [0]
    while True:
        counts = Counter(p for p in parts if p)
        offenders = [p for p, c in counts.items() if p % 2 == parity and c % 2 == 1]
        if not offenders:
            return Partition(parts)
        q = max(offenders)
        last = max(i for i, p in enumerate(parts) if p == q)
        parts[last] -= 1
        j = next(i for i in range(last + 1, len(parts)) if parts[i] < q - 1)
        parts[j] += 1
        if parts[-1]:
            parts.append(0)


def orbit_dimension(lam: Partition, kind: LieAlgebraKind) -> int:
    """Dimension of the nilpotent orbit labelled by lam.

    Type A uses the gl_n count N^2 - sum(dual^2), which equals the sl_n one.
    """
    if not is_valid(lam, kind):
        raise ValueError(f"{lam} is not a valid partition for {kind}")
    N = kind.N
    squares = sum(d * d for d in dual(lam))
    odd_parts = sum(1 for p in lam if p % 2)
    if kind.family == "A":
        return N * N - squares
    if kind.family == "C":
        return N * (N + 1) // 2 - (squares + odd_parts) // 2
    return N * (N - 1) // 2 - (squares - odd_parts) // 2
