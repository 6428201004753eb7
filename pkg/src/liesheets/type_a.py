"""Sheets of sl_n.

Each sheet of sl_n contains exactly one nilpotent orbit, so sheets are
indexed by partitions of n.  The sheet of ``lam`` is the regular closure of
the orbit of the centre of a Levi subalgebra whose block sizes are
``dual(lam)``.  Containment of sheet closures then becomes a question about
merging Levi blocks, decided here by exact search.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .partitions import (
    LieAlgebraKind,
    Partition,
    dominates,
    dual,
    enumerate_partitions,
    orbit_dimension,
)

__all__ = [
    "SheetDescriptor",
    "sheet_from_orbit",
    "sheet_precedes",
    "find_block_merge",
    "sheet_closure",
    "sheet_order_pairs",
    "phenomenon2_counterexamples",
    "hasse_edges",
    "sheet_poset_dot",
]


@dataclass(frozen=True)
class SheetDescriptor:
    """The sheet of sl_n through the nilpotent orbit ``lam``.

    ``levi_blocks`` are the block sizes of the Levi subalgebra whose centre
    generates the sheet; ``orbit_dim`` is the dimension shared by every orbit
    in the sheet.
    """

    lam: Partition
    levi_blocks: Partition
    orbit_dim: int

    @property
    def n(self) -> int:
        return self.lam.n


def sheet_from_orbit(lam: Partition) -> SheetDescriptor:
    if not lam.parts:
        raise ValueError("the empty partition does not label a sheet")
    blocks = dual(lam)
    n = lam.n
    dim = n * n - sum(b * b for b in blocks)
    assert dim == orbit_dimension(lam, LieAlgebraKind("A", n))
    return SheetDescriptor(lam, blocks, dim)


def _subsets_with_sum(items: tuple[int, ...], target: int, start: int = 0):
    """Yield index tuples of sub-multisets of ``items`` (sorted decreasing) summing to target.

    Equal values at the same depth are tried once only.
    """
    if target == 0:
        yield ()
        return
    for i in range(start, len(items)):
        if i > start and items[i] == items[i - 1]:
            continue
        if items[i] > target:
            continue
        # items are decreasing, so the tail bounds what is still reachable
        if sum(items[i:]) < target:
            return
        for rest in _subsets_with_sum(items, target - items[i], i + 1):
            yield (i,) + rest


@lru_cache(maxsize=None)
def _merge(items: tuple[int, ...], targets: tuple[int, ...]):
    """Group ``items`` into len(targets) nonempty blocks with the given sums.

    Returns a tuple of blocks (as value tuples, aligned with targets) or None.
    """
    if not targets:
        return () if not items else None
    if len(items) < len(targets) or sum(items) != sum(targets):
        return None
    if items[0] > targets[0]:
        return None
    first, others = targets[0], targets[1:]
    for chosen in _subsets_with_sum(items, first):
        picked = set(chosen)
        remaining = tuple(v for i, v in enumerate(items) if i not in picked)
        rest = _merge(remaining, others)
        if rest is not None:
            return (tuple(items[i] for i in chosen),) + rest
    return None


def find_block_merge(lam: Partition, lam_prime: Partition):
    """Witness for ``lam`` preceding ``lam_prime``, or None.

    The witness lists, for each part of ``dual(lam)``, the parts of
    ``dual(lam_prime)`` merged into it.
    """
    if lam.n != lam_prime.n:
        raise ValueError(f"weight mismatch: {lam} vs {lam_prime}")
    return _merge(dual(lam_prime).parts, dual(lam).parts)


def sheet_precedes(lam: Partition, lam_prime: Partition) -> bool:
    """Whether the sheet of ``lam`` lies in the closure of the sheet of ``lam_prime``.

    Holds iff the Levi blocks of ``lam`` are obtained by merging the Levi
    blocks of ``lam_prime`` into nonempty groups.
    """
    if lam.n != lam_prime.n:
        raise ValueError(f"weight mismatch: {lam} vs {lam_prime}")
    # every block of lam needs at least one block of lam_prime
    if lam.part(0) > lam_prime.part(0):
        return False
    return find_block_merge(lam, lam_prime) is not None


def sheet_closure(lam_prime: Partition) -> frozenset[Partition]:
    """All partitions whose sheet lies in the closure of the sheet of ``lam_prime``."""
    return frozenset(
        lam for lam in enumerate_partitions(lam_prime.n) if sheet_precedes(lam, lam_prime)
    )


def _evaluate(pairs, predicate, workers: int):
    if workers <= 1:
        return [predicate(*p) for p in pairs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda p: predicate(*p), pairs))


def sheet_order_pairs(n: int, workers: int = 1) -> list[tuple[Partition, Partition]]:
    """Every pair (lam, lam') of partitions of n with lam preceding lam'."""
    parts = enumerate_partitions(n)
    pairs = list(product(parts, parts))
    hits = _evaluate(pairs, sheet_precedes, workers)
    return [p for p, ok in zip(pairs, hits) if ok]


def phenomenon2_counterexamples(n: int, workers: int = 1) -> list[tuple[Partition, Partition]]:
    """Pairs (lam, lam') with O_lam in the orbit closure of lam' but lam not preceding lam'.

    For such a pair the closure of the sheet of lam' meets the sheet of lam
    (at O_lam) without containing it, so it is not a union of sheets.
    Sorted reverse-lexicographically.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    parts = enumerate_partitions(n)
    candidates = [(lam, lp) for lam in parts for lp in parts if lam != lp and dominates(lp, lam)]
    hits = _evaluate(candidates, sheet_precedes, workers)
    found = [pair for pair, ok in zip(candidates, hits) if not ok]
    return sorted(found, key=lambda p: (p[0].parts, p[1].parts), reverse=True)


def hasse_edges(n: int, workers: int = 1) -> list[tuple[Partition, Partition]]:
    """Covering pairs (smaller, larger) of the sheet order on partitions of n."""
    strict = {(a, b) for a, b in sheet_order_pairs(n, workers) if a != b}
    above: dict[Partition, set] = {}
    for a, b in strict:
        above.setdefault(a, set()).add(b)
    covers = []
    for a, b in strict:
        if not any((c, b) in strict for c in above[a] if c != b):
            covers.append((a, b))
    return sorted(covers, key=lambda e: (str(e[0]), str(e[1])))


def sheet_poset_dot(n: int, workers: int = 1) -> str:
    """Graphviz digraph of the Hasse diagram, edges pointing from contained sheet to larger."""
    if n < 1:
        raise ValueError("n must be >= 1")
    nodes = sorted(f'  "{p}";' for p in enumerate_partitions(n))
    edges = sorted(f'  "{a}" -> "{b}";' for a, b in hasse_edges(n, workers))
    return "\n".join([f"digraph sheets_{n} {{", *nodes, *edges, "}"]) + "\n"
