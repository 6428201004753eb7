"""A small file-backed catalog of nilpotent orbits in exceptional types.

File format, one statement per line, ``#`` starts a comment::

    orbit <algebra> <label> rigid=<true|false>
    closure <algebra> <upper> > <lower>

Labels are Bala-Carter symbols, kept as opaque case-sensitive strings.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from typing import Iterable

from .report import CheckResult, VerificationReport

__all__ = [
    "EXCEPTIONAL_ALGEBRAS",
    "PAPER_PAIRS",
    "CatalogError",
    "ExceptionalOrbitRecord",
    "ClosureEdge",
    "Catalog",
    "load_catalog",
    "load_bundled_catalog",
    "dump_catalog",
    "closure_contains",
    "CheckResult",
    "VerificationReport",
    "verify_paper_examples",
]

EXCEPTIONAL_ALGEBRAS = ("G2", "F4", "E6", "E7", "E8")

# (algebra, rigid orbit, non-rigid orbit in its closure)
PAPER_PAIRS = (
    ("E6", "3A1", "2A1"),
    ("E7", "A2+2A1", "A2+A1"),
    ("E8", "A2+A1", "A2"),
    ("F4", "A2+A1", "A2"),
)

BUNDLED_DATA = "exceptional_paper_facts.txt"


class CatalogError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class ExceptionalOrbitRecord:
    algebra: str
    label: str
    rigid: bool


@dataclass(frozen=True)
class ClosureEdge:
    """``lower`` lies in the closure of ``upper``."""

    algebra: str
    upper: str
    lower: str


@dataclass(frozen=True)
class Catalog:
    records: tuple[ExceptionalOrbitRecord, ...] = ()
    edges: tuple[ClosureEdge, ...] = ()

    @cached_property
    def _index(self) -> dict[tuple[str, str], ExceptionalOrbitRecord]:
        return {(r.algebra, r.label): r for r in self.records}

    @cached_property
    def _below(self) -> dict[tuple[str, str], list[str]]:
        below: dict[tuple[str, str], list[str]] = {}
        for e in self.edges:
            below.setdefault((e.algebra, e.upper), []).append(e.lower)
        return below

    def get(self, algebra: str, label: str) -> ExceptionalOrbitRecord | None:
        return self._index.get((algebra, label))

    def record(self, algebra: str, label: str) -> ExceptionalOrbitRecord:
        rec = self.get(algebra, label)
        if rec is None:
            raise KeyError(f"no orbit {label} recorded for {algebra}")
        return rec

    def without_edge(self, edge: ClosureEdge) -> "Catalog":
        return Catalog(self.records, tuple(e for e in self.edges if e != edge))


def _parse_bool(text: str, lineno: int) -> bool:
    if text == "rigid=true":
        return True
    if text == "rigid=false":
        return False
    raise CatalogError(f"expected rigid=true or rigid=false, got {text!r}", lineno)


def _check_algebra(name: str, lineno: int) -> str:
    if name not in EXCEPTIONAL_ALGEBRAS:
        raise CatalogError(f"unknown exceptional algebra {name!r}", lineno)
    return name


def load_catalog(source: Iterable[str] | str) -> Catalog:
    """Parse a catalog from a text stream (or a string holding the whole file)."""
    if isinstance(source, str):
        source = io.StringIO(source)
    records: list[ExceptionalOrbitRecord] = []
    seen: set[tuple[str, str]] = set()
    pending: list[tuple[int, ClosureEdge]] = []

    for lineno, raw in enumerate(source, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "orbit":
            if len(words) != 4:
                raise CatalogError("expected: orbit <algebra> <label> rigid=<true|false>", lineno)
            rec = ExceptionalOrbitRecord(
                _check_algebra(words[1], lineno), words[2], _parse_bool(words[3], lineno)
            )
            key = (rec.algebra, rec.label)
            if key in seen:
                raise CatalogError(f"duplicate orbit {rec.label} in {rec.algebra}", lineno)
            seen.add(key)
            records.append(rec)
        elif words[0] == "closure":
            if len(words) != 5 or words[3] != ">":
                raise CatalogError("expected: closure <algebra> <upper> > <lower>", lineno)
            pending.append(
                (lineno, ClosureEdge(_check_algebra(words[1], lineno), words[2], words[4]))
            )
        else:
            raise CatalogError(f"unknown statement {words[0]!r}", lineno)

    for lineno, e in pending:
        for label in (e.upper, e.lower):
            if (e.algebra, label) not in seen:
                raise CatalogError(f"closure refers to unknown orbit {label} in {e.algebra}", lineno)
    return Catalog(tuple(records), tuple(e for _, e in pending))


def load_bundled_catalog() -> Catalog:
    text = resources.files("liesheets.data").joinpath(BUNDLED_DATA).read_text(encoding="utf-8")
    return load_catalog(text)


def dump_catalog(catalog: Catalog) -> str:
    lines = [
        f"orbit {r.algebra} {r.label} rigid={'true' if r.rigid else 'false'}"
        for r in catalog.records
    ]
    lines += [f"closure {e.algebra} {e.upper} > {e.lower}" for e in catalog.edges]
    return "".join(line + "\n" for line in lines)


def closure_contains(catalog: Catalog, algebra: str, upper: str, lower: str) -> bool:
    """Whether ``lower`` is reachable from ``upper`` through recorded closure edges."""
    catalog.record(algebra, upper)
    catalog.record(algebra, lower)
    stack, seen = [upper], {upper}
    while stack:
        label = stack.pop()
        if label == lower:
            return True
        for nxt in catalog._below.get((algebra, label), ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return False


def verify_paper_examples(catalog: Catalog) -> VerificationReport:
    """Check the four exceptional rigid/non-rigid closure pairs against ``catalog``.

    Three checks per pair; a missing record fails its check instead of raising.
    """
    report = VerificationReport()
    for algebra, hi, lo in PAPER_PAIRS:
        upper, lower = catalog.get(algebra, hi), catalog.get(algebra, lo)

        name = f"{algebra}: {hi} is rigid"
        if upper is None:
            report.checks.append(CheckResult(name, False, "missing record"))
        else:
            report.checks.append(CheckResult(name, upper.rigid))

        name = f"{algebra}: {lo} is not rigid"
        if lower is None:
            report.checks.append(CheckResult(name, False, "missing record"))
        else:
            report.checks.append(CheckResult(name, not lower.rigid))

        name = f"{algebra}: {lo} lies in the closure of {hi}"
        if upper is None or lower is None:
            report.checks.append(CheckResult(name, False, "missing record"))
        else:
            report.checks.append(CheckResult(name, closure_contains(catalog, algebra, hi, lo)))
    return report
