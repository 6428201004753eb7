"""Exact combinatorics of nilpotent orbits and sheets in classical Lie algebras."""
from .partitions import (
    LieAlgebraKind,
    Partition,
    collapse,
    dominates,
    dual,
    enumerate_partitions,
    is_valid,
    orbit_dimension,
    parse_kind,
    parse_partition,
)
from .type_a import (
    SheetDescriptor,
    phenomenon2_counterexamples,
    sheet_closure,
    sheet_from_orbit,
    sheet_poset_dot,
    sheet_precedes,
)
from .classical import (
    LeviSpec,
    NilpotentOrbit,
    induce,
    is_induced,
    is_rigid,
    orbit_closure_leq,
    phenomenon1_counterexamples,
    valid_orbits,
)
from .exceptional import (
    Catalog,
    closure_contains,
    load_bundled_catalog,
    load_catalog,
    verify_paper_examples,
)
from .matrix_oracle import ExactMatrix, centralizer_dim, closure_leq_via_ranks, jordan_matrix

__version__ = "0.1.0"
