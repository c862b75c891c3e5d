"""Semigraphoids, submodularity and the semigraphoid semigroup."""

from __future__ import annotations

from .ci import (
    AxiomEquation,
    CIStatement,
    apply_permutation,
    build_matrix,
    elementary_imset,
    enumerate_statements,
    gamma,
    generate_axioms,
    level_counts,
    parse_imset,
    parse_statement,
)
from .geometry import class_poset, edge_statement, is_simplicial, rank_test, statements_of_partition
from .imsets import enumerate_fiber, is_combinatorial, is_structural, verify_nonnormality
from .markov import MarkovMove, in_kernel, is_indispensable, orbit, prime_contains_axioms
from .rational import cone_dimension, kernel_basis, rank, single_ray_generator, solve_feasibility
from .semigraphoid import (
    StatementSet,
    classification_table,
    closure,
    enumerate_all,
    is_coarsest,
    is_semigraphoid,
    type_signature,
)
from .submodular import certificate_report, count_submodular, is_submodular

__version__ = "0.1.0"
