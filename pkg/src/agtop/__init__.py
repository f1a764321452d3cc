"""Finite Abel-Grassmann's groupoids: ideals, bi-ideals and their topologies."""

from .errors import (
    AGTopError,
    AGTParseError,
    CapExceededError,
    EmptySubsetError,
    HypothesisNotMet,
    KindMismatchError,
    NotLeftInvertiveError,
)
from .harness import CLAIMS, recheck, run_claim, run_corpus
from .results import ClaimResult, Status
from .search import SearchSpec, census_counts, enumerate_ag_groupoids
from .subsets import ElemSet, IdealKind, enumerate_subsets_of_kind, generated_closure, set_product
from .table import AGTable, canonical_form, check_left_invertive, emit_table, parse_table
from .topology import FiniteTopology, build_gamma_omega, build_gamma_ps, verify_topology

__version__ = "0.1.0"
