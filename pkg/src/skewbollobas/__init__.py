"""Skew Bollobas set-pair systems: exact bounds, extremal constructions,
peeling certificates and an exhaustive search oracle."""
from .bounds import BoundTable, binomial, bound_table, identity_check
from .construct import construction_trace, extremal_system
from .core import (PreconditionError, SetPair, SetPairSystem, SystemReport, ValidationError,
                   disjoint_union_relabel, dual, is_bollobas, is_skew_bollobas, normalize,
                   pad, report)
from .peel import (PeelCertificate, PeelError, PeelLevel, minimal_union_subset, peel,
                   verify_certificate)
from .search import SearchProblem, SearchResult, enumerate_systems, max_objective

__version__ = "0.1.0"
