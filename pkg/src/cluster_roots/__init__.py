"""Exact engine for quiver mutation c- and g-vectors and real Schur roots."""

from .presets import preset, preset_names
from .quiver import (
    DEFAULT_ENTRY_LIMIT,
    ExchangeMatrix,
    IntVector,
    MutationOverflowError,
    QuiverSpec,
    Seed,
    from_arrows,
    g_from_c,
    initial_seed,
    is_acyclic,
    is_sign_coherent,
    mutate,
    parse_quiver_document,
)
from .roots import QuiverForms, forms_of
from .schur import (
    DEFAULT_PRIME,
    DEFAULT_TRIALS,
    RepSample,
    SchurVerdict,
    end_dim,
    enumerate_real_schur_roots,
    hom_dim,
    is_real_schur_root,
    sample_generic_rep,
)
from .search import (
    DEFAULT_SEED_CAP,
    SearchReport,
    contains_c_vector,
    enumerate_c_vectors,
    is_finite_type,
)
from .verify import (
    TheoremReport,
    verify_counterexample_atilde2,
    verify_counterexample_markov,
    verify_main_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ENTRY_LIMIT",
    "DEFAULT_PRIME",
    "DEFAULT_SEED_CAP",
    "DEFAULT_TRIALS",
    "ExchangeMatrix",
    "IntVector",
    "MutationOverflowError",
    "QuiverForms",
    "QuiverSpec",
    "RepSample",
    "SchurVerdict",
    "SearchReport",
    "Seed",
    "TheoremReport",
    "contains_c_vector",
    "end_dim",
    "enumerate_c_vectors",
    "enumerate_real_schur_roots",
    "forms_of",
    "from_arrows",
    "g_from_c",
    "hom_dim",
    "initial_seed",
    "is_acyclic",
    "is_finite_type",
    "is_real_schur_root",
    "is_sign_coherent",
    "mutate",
    "parse_quiver_document",
    "preset",
    "preset_names",
    "sample_generic_rep",
    "verify_counterexample_atilde2",
    "verify_counterexample_markov",
    "verify_main_theorem",
    "__version__",
]
