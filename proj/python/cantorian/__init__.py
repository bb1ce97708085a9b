"""Exact enumeration of Cantorian and bi-Cantorian tableaux.

Thin wrapper around the compiled extension.  In an installed wheel the
extension lives inside this package; in a build tree it sits on
PYTHONPATH next to it.
"""

try:
    from cantorian._cantorian import *  # noqa: F401,F403
    from cantorian._cantorian import oracle  # noqa: F401
except ImportError:  # build-tree layout
    from _cantorian import *  # noqa: F401,F403
    from _cantorian import oracle  # noqa: F401

__all__ = [
    "Tableau",
    "parikh_word",
    "parikh_tableau",
    "class_invariant",
    "cmp_composition",
    "cmp_word",
    "cmp_tableau",
    "permanent_contains",
    "enumerate_permanent",
    "is_cantorian",
    "is_bicantorian",
    "is_reduced",
    "minimal_reduced",
    "class_cardinality",
    "class_cardinality_at",
    "census",
    "count_cantorian",
    "closed_form_C",
    "count_c_n_p",
    "count_bicantorian",
    "bicantorian_classes",
    "ratio_b_over_c",
    "count_K",
    "psi",
    "psi_inverse",
    "hypergraph_json",
    "oracle",
]
