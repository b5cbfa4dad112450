"""Exact primitive-time partitions, conjunction-word consequence operators,
logic-system signatures and standard parts over a truncated-infinitesimal model.

Thin re-export of the compiled ``_core`` module.
"""

from ._core import (
    UltrawordError,
    canonical_conjunction_count,
    closure,
    closure_axioms_hold,
    converse_ri,
    decompose,
    enumerate_points,
    partition_point,
    perceived_closure,
    permutational_conjunction_count,
    run_cli,
    separate_vs_union,
    st,
    st_point,
    theory_signature,
    ultraword,
    verify_order_embedding,
)

__all__ = [
    "UltrawordError",
    "canonical_conjunction_count",
    "closure",
    "closure_axioms_hold",
    "converse_ri",
    "decompose",
    "enumerate_points",
    "partition_point",
    "perceived_closure",
    "permutational_conjunction_count",
    "run_cli",
    "separate_vs_union",
    "st",
    "st_point",
    "theory_signature",
    "ultraword",
    "verify_order_embedding",
]
