"""Ranks, membership and isomorphism for finite algebraic structures."""

from ._core import (
    BudgetError,
    CayleyTable,
    InputError,
    RingAxiomError,
    RingTable,
    SearchConfig,
    classify,
    closure,
    cube,
    cube_member,
    cube_rank,
    dumps,
    evaluate,
    families,
    generate,
    is_member,
    isomorphic,
    load,
    rank,
    rank_chain,
    rank_variant,
    ring_rank,
    subgroup_member,
    subring_closure,
)

__all__ = [
    "BudgetError",
    "CayleyTable",
    "InputError",
    "RingAxiomError",
    "RingTable",
    "SearchConfig",
    "classify",
    "closure",
    "cube",
    "cube_member",
    "cube_rank",
    "dumps",
    "evaluate",
    "families",
    "generate",
    "is_member",
    "isomorphic",
    "load",
    "rank",
    "rank_chain",
    "rank_variant",
    "ring_rank",
    "subgroup_member",
    "subring_closure",
]
