"""Wadge-style reducibility on finite T0 spaces.

Finite posets double as topological spaces (opens = up-sets).  The
package decides continuous reducibility between subsets and partitions,
locates subsets in the finite difference hierarchy over open sets, and
builds the quotient degree structures with shape diagnostics.
"""

from .errors import (
    CapExceeded,
    ColorCountMismatch,
    CycleError,
    DocumentError,
    DuplicateLabelError,
    EmptySubspace,
    FinWadgeError,
    NotIncreasing,
    NotOpen,
    SpaceMismatch,
    UnknownElement,
)
from .gallery import (
    FanSpace,
    antichain,
    chain,
    expected_structure,
    fan,
    lex_product,
    linear_sum,
    truncated_c_infinity,
)
from .hierarchy import (
    AlternatingChain,
    DiffLevel,
    classify,
    d_n,
    find_difference_representation,
    level_leq,
    longest_alternating_chain,
    oracle_level,
)
from .poset import DerivativeTrace, FinitePoset, SubsetMask, build_poset, poset_isomorphic
from .wadge import (
    DegreeStructure,
    EmbeddingReport,
    KPartition,
    MonotoneMap,
    ReducibilityKind,
    all_subsets,
    constant_partitions,
    degree_embedding_check,
    degree_structure,
    is_monotone,
    is_retraction,
    partition_reduces,
    structure_label,
    wadge_reduces,
)

__version__ = "0.1.0"

__all__ = [
    "AlternatingChain",
    "CapExceeded",
    "ColorCountMismatch",
    "CycleError",
    "DegreeStructure",
    "DerivativeTrace",
    "DiffLevel",
    "DocumentError",
    "DuplicateLabelError",
    "EmbeddingReport",
    "EmptySubspace",
    "FanSpace",
    "FinWadgeError",
    "FinitePoset",
    "KPartition",
    "MonotoneMap",
    "NotIncreasing",
    "NotOpen",
    "ReducibilityKind",
    "SpaceMismatch",
    "SubsetMask",
    "UnknownElement",
    "all_subsets",
    "antichain",
    "build_poset",
    "chain",
    "classify",
    "constant_partitions",
    "d_n",
    "degree_embedding_check",
    "degree_structure",
    "expected_structure",
    "fan",
    "find_difference_representation",
    "is_monotone",
    "is_retraction",
    "level_leq",
    "lex_product",
    "linear_sum",
    "longest_alternating_chain",
    "oracle_level",
    "partition_reduces",
    "poset_isomorphic",
    "structure_label",
    "truncated_c_infinity",
    "wadge_reduces",
]
