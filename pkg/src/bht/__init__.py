"""Exact arithmetic in Brin-Higman-Thompson groups.

Elements of the groups nV_{k,r} (and their mixed-alphabet relatives) are
modeled as finite prefix-exchange tables acting on disjoint unions of product
shift spaces.  The package provides the group arithmetic and word problem,
constructive witnesses for pure infiniteness (compressions, doublings,
multisections, vigor elements, conjugate families, compressibility data),
embeddings of Thompson's group V supported on a prescribed region, and the
closed-form homology, abelianization and character tables.
"""

from .abelian import (
    AbelianGroup,
    CharacterFamily,
    CharacterTable,
    abelianization,
    homology,
    is_perfect,
    proper_characters,
)
from .element import (
    Multisection,
    PrefixBijection,
    TableElement,
    apply_point,
    canonicalize,
    closed_support,
    commutator,
    compose,
    compose_partial,
    equals,
    identity,
    image_clopen,
    invert,
    invert_partial,
    is_identity,
    order,
)
from .space import (
    Brick,
    Clopen,
    RationalPoint,
    SpaceSpec,
    clopen_algebra,
    h0_class,
    point_in,
    subdivide,
)
from .vembed import (
    VEmbedding,
    binary_space,
    build_v_embedding,
    evaluate_embedding,
    image_vigor_check,
)
from .witness import (
    ConjugateFamily,
    bisection_between,
    compress,
    compressibility_witness,
    conjugate_family,
    distinct_conjugates,
    doubling_witness,
    multisection,
    vigor_case,
    vigor_witness,
)

__all__ = [
    "AbelianGroup",
    "Brick",
    "CharacterFamily",
    "CharacterTable",
    "Clopen",
    "ConjugateFamily",
    "Multisection",
    "PrefixBijection",
    "RationalPoint",
    "SpaceSpec",
    "TableElement",
    "VEmbedding",
    "abelianization",
    "apply_point",
    "binary_space",
    "bisection_between",
    "build_v_embedding",
    "canonicalize",
    "clopen_algebra",
    "closed_support",
    "commutator",
    "compose",
    "compose_partial",
    "compress",
    "compressibility_witness",
    "conjugate_family",
    "distinct_conjugates",
    "doubling_witness",
    "equals",
    "evaluate_embedding",
    "h0_class",
    "homology",
    "identity",
    "image_clopen",
    "image_vigor_check",
    "invert",
    "invert_partial",
    "is_identity",
    "is_perfect",
    "multisection",
    "order",
    "point_in",
    "proper_characters",
    "subdivide",
    "vigor_case",
    "vigor_witness",
]
