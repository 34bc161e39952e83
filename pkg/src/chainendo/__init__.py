"""Monotone self-maps of a finite chain under pointwise join and composition.

The library enumerates these maps, carves out the substructures formed by
restricting the image to a fixed vertex set (simplices, and the two- and
three-vertex cases studied as strings and triangles), and verifies the
counting formulas and structure statements about them exhaustively at
small sizes.
"""

from .core import (
    ChainEndo,
    ChainEndoError,
    CompactForm,
    LengthMismatch,
    NotMonotone,
    OutOfRange,
    ParseError,
    SizeMismatch,
    SumMismatch,
    all_endomorphisms,
    constant,
    format_compact,
    identity,
    parse_compact,
)
from .simplex import (
    LayerId,
    RadiusScan,
    SimplexSpec,
    boundary,
    discrete_neighborhood,
    enumerate_simplex,
    interior,
    is_internal,
    layer,
    layers,
    min_semiring_radius,
    nilpotent_in_neighborhood,
)
from .strings import StringSpec, partition_string, string_mul_cases
from .triangle import (
    Region,
    RegionReport,
    TriangleSpec,
    TriElem,
    TypeTriple,
    decompose,
    elem_type,
    idempotent_triangle,
    interior_decompose,
    layer_string_iso,
    right_identities,
)
from .analysis import (
    Subset,
    classify_element,
    identities,
    is_ideal,
    is_subsemiring,
    iso_check,
    similar_pairs,
    triviality,
)
from .counting import audit, evaluate

__all__ = [
    "ChainEndo",
    "ChainEndoError",
    "CompactForm",
    "LengthMismatch",
    "NotMonotone",
    "OutOfRange",
    "ParseError",
    "SizeMismatch",
    "SumMismatch",
    "all_endomorphisms",
    "constant",
    "format_compact",
    "identity",
    "parse_compact",
    "LayerId",
    "RadiusScan",
    "SimplexSpec",
    "boundary",
    "discrete_neighborhood",
    "enumerate_simplex",
    "interior",
    "is_internal",
    "layer",
    "layers",
    "min_semiring_radius",
    "nilpotent_in_neighborhood",
    "StringSpec",
    "partition_string",
    "string_mul_cases",
    "Region",
    "RegionReport",
    "TriangleSpec",
    "TriElem",
    "TypeTriple",
    "decompose",
    "elem_type",
    "idempotent_triangle",
    "interior_decompose",
    "layer_string_iso",
    "right_identities",
    "Subset",
    "classify_element",
    "identities",
    "is_ideal",
    "is_subsemiring",
    "iso_check",
    "similar_pairs",
    "triviality",
    "audit",
    "evaluate",
]
