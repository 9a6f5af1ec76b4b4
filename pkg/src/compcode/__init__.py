"""Group-ring matrix constructions of self-dual codes.

Builds generator matrices from group-ring elements — either the plain
translation matrix of an element or a composite block layout mixing
natural and auxiliary-group bands — over small characteristic-2 rings,
maps the results to binary through Gray maps, and measures/classifies
the binary images.
"""

from __future__ import annotations

from .bincodes import (
    BinaryCode,
    EnumeratorClass,
    WeightProfile,
    classify_enumerator,
    dual,
    is_self_dual,
    min_distance,
    neighbor,
    neighbor_chain,
    read_binary_code_text,
    row_to_string,
    string_to_row,
    weight_counts,
    write_binary_code,
)
from .composite import (
    CompositeSpec,
    OmegaMatrix,
    PRESET_NAMES,
    composite_code,
    omega_matrix,
    omega_pattern,
    parse_spec_file,
    parse_spec_text,
    preset_spec,
    validate_spec,
)
from .constructions import (
    ExtensionSpec,
    RingCode,
    SearchHit,
    build_pure_generator,
    chain_ranks,
    check_selfdual_condition,
    code_binary_image,
    code_cardinality,
    extend_code,
    gram_matrix,
    gray_image,
    GRAY_MAP_NAMES,
    read_ring_code_text,
    ring_code_is_self_dual,
    ring_inner_product,
    rowspace_code,
    search_random,
    write_ring_code,
)
from .graymaps import (
    RingVector,
    binary_image,
    lee_weight,
    ring_vector,
    vector_from_tokens,
)
from .groupring import (
    GroupRingElement,
    gr_add,
    gr_from_indices,
    gr_from_tokens,
    gr_identity,
    gr_involution,
    gr_mul,
    gr_tokens,
    gr_zero,
    is_unitary_unit,
    sigma_matrix,
)
from .groups import FiniteGroup, make_group
from .rings import RING_KINDS, Ring, RingElement, make_ring

__all__ = [
    "BinaryCode",
    "CompositeSpec",
    "EnumeratorClass",
    "ExtensionSpec",
    "FiniteGroup",
    "GRAY_MAP_NAMES",
    "GroupRingElement",
    "OmegaMatrix",
    "PRESET_NAMES",
    "RING_KINDS",
    "Ring",
    "RingCode",
    "RingElement",
    "RingVector",
    "SearchHit",
    "WeightProfile",
    "binary_image",
    "build_pure_generator",
    "chain_ranks",
    "check_selfdual_condition",
    "classify_enumerator",
    "code_binary_image",
    "code_cardinality",
    "composite_code",
    "omega_pattern",
    "dual",
    "extend_code",
    "gr_add",
    "gr_from_indices",
    "gr_from_tokens",
    "gr_identity",
    "gr_involution",
    "gr_mul",
    "gr_tokens",
    "gr_zero",
    "gram_matrix",
    "gray_image",
    "is_self_dual",
    "is_unitary_unit",
    "lee_weight",
    "make_group",
    "make_ring",
    "min_distance",
    "neighbor",
    "neighbor_chain",
    "omega_matrix",
    "parse_spec_file",
    "parse_spec_text",
    "preset_spec",
    "read_binary_code_text",
    "read_ring_code_text",
    "ring_code_is_self_dual",
    "ring_inner_product",
    "ring_vector",
    "row_to_string",
    "rowspace_code",
    "search_random",
    "sigma_matrix",
    "string_to_row",
    "validate_spec",
    "vector_from_tokens",
    "weight_counts",
    "write_binary_code",
    "write_ring_code",
]
