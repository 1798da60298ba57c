"""Thompson's group F as reduced binary tree pair diagrams.

The package provides the combinatorial model of the group: trees and
reduced tree pairs, the unique normal form over the infinite generating
set and its bijection with reduced pairs, group operations through
common refinement, caret-count metric estimates with an exact
breadth-first word-metric oracle, shift and clone maps, embeddings of
F x Z and F^m x Z^n, and a distortion measurement harness.

Everything operates on immutable values through pure functions, so the
whole API is safe under concurrent use.
"""

from .trees import (
    LEAF,
    ParseError,
    Tree,
    TreePair,
    caret,
    caret_count,
    format_pair,
    format_tree,
    graft_at,
    is_reduced,
    leaf_count,
    leaf_exponent,
    leaf_exponents,
    pair_to_dot,
    parse_pair,
    parse_tree,
    reduce_pair,
    right_subtree_of_root_empty,
    subtree_at,
    tree_from_exponents,
    tree_to_dot,
)
from .words import (
    Letter,
    NormalForm,
    Word,
    format_word,
    normal_form_to_tree_pair,
    parse_word,
    rewrite_to_normal_form,
    tree_pair_to_normal_form,
    word_inverse,
    x,
    xinv,
)
from .group import (
    GroupElement,
    RelatorReport,
    commutator,
    commutator_is_trivial,
    element_of_normal_form,
    element_of_word,
    generator,
    identity,
    inverse,
    multiply,
    power,
    to_normal_form,
    verify_relators,
)
from .embeddings import (
    ProductElement,
    address_interval,
    clone_map,
    embed_f_z,
    embed_product,
    embed_product_element,
    intervals_disjoint,
    is_prefix_free,
    right_subtree_claims,
    shift,
    z_generator,
)
from .metric import (
    BoundsReport,
    DEFAULT_RADIUS_CAP,
    DistortionSample,
    EmbeddingSpec,
    EnvelopeFit,
    MetricEstimate,
    WordMetricOracle,
    affine_fit,
    caret_count_of,
    check_bounds_on_ball,
    distortion_envelopes,
    distortion_sweep,
    enumerate_ball,
    envelope_fit,
    exact_length,
    f_z_spec,
    length_bounds,
    metric_estimate,
    product_spec,
    random_element,
    random_tree,
    sweep_to_csv,
)

__version__ = "0.1.0"

__all__ = [
    "LEAF",
    "ParseError",
    "Tree",
    "TreePair",
    "caret",
    "caret_count",
    "format_pair",
    "format_tree",
    "graft_at",
    "is_reduced",
    "leaf_count",
    "leaf_exponent",
    "leaf_exponents",
    "pair_to_dot",
    "parse_pair",
    "parse_tree",
    "reduce_pair",
    "right_subtree_of_root_empty",
    "subtree_at",
    "tree_from_exponents",
    "tree_to_dot",
    "Letter",
    "NormalForm",
    "Word",
    "format_word",
    "normal_form_to_tree_pair",
    "parse_word",
    "rewrite_to_normal_form",
    "tree_pair_to_normal_form",
    "word_inverse",
    "x",
    "xinv",
    "GroupElement",
    "RelatorReport",
    "commutator",
    "commutator_is_trivial",
    "element_of_normal_form",
    "element_of_word",
    "generator",
    "identity",
    "inverse",
    "multiply",
    "power",
    "to_normal_form",
    "verify_relators",
    "ProductElement",
    "address_interval",
    "clone_map",
    "embed_f_z",
    "embed_product",
    "embed_product_element",
    "intervals_disjoint",
    "is_prefix_free",
    "right_subtree_claims",
    "shift",
    "z_generator",
    "BoundsReport",
    "DEFAULT_RADIUS_CAP",
    "DistortionSample",
    "EmbeddingSpec",
    "EnvelopeFit",
    "MetricEstimate",
    "WordMetricOracle",
    "affine_fit",
    "caret_count_of",
    "check_bounds_on_ball",
    "distortion_envelopes",
    "distortion_sweep",
    "enumerate_ball",
    "envelope_fit",
    "exact_length",
    "f_z_spec",
    "length_bounds",
    "metric_estimate",
    "product_spec",
    "random_element",
    "random_tree",
    "sweep_to_csv",
]
