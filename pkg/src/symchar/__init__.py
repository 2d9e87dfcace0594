"""Symmetric functions in the Schur basis with Hopf-algebra deformation
machinery: convolution monoids, Laplace/Frobenius pairings, hash products,
classical character decompositions, vertex operators, and formal group laws."""

from .partitions import (
    conjugate,
    format_partition,
    frobenius,
    from_frobenius,
    hooks_and_contents,
    in_class,
    parse_partition,
    partitions_of,
    standardize,
    z_and_n,
)
from .schur import (
    SymFunc,
    TensorSymFunc,
    antipode,
    coproduct,
    cut_coproduct,
    dimension_gl,
    e,
    h,
    loop,
    outer_mul,
    s,
    scalar,
    skew,
    tensor,
)
from .kronecker import character, character_table, counit_eps1, inner_coproduct, inner_mul

__all__ = [
    "SymFunc",
    "TensorSymFunc",
    "antipode",
    "character",
    "character_table",
    "conjugate",
    "coproduct",
    "counit_eps1",
    "cut_coproduct",
    "dimension_gl",
    "e",
    "format_partition",
    "frobenius",
    "from_frobenius",
    "h",
    "hooks_and_contents",
    "in_class",
    "inner_coproduct",
    "inner_mul",
    "loop",
    "outer_mul",
    "parse_partition",
    "partitions_of",
    "s",
    "scalar",
    "skew",
    "standardize",
    "tensor",
    "z_and_n",
]
