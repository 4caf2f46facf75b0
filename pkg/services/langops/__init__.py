# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from .operations import (
    BINARY_OPERATIONS,
    UNARY_OPERATIONS,
    LoopifyResult,
    align_pair,
    complement,
    concatenation,
    difference,
    downward_closure,
    get_operation,
    intersection,
    loopify,
    prefix_closure,
    reversal,
    star,
    suffix_closure,
    symmetric_difference,
    union
)

__all__ = [
    "BINARY_OPERATIONS",
    "UNARY_OPERATIONS",
    "LoopifyResult",
    "align_pair",
    "complement",
    "concatenation",
    "difference",
    "downward_closure",
    "get_operation",
    "intersection",
    "loopify",
    "prefix_closure",
    "reversal",
    "star",
    "suffix_closure",
    "symmetric_difference",
    "union",
]
