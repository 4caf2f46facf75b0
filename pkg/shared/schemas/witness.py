# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from typing import Dict, Tuple
from pydantic import BaseModel, Field, field_validator
from enum import Enum


class WitnessFamily(str, Enum):
    """Constructed language families with prescribed constants"""
    B_PLUS = "b-plus"
    B_STAR = "b-star"
    BINARY_TRIPLE = "binary"
    PADDED = "padded"
    QUINARY = "quinary"
    QUINARY_TABLES = "quinary-tables"
    STAR_WITNESS = "star"
    INTERSECTION_WITNESS = "intersection"
    AN_ASTAR = "an-astar"
    EXAMPLE = "example"


# Parameters each family requires, in the order they are passed on.
FAMILY_PARAMS: Dict[WitnessFamily, Tuple[str, ...]] = {
    WitnessFamily.B_PLUS: ("k",),
    WitnessFamily.B_STAR: ("k",),
    WitnessFamily.BINARY_TRIPLE: ("p1", "p2", "p3"),
    WitnessFamily.PADDED: ("p1", "p2", "p3"),
    WitnessFamily.QUINARY: ("p1", "p2", "p3", "p4"),
    WitnessFamily.QUINARY_TABLES: ("p1", "p2", "p3", "p4"),
    WitnessFamily.STAR_WITNESS: ("n", "k"),
    WitnessFamily.INTERSECTION_WITNESS: ("m", "n", "k"),
    WitnessFamily.AN_ASTAR: ("n",),
    WitnessFamily.EXAMPLE: (),
}

PARAM_NAMES = ("p1", "p2", "p3", "p4", "n", "k", "m")


class WitnessSpec(BaseModel):
    """Family selector plus its integer parameters"""
    family: WitnessFamily
    params: Dict[str, int] = Field(default_factory=dict)

    @field_validator("params")
    @classmethod
    def _known_names(cls, params: Dict[str, int]) -> Dict[str, int]:
        for name, value in params.items():
            if name not in PARAM_NAMES:
                raise ValueError(f"unknown parameter {name!r}")
            if value < 0:
                raise ValueError(f"parameter {name} must be non-negative")
        return params

    def ordered(self) -> Tuple[int, ...]:
        """Parameters in the family's calling order; raises KeyError if one is missing"""
        return tuple(self.params[name] for name in FAMILY_PARAMS[self.family])
