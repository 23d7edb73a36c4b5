"""Schnyder realizers of planar triangulations, their flips, and a dynamic realizer."""

from .dynforest import DynForest, NaiveForest
from .dynrealizer import DynRealizer
from .flips import (
    ColoredFlipOp,
    DirectedCycle,
    colored_flip,
    cycle_flip,
    cycle_flip_as_colored,
    face_flip_as_colored,
    find_escape_cycle,
    is_colored_flippable,
    make_colored_flippable,
    transform_sequence,
)
from .realizer import Realizer, barycentric, compute_realizer, validate_realizer
from .triangulation import Triangulation, double_fan, parse_triangulation, random_triangulation

__version__ = "0.1.0"

__all__ = [
    "ColoredFlipOp",
    "DirectedCycle",
    "DynForest",
    "DynRealizer",
    "NaiveForest",
    "Realizer",
    "Triangulation",
    "barycentric",
    "colored_flip",
    "compute_realizer",
    "cycle_flip",
    "cycle_flip_as_colored",
    "double_fan",
    "face_flip_as_colored",
    "find_escape_cycle",
    "is_colored_flippable",
    "make_colored_flippable",
    "parse_triangulation",
    "random_triangulation",
    "transform_sequence",
    "validate_realizer",
]
