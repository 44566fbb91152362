"""Inscribed conics of a triangle in exact barycentric arithmetic."""

from .centers import (
    anticomplement,
    cevian_feet,
    complement,
    isotomic_conjugate,
    orthocenter,
    perspector_from_center,
    symmedian_point,
)
from .conics import (
    Conic,
    ConicClass,
    classify,
    conic_center,
    inconic_from_perspector,
    lemoine_hexagon,
    pole,
    polar,
)
from .kernel import HLine, HPoint, TriangleRef, join, meet

__version__ = "0.1.0"

__all__ = [
    "Conic",
    "ConicClass",
    "HLine",
    "HPoint",
    "TriangleRef",
    "anticomplement",
    "cevian_feet",
    "classify",
    "complement",
    "conic_center",
    "inconic_from_perspector",
    "isotomic_conjugate",
    "join",
    "lemoine_hexagon",
    "meet",
    "orthocenter",
    "perspector_from_center",
    "polar",
    "pole",
    "symmedian_point",
]
