"""Poncelet triangle families, inversive loci and power invariants."""

from ._core import (
    Circle,
    Conic,
    OLocation,
    PonceletError,
    PonceletFamily,
    PowerPoint,
    Sweep,
    canonical_distance,
    circumcenter,
    circumcenter_locus_conic,
    circumcircle,
    classify_o,
    closure_radius,
    conic_fit,
    euler_circle,
    invert_point,
    inversive_circumcenter,
    inversive_locus_conic,
    locus_type,
    nonconic_residuals,
    orthocenter,
    p3_point,
    p5_point,
    power,
    sweep,
)

__all__ = [
    "Circle",
    "Conic",
    "OLocation",
    "PonceletError",
    "PonceletFamily",
    "PowerPoint",
    "Sweep",
    "canonical_distance",
    "circumcenter",
    "circumcenter_locus_conic",
    "circumcircle",
    "classify_o",
    "closure_radius",
    "conic_fit",
    "euler_circle",
    "invert_point",
    "inversive_circumcenter",
    "inversive_locus_conic",
    "locus_type",
    "nonconic_residuals",
    "orthocenter",
    "p3_point",
    "p5_point",
    "power",
    "sweep",
]
