"""Binned multi-class scatterplots: aggregation, encodings and SVG output."""

from ._binplot import (
    BinplotError,
    Dataset,
    Lattice,
    aggregate,
    build_lattice,
    cluster_dataset,
    demo_dataset,
    largest_remainder,
    normalize,
    render_svg,
    scene_json,
    validate,
)

__all__ = [
    "BinplotError",
    "Dataset",
    "Lattice",
    "aggregate",
    "build_lattice",
    "cluster_dataset",
    "demo_dataset",
    "largest_remainder",
    "normalize",
    "render_svg",
    "scene_json",
    "validate",
]
