"""Largest monochromatic minimum-degree subgraphs of edge-colored graphs."""

from .graph import (ColoredGraph, CoreReport, Graph, color_class, core_numbers, d_core,
                    max_mono_d_subgraph)

__all__ = [
    "ColoredGraph",
    "CoreReport",
    "Graph",
    "color_class",
    "core_numbers",
    "d_core",
    "max_mono_d_subgraph",
]
__version__ = "0.1.0"
