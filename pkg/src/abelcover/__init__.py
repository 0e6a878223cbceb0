"""Combinatorial invariants of (Z/2)^d-colored trivalent graphs and the
2-torsion predictions they determine for abelian branched covers."""

from .graph import ColoredGraph, Edge, dumps, loads, validate
from .complexes import build, is_k_taut, is_taut, taut_levels
from .predictor import Prediction, TwoGroup, predict

__all__ = [
    "ColoredGraph",
    "Edge",
    "Prediction",
    "TwoGroup",
    "build",
    "dumps",
    "is_k_taut",
    "is_taut",
    "loads",
    "predict",
    "taut_levels",
    "validate",
]
__version__ = "0.1.0"
