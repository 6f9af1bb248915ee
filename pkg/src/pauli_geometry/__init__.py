"""Pauli graphs of finite-dimensional quantum systems and their geometry."""
from . import arith, graphcore, pauli, polar, zline
from .graphcore import (
    Graph,
    automorphism_order,
    canonical_form,
    dual_graph,
    intersection_graph,
    is_isomorphic,
    maximal_cliques,
    spectrum,
)
from .pauli import DimensionSpec, Observable, build_pauli_graph, enumerate_observables, read_observables
from .polar import build_polar_space, find_spreads, generators

__version__ = "0.1.0"

__all__ = [
    "DimensionSpec",
    "Graph",
    "Observable",
    "arith",
    "automorphism_order",
    "build_pauli_graph",
    "build_polar_space",
    "canonical_form",
    "dual_graph",
    "enumerate_observables",
    "find_spreads",
    "generators",
    "graphcore",
    "intersection_graph",
    "is_isomorphic",
    "maximal_cliques",
    "pauli",
    "polar",
    "read_observables",
    "spectrum",
    "zline",
]
