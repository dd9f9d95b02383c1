"""Castelnuovo-Mumford regularity of Hibi rings of finite distributive lattices,
computed combinatorially and cross-checked by independent routes."""

__version__ = "0.1.0"

from .builtins import builtin_poset, cyclic_poset, example_poset, grid_poset
from .engine import (
    Budget,
    RegularityReport,
    boolean_regularity,
    cyclic_regularity,
    has_linear_resolution,
    nonplanar_bounds,
    regularity,
    sweep_corpus,
)
from .hilbert import f_vector, flag_beta, h_from_beta, h_from_f, regularity_from_h
from .lattice import DistLattice, birkhoff, cut_edges, interval, join_irreducibles, simple_blocks
from .poset import Poset, linear_extensions, max_antichain_size, parse_poset

__all__ = [
    "Budget",
    "DistLattice",
    "Poset",
    "RegularityReport",
    "birkhoff",
    "boolean_regularity",
    "builtin_poset",
    "cut_edges",
    "cyclic_poset",
    "cyclic_regularity",
    "example_poset",
    "f_vector",
    "flag_beta",
    "grid_poset",
    "h_from_beta",
    "h_from_f",
    "has_linear_resolution",
    "interval",
    "join_irreducibles",
    "linear_extensions",
    "max_antichain_size",
    "nonplanar_bounds",
    "parse_poset",
    "regularity",
    "regularity_from_h",
    "simple_blocks",
    "sweep_corpus",
]
