"""Connectivity of chordal graphs without universal vertices, checked by exact computation."""

from .canon import are_isomorphic, canonical_form, enumerate_graphs
from .constructions import construct_chordal_star, extremal_candidate, kappa_spectrum
from .graph import Graph, complement, connected_components, induced_subgraph
from .graph6 import parse_graph6, write_graph6
from .invariants import (algebraic_connectivity, is_chordal, is_chordal_star,
                         kappa_bound, tau_max, vertex_connectivity)
from .stanley_reisner import betti_table_hochster, kappa_via_betti, proj_dim

__version__ = "0.1.0"
