"""Exact packings of vertex-disjoint 3-vertex paths, with structural tools
for claw-free and cubic graphs and a harness that checks packing theorems
over graph corpora."""

from __future__ import annotations

from .brute import brute_force_max_packing
from .constructive import (
    BlowupMap,
    ConstructionError,
    Mode,
    applicable_modes,
    blowup_factor,
    mode_holds,
    non_spanning_cycle,
    perfect_matching,
    recognize_blowup,
    triangle_blowup,
    two_factor_containing_path,
)
from .families import (
    Family,
    FamilySpec,
    gen_class_A,
    gen_H,
    gen_H_extended,
    gen_net,
    gen_Q,
    gen_R,
    generate,
    is_class_A,
)
from .graph import Graph, GraphError, VertexPath3, delete_edges, delete_path, delete_vertices, paths_in
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .harness import Outcome, SweepConfig, TheoremVerdict, check_theorem, replay, sweep
from .solver import (
    ConstraintError,
    InvalidPacking,
    LambdaPacking,
    PackingConstraints,
    PathKind,
    ResourceExhausted,
    Solver,
    constraints,
    factor_respecting_triangles,
    has_factor,
    lambda_number,
    max_packing,
)
from .structure import (
    EdgeTripleClass,
    block_decomposition,
    classify_edge_triple,
    end_block_count,
    find_claw,
    is_claw_free,
    is_cubic,
    is_k_connected,
    triangle_profile,
    vertex_connectivity,
)

__version__ = "0.1.0"

__all__ = [
    "BlowupMap",
    "ConstraintError",
    "ConstructionError",
    "EdgeTripleClass",
    "Family",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "GraphError",
    "InvalidPacking",
    "LambdaPacking",
    "Mode",
    "Outcome",
    "PackingConstraints",
    "PathKind",
    "ResourceExhausted",
    "Solver",
    "SweepConfig",
    "TheoremVerdict",
    "VertexPath3",
    "applicable_modes",
    "block_decomposition",
    "blowup_factor",
    "brute_force_max_packing",
    "check_theorem",
    "classify_edge_triple",
    "constraints",
    "delete_edges",
    "delete_path",
    "delete_vertices",
    "emit_graph6",
    "end_block_count",
    "factor_respecting_triangles",
    "find_claw",
    "gen_H",
    "gen_H_extended",
    "gen_Q",
    "gen_R",
    "gen_class_A",
    "gen_net",
    "generate",
    "has_factor",
    "is_class_A",
    "is_claw_free",
    "is_cubic",
    "is_k_connected",
    "lambda_number",
    "max_packing",
    "mode_holds",
    "non_spanning_cycle",
    "parse_graph6",
    "paths_in",
    "perfect_matching",
    "recognize_blowup",
    "replay",
    "sweep",
    "triangle_blowup",
    "triangle_profile",
    "two_factor_containing_path",
    "vertex_connectivity",
]
