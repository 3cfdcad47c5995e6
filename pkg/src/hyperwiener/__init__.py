"""Wiener index of hypergraphs by the cut method.

Quick start::

    >>> from hyperwiener import cube, wiener_cut, wiener_brute
    >>> H, _ = cube(3, 2)
    >>> wiener_cut(H).total, wiener_brute(H)
    (54, 54)
"""
from .generators import (BadParameter, cartesian_product, cube, example_clar, example_t1,
                         phenylene, random_hypertree, single_edge)
from .hypergraph import (ComponentPartition, Disconnected, DuplicateEdge, EdgeTooSmall,
                         EmptyEdge, Hypergraph, HypergraphError, OutOfRangeVertex,
                         UnknownEdgeId, build)
from .io import ParseError, parse_cuts, parse_hypergraph, write_cuts, write_hypergraph
from .metric import (UNREACHABLE, NotASubhypergraph, bfs_from, closer_set, connected_table,
                     distance, distance_table, is_convex, is_isometric_subhypergraph,
                     wiener_brute)
from .structure import (EdgeVertexPartition, NotACut, NotEdgeGated, RecognitionReport,
                        ThetaNotTransitive, ThetaStructure, edge_vertex_partition, gate,
                        is_edge_gated, recognize, theta, theta_structure,
                        verify_single_crossing)
from .wiener import (CutEdgesIntersect, CutPartition, CutValidationReport,
                     InvalidCutPartition, NotAHypertree, NotAPartition, NotPartialCube,
                     ValidationTooLarge, WienerBreakdown, acyclicity_check, cut_contribution,
                     validate_cut_partition, wiener_cut, wiener_general, wiener_hypertree)

__version__ = "0.1.0"
