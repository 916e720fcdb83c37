#pragma once

#include <vector>

#include "dgd/convert.hpp"
#include "dgd/digraph.hpp"
#include "dgd/normalize.hpp"

namespace dgd {

/// Edge graph of a canonically normalized input, with the arcs standing for
/// the original vertexes marked. The root may need parallel arcs (some
/// canonical matrices are edge graphs of multigraphs only), so it is kept
/// as the raw reconstruction: root.arcs[i] is the arc for matrix vertex i.
/// provenance[arc id] is the original vertex id, or -1 for arcs created by
/// subdivision.
struct MarkedEdgeGraph {
    RootReconstruction root;
    std::vector<int> marked_arcs;     // ascending arc ids
    std::vector<VertexId> provenance; // arc id -> original vertex, -1 otherwise
    NormalizationReport normalization;
};

/// Reads g's adjacency matrix as a binary relation, brings it to canonical
/// form, reverse-converts to the root graph and marks the arcs that
/// correspond one-to-one to g's vertexes. Throws std::runtime_error when
/// normalization fails to converge.
MarkedEdgeGraph build_marked_edge_graph(const Digraph& g);

/// An arc subset in which every touched vertex has indeg = outdeg = 1 and
/// which forms a single closed circuit.
struct EulerPartialSubgraph {
    std::vector<int> arc_ids;        // in traversal order from the anchor arc
    std::vector<VertexId> vertices;  // tails along the circuit
};

/// Every Euler partial subgraph containing all marked arcs, enumerated by
/// backtracking with degree pruning, in deterministic (lexicographic
/// traversal) order.
std::vector<EulerPartialSubgraph> euler_partial_subgraphs(const MarkedEdgeGraph& m);

/// Hamilton cycles of g found through the edge-graph duality; each cycle is
/// a vertex sequence starting at vertex 0 without the closing repeat.
std::vector<std::vector<VertexId>> hamilton_cycles_via_duality(const Digraph& g);

/// Independent oracle: exhaustive backtracking over vertex permutations.
/// Throws std::invalid_argument past the order bound.
std::vector<std::vector<VertexId>> brute_force_hamilton(const Digraph& g, int bound = 10);

}  // namespace dgd
