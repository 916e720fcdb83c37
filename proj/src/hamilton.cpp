#include "dgd/hamilton.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgd {

MarkedEdgeGraph build_marked_edge_graph(const Digraph& g) {
    MarkedEdgeGraph out;
    out.normalization = normalize_canonical(as_l_matrix(g));
    if (!out.normalization.converged)
        throw std::runtime_error("build_marked_edge_graph: normalization did not converge");
    out.root = reconstruct_root_raw(out.normalization.result.graph);
    // Arc i of the root is vertex i of the normalized matrix; the first
    // order(g) of them are the original vertexes.
    out.provenance.assign(out.root.arcs.size(), -1);
    for (VertexId v = 0; v < g.order(); ++v) {
        out.marked_arcs.push_back(v);
        out.provenance[static_cast<size_t>(v)] = v;
    }
    return out;
}

std::vector<EulerPartialSubgraph> euler_partial_subgraphs(const MarkedEdgeGraph& m) {
    std::vector<EulerPartialSubgraph> out;
    const RootReconstruction& h = m.root;
    const int arc_count = static_cast<int>(h.arcs.size());
    if (m.marked_arcs.empty() || h.order == 0)
        return out;

    std::vector<char> is_marked(static_cast<size_t>(arc_count), 0);
    for (int a : m.marked_arcs)
        is_marked[static_cast<size_t>(a)] = 1;

    // A circuit visits each touched vertex once, so two marked arcs sharing
    // a tail (or a head) can never sit on one circuit.
    std::vector<int> marked_out(static_cast<size_t>(h.order), -1);
    std::vector<int> marked_in(static_cast<size_t>(h.order), -1);
    for (int a : m.marked_arcs) {
        VertexId t = h.arcs[static_cast<size_t>(a)].tail;
        VertexId hd = h.arcs[static_cast<size_t>(a)].head;
        if (marked_out[static_cast<size_t>(t)] >= 0 || marked_in[static_cast<size_t>(hd)] >= 0)
            return out;
        marked_out[static_cast<size_t>(t)] = a;
        marked_in[static_cast<size_t>(hd)] = a;
    }

    // Arc ids out of each vertex, ascending.
    std::vector<std::vector<int>> arcs_from(static_cast<size_t>(h.order));
    for (int i = 0; i < arc_count; ++i)
        arcs_from[static_cast<size_t>(h.arcs[static_cast<size_t>(i)].tail)].push_back(i);

    const int anchor = m.marked_arcs.front();
    const VertexId start = h.arcs[static_cast<size_t>(anchor)].tail;

    std::vector<char> visited(static_cast<size_t>(h.order), 0);
    std::vector<char> used(static_cast<size_t>(arc_count), 0);
    std::vector<int> path;
    size_t marked_left = m.marked_arcs.size();

    auto extend = [&](auto&& self, VertexId v) -> void {
        // If an unused marked arc leaves v, it is the only admissible choice.
        int forced = marked_out[static_cast<size_t>(v)];
        if (forced >= 0 && used[static_cast<size_t>(forced)])
            forced = -1;
        for (int e : arcs_from[static_cast<size_t>(v)]) {
            if (forced >= 0 && e != forced)
                continue;
            VertexId w = h.arcs[static_cast<size_t>(e)].head;
            // Entering w by anything but its unused marked in-arc strands it.
            int required_in = marked_in[static_cast<size_t>(w)];
            if (required_in >= 0 && !used[static_cast<size_t>(required_in)] && required_in != e)
                continue;
            if (w == start) {
                if (marked_left - (is_marked[static_cast<size_t>(e)] ? 1 : 0) == 0) {
                    EulerPartialSubgraph sub;
                    sub.arc_ids = path;
                    sub.arc_ids.push_back(e);
                    for (int a : sub.arc_ids)
                        sub.vertices.push_back(h.arcs[static_cast<size_t>(a)].tail);
                    out.push_back(std::move(sub));
                }
                continue;
            }
            if (visited[static_cast<size_t>(w)])
                continue;
            visited[static_cast<size_t>(w)] = 1;
            used[static_cast<size_t>(e)] = 1;
            marked_left -= is_marked[static_cast<size_t>(e)] ? 1 : 0;
            path.push_back(e);
            self(self, w);
            path.pop_back();
            marked_left += is_marked[static_cast<size_t>(e)] ? 1 : 0;
            used[static_cast<size_t>(e)] = 0;
            visited[static_cast<size_t>(w)] = 0;
        }
    };

    VertexId after_anchor = h.arcs[static_cast<size_t>(anchor)].head;
    int required_in = marked_in[static_cast<size_t>(after_anchor)];
    if (required_in >= 0 && required_in != anchor)
        return out;
    visited[static_cast<size_t>(start)] = 1;
    visited[static_cast<size_t>(after_anchor)] = 1;
    used[static_cast<size_t>(anchor)] = 1;
    --marked_left;
    path.push_back(anchor);
    extend(extend, after_anchor);
    return out;
}

std::vector<std::vector<VertexId>> hamilton_cycles_via_duality(const Digraph& g) {
    MarkedEdgeGraph m = build_marked_edge_graph(g);
    std::vector<std::vector<VertexId>> cycles;
    for (const EulerPartialSubgraph& sub : euler_partial_subgraphs(m)) {
        std::vector<VertexId> cycle;
        for (int a : sub.arc_ids)
            if (m.provenance[static_cast<size_t>(a)] >= 0)
                cycle.push_back(m.provenance[static_cast<size_t>(a)]);
        cycles.push_back(std::move(cycle));
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

std::vector<std::vector<VertexId>> brute_force_hamilton(const Digraph& g, int bound) {
    if (g.order() > bound)
        throw std::invalid_argument("brute_force_hamilton: order " + std::to_string(g.order()) +
                                    " exceeds the oracle bound " + std::to_string(bound));
    std::vector<std::vector<VertexId>> cycles;
    const int n = g.order();
    if (n < 2)
        return cycles;

    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<VertexId> path{0};
    visited[0] = 1;
    auto extend = [&](auto&& self, VertexId v) -> void {
        if (static_cast<int>(path.size()) == n) {
            if (g.has_arc(v, 0))
                cycles.push_back(path);
            return;
        }
        for (VertexId w : g.out_neighbors(v)) {
            if (visited[static_cast<size_t>(w)])
                continue;
            visited[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            visited[static_cast<size_t>(w)] = 0;
        }
    };
    extend(extend, 0);
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

}  // namespace dgd
