#pragma once

// Independent reference implementations the tests check the library
// against. Everything here is deliberately written from the definitions
// (dense matrices, exhaustive enumeration) rather than sharing code with
// the production path.

#include <algorithm>
#include <optional>
#include <vector>

#include "dgd/digraph.hpp"
#include "dgd/hamilton.hpp"
#include "dgd/matrix.hpp"

namespace oracle {

// Floyd-Warshall transitive closure. closure[i][j] = j reachable from i by
// a non-empty path.
inline std::vector<std::vector<bool>> closure(const dgd::Digraph& g) {
    int n = g.order();
    std::vector<std::vector<bool>> r(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (const dgd::Arc& a : g.arcs())
        r[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (r[static_cast<size_t>(i)][static_cast<size_t>(k)])
                for (int j = 0; j < n; ++j)
                    if (r[static_cast<size_t>(k)][static_cast<size_t>(j)])
                        r[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    return r;
}

// Kahn peeling; true iff a topological order exists (graph acyclic).
inline bool topological_order_exists(const dgd::Digraph& g) {
    int n = g.order();
    std::vector<int> indeg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        indeg[static_cast<size_t>(v)] = g.in_degree(v);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0)
            stack.push_back(v);
    int removed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++removed;
        for (int w : g.out_neighbors(v))
            if (--indeg[static_cast<size_t>(w)] == 0)
                stack.push_back(w);
    }
    return removed == n;
}

// Recursive three-color cycle detection, independent of the BFS-based
// production witness search.
inline bool has_cycle_dfs(const dgd::Digraph& g) {
    enum { White, Gray, Black };
    std::vector<int> color(static_cast<size_t>(g.order()), White);
    auto visit = [&](auto&& self, int v) -> bool {
        color[static_cast<size_t>(v)] = Gray;
        for (int w : g.out_neighbors(v)) {
            if (color[static_cast<size_t>(w)] == Gray)
                return true;
            if (color[static_cast<size_t>(w)] == White && self(self, w))
                return true;
        }
        color[static_cast<size_t>(v)] = Black;
        return false;
    };
    for (int v = 0; v < g.order(); ++v)
        if (color[static_cast<size_t>(v)] == White && visit(visit, v))
            return true;
    return false;
}

inline dgd::IntMatrix minor_of(const dgd::IntMatrix& m, int x, int y) {
    dgd::IntMatrix out(m.order() - 1);
    int r = 0;
    for (int i = 0; i < m.order(); ++i) {
        if (i == x)
            continue;
        int c = 0;
        for (int j = 0; j < m.order(); ++j) {
            if (j == y)
                continue;
            out.at(r, c) = m.at(i, j);
            ++c;
        }
        ++r;
    }
    return out;
}

// Literal positional transcription of the c quantities from a dense 0/1
// matrix: s_ij = m_ij * (row sum i + column sum j), deviations against the
// row/column minima over non-zero s entries.
inline dgd::IntMatrix c_reference(const dgd::IntMatrix& m) {
    int n = m.order();
    std::vector<int> rowsum(static_cast<size_t>(n), 0), colsum(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j)) {
                ++rowsum[static_cast<size_t>(i)];
                ++colsum[static_cast<size_t>(j)];
            }
    dgd::IntMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s.at(i, j) = m.at(i, j) ? rowsum[static_cast<size_t>(i)] + colsum[static_cast<size_t>(j)] : 0;
    dgd::IntMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!m.at(i, j))
                continue;
            int rmin = 0, cmin = 0;
            bool first = true;
            for (int jj = 0; jj < n; ++jj)
                if (s.at(i, jj) != 0) {
                    rmin = first ? s.at(i, jj) : std::min(rmin, s.at(i, jj));
                    first = false;
                }
            first = true;
            for (int ii = 0; ii < n; ++ii)
                if (s.at(ii, j) != 0) {
                    cmin = first ? s.at(ii, j) : std::min(cmin, s.at(ii, j));
                    first = false;
                }
            c.at(i, j) = (s.at(i, j) - rmin) + (s.at(i, j) - cmin);
        }
    return c;
}

// Both dual-nature conditions straight off the dense matrix.
inline bool quasi_canonical_reference(const dgd::Digraph& g) {
    dgd::IntMatrix m = dgd::to_dense(g);
    if (!c_reference(m).all_zero())
        return false;
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            if (m.at(i, j) && !c_reference(minor_of(m, i, j)).all_zero())
                return false;
    return true;
}

inline bool is_hamilton_cycle(const dgd::Digraph& g, const std::vector<int>& cycle) {
    if (static_cast<int>(cycle.size()) != g.order() || g.order() < 2)
        return false;
    std::vector<bool> seen(static_cast<size_t>(g.order()), false);
    for (int v : cycle) {
        if (v < 0 || v >= g.order() || seen[static_cast<size_t>(v)])
            return false;
        seen[static_cast<size_t>(v)] = true;
    }
    for (size_t i = 0; i < cycle.size(); ++i)
        if (!g.has_arc(cycle[i], cycle[(i + 1) % cycle.size()]))
            return false;
    return true;
}

// Exhaustive subset check over all arc subsets containing the marked arcs:
// every touched vertex balanced at indeg = outdeg = 1 and the subset one
// closed circuit. Only usable for small arc counts.
inline std::vector<std::vector<int>> euler_subsets_reference(const dgd::MarkedEdgeGraph& meg) {
    const dgd::RootReconstruction& h = meg.root;
    const int arc_count = static_cast<int>(h.arcs.size());
    std::vector<int> free_arcs;
    std::vector<bool> marked(static_cast<size_t>(arc_count), false);
    for (int a : meg.marked_arcs)
        marked[static_cast<size_t>(a)] = true;
    for (int a = 0; a < arc_count; ++a)
        if (!marked[static_cast<size_t>(a)])
            free_arcs.push_back(a);

    std::vector<std::vector<int>> result;
    for (unsigned long long mask = 0; mask < (1ULL << free_arcs.size()); ++mask) {
        std::vector<int> subset = meg.marked_arcs;
        for (size_t b = 0; b < free_arcs.size(); ++b)
            if (mask & (1ULL << b))
                subset.push_back(free_arcs[b]);
        std::sort(subset.begin(), subset.end());
        if (subset.empty())
            continue;

        std::vector<int> in(static_cast<size_t>(h.order), 0), out(static_cast<size_t>(h.order), 0);
        for (int a : subset) {
            ++out[static_cast<size_t>(h.arcs[static_cast<size_t>(a)].tail)];
            ++in[static_cast<size_t>(h.arcs[static_cast<size_t>(a)].head)];
        }
        bool balanced = true;
        for (int v = 0; v < h.order && balanced; ++v) {
            int deg = in[static_cast<size_t>(v)] + out[static_cast<size_t>(v)];
            if (deg != 0 && (in[static_cast<size_t>(v)] != 1 || out[static_cast<size_t>(v)] != 1))
                balanced = false;
        }
        if (!balanced)
            continue;
        // One circuit: following the unique successor from the first arc
        // must traverse the whole subset.
        std::vector<int> next_from(static_cast<size_t>(h.order), -1);
        for (int a : subset)
            next_from[static_cast<size_t>(h.arcs[static_cast<size_t>(a)].tail)] = a;
        int count = 0;
        int a = subset.front();
        do {
            a = next_from[static_cast<size_t>(h.arcs[static_cast<size_t>(a)].head)];
            ++count;
        } while (a != subset.front() && count <= static_cast<int>(subset.size()));
        if (a == subset.front() && count == static_cast<int>(subset.size()))
            result.push_back(subset);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace oracle
