#pragma once

// Seeded graph generators shared by the unit and acceptance suites. All
// randomness flows through an explicitly seeded mt19937_64; no hidden
// entropy anywhere.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "dgd/digraph.hpp"

namespace gen {

inline bool chance(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline dgd::Digraph random_digraph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && chance(rng, p))
                arcs.emplace_back(i, j);
    return dgd::build_digraph(n, arcs);
}

// All ordered pairs (i, j), i != j, in lexicographic order; the mask-based
// exhaustive enumerations index this list.
inline std::vector<std::pair<int, int>> ordered_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                pairs.emplace_back(i, j);
    return pairs;
}

inline dgd::Digraph mask_digraph(int n, const std::vector<std::pair<int, int>>& pairs,
                                 unsigned long long mask) {
    std::vector<std::pair<int, int>> arcs;
    for (size_t b = 0; b < pairs.size(); ++b)
        if (mask & (1ULL << b))
            arcs.push_back(pairs[b]);
    return dgd::build_digraph(n, arcs);
}

inline bool f_valid(const dgd::Digraph& g) {
    return dgd::validate_f_requirements(g, dgd::FMode::Quasicanonical).ok;
}

inline bool connected_without_isolated(const dgd::Digraph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.in_degree(v) == 0 && g.out_degree(v) == 0)
            return false;
    return dgd::weak_components(g) == 1;
}

// Rejection sampling for connected graphs in single-entrance/exit form.
// Arc density is swept upward so both sparse and dense shapes appear.
inline std::optional<dgd::Digraph> random_f_valid(std::mt19937_64& rng, int n,
                                                  int max_tries = 4000) {
    for (int t = 0; t < max_tries; ++t) {
        double p = 1.2 / n + (t % 7) * 0.35 / n;
        dgd::Digraph g = random_digraph(rng, n, p);
        if (f_valid(g) && connected_without_isolated(g))
            return g;
    }
    return std::nullopt;
}

// Flow graph: exactly one entrance and one exit, in the required form, and
// every vertex sits on some entrance->exit path. This is the class the
// growth laws quantify over.
inline bool flow_restricted(const dgd::Digraph& g) {
    if (!f_valid(g) || g.order() < 2)
        return false;
    int source = -1, sink = -1;
    for (int v = 0; v < g.order(); ++v) {
        if (g.in_degree(v) == 0) {
            if (source >= 0)
                return false;
            source = v;
        }
        if (g.out_degree(v) == 0) {
            if (sink >= 0)
                return false;
            sink = v;
        }
    }
    if (source < 0 || sink < 0)
        return false;
    std::vector<bool> fwd = dgd::reachable_from(g, source);
    // backward reachability to the sink
    std::vector<bool> bwd(static_cast<size_t>(g.order()), false);
    std::vector<int> stack{sink};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.in_neighbors(v))
            if (!bwd[static_cast<size_t>(u)]) {
                bwd[static_cast<size_t>(u)] = true;
                stack.push_back(u);
            }
    }
    for (int v = 0; v < g.order(); ++v) {
        if (v != source && !fwd[static_cast<size_t>(v)])
            return false;
        if (v != sink && !bwd[static_cast<size_t>(v)])
            return false;
    }
    return true;
}

inline std::optional<dgd::Digraph> random_flow_restricted(std::mt19937_64& rng, int n,
                                                          int max_tries = 20000) {
    for (int t = 0; t < max_tries; ++t) {
        double p = 1.4 / n + (t % 9) * 0.3 / n;
        dgd::Digraph g = random_digraph(rng, n, p);
        if (flow_restricted(g))
            return g;
    }
    return std::nullopt;
}

}  // namespace gen
