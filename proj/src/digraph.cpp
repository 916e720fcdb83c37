#include "dgd/digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace dgd {

Digraph::Digraph(int order, std::vector<Arc> arcs, std::vector<std::string> labels)
    : order_(order), arcs_(std::move(arcs)), labels_(std::move(labels)) {
    if (order_ < 0)
        throw std::invalid_argument("digraph: negative order");
    for (const Arc& a : arcs_) {
        if (a.tail < 0 || a.tail >= order_ || a.head < 0 || a.head >= order_)
            throw std::invalid_argument("digraph: arc endpoint out of range (" +
                                        std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
        if (a.tail == a.head)
            throw std::invalid_argument("digraph: self-loop at vertex " + std::to_string(a.tail));
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
        throw std::invalid_argument("digraph: duplicate arc");
    if (!labels_.empty()) {
        if (static_cast<int>(labels_.size()) != order_)
            throw std::invalid_argument("digraph: label count != order");
        std::unordered_set<std::string> seen;
        for (const std::string& s : labels_)
            if (!seen.insert(s).second)
                throw std::invalid_argument("digraph: duplicate label '" + s + "'");
    }
    out_.assign(static_cast<size_t>(order_), {});
    in_.assign(static_cast<size_t>(order_), {});
    for (const Arc& a : arcs_) {
        out_[static_cast<size_t>(a.tail)].push_back(a.head);
        in_[static_cast<size_t>(a.head)].push_back(a.tail);
    }
    // arcs_ is sorted, so out lists come out sorted; in lists need it.
    for (auto& v : in_)
        std::sort(v.begin(), v.end());
}

bool Digraph::has_arc(VertexId tail, VertexId head) const {
    return arc_index(tail, head) >= 0;
}

int Digraph::arc_index(VertexId tail, VertexId head) const {
    Arc key{tail, head};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), key);
    if (it != arcs_.end() && *it == key)
        return static_cast<int>(it - arcs_.begin());
    return -1;
}

std::string Digraph::label(VertexId v) const {
    if (labeled())
        return labels_[static_cast<size_t>(v)];
    return std::to_string(v);
}

Digraph build_digraph(int order, const std::vector<std::pair<int, int>>& arcs,
                      std::vector<std::string> labels) {
    std::vector<Arc> as;
    as.reserve(arcs.size());
    for (auto [t, h] : arcs)
        as.push_back(Arc{t, h});
    return Digraph(order, std::move(as), std::move(labels));
}

DegreeProfile degrees(const Digraph& g) {
    DegreeProfile d;
    d.indeg.resize(static_cast<size_t>(g.order()));
    d.outdeg.resize(static_cast<size_t>(g.order()));
    for (VertexId v = 0; v < g.order(); ++v) {
        d.indeg[static_cast<size_t>(v)] = g.in_degree(v);
        d.outdeg[static_cast<size_t>(v)] = g.out_degree(v);
    }
    return d;
}

int weak_components(const Digraph& g) {
    const int n = g.order();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int count = 0;
    std::deque<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0)
            continue;
        comp[static_cast<size_t>(s)] = count;
        queue.push_back(s);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : g.out_neighbors(v))
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = count;
                    queue.push_back(w);
                }
            for (VertexId w : g.in_neighbors(v))
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = count;
                    queue.push_back(w);
                }
        }
        ++count;
    }
    return count;
}

long long cyclomatic_number(const Digraph& g) {
    return static_cast<long long>(g.arc_count()) - g.order() + weak_components(g);
}

std::optional<std::vector<VertexId>> find_contour(const Digraph& g) {
    // BFS from every vertex back to itself; keep the globally shortest cycle.
    const int n = g.order();
    std::optional<std::vector<VertexId>> best;
    std::vector<int> dist(static_cast<size_t>(n));
    std::vector<VertexId> parent(static_cast<size_t>(n));
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<VertexId> queue;
        dist[static_cast<size_t>(s)] = 0;
        queue.push_back(s);
        int found = -1;
        while (!queue.empty() && found < 0) {
            VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : g.out_neighbors(v)) {
                if (w == s) {
                    found = v;
                    break;
                }
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    parent[static_cast<size_t>(w)] = v;
                    queue.push_back(w);
                }
            }
        }
        if (found >= 0) {
            std::vector<VertexId> cycle;
            for (VertexId v = found; v != s; v = parent[static_cast<size_t>(v)])
                cycle.push_back(v);
            cycle.push_back(s);
            std::reverse(cycle.begin(), cycle.end());
            if (!best || cycle.size() < best->size())
                best = std::move(cycle);
        }
    }
    return best;
}

FValidityReport validate_f_requirements(const Digraph& g, FMode mode) {
    FValidityReport report;
    auto add = [&report](std::string rule, std::string desc, std::vector<VertexId> wit) {
        report.ok = false;
        report.violations.push_back(FViolation{std::move(rule), std::move(desc), std::move(wit)});
    };

    // Zero diagonal is enforced at construction; kept here so reports over
    // externally produced matrices stay complete.
    std::vector<VertexId> sources, sinks;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.in_degree(v) == 0)
            sources.push_back(v);
        if (g.out_degree(v) == 0)
            sinks.push_back(v);
    }
    if (sources.size() > 1)
        add("multi-source", "more than one empty column (initial vertex)", sources);
    if (sources.size() == 1 && g.out_degree(sources[0]) != 1)
        add("source-outdeg",
            "initial vertex row must hold exactly one non-zero element, has " +
                std::to_string(g.out_degree(sources[0])),
            {sources[0]});
    if (sinks.size() > 1)
        add("multi-sink", "more than one empty row (final vertex)", sinks);
    if (sinks.size() == 1 && g.in_degree(sinks[0]) != 1)
        add("sink-indeg",
            "final vertex column must hold exactly one non-zero element, has " +
                std::to_string(g.in_degree(sinks[0])),
            {sinks[0]});

    if (mode == FMode::Canonical) {
        for (VertexId v = 0; v < g.order(); ++v) {
            if (g.out_degree(v) > 1 && g.in_degree(v) != 1)
                add("row-col",
                    "row " + std::to_string(v) + " has " + std::to_string(g.out_degree(v)) +
                        " non-zeros but column " + std::to_string(v) + " has " +
                        std::to_string(g.in_degree(v)),
                    {v});
            if (g.in_degree(v) > 1 && g.out_degree(v) != 1)
                add("col-row",
                    "column " + std::to_string(v) + " has " + std::to_string(g.in_degree(v)) +
                        " non-zeros but row " + std::to_string(v) + " has " +
                        std::to_string(g.out_degree(v)),
                    {v});
        }
    }
    return report;
}

std::vector<bool> reachable_from(const Digraph& g, VertexId start) {
    std::vector<bool> seen(static_cast<size_t>(g.order()), false);
    std::deque<VertexId> queue;
    for (VertexId w : g.out_neighbors(start))
        if (!seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = true;
            queue.push_back(w);
        }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.out_neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                queue.push_back(w);
            }
    }
    return seen;
}

}  // namespace dgd
