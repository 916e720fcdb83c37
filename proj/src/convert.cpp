#include "dgd/convert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dgd/classify.hpp"
#include "dgd/duality.hpp"

namespace dgd {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

std::vector<VertexId> find_sources(const Digraph& g) {
    std::vector<VertexId> s;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.in_degree(v) == 0)
            s.push_back(v);
    return s;
}

std::vector<VertexId> find_sinks(const Digraph& g) {
    std::vector<VertexId> s;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.out_degree(v) == 0)
            s.push_back(v);
    return s;
}

// Tuple of the vertex standing for arc (u, v): the two endpoint tuples
// overlap in min(|a|,|b|) - 1 positions. Generated terminal symbols are
// singletons, which is what makes the shorter-overlap cases appear.
VertexTuple merge_tuples(const VertexTuple& a, const VertexTuple& b) {
    size_t overlap = std::min(a.size(), b.size()) - 1;
    if (!std::equal(a.end() - static_cast<long>(overlap), a.end(), b.begin()))
        throw std::logic_error("convert: endpoint tuples do not overlap as expected");
    VertexTuple out = a;
    out.insert(out.end(), b.begin() + static_cast<long>(overlap), b.end());
    return out;
}

}  // namespace

Digraph straight_convert(const Digraph& h) {
    const int m = h.arc_count();
    // Arcs leaving each vertex, as arc indices; h.arcs() is sorted, so
    // these lists are ascending and the output comes out sorted too.
    std::vector<std::vector<int>> arcs_from(static_cast<size_t>(h.order()));
    for (int i = 0; i < m; ++i)
        arcs_from[static_cast<size_t>(h.arc(i).tail)].push_back(i);

    std::vector<Arc> out;
    for (int i = 0; i < m; ++i)
        for (int j : arcs_from[static_cast<size_t>(h.arc(i).head)])
            out.push_back(Arc{i, j});
    return Digraph(m, std::move(out));
}

Digraph augment_entrance_exit(const Digraph& h) {
    std::vector<VertexId> sources = find_sources(h);
    std::vector<VertexId> sinks = find_sinks(h);
    if (sources.size() > 1)
        throw std::invalid_argument("augment_entrance_exit: more than one source");
    if (sinks.size() > 1)
        throw std::invalid_argument("augment_entrance_exit: more than one sink");
    if (sources.empty() && sinks.empty())
        throw std::invalid_argument("augment_entrance_exit: contour-only graph, nothing to attach");

    std::vector<Arc> arcs(h.arcs().begin(), h.arcs().end());
    int n = h.order();
    if (!sources.empty()) {
        arcs.push_back(Arc{n, sources[0]});
        ++n;
    }
    if (!sinks.empty()) {
        arcs.push_back(Arc{sinks[0], n});
        ++n;
    }
    return Digraph(n, std::move(arcs));
}

RootReconstruction reconstruct_root_raw(const Digraph& r) {
    const int m = r.order();  // arcs of the root graph
    // Slot 2i is the tail endpoint of root arc i, slot 2i+1 its head.
    UnionFind uf(2 * m);
    for (const Arc& a : r.arcs())
        uf.unite(2 * a.tail + 1, 2 * a.head);

    std::vector<int> vertex_of(static_cast<size_t>(2 * m), -1);
    RootReconstruction out;
    for (int i = 0; i < m; ++i) {
        for (int slot : {2 * i, 2 * i + 1}) {
            int rep = uf.find(slot);
            if (vertex_of[static_cast<size_t>(rep)] < 0)
                vertex_of[static_cast<size_t>(rep)] = out.order++;
        }
    }
    out.arcs.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        out.arcs.push_back(Arc{vertex_of[static_cast<size_t>(uf.find(2 * i))],
                               vertex_of[static_cast<size_t>(uf.find(2 * i + 1))]});

    std::vector<Arc> sorted = out.arcs;
    std::sort(sorted.begin(), sorted.end());
    out.has_parallel_arcs = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    return out;
}

Digraph reconstruct_root(const Digraph& r) {
    RootReconstruction raw = reconstruct_root_raw(r);
    if (raw.has_parallel_arcs)
        throw std::invalid_argument(
            "reconstruct_root: the root graph needs parallel arcs, which the digraph model "
            "excludes");
    return Digraph(raw.order, std::move(raw.arcs));
}

Digraph reverse_convert(const RoleMatrix& r) {
    DualityVerdict v = is_quasi_canonical(r);
    if (!v.quasi_canonical)
        throw std::invalid_argument(
            "reverse_convert: matrix is not quasi-canonical, reverse converting is undefined");
    return reconstruct_root(r.graph);
}

std::vector<std::vector<VertexId>> paths_of_length(const Digraph& h, int m) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> walk;
    auto extend = [&](auto&& self, VertexId v, int left) -> void {
        walk.push_back(v);
        if (left == 0)
            out.push_back(walk);
        else
            for (VertexId w : h.out_neighbors(v))
                self(self, w, left - 1);
        walk.pop_back();
    };
    for (VertexId v = 0; v < h.order(); ++v)
        extend(extend, v, m);
    return out;
}

StepConversion convert_step(const Digraph& current, AugmentMode mode) {
    StepConversion out;
    out.graph = straight_convert(current);
    out.pre_augment_order = out.graph.order();
    if (mode == AugmentMode::Never)
        return out;

    std::vector<VertexId> sources = find_sources(out.graph);
    std::vector<VertexId> sinks = find_sinks(out.graph);
    bool unique_terminals = sources.size() <= 1 && sinks.size() <= 1;
    bool want = false;
    if (mode == AugmentMode::Faithful) {
        if (!unique_terminals)
            throw std::invalid_argument(
                "convert_step: faithful augmentation requires at most one source and one sink per "
                "step");
        want = !sources.empty() || !sinks.empty();
    } else {  // Auto: only when the single-terminal form would break
        want = unique_terminals &&
               ((sources.size() == 1 && out.graph.out_degree(sources[0]) >= 2) ||
                (sinks.size() == 1 && out.graph.in_degree(sinks[0]) >= 2));
    }
    if (want) {
        out.added_entrance = !sources.empty();
        out.added_exit = !sinks.empty();
        out.graph = augment_entrance_exit(out.graph);
    }
    return out;
}

ConvertTrace iterate_convert(const Digraph& h, const TraceOptions& options) {
    ConvertTrace trace;
    trace.mode = options.augment;

    Digraph current = h;
    std::vector<VertexTuple> tuples(static_cast<size_t>(h.order()));
    for (VertexId v = 0; v < h.order(); ++v)
        tuples[static_cast<size_t>(v)] = {v};

    auto record = [&](int index, bool augmented) {
        ConvertStep step;
        step.index = index;
        step.n = current.order();
        step.m = current.arc_count();
        step.nu = cyclomatic_number(current);
        step.delta_nu = delta_nu(current);
        step.cls = quick_class(current);
        step.augmented = augmented;
        if (options.keep_graphs)
            step.graph = current;
        if (options.keep_tuples)
            step.tuples = tuples;
        trace.steps.push_back(std::move(step));
    };

    record(0, false);

    for (int j = 1; j <= options.steps; ++j) {
        long long next_n = current.arc_count();
        if (next_n > options.vertex_cap) {
            trace.capped = true;
            trace.predicted_next = next_n;
            break;
        }

        StepConversion sc = convert_step(current, options.augment);
        std::vector<VertexTuple> next_tuples;
        if (options.keep_tuples) {
            next_tuples.resize(static_cast<size_t>(sc.pre_augment_order));
            for (int i = 0; i < sc.pre_augment_order; ++i) {
                const Arc& a = current.arc(i);
                next_tuples[static_cast<size_t>(i)] = merge_tuples(
                    tuples[static_cast<size_t>(a.tail)], tuples[static_cast<size_t>(a.head)]);
            }
        }
        if (sc.added_entrance || sc.added_exit) {
            if (sc.added_entrance) {
                int id = static_cast<int>(trace.terminal_names.size());
                trace.terminal_names.push_back("in" + std::to_string(j));
                if (options.keep_tuples)
                    next_tuples.push_back(VertexTuple{-id - 1});
            }
            if (sc.added_exit) {
                int id = static_cast<int>(trace.terminal_names.size());
                trace.terminal_names.push_back("out" + std::to_string(j));
                if (options.keep_tuples)
                    next_tuples.push_back(VertexTuple{-id - 1});
            }
        }

        current = std::move(sc.graph);
        tuples = std::move(next_tuples);
        record(j, sc.added_entrance || sc.added_exit);
    }
    return trace;
}

std::string tuple_label(const VertexTuple& t, const Digraph& original,
                        const std::vector<std::string>& terminal_names) {
    std::string out;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i > 0)
            out += '.';
        int tok = t[i];
        if (tok >= 0)
            out += original.label(tok);
        else
            out += terminal_names[static_cast<size_t>(-tok - 1)];
    }
    return out;
}

}  // namespace dgd
