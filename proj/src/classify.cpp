#include "dgd/classify.hpp"

#include <algorithm>
#include <deque>

namespace dgd {

namespace {

bool is_merge(const Digraph& g, VertexId v) { return g.in_degree(v) >= 2; }
bool is_branch(const Digraph& g, VertexId v) { return g.out_degree(v) >= 2; }

bool monotone(const std::vector<int>& xs) {
    bool nondec = true, noninc = true;
    for (size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] < xs[i - 1])
            nondec = false;
        if (xs[i] > xs[i - 1])
            noninc = false;
    }
    return nondec || noninc;
}

}  // namespace

std::vector<L31Interval> find_l31_intervals(const Digraph& h) {
    std::vector<L31Interval> out;
    std::vector<int> dist(static_cast<size_t>(h.order()));
    std::vector<VertexId> parent(static_cast<size_t>(h.order()));
    for (VertexId u = 0; u < h.order(); ++u) {
        if (!is_merge(h, u))
            continue;
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<size_t>(u)] = 0;
        std::deque<VertexId> queue{u};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : h.out_neighbors(v))
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    parent[static_cast<size_t>(w)] = v;
                    queue.push_back(w);
                }
        }
        for (VertexId w = 0; w < h.order(); ++w) {
            if (!is_branch(h, w) || dist[static_cast<size_t>(w)] < 0)
                continue;
            L31Interval iv;
            iv.start = u;
            iv.end = w;
            iv.length = dist[static_cast<size_t>(w)];
            for (VertexId v = w; v != u; v = parent[static_cast<size_t>(v)])
                iv.path.push_back(v);
            iv.path.push_back(u);
            std::reverse(iv.path.begin(), iv.path.end());
            out.push_back(std::move(iv));
        }
    }
    std::sort(out.begin(), out.end(), [](const L31Interval& a, const L31Interval& b) {
        return std::tie(a.length, a.start, a.end) < std::tie(b.length, b.start, b.end);
    });
    return out;
}

HolonomicReport holonomic_check(const Digraph& h) {
    HolonomicReport report;
    report.holonomic = find_l31_intervals(h).empty();

    // Literal degree-sum reading, over maximal simple paths. The family is
    // worst-case exponential; give up past a work budget rather than guess.
    const long long budget = 200000;
    long long work = 0;
    bool exhausted = false;
    report.literal_monotone = true;
    report.literal_evaluated = true;

    std::vector<VertexId> path;
    std::vector<bool> on_path(static_cast<size_t>(h.order()), false);
    auto visit = [&](auto&& self, VertexId v) -> void {
        if (exhausted || (!report.literal_monotone && !report.offending_path.empty()))
            return;
        if (++work > budget) {
            exhausted = true;
            return;
        }
        path.push_back(v);
        on_path[static_cast<size_t>(v)] = true;
        bool extendable = false;
        for (VertexId w : h.out_neighbors(v))
            if (!on_path[static_cast<size_t>(w)]) {
                extendable = true;
                self(self, w);
            }
        if (!extendable) {
            // Forward-maximal; drop it if some outside vertex can prepend.
            bool prependable = false;
            for (VertexId u : h.in_neighbors(path.front()))
                if (!on_path[static_cast<size_t>(u)])
                    prependable = true;
            if (!prependable) {
                std::vector<int> sums;
                sums.reserve(path.size());
                for (VertexId x : path)
                    sums.push_back(h.in_degree(x) + h.out_degree(x));
                if (!monotone(sums)) {
                    report.literal_monotone = false;
                    if (report.offending_path.empty())
                        report.offending_path = path;
                }
            }
        }
        on_path[static_cast<size_t>(v)] = false;
        path.pop_back();
    };
    for (VertexId v = 0; v < h.order() && !exhausted; ++v)
        visit(visit, v);

    if (exhausted) {
        report.literal_evaluated = false;
        report.literal_monotone = false;
    }
    report.agree = report.literal_evaluated && (report.holonomic == report.literal_monotone);
    return report;
}

long long delta_nu(const Digraph& h) {
    long long sum = 0;
    for (VertexId v = 0; v < h.order(); ++v) {
        long long k = h.in_degree(v);
        long long p = h.out_degree(v);
        if (k >= 1 && p >= 1)
            sum += (k - 1) * (p - 1);
    }
    return sum;
}

const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::H1: return "H1";
        case GraphClass::H2: return "H2";
        case GraphClass::H3: return "H3";
    }
    return "?";
}

const char* class_description(GraphClass c) {
    switch (c) {
        case GraphClass::H1: return "homonomic";
        case GraphClass::H2: return "bounded-heteronomous";
        case GraphClass::H3: return "progressive-heteronomous";
    }
    return "?";
}

ClassReport classify_graph(const Digraph& h, int predict_steps) {
    ClassReport report;
    FValidityReport f = validate_f_requirements(h, FMode::Quasicanonical);
    report.standing_ok = f.ok;
    report.standing_violations = std::move(f.violations);

    bool pure_contour = h.arc_count() > 0;
    for (VertexId v = 0; v < h.order() && pure_contour; ++v)
        if (h.in_degree(v) != 1 || h.out_degree(v) != 1)
            pure_contour = false;

    report.intervals = find_l31_intervals(h);
    if (pure_contour) {
        // Converting maps disjoint contours onto contours of the same size.
        report.cls = GraphClass::H1;
        report.pure_contour_degenerate = true;
    } else if (auto contour = find_contour(h)) {
        report.cls = GraphClass::H3;
        report.contours.push_back(std::move(*contour));
    } else if (!report.intervals.empty()) {
        report.cls = GraphClass::H2;
        report.j_max = report.intervals.front().length;
    } else {
        report.cls = GraphClass::H1;
    }

    if (predict_steps > 0)
        report.predicted_growth = predict_growth(h, predict_steps, AugmentMode::Faithful).n;
    return report;
}

GraphClass quick_class(const Digraph& h) {
    bool pure_contour = h.arc_count() > 0;
    for (VertexId v = 0; v < h.order() && pure_contour; ++v)
        if (h.in_degree(v) != 1 || h.out_degree(v) != 1)
            pure_contour = false;
    if (pure_contour)
        return GraphClass::H1;

    // cycle existence by iterative three-color DFS
    enum : char { White, Gray, Black };
    std::vector<char> color(static_cast<size_t>(h.order()), White);
    std::vector<std::pair<VertexId, size_t>> stack;
    for (VertexId s = 0; s < h.order(); ++s) {
        if (color[static_cast<size_t>(s)] != White)
            continue;
        stack.emplace_back(s, 0);
        color[static_cast<size_t>(s)] = Gray;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            const auto& next = h.out_neighbors(v);
            if (i == next.size()) {
                color[static_cast<size_t>(v)] = Black;
                stack.pop_back();
                continue;
            }
            VertexId w = next[i++];
            if (color[static_cast<size_t>(w)] == Gray)
                return GraphClass::H3;
            if (color[static_cast<size_t>(w)] == White) {
                color[static_cast<size_t>(w)] = Gray;
                stack.emplace_back(w, 0);
            }
        }
    }

    // interval existence: one multi-source BFS from all merge vertexes
    std::vector<char> seen(static_cast<size_t>(h.order()), 0);
    std::deque<VertexId> queue;
    for (VertexId v = 0; v < h.order(); ++v)
        if (is_merge(h, v)) {
            seen[static_cast<size_t>(v)] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (is_branch(h, v))
            return GraphClass::H2;
        for (VertexId w : h.out_neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                queue.push_back(w);
            }
    }
    return GraphClass::H1;
}

GrowthPrediction predict_growth(const Digraph& h, int steps, AugmentMode augment,
                                long long vertex_cap) {
    GrowthPrediction pred;
    if (find_contour(h))
        pred.cls = GraphClass::H3;
    else if (!find_l31_intervals(h).empty())
        pred.cls = GraphClass::H2;
    else
        pred.cls = GraphClass::H1;

    Digraph g = h;
    pred.n.push_back(g.order());
    pred.nu.push_back(cyclomatic_number(g));

    long long delta = 0;
    long long prev_delta_nu = 0;
    bool seeded = false;
    for (int j = 1; j <= steps; ++j) {
        if (g.arc_count() > vertex_cap) {
            pred.capped = true;
            break;
        }
        long long dn = delta_nu(g);
        StepConversion sc = convert_step(g, augment);
        if (!seeded) {
            // The first increment is data: m - n of the input, plus the
            // augmentation rows. Later increments follow the recurrence
            // delta_j = delta_{j-1} + delta_nu(previous step graph).
            delta = sc.graph.order() - static_cast<long long>(g.order());
            seeded = true;
        } else {
            delta += prev_delta_nu;
        }
        pred.n.push_back(pred.n.back() + delta);
        pred.nu.push_back(pred.nu.back() + dn);
        prev_delta_nu = dn;
        g = std::move(sc.graph);
    }
    return pred;
}

}  // namespace dgd
