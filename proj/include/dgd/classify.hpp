#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgd/convert.hpp"
#include "dgd/digraph.hpp"

namespace dgd {

/// Directed path from a merge vertex (indeg >= 2) to a branch vertex
/// (outdeg >= 2). Length 0 means start == end is a complicated vertex.
struct L31Interval {
    VertexId start = 0;
    VertexId end = 0;
    std::vector<VertexId> path;  // start .. end inclusive
    int length = 0;              // arc count of path
};

/// One shortest interval per (merge, branch) pair, sorted by (length,
/// start, end).
std::vector<L31Interval> find_l31_intervals(const Digraph& h);

struct HolonomicReport {
    /// Operative verdict: no l31 interval exists.
    bool holonomic = false;
    /// Literal reading: along every maximal directed path the vertex degree
    /// sums are monotone. Reported alongside for study; the two criteria
    /// disagree on plain paths (endpoint degree sums dip), so disagreement
    /// is recorded, not resolved.
    bool literal_monotone = false;
    bool literal_evaluated = false;  // false when the path family was too large
    bool agree = false;
    std::vector<VertexId> offending_path;  // first non-monotone maximal path
};

HolonomicReport holonomic_check(const Digraph& h);

/// Growth the next converting step adds to the cyclomatic number:
/// sum over vertexes with indeg >= 1 and outdeg >= 1 of
/// (indeg - 1) * (outdeg - 1). Equals nu(straight_convert(h)) - nu(h) for
/// connected graphs in single-entrance/exit form.
long long delta_nu(const Digraph& h);

enum class GraphClass : int { H1, H2, H3 };

const char* to_string(GraphClass c);
const char* class_description(GraphClass c);

struct ClassReport {
    GraphClass cls = GraphClass::H1;
    std::vector<std::vector<VertexId>> contours;  // shortest witness when H3
    std::vector<L31Interval> intervals;
    std::optional<int> j_max;  // H2 only: leading conversions that keep nu
    std::vector<long long> predicted_growth;
    bool standing_ok = true;  // single-entrance/exit assumptions hold
    std::vector<FViolation> standing_violations;
    /// Every vertex has indeg = outdeg = 1: converting maps the graph onto
    /// an equal-size copy of itself, so nu is trivially invariant and the
    /// contour-based test does not apply.
    bool pure_contour_degenerate = false;
};

/// Converting class: H3 iff a contour exists, else H2 iff an l31 interval
/// exists, else H1. Graphs breaking the standing assumptions are still
/// classified, with the violations attached as a warning. predict_steps > 0
/// fills predicted_growth (faithful augmentation).
ClassReport classify_graph(const Digraph& h, int predict_steps = 0);

/// Class without witnesses, in O(n + m): for per-step trace columns on
/// graphs too large for the witness searches.
GraphClass quick_class(const Digraph& h);

struct GrowthPrediction {
    std::vector<long long> n;   // n[0] is the input order
    std::vector<long long> nu;
    bool capped = false;
    GraphClass cls = GraphClass::H1;
};

/// Predicted vertex counts without materializing labels: the linear law
/// for class H1, otherwise the step recurrence
/// delta_n_j = delta_n_{j-1} + delta_nu(step j-1 graph), with the same
/// augmentation policy the observed run would use.
GrowthPrediction predict_growth(const Digraph& h, int steps,
                                AugmentMode augment = AugmentMode::Never,
                                long long vertex_cap = 1'000'000);

}  // namespace dgd
