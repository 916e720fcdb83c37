#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgd/matrix.hpp"

namespace dgd {

enum class GraphClass : int;  // defined in classify.hpp

/// Vertex graph of the arc adjacencies of h: one output vertex per arc
/// (in arc-list order), and an output arc a->b exactly when head(arc a) =
/// tail(arc b). Output is unlabeled; label machinery lives in the traced
/// iteration, which carries vertex tuples alongside.
Digraph straight_convert(const Digraph& h);

/// Entrance/exit augmentation: a fresh vertex with one arc into the unique
/// source and a fresh vertex with one arc out of the unique sink. Throws on
/// two or more sources/sinks and on contour-only graphs (nothing to attach).
/// When exactly one side exists, only that side is attached.
Digraph augment_entrance_exit(const Digraph& h);

/// Root-graph reconstruction from an edge-adjacency pattern, keeping the
/// arc <-> matrix-vertex bijection explicit: arcs[i] is the root arc
/// standing for vertex i of r. Shared endpoints are the classes generated
/// by the same-row / same-column incidences, dangling endpoints get fresh
/// vertexes, numbered by first appearance over
/// (tail 0, head 0, tail 1, head 1, ...). Some quasi-canonical matrices
/// force two root arcs onto the same endpoint pair; that multigraph case
/// is representable here and flagged.
struct RootReconstruction {
    int order = 0;
    std::vector<Arc> arcs;
    bool has_parallel_arcs = false;
};

RootReconstruction reconstruct_root_raw(const Digraph& r);

/// Raw reconstruction packed into a Digraph (arcs re-sorted). Throws when
/// the root would need parallel arcs.
Digraph reconstruct_root(const Digraph& r);

/// reverse converting proper: checks is_quasi_canonical(r) first and throws
/// std::invalid_argument when it fails (the reconstruction is not faithful
/// beyond that class), then reconstructs the root graph.
Digraph reverse_convert(const RoleMatrix& r);

/// All directed walks with exactly m arcs, as vertex sequences of length
/// m+1, in lexicographic order. Walks may repeat vertexes and arcs; this is
/// the oracle for step-m vertex tuples of the iterated converting.
std::vector<std::vector<VertexId>> paths_of_length(const Digraph& h, int m);

enum class AugmentMode {
    Never,     // raw straight converting
    Auto,      // augment only when the converted graph would break the
               // single-entrance/exit form (unique source with outdeg >= 2
               // or unique sink with indeg >= 2)
    Faithful,  // augment at every step whenever a terminal exists
};

/// Vertex tuples use tokens >= 0 for original vertex ids and tokens < 0 for
/// generated entrance/exit symbols; token -k-1 indexes terminal_names.
using VertexTuple = std::vector<int>;

struct ConvertStep {
    int index = 0;  // number of conversions applied so far
    long long n = 0;
    long long m = 0;
    long long nu = 0;
    long long delta_nu = 0;   // growth the next conversion will add
    GraphClass cls{};         // quick_class of the step graph
    bool augmented = false;
    Digraph graph;                   // kept only when keep_graphs
    std::vector<VertexTuple> tuples; // kept only when keep_tuples
};

struct ConvertTrace {
    std::vector<ConvertStep> steps;  // steps[0] is the input graph
    bool capped = false;
    long long predicted_next = 0;  // next vertex count when capped
    std::vector<std::string> terminal_names;
    AugmentMode mode = AugmentMode::Never;
};

struct TraceOptions {
    int steps = 1;
    AugmentMode augment = AugmentMode::Never;
    long long vertex_cap = 1'000'000;
    bool keep_graphs = true;
    bool keep_tuples = true;
};

/// Iterated straight converting with per-step vertex counts, cyclomatic
/// numbers and (optionally) vertex tuples. Stops early with capped = true
/// when the next step would exceed the vertex cap; the partial trace is the
/// measurement, not a failure.
ConvertTrace iterate_convert(const Digraph& h, const TraceOptions& options);

/// One conversion step under an augmentation policy; shared by the traced
/// iteration and the growth predictor so both make identical decisions.
struct StepConversion {
    Digraph graph;
    int pre_augment_order = 0;
    bool added_entrance = false;
    bool added_exit = false;
};

StepConversion convert_step(const Digraph& current, AugmentMode mode);

/// Display form of a tuple: token names joined with '.'.
std::string tuple_label(const VertexTuple& t, const Digraph& original,
                        const std::vector<std::string>& terminal_names);

}  // namespace dgd
