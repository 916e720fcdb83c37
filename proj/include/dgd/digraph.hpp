#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dgd {

using VertexId = int;

struct Arc {
    VertexId tail = 0;
    VertexId head = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable labeled digraph over vertexes 0..n-1.
///
/// Construction rejects self-loops, duplicate arcs and out-of-range
/// endpoints. Arcs are kept sorted lexicographically by (tail, head), so
/// iteration order, arc indices and everything derived from them are
/// deterministic. All member functions are const; values can be shared
/// freely across threads.
class Digraph {
public:
    Digraph() = default;
    Digraph(int order, std::vector<Arc> arcs, std::vector<std::string> labels = {});

    int order() const { return order_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    std::span<const Arc> arcs() const { return arcs_; }
    const Arc& arc(int idx) const { return arcs_[static_cast<size_t>(idx)]; }

    bool has_arc(VertexId tail, VertexId head) const;
    /// Index of (tail, head) in the sorted arc list, or -1.
    int arc_index(VertexId tail, VertexId head) const;

    const std::vector<VertexId>& out_neighbors(VertexId v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<VertexId>& in_neighbors(VertexId v) const { return in_[static_cast<size_t>(v)]; }
    int out_degree(VertexId v) const { return static_cast<int>(out_[static_cast<size_t>(v)].size()); }
    int in_degree(VertexId v) const { return static_cast<int>(in_[static_cast<size_t>(v)].size()); }

    bool labeled() const { return !labels_.empty(); }
    /// Label of v, or its decimal id when the graph is unlabeled.
    std::string label(VertexId v) const;
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int order_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::string> labels_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
};

/// Convenience factory mirroring the (tail, head) pair-list shape used all
/// over the tests and the CLI.
Digraph build_digraph(int order, const std::vector<std::pair<int, int>>& arcs,
                      std::vector<std::string> labels = {});

struct DegreeProfile {
    std::vector<int> indeg;
    std::vector<int> outdeg;
};

DegreeProfile degrees(const Digraph& g);

/// Number of weakly connected components (direction-blind reachability).
int weak_components(const Digraph& g);

/// Circuit rank m - n + p with p the weak component count.
long long cyclomatic_number(const Digraph& g);

/// Shortest directed cycle as a vertex sequence (no closing repeat),
/// or nullopt when the graph is acyclic.
std::optional<std::vector<VertexId>> find_contour(const Digraph& g);

inline bool has_contour(const Digraph& g) { return find_contour(g).has_value(); }

enum class FMode { Quasicanonical, Canonical };

struct FViolation {
    std::string rule;         // short rule id, e.g. "multi-source"
    std::string description;
    std::vector<VertexId> witnesses;
};

struct FValidityReport {
    bool ok = true;
    std::vector<FViolation> violations;
};

/// Structural requirements on a vertex-adjacency matrix of an edge graph:
/// zero diagonal, at most one source (and then with out-degree 1), at most
/// one sink (with in-degree 1); in canonical mode additionally no vertex
/// with in-degree >= 2 may have out-degree >= 2 and vice versa.
FValidityReport validate_f_requirements(const Digraph& g, FMode mode);

/// Reachable-set bitmap from a start vertex (start itself excluded unless
/// it lies on a cycle through itself).
std::vector<bool> reachable_from(const Digraph& g, VertexId start);

}  // namespace dgd
