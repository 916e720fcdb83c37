#pragma once

#include <string>
#include <vector>

#include "dgd/matrix.hpp"

namespace dgd {

/// The s and c quantities of the dual-nature test, plus the per-row /
/// per-column minima of s over non-zero positions (0 where a row/column
/// holds no arc).
struct CQuantities {
    IntMatrix s;
    IntMatrix c;
    std::vector<int> row_min;
    std::vector<int> col_min;
};

enum class VertexKindTag { Simple, Elementary, Complicated };

/// Shared-vertex classification of a reconstructed edge graph: k in-arcs
/// against p out-arcs. Elementary is the k = p = 1 special case of simple;
/// complicated means k >= 2 and p >= 2.
struct SharedVertexKind {
    VertexId vertex = 0;  // vertex id in the reconstructed root graph
    VertexKindTag kind = VertexKindTag::Simple;
    int k = 0;
    int p = 0;
};

struct ArcViolation {
    VertexId tail = 0;
    VertexId head = 0;
    std::string reason;
};

struct DualityVerdict {
    bool quasi_canonical = false;
    bool canonical = false;
    std::vector<ArcViolation> violating_arcs;
    std::vector<Arc> minor_failures;  // arcs whose (n-1)-order minor test failed
    /// Set when the full-matrix condition holds but some minor fails (or
    /// vice versa); disagreement between the two conditions is data worth
    /// keeping, not an error.
    bool conditions_disagree = false;
};

/// s_ij = outdeg(i) + indeg(j) on arcs, 0 elsewhere.
IntMatrix s_matrix(const RoleMatrix& m);

/// c_ij = (s_ij - rowmin_i) + (s_ij - colmin_j) on arcs, minima taken over
/// non-zero s entries of row i / column j.
CQuantities c_matrix(const RoleMatrix& m);

/// Full dual-nature test: c identically zero, and for every arc (i,j) the
/// minor obtained by deleting row i and column j also yields an all-zero c.
/// Only the quasi fields of the verdict are meaningful.
DualityVerdict is_quasi_canonical(const RoleMatrix& m);

/// Strict form: quasi-canonical and no arc runs from a vertex with
/// out-degree >= 2 into one with in-degree >= 2 (all shared vertexes of the
/// reconstructed edge graph are simple, which is what makes the two
/// cyclomatic numbers coincide).
DualityVerdict is_canonical(const RoleMatrix& m);

/// Kinds of the shared vertexes of the root graph reconstructed from a
/// quasi-canonical matrix. Throws std::invalid_argument when the input
/// fails the quasi-canonical test.
std::vector<SharedVertexKind> classify_vertices(const RoleMatrix& m);

/// Arc positions failing the dual-nature conditions: every arc with
/// c != 0, plus every position holding a non-zero c inside some arc's
/// minor. These are the elements the delta-n normalization subdivides;
/// subdividing a failing minor's own arc would loop forever when the
/// deviation sits elsewhere in the matrix.
std::vector<Arc> quasi_violation_positions(const RoleMatrix& m);

const char* to_string(VertexKindTag k);

}  // namespace dgd
