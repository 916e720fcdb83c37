#include "dgd/duality.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "dgd/convert.hpp"

namespace dgd {

namespace {

void require_relation_role(const RoleMatrix& m, const char* op) {
    if (m.role == MatrixRole::F)
        throw std::invalid_argument(std::string(op) +
                                    ": expects a direct-path matrix (role L or R), got role F");
}

// 0/1 adjacency bitmap for O(1) entry tests inside the minor sweep.
std::vector<char> bitmap(const Digraph& g) {
    const size_t n = static_cast<size_t>(g.order());
    std::vector<char> bits(n * n, 0);
    for (const Arc& a : g.arcs())
        bits[static_cast<size_t>(a.tail) * n + static_cast<size_t>(a.head)] = 1;
    return bits;
}

// c-matrix scan of the minor that drops row x and column y. Row sums of
// the minor differ from the full matrix only by the deleted column's entry
// (and symmetrically), so a non-zero c' appears exactly where an adjusted
// column sum exceeds its row minimum or an adjusted row sum exceeds its
// column minimum. With positions == nullptr the scan short-circuits on the
// first hit; otherwise the deviating positions are collected.
bool minor_c_all_zero(const Digraph& g, const std::vector<char>& bits, VertexId x, VertexId y,
                      std::set<Arc>* positions = nullptr) {
    const size_t n = static_cast<size_t>(g.order());
    bool all_zero = true;
    for (VertexId k = 0; k < g.order(); ++k) {
        if (k == x)
            continue;
        int min = std::numeric_limits<int>::max();
        for (VertexId l : g.out_neighbors(k))
            if (l != y)
                min = std::min(min,
                               g.in_degree(l) - bits[static_cast<size_t>(x) * n + static_cast<size_t>(l)]);
        for (VertexId l : g.out_neighbors(k)) {
            if (l == y)
                continue;
            int colsum = g.in_degree(l) - bits[static_cast<size_t>(x) * n + static_cast<size_t>(l)];
            if (colsum != min) {
                all_zero = false;
                if (!positions)
                    return false;
                positions->insert(Arc{k, l});
            }
        }
    }
    for (VertexId l = 0; l < g.order(); ++l) {
        if (l == y)
            continue;
        int min = std::numeric_limits<int>::max();
        for (VertexId k : g.in_neighbors(l))
            if (k != x)
                min = std::min(min,
                               g.out_degree(k) - bits[static_cast<size_t>(k) * n + static_cast<size_t>(y)]);
        for (VertexId k : g.in_neighbors(l)) {
            if (k == x)
                continue;
            int rowsum = g.out_degree(k) - bits[static_cast<size_t>(k) * n + static_cast<size_t>(y)];
            if (rowsum != min) {
                all_zero = false;
                if (!positions)
                    return false;
                positions->insert(Arc{k, l});
            }
        }
    }
    return all_zero;
}

}  // namespace

IntMatrix s_matrix(const RoleMatrix& m) {
    require_relation_role(m, "s_matrix");
    const Digraph& g = m.graph;
    IntMatrix s(g.order());
    for (const Arc& a : g.arcs())
        s.at(a.tail, a.head) = g.out_degree(a.tail) + g.in_degree(a.head);
    return s;
}

CQuantities c_matrix(const RoleMatrix& m) {
    require_relation_role(m, "c_matrix");
    const Digraph& g = m.graph;
    CQuantities q;
    q.s = s_matrix(m);
    q.c = IntMatrix(g.order());
    q.row_min.assign(static_cast<size_t>(g.order()), 0);
    q.col_min.assign(static_cast<size_t>(g.order()), 0);
    for (VertexId v = 0; v < g.order(); ++v) {
        int rm = std::numeric_limits<int>::max();
        for (VertexId w : g.out_neighbors(v))
            rm = std::min(rm, q.s.at(v, w));
        q.row_min[static_cast<size_t>(v)] = g.out_degree(v) > 0 ? rm : 0;
        int cm = std::numeric_limits<int>::max();
        for (VertexId u : g.in_neighbors(v))
            cm = std::min(cm, q.s.at(u, v));
        q.col_min[static_cast<size_t>(v)] = g.in_degree(v) > 0 ? cm : 0;
    }
    for (const Arc& a : g.arcs())
        q.c.at(a.tail, a.head) = (q.s.at(a.tail, a.head) - q.row_min[static_cast<size_t>(a.tail)]) +
                                 (q.s.at(a.tail, a.head) - q.col_min[static_cast<size_t>(a.head)]);
    return q;
}

DualityVerdict is_quasi_canonical(const RoleMatrix& m) {
    require_relation_role(m, "is_quasi_canonical");
    const Digraph& g = m.graph;
    DualityVerdict v;

    CQuantities q = c_matrix(m);
    bool full_ok = true;
    for (const Arc& a : g.arcs()) {
        int c = q.c.at(a.tail, a.head);
        if (c != 0) {
            full_ok = false;
            v.violating_arcs.push_back(ArcViolation{a.tail, a.head, "c=" + std::to_string(c)});
        }
    }

    std::vector<char> bits = bitmap(g);
    bool minors_ok = true;
    for (const Arc& a : g.arcs()) {
        if (!minor_c_all_zero(g, bits, a.tail, a.head)) {
            minors_ok = false;
            v.minor_failures.push_back(a);
        }
    }

    v.quasi_canonical = full_ok && minors_ok;
    v.conditions_disagree = (full_ok != minors_ok);
    return v;
}

DualityVerdict is_canonical(const RoleMatrix& m) {
    require_relation_role(m, "is_canonical");
    const Digraph& g = m.graph;
    DualityVerdict v = is_quasi_canonical(m);
    v.canonical = v.quasi_canonical;
    for (const Arc& a : g.arcs()) {
        if (g.out_degree(a.tail) >= 2 && g.in_degree(a.head) >= 2) {
            v.canonical = false;
            v.violating_arcs.push_back(ArcViolation{
                a.tail, a.head,
                "branch-merge: outdeg(" + std::to_string(a.tail) + ")=" +
                    std::to_string(g.out_degree(a.tail)) + ", indeg(" + std::to_string(a.head) +
                    ")=" + std::to_string(g.in_degree(a.head))});
        }
    }
    return v;
}

std::vector<SharedVertexKind> classify_vertices(const RoleMatrix& m) {
    require_relation_role(m, "classify_vertices");
    DualityVerdict v = is_quasi_canonical(m);
    if (!v.quasi_canonical)
        throw std::invalid_argument("classify_vertices: matrix is not quasi-canonical");

    RootReconstruction root = reconstruct_root_raw(m.graph);
    std::vector<int> indeg(static_cast<size_t>(root.order), 0);
    std::vector<int> outdeg(static_cast<size_t>(root.order), 0);
    for (const Arc& a : root.arcs) {
        ++outdeg[static_cast<size_t>(a.tail)];
        ++indeg[static_cast<size_t>(a.head)];
    }
    std::vector<SharedVertexKind> kinds;
    for (VertexId w = 0; w < root.order; ++w) {
        int k = indeg[static_cast<size_t>(w)];
        int p = outdeg[static_cast<size_t>(w)];
        if (k < 1 || p < 1)
            continue;  // dangling endpoint, not a shared vertex
        SharedVertexKind sk;
        sk.vertex = w;
        sk.k = k;
        sk.p = p;
        if (k >= 2 && p >= 2)
            sk.kind = VertexKindTag::Complicated;
        else if (k == 1 && p == 1)
            sk.kind = VertexKindTag::Elementary;
        else
            sk.kind = VertexKindTag::Simple;
        kinds.push_back(sk);
    }
    return kinds;
}

std::vector<Arc> quasi_violation_positions(const RoleMatrix& m) {
    require_relation_role(m, "quasi_violation_positions");
    const Digraph& g = m.graph;
    std::set<Arc> bad;
    CQuantities q = c_matrix(m);
    for (const Arc& a : g.arcs())
        if (q.c.at(a.tail, a.head) != 0)
            bad.insert(a);
    std::vector<char> bits = bitmap(g);
    for (const Arc& a : g.arcs())
        minor_c_all_zero(g, bits, a.tail, a.head, &bad);
    return {bad.begin(), bad.end()};
}

const char* to_string(VertexKindTag k) {
    switch (k) {
        case VertexKindTag::Simple: return "simple";
        case VertexKindTag::Elementary: return "elementary";
        case VertexKindTag::Complicated: return "complicated";
    }
    return "?";
}

IntMatrix to_dense(const Digraph& g) {
    IntMatrix m(g.order());
    for (const Arc& a : g.arcs())
        m.at(a.tail, a.head) = 1;
    return m;
}

}  // namespace dgd
