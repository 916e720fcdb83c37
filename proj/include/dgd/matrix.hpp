#pragma once

#include <vector>

#include "dgd/digraph.hpp"

namespace dgd {

/// Small dense square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n, int fill = 0) : n_(n), v_(static_cast<size_t>(n) * static_cast<size_t>(n), fill) {}

    int order() const { return n_; }
    int& at(int i, int j) { return v_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)]; }
    int at(int i, int j) const { return v_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)]; }

    bool all_zero() const {
        for (int x : v_)
            if (x != 0)
                return false;
        return true;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int n_ = 0;
    std::vector<int> v_;
};

/// Which reading of the 0/1 pattern is intended: L (direct-path / binary
/// relation), R (edge adjacency of an edge graph), F (vertex adjacency of
/// an edge graph).
enum class MatrixRole { L, R, F };

/// A 0/1 square matrix tagged with its interpretation. Entries biject with
/// the arcs of the stored digraph (entry (i,j) = 1 iff arc i->j), which is
/// the only representation the algorithms need.
struct RoleMatrix {
    MatrixRole role = MatrixRole::L;
    Digraph graph;
};

inline RoleMatrix as_l_matrix(Digraph g) { return RoleMatrix{MatrixRole::L, std::move(g)}; }
inline RoleMatrix as_r_matrix(Digraph g) { return RoleMatrix{MatrixRole::R, std::move(g)}; }

/// Dense 0/1 adjacency pattern of a digraph.
IntMatrix to_dense(const Digraph& g);

}  // namespace dgd
