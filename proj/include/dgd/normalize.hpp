#pragma once

#include <string>
#include <vector>

#include "dgd/duality.hpp"
#include "dgd/matrix.hpp"

namespace dgd {

/// Arc subdivision: remove (x, y), add (x, v), (v, y) with v a fresh vertex
/// appended at index order(). Conservative with respect to the binary
/// relation on the original pair. Throws when the arc is absent.
RoleMatrix delta_n_insert(const RoleMatrix& m, VertexId x, VertexId y);

struct SubdivisionStep {
    Arc arc;               // the arc that was subdivided
    VertexId new_vertex;   // index of the inserted vertex
};

enum class NormalizeTarget { Quasi, Canonical };

enum class SweepStrategy {
    /// Collect every violating arc, subdivide them all in lexicographic
    /// order, then re-evaluate.
    SweepThenRecompute,
    /// Re-evaluate after each single subdivision.
    ImmediateRecompute,
};

struct NormalizationReport {
    std::vector<SubdivisionStep> steps;
    int s_q = 0;       // total insertions
    int rounds = 0;    // full re-evaluation sweeps
    bool converged = false;
    RoleMatrix result;
    std::vector<std::string> notes;
};

/// Iterated delta-n subdivision of every arc failing the dual-nature test
/// (non-zero c entry or failing minor) until is_quasi_canonical passes.
/// Insertions are capped at 10 * order^2; running past the cap yields
/// converged = false with a note, never a silent truncation.
NormalizationReport quasi_normalize(const RoleMatrix& m,
                                    SweepStrategy strategy = SweepStrategy::SweepThenRecompute);

/// Same loop against the strict test: subdivides every arc running from a
/// branch vertex (outdeg >= 2) into a merge vertex (indeg >= 2) until
/// is_canonical passes. Subsumes quasi_normalize.
NormalizationReport normalize_canonical(const RoleMatrix& m,
                                        SweepStrategy strategy = SweepStrategy::SweepThenRecompute);

enum class ReducePreserve { None, Quasi, Canonical };

struct ContractionStep {
    VertexId vertex;  // id at removal time
    VertexId tail;    // its unique predecessor at removal time
    VertexId head;    // its unique successor at removal time
};

struct ReduceResult {
    RoleMatrix result;
    std::vector<ContractionStep> log;
};

/// Reduction (-delta-n): repeatedly contracts vertexes with
/// indeg = outdeg = 1 (ascending id order) whose contraction introduces
/// neither a self-loop nor a duplicate arc and, under a preserve mode,
/// keeps the requested form intact. Vertexes below protect_first are never
/// contracted, which pins the original vertexes of a normalized matrix.
ReduceResult reduce(const RoleMatrix& m, ReducePreserve preserve = ReducePreserve::None,
                    int protect_first = 0);

/// Exact inverse of a normalization run: contracts the inserted vertexes in
/// reverse insertion order, recovering the input matrix arc for arc.
RoleMatrix undo_normalization(const RoleMatrix& normalized, const NormalizationReport& report);

}  // namespace dgd
