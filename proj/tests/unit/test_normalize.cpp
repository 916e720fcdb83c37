#include "doctest.h"

#include <random>
#include <stdexcept>

#include "dgd/normalize.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dgd;

namespace {

// Closure restricted to the first k vertexes must survive normalization.
bool closure_preserved(const Digraph& before, const Digraph& after, int k) {
    auto cb = oracle::closure(before);
    auto ca = oracle::closure(after);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (cb[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                ca[static_cast<size_t>(i)][static_cast<size_t>(j)])
                return false;
    return true;
}

}  // namespace

TEST_CASE("delta-n insertion") {
    RoleMatrix path = as_l_matrix(build_digraph(3, {{0, 1}, {1, 2}}));
    RoleMatrix out = delta_n_insert(path, 0, 1);
    CHECK(out.graph.order() == 4);
    CHECK(out.graph.has_arc(0, 3));
    CHECK(out.graph.has_arc(3, 1));
    CHECK(out.graph.has_arc(1, 2));
    CHECK_FALSE(out.graph.has_arc(0, 1));

    RoleMatrix m = as_l_matrix(build_digraph(4, {{0, 1}, {0, 2}, {3, 1}}));
    out = delta_n_insert(m, 0, 1);
    CHECK(out.graph.order() == 5);
    CHECK(out.graph.has_arc(0, 4));
    CHECK(out.graph.has_arc(4, 1));
    CHECK(out.graph.has_arc(0, 2));
    CHECK(out.graph.has_arc(3, 1));

    CHECK_THROWS_AS(delta_n_insert(path, 2, 0), std::invalid_argument);
}

TEST_CASE("delta-n preserves reachability between original vertexes") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 200; ++round) {
        Digraph g = gen::random_digraph(rng, 2 + static_cast<int>(rng() % 7), 0.35);
        if (g.arc_count() == 0)
            continue;
        const Arc& a = g.arc(static_cast<int>(rng() % g.arc_count()));
        RoleMatrix out = delta_n_insert(as_l_matrix(g), a.tail, a.head);
        CHECK(closure_preserved(g, out.graph, g.order()));
    }
}

TEST_CASE("quasi-normalization examples") {
    NormalizationReport r = quasi_normalize(as_l_matrix(build_digraph(3, {{0, 1}, {1, 2}})));
    CHECK(r.converged);
    CHECK(r.s_q == 0);
    CHECK(r.rounds == 0);

    r = quasi_normalize(as_l_matrix(build_digraph(4, {{0, 1}, {0, 2}, {3, 1}})));
    CHECK(r.converged);
    CHECK(r.s_q == 1);
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].arc == Arc{0, 1});
    CHECK(r.steps[0].new_vertex == 4);
    CHECK(is_quasi_canonical(r.result).quasi_canonical);
}

TEST_CASE("canonical normalization examples") {
    NormalizationReport r = normalize_canonical(as_l_matrix(build_digraph(3, {{0, 1}, {1, 2}})));
    CHECK(r.converged);
    CHECK(r.s_q == 0);

    r = normalize_canonical(as_l_matrix(build_digraph(4, {{0, 1}, {0, 2}, {3, 1}})));
    CHECK(r.converged);
    CHECK(r.s_q == 1);
    CHECK(r.steps[0].arc == Arc{0, 1});
    CHECK(is_canonical(r.result).canonical);

    r = normalize_canonical(as_l_matrix(build_digraph(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}})));
    CHECK(r.converged);
    CHECK(is_canonical(r.result).canonical);
}

TEST_CASE("normalization property sweep") {
    std::mt19937_64 rng(32);
    for (int round = 0; round < 250; ++round) {
        int n = 2 + static_cast<int>(rng() % 7);
        Digraph g = gen::random_digraph(rng, n, 0.35);
        RoleMatrix m = as_l_matrix(g);

        for (SweepStrategy strategy :
             {SweepStrategy::SweepThenRecompute, SweepStrategy::ImmediateRecompute}) {
            NormalizationReport rq = quasi_normalize(m, strategy);
            CHECK(rq.converged);
            CHECK(rq.s_q <= 10 * n * n);
            CHECK(rq.result.graph.order() == n + rq.s_q);
            CHECK(is_quasi_canonical(rq.result).quasi_canonical);
            CHECK(closure_preserved(g, rq.result.graph, n));
            CHECK((rq.s_q == 0) == is_quasi_canonical(m).quasi_canonical);

            // weak component count restricted to original vertexes is kept
            CHECK(weak_components(rq.result.graph) == weak_components(g));

            // exact replay round trip
            RoleMatrix back = undo_normalization(rq.result, rq);
            CHECK(back.graph == g);

            NormalizationReport rc = normalize_canonical(m, strategy);
            CHECK(rc.converged);
            CHECK(is_canonical(rc.result).canonical);
            CHECK(closure_preserved(g, rc.result.graph, n));
            CHECK(undo_normalization(rc.result, rc).graph == g);

            // idempotence
            CHECK(quasi_normalize(rq.result, strategy).s_q == 0);
            CHECK(normalize_canonical(rc.result, strategy).s_q == 0);
        }
    }
}

TEST_CASE("reduce recovers a single subdivision") {
    Digraph path = build_digraph(3, {{0, 1}, {1, 2}});
    RoleMatrix sub = delta_n_insert(as_l_matrix(path), 0, 1);
    ReduceResult r = reduce(sub, ReducePreserve::None, /*protect_first=*/3);
    CHECK(r.result.graph == path);
    REQUIRE(r.log.size() == 1);
    CHECK(r.log[0].vertex == 3);

    std::mt19937_64 rng(33);
    for (int round = 0; round < 150; ++round) {
        Digraph g = gen::random_digraph(rng, 2 + static_cast<int>(rng() % 7), 0.35);
        if (g.arc_count() == 0)
            continue;
        const Arc& a = g.arc(static_cast<int>(rng() % g.arc_count()));
        RoleMatrix sub2 = delta_n_insert(as_l_matrix(g), a.tail, a.head);
        CHECK(reduce(sub2, ReducePreserve::None, g.order()).result.graph == g);
    }
}

TEST_CASE("full reduction contracts chain vertexes") {
    ReduceResult r = reduce(as_l_matrix(build_digraph(3, {{0, 1}, {1, 2}})));
    CHECK(r.result.graph == build_digraph(2, {{0, 1}}));
    REQUIRE(r.log.size() == 1);
    CHECK(r.log[0].vertex == 1);

    // nothing contractible: unchanged
    Digraph mb = build_digraph(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}});
    CHECK(reduce(as_l_matrix(mb)).result.graph == mb);
}

TEST_CASE("reduce never breaks the preserved form") {
    std::mt19937_64 rng(34);
    for (int round = 0; round < 100; ++round) {
        Digraph g = gen::random_digraph(rng, 2 + static_cast<int>(rng() % 6), 0.35);
        NormalizationReport rc = normalize_canonical(as_l_matrix(g));
        ReduceResult r = reduce(rc.result, ReducePreserve::Canonical);
        CHECK(is_canonical(r.result).canonical);
        ReduceResult rq = reduce(quasi_normalize(as_l_matrix(g)).result, ReducePreserve::Quasi);
        CHECK(is_quasi_canonical(rq.result).quasi_canonical);
    }
}

TEST_CASE("labels carry insertion provenance") {
    Digraph g(4, {Arc{0, 1}, Arc{0, 2}, Arc{3, 1}}, {"a", "b", "c", "d"});
    NormalizationReport r = normalize_canonical(as_l_matrix(g));
    REQUIRE(r.s_q == 1);
    CHECK(r.result.graph.label(4) == "x+4");
    CHECK(undo_normalization(r.result, r).graph == g);
}
