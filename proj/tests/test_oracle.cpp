#include <doctest.h>

#include <algorithm>

#include "coverpeb/enumerate.hpp"
#include "coverpeb/errors.hpp"
#include "coverpeb/oracle.hpp"
#include "generators.hpp"

using namespace coverpeb;

namespace {

Graph path(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Distribution dist(std::vector<std::uint64_t> counts) { return Distribution(std::move(counts)); }

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("covers_exact on the two-vertex path") {
    Graph p2 = path(2);
    Distribution w = dist({1, 1});

    ExactResult lose = covers_exact(p2, w, dist({2, 0}));
    CHECK(lose.outcome == ExactOutcome::NotCovers);
    CHECK(lose.stats.states_visited == 2); // (2,0) and (0,1), nothing else

    ExactResult win = covers_exact(p2, w, dist({3, 0}));
    CHECK(win.outcome == ExactOutcome::Covers);
    CHECK(win.moves == MoveSequence{{0, 1}});

    ExactResult trivial = covers_exact(p2, w, dist({1, 2}));
    CHECK(trivial.outcome == ExactOutcome::Covers);
    CHECK(trivial.moves.empty()); // already contains w
}

TEST_CASE("limits produce a distinct outcome") {
    Graph p2 = path(2);
    SearchLimits tight;
    tight.max_states = 1;
    ExactResult r = covers_exact(p2, dist({1, 1}), dist({2, 0}), tight);
    CHECK(r.outcome == ExactOutcome::LimitExceeded);
}

TEST_CASE("totals past the byte-packed key range still search correctly") {
    Graph p3 = path(3);
    Distribution w = dist({200, 200, 200});

    // One move fixes the only deficit.
    ExactResult win = covers_exact(p3, w, dist({402, 199, 200}));
    CHECK(win.outcome == ExactOutcome::Covers);
    CHECK(win.moves == MoveSequence{{0, 1}});
    CHECK(win.stats.states_visited == 2);

    // Every child is value-pruned at vertex 1.
    ExactResult lose = covers_exact(p3, w, dist({2, 800, 2}));
    CHECK(lose.outcome == ExactOutcome::NotCovers);

    ExactResult already = covers_exact(p3, w, dist({256, 256, 256}));
    CHECK(already.outcome == ExactOutcome::Covers);
    CHECK(already.moves.empty());
}

TEST_CASE("verify_certificate") {
    Graph p3 = path(3);
    Distribution w = dist({1, 1, 1});
    CHECK(verify_certificate(p3, dist({5, 1, 0}), {{0, 1}, {1, 2}, {0, 1}}, w).valid);

    Graph p2 = path(2);
    VerifyResult bad = verify_certificate(p2, dist({2, 0}), {{0, 1}, {0, 1}}, dist({1, 1}));
    CHECK_FALSE(bad.valid);
    CHECK(bad.failed_index == 1);

    CHECK(verify_certificate(p2, dist({1, 1}), {}, dist({1, 1})).valid);

    VerifyResult short_fall = verify_certificate(p2, dist({2, 0}), {{0, 1}}, dist({1, 1}));
    CHECK_FALSE(short_fall.valid);
    CHECK_FALSE(short_fall.failed_index.has_value()); // legal replay, coverage missing

    // Garbage moves are a false verdict, not a crash.
    VerifyResult out_of_range = verify_certificate(p2, dist({4, 0}), {{0, 9}}, dist({1, 1}));
    CHECK_FALSE(out_of_range.valid);
    CHECK(out_of_range.failed_index == 0);
    VerifyResult loop = verify_certificate(p2, dist({4, 0}), {{1, 1}}, dist({1, 1}));
    CHECK_FALSE(loop.valid);
    CHECK(loop.failed_index == 0);
}

TEST_CASE("phi_exact") {
    CHECK(phi_exact(path(2), dist({1, 1})) == BigUint(3));
    CHECK(phi_exact(path(3), dist({1, 1, 1})) == BigUint(7));
    CHECK(phi_exact(Graph::from_edges(1, {}), dist({5})) == BigUint(5));
    CHECK(phi_exact(Graph::from_edges(1, {}), dist({0})) == BigUint(0));

    SearchLimits tight;
    tight.max_states = 3;
    CHECK_THROWS_AS(phi_exact(path(3), dist({1, 1, 1}), tight), LimitExceededError);
}

TEST_CASE("reachable distributions") {
    Graph p2 = path(2);
    auto reach = reachable_distributions(p2, dist({2, 0}));
    REQUIRE(reach.size() == 2);
    CHECK(std::count(reach.begin(), reach.end(), dist({2, 0})) == 1);
    CHECK(std::count(reach.begin(), reach.end(), dist({0, 1})) == 1);
}

TEST_CASE("returned move sequences always verify") {
    testgen::Rng rng(101);
    for (int iter = 0; iter < 400; ++iter) {
        Graph g = testgen::random_connected_graph(rng, 5);
        Distribution w = testgen::random_distribution(rng, g.vertex_count(), 2);
        Distribution d = testgen::random_distribution(rng, g.vertex_count(), 3);
        ExactResult r = covers_exact(g, w, d);
        if (r.outcome == ExactOutcome::Covers)
            CHECK(verify_certificate(g, d, r.moves, w).valid);
    }
}

TEST_CASE("coverage is monotone in the starting distribution") {
    testgen::Rng rng(102);
    for (int iter = 0; iter < 300; ++iter) {
        Graph g = testgen::random_connected_graph(rng, 5);
        int n = g.vertex_count();
        Distribution w = testgen::random_distribution(rng, n, 2);
        Distribution d1 = testgen::random_distribution(rng, n, 3);
        Distribution d2 = d1;
        for (Vertex v = 0; v < n; ++v)
            d2[v] += static_cast<std::uint64_t>(testgen::pick(rng, 0, 2));
        if (covers_exact(g, w, d1).outcome == ExactOutcome::Covers)
            CHECK(covers_exact(g, w, d2).outcome == ExactOutcome::Covers);
    }
}

TEST_CASE("the singleton-value prune never changes a verdict") {
    testgen::Rng rng(103);
    for (int iter = 0; iter < 300; ++iter) {
        Graph g = testgen::random_connected_graph(rng, 5);
        int n = g.vertex_count();
        Distribution w = testgen::random_distribution(rng, n, 2);
        Distribution d = testgen::random_distribution(rng, n, 3);
        ExactResult pruned = covers_exact(g, w, d, {}, true);
        ExactResult full = covers_exact(g, w, d, {}, false);
        CHECK(pruned.outcome == full.outcome);
        CHECK(pruned.stats.states_visited <= full.stats.states_visited);
    }
}

TEST_CASE("exact search agrees with plain reachability") {
    testgen::Rng rng(104);
    for (int iter = 0; iter < 200; ++iter) {
        Graph g = testgen::random_connected_graph(rng, 4);
        int n = g.vertex_count();
        Distribution w = testgen::random_distribution(rng, n, 2);
        Distribution d = testgen::random_distribution(rng, n, 3);
        bool found = false;
        for (const Distribution& state : reachable_distributions(g, d))
            if (contains(state, w)) found = true;
        CHECK((covers_exact(g, w, d).outcome == ExactOutcome::Covers) == found);
    }
}

TEST_CASE("composition enumeration is lexicographic and complete") {
    std::vector<std::uint64_t> c{0, 0, 2};
    std::vector<std::vector<std::uint64_t>> seen{c};
    while (next_composition(c)) seen.push_back(c);
    std::vector<std::vector<std::uint64_t>> expected{
        {0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
    CHECK(seen == expected);

    // Counts match the stars-and-bars formula for a few cases.
    for (int total : {0, 1, 4}) {
        std::vector<std::uint64_t> v(4, 0);
        v[3] = static_cast<std::uint64_t>(total);
        int count = 1;
        while (next_composition(v)) ++count;
        int expected_count = (total + 3) * (total + 2) * (total + 1) / 6;
        CHECK(count == expected_count);
    }
}

} // TEST_SUITE
