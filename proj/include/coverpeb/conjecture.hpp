#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "coverpeb/bigint.hpp"
#include "coverpeb/graph.hpp"
#include "coverpeb/oracle.hpp"
#include "coverpeb/pebbling.hpp"

namespace coverpeb {

struct ValueCondition {
    bool holds;
    /// Lexicographically first violating set; empty iff holds.
    std::vector<Vertex> violating_set;
};

/// Whether V_S(d) >= V_S(w) for every nonempty S (the full vertex set
/// included). Checks all 2^n - 1 subsets; refuses graphs above the bound.
ValueCondition value_condition_holds(const Graph& g, const Distribution& w,
                                     const Distribution& d, int exhaustive_bound = 15);

/// One (graph, weight, distribution) triple, serializable into report lines.
struct ConjectureInstance {
    int vertex_count = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::uint64_t> weights;
    std::vector<std::uint64_t> counts;
};

struct ConjectureReport {
    int max_vertices = 0;
    std::uint64_t max_weight = 0;
    std::optional<std::uint64_t> pebble_budget; // cap on |d|; otherwise SN_W(G)
    std::uint64_t instances_tested = 0;
    /// Value condition holds but the exact search says NotCovers: a
    /// counterexample to the open question's converse direction.
    std::vector<ConjectureInstance> counterexamples;
    /// Exact search says Covers but the value condition fails. The theory
    /// rules this out; any entry here is an implementation bug.
    std::vector<ConjectureInstance> necessity_violations;
    bool complete = true;
    /// Last enumerated instance when the limits ran out mid-search.
    std::optional<ConjectureInstance> cursor;
};

/// Exhaustively tests the open question on the V_S family: over all
/// connected graphs with 1..max_vertices vertices (by vertex count, then
/// edge-set lex order), all weight vectors in {1..max_weight}^n (lex), and
/// all distributions with |d| <= min(SN_W(G), pebble_budget) (lex), compare
/// value_condition_holds against covers_exact. The limits are cumulative
/// over the whole run; when exhausted a partial report carries a resumption
/// cursor instead of throwing.
ConjectureReport search_conjecture(int max_vertices, std::uint64_t max_weight,
                                   std::optional<std::uint64_t> pebble_budget,
                                   const SearchLimits& limits = {});

/// Line-oriented report; trailing summary "TESTED=<k> CEX=<k>".
void write_report(std::ostream& out, const ConjectureReport& report);

struct ProductIdentity {
    BigUint lhs; // stacking number of the product weight on the product graph
    BigUint rhs; // product of the factor stacking numbers
    bool equal;
};

/// The Graham-type identity for cover pebbling: Phi of the pointwise-product
/// weight on the Cartesian product equals the product of the factor Phis.
/// Inequality signals an implementation bug, not a mathematical finding.
ProductIdentity check_product_identity(const Graph& g, const Graph& h,
                                       const Distribution& w1, const Distribution& w2);

} // namespace coverpeb
