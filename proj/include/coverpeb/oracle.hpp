#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>

#include "coverpeb/bigint.hpp"
#include "coverpeb/graph.hpp"
#include "coverpeb/pebbling.hpp"

namespace coverpeb {

/// Resource budget for exhaustive searches. max_states caps the number of
/// distinct distributions visited; max_seconds is wall clock.
struct SearchLimits {
    std::uint64_t max_states = std::numeric_limits<std::uint64_t>::max();
    std::optional<double> max_seconds;
};

struct SearchStats {
    std::uint64_t states_visited = 0;
    std::uint64_t max_frontier = 0; // deepest DFS path seen
    double elapsed_seconds = 0.0;
};

/// key=value lines: states_visited, max_frontier, elapsed.
void write_stats(std::ostream& out, const SearchStats& stats);

enum class ExactOutcome { Covers, NotCovers, LimitExceeded };

struct ExactResult {
    ExactOutcome outcome;
    MoveSequence moves; // witness sequence, present iff Covers
    SearchStats stats;
};

/// Literal decision of "D covers W" by depth-first search over all
/// distributions derivable from d, with a visited set keyed on the full
/// count vector. Children are generated in (source, target) order and a
/// child is cut (but still counted as visited) when some singleton standard
/// value already falls below the weight's: no derived state can recover,
/// since values never increase under moves. The root is always expanded.
/// LimitExceeded is a distinct outcome, never reported as NotCovers.
/// Pass singleton_prune=false to disable the cut (for differential testing).
ExactResult covers_exact(const Graph& g, const Distribution& w, const Distribution& d,
                         const SearchLimits& limits = {}, bool singleton_prune = true);

struct VerifyResult {
    bool valid;
    /// Index of the first illegal move; empty when every move replayed but
    /// the final distribution does not contain the weights (or when valid).
    std::optional<std::size_t> failed_index;
};

/// True iff seq replays legally from d and the result contains w.
VerifyResult verify_certificate(const Graph& g, const Distribution& d,
                                const MoveSequence& seq, const Distribution& w);

/// Smallest m such that every distribution of exactly m pebbles covers w,
/// found by scanning m upward from |w| and enumerating all compositions of m
/// over the vertices for each candidate; no monotonicity in m is assumed.
/// The limits are cumulative across the whole call; exhausting them throws
/// LimitExceededError.
BigUint phi_exact(const Graph& g, const Distribution& w, const SearchLimits& limits = {});

/// All distributions derivable from d (d itself included), in no particular
/// order. Plain breadth-first closure without pruning; test-scale only.
std::vector<Distribution> reachable_distributions(const Graph& g, const Distribution& d,
                                                  const SearchLimits& limits = {});

} // namespace coverpeb
