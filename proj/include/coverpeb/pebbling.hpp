#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coverpeb/bigint.hpp"
#include "coverpeb/graph.hpp"

namespace coverpeb {

/// Nonnegative pebble count per vertex. The same type serves as a weight
/// function; operations that need strictly positive weights check that
/// themselves.
class Distribution {
public:
    Distribution() = default;
    explicit Distribution(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}
    static Distribution zeros(int n) { return Distribution(std::vector<std::uint64_t>(n, 0)); }
    static Distribution uniform(int n, std::uint64_t k) {
        return Distribution(std::vector<std::uint64_t>(n, k));
    }

    int size() const { return static_cast<int>(counts_.size()); }
    std::uint64_t operator[](Vertex v) const { return counts_[v]; }
    std::uint64_t& operator[](Vertex v) { return counts_[v]; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }

    /// Total pebbles; throws OverflowError rather than wrapping.
    std::uint64_t total() const;

    bool operator==(const Distribution&) const = default;

private:
    std::vector<std::uint64_t> counts_;
};

/// One pebbling move: remove two pebbles at source, add one at target.
/// source and target must be adjacent (the identity move has no Move value;
/// it is the empty MoveSequence).
struct Move {
    Vertex source;
    Vertex target;
    bool operator==(const Move&) const = default;
};

using MoveSequence = std::vector<Move>;

/// Applies one move; throws NotAdjacentError / InsufficientPebblesError.
Distribution apply_move(const Graph& g, const Distribution& d, Move m);

/// Folds apply_move over the sequence; throws IllegalMoveError carrying the
/// index of the first move that is not legal.
Distribution replay(const Graph& g, const Distribution& d, const MoveSequence& seq);

/// True iff d(q) >= w(q) for every vertex (w is contained in d).
bool contains(const Distribution& d, const Distribution& w);

/// Vertices where d exceeds w, ascending.
std::vector<Vertex> distribution_nodes(const Distribution& d, const Distribution& w);

/// Copy of d zeroed outside `set`.
Distribution restrict_to(const Distribution& d, const std::vector<Vertex>& set);

/// V_S(D) = sum over q of D(q) * 2^d(q,S). Exact, unbounded.
BigUint standard_value(const DistanceMatrix& dm, const Distribution& d,
                       const std::vector<Vertex>& set);

struct StackingNumber {
    BigUint value;
    Vertex argmax; // smallest vertex id achieving the maximum
};

/// SN_W(G) = max over q of V_{q}(W).
StackingNumber stacking_number(const DistanceMatrix& dm, const Distribution& w);

/// Vertex where w is zero, or -1 if w is strictly positive.
Vertex first_non_positive(const Distribution& w);

/// Text format: one line of whitespace-separated nonnegative integers.
Distribution parse_distribution(const std::string& text);
Distribution read_distribution(std::istream& in);
void write_distribution(std::ostream& out, const Distribution& d);
std::string format_distribution(const Distribution& d);

} // namespace coverpeb
