#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "coverpeb/bigint.hpp"
#include "coverpeb/graph.hpp"
#include "coverpeb/oracle.hpp"
#include "coverpeb/pebbling.hpp"

namespace coverpeb {

enum class Verdict { Covers, NotCovers, Unknown };

/// Which layer of the decision pipeline settled the question.
enum class Method { Containment, NoSurplus, OneNode, BigProof, Oracle };

const char* verdict_name(Verdict v);
const char* method_name(Method m);

struct CoverDecision {
    Verdict verdict;
    Method method;
    /// Replaying this from d yields a distribution containing w. Meaningful
    /// only when verdict == Covers (possibly empty: containment needs no moves).
    MoveSequence certificate;
    /// Nonempty iff NotCovers was established by a value violation:
    /// V_witness(d) < V_witness(w).
    std::vector<Vertex> witness;
    /// True iff NotCovers was established by exhausting the reachable state
    /// space (no value witness in hand).
    bool oracle_exhausted = false;
};

/// Decision when d has no distribution nodes relative to w: d covers w iff
/// d == w. Otherwise NotCovers with the full vertex set as witness (fewer
/// total pebbles). Throws PreconditionError if d has a distribution node.
CoverDecision decide_no_surplus(const Graph& g, const Distribution& w,
                                const Distribution& d);

struct Normalized {
    Distribution result; // contained in w, same standard value at v0 as the input
    MoveSequence moves;  // replayable from the input distribution
};

/// Drains the surplus stacked at v0 down to a distribution contained in w,
/// emitting the moves. Requires: g connected, w strictly positive,
/// d(s) <= w(s) for every s != v0, and V_{v0}(d) <= V_{v0}(w).
///
/// While d(v0) > w(v0): pick the deficient vertex q (d(q) < w(q)) nearest to
/// v0 (ties: smallest id), walk a shortest v0->q path (ties: smallest-id
/// neighbor that gets closer to q), and fire one pebbling move across each
/// edge of the path. Each pass costs v0 two pebbles, each intermediate one
/// (they hold exactly their weight, at least 1, so the chain is legal), and
/// delivers one pebble to q, a net change of -2*2^0 - sum(2^i) + 2^{d} = 0
/// to the value at v0.
Normalized normalize_single_source(const Graph& g, const Distribution& w, Vertex v0,
                                   const Distribution& d);

/// Exact decision when every vertex except possibly v0 is within its weight:
/// d covers w iff V_{v0}(d) >= V_{v0}(w). On success the certificate comes
/// from trimming the surplus V_{v0}(d) - V_{v0}(w) off the stack at v0,
/// normalizing the trimmed distribution, and replaying those moves against
/// the original d (legal, since d contains the trimmed distribution); the
/// final distribution is w plus the surplus parked at v0.
CoverDecision cover_from_single_node(const Graph& g, const Distribution& w, Vertex v0,
                                     const Distribution& d);

/// Sufficient condition via Voronoi cells around the distribution nodes
/// {d_1,...,d_n}: if V_{{d_1..d_n}}(d) >= max_i V_{{d_i}}(w), then Covers,
/// with a certificate assembled cell by cell; if the value condition fails,
/// Unknown (the condition is sufficient, not necessary). With no nodes at
/// all, delegates to decide_no_surplus. Requires w strictly positive.
CoverDecision cover_sufficient(const Graph& g, const Distribution& w,
                               const Distribution& d);

/// Layered pipeline: containment, then cheap necessary value checks (each
/// singleton, the full vertex set, the node set), then cover_sufficient,
/// then, when enabled, the exact search. Pass std::nullopt to disable the
/// oracle fallback; Unknown can then be returned. Requires w positive.
CoverDecision decide_cover(const Graph& g, const Distribution& w, const Distribution& d,
                           const std::optional<SearchLimits>& oracle_limits = SearchLimits{});

struct CoverPebblingNumber {
    BigUint value;
    Vertex critical_vertex;
};

/// Phi_W(G): every distribution of this many pebbles covers w, and some
/// distribution with one fewer does not. Equals the stacking number; the
/// critical vertex is the (smallest) maximizer of V_{{v}}(w).
CoverPebblingNumber cover_pebbling_number(const Graph& g, const Distribution& w);

/// SN_W(G) - 1 pebbles stacked on the critical vertex: the canonical
/// distribution that fails to cover.
Distribution worst_distribution(const Graph& g, const Distribution& w);

/// Certificate text format: header "CERT n", then one "MOVE u v" per line.
void write_certificate(std::ostream& out, const MoveSequence& seq);
MoveSequence read_certificate(std::istream& in);

} // namespace coverpeb
