#include "coverpeb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>
#include <ostream>
#include <unordered_set>

#include "coverpeb/enumerate.hpp"
#include "coverpeb/errors.hpp"

namespace coverpeb {

void write_stats(std::ostream& out, const SearchStats& stats) {
    out << "states_visited=" << stats.states_visited << "\n";
    out << "max_frontier=" << stats.max_frontier << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "elapsed=%.6f\n", stats.elapsed_seconds);
    out << buf;
}

namespace {

using u128 = unsigned __int128;
using Clock = std::chrono::steady_clock;

std::string make_key(const Distribution& d, bool byte_packed) {
    std::string key;
    if (byte_packed) {
        key.resize(static_cast<std::size_t>(d.size()));
        for (Vertex v = 0; v < d.size(); ++v)
            key[static_cast<std::size_t>(v)] = static_cast<char>(d[v]);
    } else {
        key.resize(static_cast<std::size_t>(d.size()) * 8);
        for (Vertex v = 0; v < d.size(); ++v) {
            std::uint64_t c = d[v];
            for (int b = 0; b < 8; ++b)
                key[static_cast<std::size_t>(v) * 8 + b] = static_cast<char>(c >> (8 * b));
        }
    }
    return key;
}

// Singleton standard values fit u128 when total * 2^diameter stays well
// below 2^128; otherwise the prune is skipped (the search stays exact).
bool values_fit_u128(std::uint64_t total, int diameter) {
    return diameter >= 0 && diameter + std::bit_width(total) <= 120;
}

struct Searcher {
    const Graph& g;
    const Distribution& w;
    const SearchLimits& limits;
    bool prune;

    int n = 0;
    bool byte_packed = false;
    bool prune_active = false;
    std::vector<u128> weight_values; // V_{v}(w) per vertex
    std::unordered_set<std::string> visited;
    SearchStats stats;
    Clock::time_point start = Clock::now();
    std::optional<Clock::time_point> deadline;

    // Flattened per-depth storage: counts and singleton values of the state
    // at each level of the DFS path.
    std::vector<std::uint64_t> counts_stack;
    std::vector<u128> values_stack;
    struct Frame {
        Move incoming;     // move that produced this state (unused at depth 0)
        Vertex src;        // move enumeration cursor
        std::size_t nb;    // index into neighbors(src)
    };
    std::vector<Frame> frames;

    Searcher(const Graph& g_, const Distribution& w_, const SearchLimits& l, bool p)
        : g(g_), w(w_), limits(l), prune(p), n(g_.vertex_count()) {
        if (l.max_states < 1) throw PreconditionError("max_states must be >= 1");
        if (l.max_seconds) {
            deadline = start + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(*l.max_seconds));
        }
    }

    std::uint64_t* counts_at(std::size_t depth) { return counts_stack.data() + depth * n; }
    u128* values_at(std::size_t depth) { return values_stack.data() + depth * n; }

    void ensure_depth(std::size_t depth) {
        if (counts_stack.size() < (depth + 1) * n) {
            counts_stack.resize((depth + 1) * n);
            if (prune_active) values_stack.resize((depth + 1) * n);
        }
    }

    bool out_of_time() {
        return deadline && Clock::now() > *deadline;
    }

    bool contains_w(const std::uint64_t* c) const {
        for (Vertex v = 0; v < n; ++v)
            if (c[v] < w[v]) return false;
        return true;
    }

    ExactResult run(const Distribution& d) {
        std::uint64_t total_d = d.total();
        std::uint64_t total_w = w.total();
        byte_packed = total_d <= 255 && total_w <= 255;
        int diameter = g.distances().diameter();
        prune_active = prune && values_fit_u128(std::max(total_d, total_w), diameter);
        if (prune_active) {
            weight_values.assign(static_cast<std::size_t>(n), 0);
            for (Vertex v = 0; v < n; ++v)
                for (Vertex q = 0; q < n; ++q)
                    weight_values[v] += static_cast<u128>(w[q])
                                        << g.distances().at(q, v);
        }

        ensure_depth(0);
        std::copy(d.counts().begin(), d.counts().end(), counts_at(0));
        if (prune_active) {
            for (Vertex v = 0; v < n; ++v) {
                u128 val = 0;
                for (Vertex q = 0; q < n; ++q)
                    val += static_cast<u128>(d[q]) << g.distances().at(q, v);
                values_at(0)[v] = val;
            }
        }

        visited.insert(make_key(d, byte_packed));
        stats.states_visited = 1;
        stats.max_frontier = 1;
        if (contains_w(counts_at(0))) return finish(ExactOutcome::Covers, {});

        frames.push_back(Frame{Move{0, 0}, 0, 0});
        Distribution child(std::vector<std::uint64_t>(static_cast<std::size_t>(n)));
        while (!frames.empty()) {
            std::size_t depth = frames.size() - 1;
            Frame& f = frames.back();
            const std::uint64_t* cur = counts_at(depth);

            // Advance the (source, target) cursor to the next legal move.
            while (f.src < n && (cur[f.src] < 2 || f.nb >= g.neighbors(f.src).size())) {
                ++f.src;
                f.nb = 0;
            }
            if (f.src >= n) {
                frames.pop_back();
                continue;
            }
            Move move{f.src, g.neighbors(f.src)[f.nb]};
            ++f.nb;

            for (Vertex v = 0; v < n; ++v) child[v] = cur[v];
            child[move.source] -= 2;
            child[move.target] += 1;
            std::string key = make_key(child, byte_packed);
            if (visited.contains(key)) continue;
            if (visited.size() >= limits.max_states)
                return finish(ExactOutcome::LimitExceeded, {});
            if ((stats.states_visited & 1023) == 0 && out_of_time())
                return finish(ExactOutcome::LimitExceeded, {});
            visited.insert(std::move(key));
            ++stats.states_visited;

            if (contains_w(child.counts().data()))
                return finish(ExactOutcome::Covers, path_moves(move));

            if (prune_active) {
                ensure_depth(depth + 1); // resize before taking pointers
                const u128* pv = values_at(depth);
                u128* cv = values_at(depth + 1);
                bool cut = false;
                const auto& dm = g.distances();
                for (Vertex v = 0; v < n; ++v) {
                    u128 val = pv[v] - (u128{1} << (dm.at(move.source, v) + 1)) +
                               (u128{1} << dm.at(move.target, v));
                    cv[v] = val;
                    if (val < weight_values[v]) cut = true;
                }
                if (cut) continue;
            } else {
                ensure_depth(depth + 1);
            }

            std::copy(child.counts().begin(), child.counts().end(), counts_at(depth + 1));
            frames.push_back(Frame{move, 0, 0});
            stats.max_frontier = std::max<std::uint64_t>(stats.max_frontier, frames.size());
        }
        return finish(ExactOutcome::NotCovers, {});
    }

    MoveSequence path_moves(Move last) const {
        MoveSequence seq;
        seq.reserve(frames.size());
        for (std::size_t i = 1; i < frames.size(); ++i) seq.push_back(frames[i].incoming);
        seq.push_back(last);
        return seq;
    }

    ExactResult finish(ExactOutcome outcome, MoveSequence moves) {
        stats.elapsed_seconds =
            std::chrono::duration<double>(Clock::now() - start).count();
        return ExactResult{outcome, std::move(moves), stats};
    }
};

} // namespace

ExactResult covers_exact(const Graph& g, const Distribution& w, const Distribution& d,
                         const SearchLimits& limits, bool singleton_prune) {
    if (w.size() != g.vertex_count())
        throw LengthMismatchError(w.size(), static_cast<std::size_t>(g.vertex_count()));
    if (d.size() != g.vertex_count())
        throw LengthMismatchError(d.size(), static_cast<std::size_t>(g.vertex_count()));
    Searcher searcher(g, w, limits, singleton_prune);
    return searcher.run(d);
}

VerifyResult verify_certificate(const Graph& g, const Distribution& d,
                                const MoveSequence& seq, const Distribution& w) {
    Distribution cur = d;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            cur = apply_move(g, cur, seq[i]);
        } catch (const Error&) {
            return {false, i};
        }
    }
    if (!contains(cur, w)) return {false, std::nullopt};
    return {true, std::nullopt};
}

BigUint phi_exact(const Graph& g, const Distribution& w, const SearchLimits& limits) {
    if (w.size() != g.vertex_count())
        throw LengthMismatchError(w.size(), static_cast<std::size_t>(g.vertex_count()));
    const int n = g.vertex_count();
    const auto start = Clock::now();
    std::uint64_t states_left = limits.max_states;

    for (std::uint64_t m = w.total();; ++m) {
        bool all_cover = true;
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
        counts[static_cast<std::size_t>(n) - 1] = m;
        while (true) {
            SearchLimits call_limits;
            call_limits.max_states = std::max<std::uint64_t>(states_left, 1);
            if (limits.max_seconds) {
                double left = *limits.max_seconds -
                              std::chrono::duration<double>(Clock::now() - start).count();
                if (left <= 0) throw LimitExceededError("phi_exact: time budget exhausted");
                call_limits.max_seconds = left;
            }
            if (states_left == 0) throw LimitExceededError("phi_exact: state budget exhausted");

            ExactResult r = covers_exact(g, w, Distribution(counts), call_limits);
            states_left -= std::min(states_left, r.stats.states_visited);
            if (r.outcome == ExactOutcome::LimitExceeded)
                throw LimitExceededError("phi_exact: covers_exact hit the search limits");
            if (r.outcome == ExactOutcome::NotCovers) {
                all_cover = false;
                break;
            }
            if (!next_composition(counts)) break;
        }
        if (all_cover) return BigUint(m);
    }
}

std::vector<Distribution> reachable_distributions(const Graph& g, const Distribution& d,
                                                  const SearchLimits& limits) {
    if (d.size() != g.vertex_count())
        throw LengthMismatchError(d.size(), static_cast<std::size_t>(g.vertex_count()));
    bool byte_packed = d.total() <= 255;
    std::unordered_set<std::string> seen;
    std::deque<Distribution> queue;
    std::vector<Distribution> out;
    seen.insert(make_key(d, byte_packed));
    queue.push_back(d);
    while (!queue.empty()) {
        Distribution cur = std::move(queue.front());
        queue.pop_front();
        out.push_back(cur);
        for (Vertex s = 0; s < g.vertex_count(); ++s) {
            if (cur[s] < 2) continue;
            for (Vertex t : g.neighbors(s)) {
                Distribution next = cur;
                next[s] -= 2;
                next[t] += 1;
                std::string key = make_key(next, byte_packed);
                if (seen.contains(key)) continue;
                if (seen.size() >= limits.max_states)
                    throw LimitExceededError("reachable_distributions: too many states");
                seen.insert(std::move(key));
                queue.push_back(std::move(next));
            }
        }
    }
    return out;
}

} // namespace coverpeb
