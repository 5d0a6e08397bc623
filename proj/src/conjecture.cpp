#include "coverpeb/conjecture.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "coverpeb/enumerate.hpp"
#include "coverpeb/errors.hpp"

namespace coverpeb {

namespace {

using u128 = unsigned __int128;

// With n <= 15 vertices, distances are at most 14, so every standard value
// fits u128 comfortably even for 64-bit counts.
struct SubsetScanner {
    const DistanceMatrix& dm;
    const Distribution& w;
    const Distribution& d;
    int n;
    std::vector<Vertex> prefix;
    std::vector<int> dist_rows; // per depth: min distance from each q to the prefix
    std::vector<Vertex> violator;

    SubsetScanner(const DistanceMatrix& dm_, const Distribution& w_, const Distribution& d_)
        : dm(dm_), w(w_), d(d_), n(dm_.size()) {}

    // Lexicographic depth-first walk over nonempty subsets: {0}, {0,1},
    // {0,1,2}, ..., so the first violation found is the lex-first one.
    bool scan() {
        dist_rows.assign(static_cast<std::size_t>(n) * (n + 1), n + 1);
        return extend(0, -1);
    }

    bool extend(int depth, Vertex last) {
        const int* parent = dist_rows.data() + static_cast<std::size_t>(depth) * n;
        int* mine = dist_rows.data() + static_cast<std::size_t>(depth + 1) * n;
        for (Vertex v = last + 1; v < n; ++v) {
            for (Vertex q = 0; q < n; ++q)
                mine[q] = std::min(parent[q], dm.at(q, v));
            prefix.push_back(v);
            u128 value_d = 0, value_w = 0;
            for (Vertex q = 0; q < n; ++q) {
                value_d += static_cast<u128>(d[q]) << mine[q];
                value_w += static_cast<u128>(w[q]) << mine[q];
            }
            if (value_d < value_w) {
                violator = prefix;
                return false;
            }
            if (!extend(depth + 1, v)) return false;
            prefix.pop_back();
        }
        return true;
    }
};

} // namespace

ValueCondition value_condition_holds(const Graph& g, const Distribution& w,
                                     const Distribution& d, int exhaustive_bound) {
    if (g.vertex_count() > exhaustive_bound)
        throw TooManyVerticesError(g.vertex_count(), exhaustive_bound);
    if (w.size() != g.vertex_count())
        throw LengthMismatchError(w.size(), static_cast<std::size_t>(g.vertex_count()));
    if (d.size() != g.vertex_count())
        throw LengthMismatchError(d.size(), static_cast<std::size_t>(g.vertex_count()));
    SubsetScanner scanner(g.distances(), w, d);
    if (scanner.scan()) return ValueCondition{true, {}};
    return ValueCondition{false, std::move(scanner.violator)};
}

namespace {

ConjectureInstance make_instance(const Graph& g, const Distribution& w,
                                 const std::vector<std::uint64_t>& counts) {
    return ConjectureInstance{g.vertex_count(), g.edges(), w.counts(), counts};
}

void write_instance_fields(std::ostream& out, const ConjectureInstance& inst) {
    out << "graph=" << inst.vertex_count << ":";
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
        if (i) out << ",";
        out << inst.edges[i].first << "-" << inst.edges[i].second;
    }
    auto write_vector = [&out](const char* key, const std::vector<std::uint64_t>& v) {
        out << " " << key << "=";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << ",";
            out << v[i];
        }
    };
    write_vector("w", inst.weights);
    write_vector("d", inst.counts);
}

} // namespace

ConjectureReport search_conjecture(int max_vertices, std::uint64_t max_weight,
                                   std::optional<std::uint64_t> pebble_budget,
                                   const SearchLimits& limits) {
    if (max_vertices < 0) throw PreconditionError("max_vertices must be >= 0");
    if (max_weight < 1) throw PreconditionError("max_weight must be >= 1");

    ConjectureReport report;
    report.max_vertices = max_vertices;
    report.max_weight = max_weight;
    report.pebble_budget = pebble_budget;

    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    std::uint64_t states_left = limits.max_states;

    for (int n = 1; n <= max_vertices; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            std::vector<std::uint64_t> wc(static_cast<std::size_t>(n), 1);
            do {
                Distribution w(wc);
                // Beyond the stacking number every distribution covers, so
                // nothing above min(SN, budget) can be a counterexample.
                std::uint64_t bound = stacking_number(g.distances(), w).value.to_uint64();
                if (pebble_budget) bound = std::min(bound, *pebble_budget);

                std::vector<std::uint64_t> dc(static_cast<std::size_t>(n), 0);
                do {
                    report.instances_tested += 1;
                    Distribution d(dc);

                    if (contains(d, w)) continue; // covers and condition both hold

                    ValueCondition cond = value_condition_holds(g, w, d);

                    SearchLimits call_limits;
                    call_limits.max_states = states_left;
                    if (limits.max_seconds) {
                        double left =
                            *limits.max_seconds -
                            std::chrono::duration<double>(Clock::now() - start).count();
                        if (left <= 0 || states_left == 0) {
                            report.complete = false;
                            report.cursor = make_instance(g, w, dc);
                            return report;
                        }
                        call_limits.max_seconds = left;
                    }
                    if (states_left == 0) {
                        report.complete = false;
                        report.cursor = make_instance(g, w, dc);
                        return report;
                    }

                    ExactResult exact = covers_exact(g, w, d, call_limits);
                    states_left -= std::min(states_left, exact.stats.states_visited);
                    if (exact.outcome == ExactOutcome::LimitExceeded) {
                        report.complete = false;
                        report.cursor = make_instance(g, w, dc);
                        return report;
                    }

                    bool covers = exact.outcome == ExactOutcome::Covers;
                    if (cond.holds && !covers)
                        report.counterexamples.push_back(make_instance(g, w, dc));
                    if (!cond.holds && covers)
                        report.necessity_violations.push_back(make_instance(g, w, dc));
                } while (next_vector_with_sum_at_most(dc, bound));
            } while (next_vector_in_box(wc, 1, max_weight));
        }
    }
    return report;
}

void write_report(std::ostream& out, const ConjectureReport& report) {
    out << "# family=connected<=" << report.max_vertices
        << " max_weight=" << report.max_weight << " budget=";
    if (report.pebble_budget)
        out << *report.pebble_budget;
    else
        out << "sn";
    out << "\n";
    out << "# scope: standard-value (V_S) condition only; the general value-function"
           " form is not mechanically enumerable\n";
    for (const auto& inst : report.counterexamples) {
        out << "CEX ";
        write_instance_fields(out, inst);
        out << "\n";
    }
    for (const auto& inst : report.necessity_violations) {
        out << "NECESSITY-VIOLATION ";
        write_instance_fields(out, inst);
        out << "\n";
    }
    if (!report.complete && report.cursor) {
        out << "CURSOR ";
        write_instance_fields(out, *report.cursor);
        out << "\n";
    }
    out << "TESTED=" << report.instances_tested << " CEX=" << report.counterexamples.size()
        << "\n";
}

ProductIdentity check_product_identity(const Graph& g, const Graph& h,
                                       const Distribution& w1, const Distribution& w2) {
    for (const auto* w : {&w1, &w2}) {
        Vertex bad = first_non_positive(*w);
        if (bad >= 0) throw NonPositiveWeightError(bad);
    }
    if (w1.size() != g.vertex_count())
        throw LengthMismatchError(w1.size(), static_cast<std::size_t>(g.vertex_count()));
    if (w2.size() != h.vertex_count())
        throw LengthMismatchError(w2.size(), static_cast<std::size_t>(h.vertex_count()));

    ProductGraph product = cartesian_product(g, h);
    std::vector<std::uint64_t> wp(product.pairing.size());
    for (std::size_t id = 0; id < product.pairing.size(); ++id) {
        auto [a, x] = product.pairing[id];
        if (__builtin_mul_overflow(w1[a], w2[x], &wp[id]))
            throw OverflowError("product weight exceeds 64 bits");
    }
    ProductIdentity result{stacking_number(product.graph.distances(), Distribution(wp)).value,
                           stacking_number(g.distances(), w1).value *
                               stacking_number(h.distances(), w2).value,
                           false};
    result.equal = result.lhs == result.rhs;
    return result;
}

} // namespace coverpeb
