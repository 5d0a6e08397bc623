#include "coverpeb/pebbling.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "coverpeb/errors.hpp"

namespace coverpeb {

std::uint64_t Distribution::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts_) {
        if (__builtin_add_overflow(sum, c, &sum))
            throw OverflowError("total pebble count exceeds 64 bits");
    }
    return sum;
}

namespace {

void check_same_length(const Distribution& a, const Distribution& b) {
    if (a.size() != b.size())
        throw LengthMismatchError(static_cast<std::size_t>(a.size()),
                                  static_cast<std::size_t>(b.size()));
}

void check_length(const Graph& g, const Distribution& d) {
    if (d.size() != g.vertex_count())
        throw LengthMismatchError(static_cast<std::size_t>(d.size()),
                                  static_cast<std::size_t>(g.vertex_count()));
}

} // namespace

Distribution apply_move(const Graph& g, const Distribution& d, Move m) {
    check_length(g, d);
    if (!g.has_edge(m.source, m.target)) throw NotAdjacentError(m.source, m.target);
    if (d[m.source] < 2) throw InsufficientPebblesError(m.source, d[m.source]);
    Distribution out = d;
    out[m.source] -= 2;
    out[m.target] += 1;
    return out;
}

Distribution replay(const Graph& g, const Distribution& d, const MoveSequence& seq) {
    Distribution cur = d;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            cur = apply_move(g, cur, seq[i]);
        } catch (const Error& e) {
            throw IllegalMoveError(i, e.what());
        }
    }
    return cur;
}

bool contains(const Distribution& d, const Distribution& w) {
    check_same_length(d, w);
    for (Vertex q = 0; q < d.size(); ++q)
        if (d[q] < w[q]) return false;
    return true;
}

std::vector<Vertex> distribution_nodes(const Distribution& d, const Distribution& w) {
    check_same_length(d, w);
    std::vector<Vertex> nodes;
    for (Vertex q = 0; q < d.size(); ++q)
        if (d[q] > w[q]) nodes.push_back(q);
    return nodes;
}

Distribution restrict_to(const Distribution& d, const std::vector<Vertex>& set) {
    Distribution out = Distribution::zeros(d.size());
    for (Vertex v : set) {
        if (v < 0 || v >= d.size()) throw VertexOutOfRangeError(v, d.size());
        out[v] = d[v];
    }
    return out;
}

BigUint standard_value(const DistanceMatrix& dm, const Distribution& d,
                       const std::vector<Vertex>& set) {
    if (set.empty()) throw EmptySetError();
    if (d.size() != dm.size())
        throw LengthMismatchError(static_cast<std::size_t>(d.size()),
                                  static_cast<std::size_t>(dm.size()));
    BigUint value;
    for (Vertex q = 0; q < d.size(); ++q) {
        if (d[q] == 0) continue;
        value.add_shifted(d[q], static_cast<unsigned>(distance_to_set(dm, q, set)));
    }
    return value;
}

StackingNumber stacking_number(const DistanceMatrix& dm, const Distribution& w) {
    if (w.size() != dm.size())
        throw LengthMismatchError(static_cast<std::size_t>(w.size()),
                                  static_cast<std::size_t>(dm.size()));
    StackingNumber best{BigUint{}, 0};
    for (Vertex q = 0; q < w.size(); ++q) {
        BigUint value;
        for (Vertex u = 0; u < w.size(); ++u) {
            if (w[u] == 0) continue;
            int dist = dm.at(u, q);
            if (dist < 0) throw DisconnectedError({u});
            value.add_shifted(w[u], static_cast<unsigned>(dist));
        }
        if (q == 0 || value > best.value) {
            best.value = std::move(value);
            best.argmax = q;
        }
    }
    return best;
}

Vertex first_non_positive(const Distribution& w) {
    for (Vertex v = 0; v < w.size(); ++v)
        if (w[v] == 0) return v;
    return -1;
}

Distribution parse_distribution(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::uint64_t> counts;
    std::string token;
    while (in >> token) {
        if (token.find_first_not_of("0123456789") != std::string::npos)
            throw FormatError("bad pebble count: " + token);
        try {
            counts.push_back(std::stoull(token));
        } catch (const std::out_of_range&) {
            throw OverflowError("pebble count exceeds 64 bits: " + token);
        }
    }
    if (counts.empty()) throw FormatError("empty distribution");
    return Distribution(std::move(counts));
}

Distribution read_distribution(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return parse_distribution(line);
    }
    throw FormatError("no distribution line found");
}

void write_distribution(std::ostream& out, const Distribution& d) {
    out << format_distribution(d) << "\n";
}

std::string format_distribution(const Distribution& d) {
    std::string s;
    for (Vertex v = 0; v < d.size(); ++v) {
        if (v) s += ' ';
        s += std::to_string(d[v]);
    }
    return s;
}

} // namespace coverpeb
