#include "coverpeb/solver.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "coverpeb/errors.hpp"

namespace coverpeb {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Covers: return "COVERS";
        case Verdict::NotCovers: return "NOTCOVERS";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Containment: return "containment";
        case Method::NoSurplus: return "nonode";
        case Method::OneNode: return "onenode";
        case Method::BigProof: return "bigproof";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

namespace {

void check_positive_weights(const Distribution& w) {
    Vertex bad = first_non_positive(w);
    if (bad >= 0) throw NonPositiveWeightError(bad);
}

std::vector<Vertex> all_vertices(int n) {
    std::vector<Vertex> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    return s;
}

} // namespace

CoverDecision decide_no_surplus(const Graph& g, const Distribution& w,
                                const Distribution& d) {
    auto nodes = distribution_nodes(d, w);
    if (!nodes.empty())
        throw PreconditionError("decide_no_surplus: vertex " + std::to_string(nodes[0]) +
                                " is a distribution node");
    if (d == w) return CoverDecision{Verdict::Covers, Method::NoSurplus, {}, {}, false};
    return CoverDecision{Verdict::NotCovers, Method::NoSurplus, {},
                         all_vertices(g.vertex_count()), false};
}

Normalized normalize_single_source(const Graph& g, const Distribution& w, Vertex v0,
                                   const Distribution& d) {
    g.check_vertex(v0);
    if (!g.is_connected())
        throw PreconditionError("normalize_single_source: graph is not connected");
    check_positive_weights(w);
    for (Vertex s = 0; s < d.size(); ++s) {
        if (s != v0 && d[s] > w[s])
            throw PreconditionError("normalize_single_source: vertex " + std::to_string(s) +
                                    " has " + std::to_string(d[s]) + " pebbles, weight " +
                                    std::to_string(w[s]));
    }
    const auto& dm = g.distances();
    const std::vector<Vertex> source{v0};
    if (standard_value(dm, d, source) > standard_value(dm, w, source))
        throw PreconditionError(
            "normalize_single_source: standard value at the source exceeds the weight's");

    Normalized out{d, {}};
    Distribution& cur = out.result;
    while (cur[v0] > w[v0]) {
        // Nearest deficient vertex; smallest id on distance ties. One must
        // exist: otherwise w would be properly contained in cur, making the
        // value at v0 strictly larger than the weight's.
        Vertex target = -1;
        for (Vertex q = 0; q < cur.size(); ++q) {
            if (cur[q] >= w[q]) continue;
            if (target == -1 || dm.at(v0, q) < dm.at(v0, target)) target = q;
        }
        if (target == -1)
            throw InternalError("normalize_single_source: no deficient vertex found");

        // Walk a shortest path v0 -> target, firing a move across each edge.
        Vertex at = v0;
        while (at != target) {
            Vertex step = -1;
            for (Vertex nb : g.neighbors(at)) { // neighbors sorted: smallest id wins
                if (dm.at(nb, target) == dm.at(at, target) - 1) {
                    step = nb;
                    break;
                }
            }
            if (step == -1)
                throw InternalError("normalize_single_source: no descent step");
            Move m{at, step};
            cur = apply_move(g, cur, m);
            out.moves.push_back(m);
            at = step;
        }
    }
    return out;
}

CoverDecision cover_from_single_node(const Graph& g, const Distribution& w, Vertex v0,
                                     const Distribution& d) {
    g.check_vertex(v0);
    check_positive_weights(w);
    for (Vertex s = 0; s < d.size(); ++s) {
        if (s != v0 && d[s] > w[s])
            throw PreconditionError("cover_from_single_node: vertex " + std::to_string(s) +
                                    " has " + std::to_string(d[s]) + " pebbles, weight " +
                                    std::to_string(w[s]));
    }
    const auto& dm = g.distances();
    const std::vector<Vertex> source{v0};
    BigUint value_d = standard_value(dm, d, source);
    BigUint value_w = standard_value(dm, w, source);
    if (value_d < value_w)
        return CoverDecision{Verdict::NotCovers, Method::OneNode, {}, {v0}, false};

    // Trim the surplus off the stack at v0 and normalize what is left; the
    // moves replay legally against the untrimmed d, which contains it.
    BigUint surplus = value_d - value_w;
    if (surplus > BigUint(d[v0]))
        throw InternalError("cover_from_single_node: surplus exceeds the stack at v0");
    Distribution trimmed = d;
    trimmed[v0] -= surplus.to_uint64();
    Normalized norm = normalize_single_source(g, w, v0, trimmed);
    return CoverDecision{Verdict::Covers, Method::OneNode, std::move(norm.moves), {}, false};
}

namespace {

struct Cell {
    Vertex node;                  // the distribution node this cell surrounds
    InducedSubgraph sub;          // induced subgraph on the cell's vertices
    Vertex local_node;            // node's id within the subgraph
    Distribution local_w;
    Distribution local_d;
};

Cell make_cell(const Graph& g, const Distribution& w, const Distribution& d,
               const std::vector<Vertex>& nodes, Vertex node) {
    const auto& dm = g.distances();
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int dv = dm.at(v, node);
        bool minimal = true;
        for (Vertex other : nodes) {
            if (dm.at(v, other) < dv) {
                minimal = false;
                break;
            }
        }
        if (minimal) members.push_back(v);
    }
    Cell cell{node, induced_subgraph(g, members), -1, {}, {}};
    const auto& map = cell.sub.to_parent;
    std::vector<std::uint64_t> lw(map.size()), ld(map.size());
    for (std::size_t k = 0; k < map.size(); ++k) {
        lw[k] = w[map[k]];
        ld[k] = d[map[k]];
        if (map[k] == node) cell.local_node = static_cast<Vertex>(k);
    }
    cell.local_w = Distribution(std::move(lw));
    cell.local_d = Distribution(std::move(ld));
    return cell;
}

MoveSequence to_global(const MoveSequence& local, const std::vector<Vertex>& to_parent) {
    MoveSequence out;
    out.reserve(local.size());
    for (Move m : local) out.push_back(Move{to_parent[m.source], to_parent[m.target]});
    return out;
}

// Certificate construction for the sufficient condition, by induction on the
// node count. Precondition: nodes = distribution_nodes(cur, w), nonempty, and
// V_nodes(cur) >= max_i V_{node_i}(w).
MoveSequence build_certificate(const Graph& g, const Distribution& w, Distribution cur,
                               std::vector<Vertex> nodes) {
    MoveSequence certificate;
    while (true) {
        if (nodes.size() == 1) {
            CoverDecision base = cover_from_single_node(g, w, nodes[0], cur);
            if (base.verdict != Verdict::Covers)
                throw InternalError("cover certificate: single-node base case failed");
            certificate.insert(certificate.end(), base.certificate.begin(),
                               base.certificate.end());
            return certificate;
        }

        // Voronoi cells under <=: tied vertices sit in every minimizing cell.
        // Restricted to a cell, its node is the only possible distribution
        // node, so the single-node decision applies within each cell.
        std::vector<Cell> cells;
        cells.reserve(nodes.size());
        for (Vertex node : nodes) cells.push_back(make_cell(g, w, cur, nodes, node));

        std::vector<MoveSequence> local_certs(cells.size());
        int failing = -1; // index of failing cell with the largest node id
        for (std::size_t i = 0; i < cells.size(); ++i) {
            CoverDecision dec = cover_from_single_node(cells[i].sub.graph, cells[i].local_w,
                                                       cells[i].local_node, cells[i].local_d);
            if (dec.verdict == Verdict::Covers)
                local_certs[i] = std::move(dec.certificate);
            else
                failing = static_cast<int>(i); // nodes ascending, so last failure wins
        }

        if (failing == -1) {
            // Every cell covers itself. Each cell certificate parks every
            // non-node cell vertex at exactly its weight, never below its
            // starting count, so later cells replay legally on shared
            // (distance-tied) vertices.
            for (std::size_t i = 0; i < cells.size(); ++i) {
                MoveSequence global = to_global(local_certs[i], cells[i].sub.to_parent);
                certificate.insert(certificate.end(), global.begin(), global.end());
            }
            return certificate;
        }

        // Drain the failing cell flat and splice the result back over the
        // cell (tied vertices take the drained values), removing its node
        // from the node set; the value condition survives for the rest.
        Cell& cell = cells[static_cast<std::size_t>(failing)];
        Normalized norm = normalize_single_source(cell.sub.graph, cell.local_w,
                                                  cell.local_node, cell.local_d);
        MoveSequence drain = to_global(norm.moves, cell.sub.to_parent);
        certificate.insert(certificate.end(), drain.begin(), drain.end());
        for (std::size_t k = 0; k < cell.sub.to_parent.size(); ++k)
            cur[cell.sub.to_parent[k]] = norm.result[static_cast<Vertex>(k)];

        std::vector<Vertex> next_nodes = distribution_nodes(cur, w);
        std::vector<Vertex> expected = nodes;
        expected.erase(std::remove(expected.begin(), expected.end(), cell.node),
                       expected.end());
        if (next_nodes != expected)
            throw InternalError("cover certificate: draining did not remove exactly one node");
        nodes = std::move(next_nodes);
    }
}

} // namespace

CoverDecision cover_sufficient(const Graph& g, const Distribution& w,
                               const Distribution& d) {
    check_positive_weights(w);
    std::vector<Vertex> nodes = distribution_nodes(d, w);
    if (nodes.empty()) return decide_no_surplus(g, w, d);

    const auto& dm = g.distances();
    BigUint lhs = standard_value(dm, d, nodes);
    BigUint needed;
    for (Vertex node : nodes) {
        BigUint value = standard_value(dm, w, {node});
        if (value > needed) needed = std::move(value);
    }
    if (lhs < needed) return CoverDecision{Verdict::Unknown, Method::BigProof, {}, {}, false};

    MoveSequence certificate = build_certificate(g, w, d, nodes);
    return CoverDecision{Verdict::Covers, Method::BigProof, std::move(certificate), {}, false};
}

CoverDecision decide_cover(const Graph& g, const Distribution& w, const Distribution& d,
                           const std::optional<SearchLimits>& oracle_limits) {
    check_positive_weights(w);
    if (w.size() != g.vertex_count())
        throw LengthMismatchError(w.size(), static_cast<std::size_t>(g.vertex_count()));
    if (d.size() != g.vertex_count())
        throw LengthMismatchError(d.size(), static_cast<std::size_t>(g.vertex_count()));

    // Stage 1: containment needs no moves at all.
    if (contains(d, w))
        return CoverDecision{Verdict::Covers, Method::Containment, {}, {}, false};

    // Stage 2: cheap necessary conditions; a value violation on any set
    // rules coverage out. Checked: every singleton, the full vertex set, and
    // the set of distribution nodes.
    const auto& dm = g.distances();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Vertex> s{v};
        if (standard_value(dm, d, s) < standard_value(dm, w, s))
            return CoverDecision{Verdict::NotCovers, Method::OneNode, {}, std::move(s), false};
    }
    {
        std::vector<Vertex> s = all_vertices(g.vertex_count());
        if (standard_value(dm, d, s) < standard_value(dm, w, s))
            return CoverDecision{Verdict::NotCovers, Method::NoSurplus, {}, std::move(s), false};
    }
    std::vector<Vertex> nodes = distribution_nodes(d, w);
    if (!nodes.empty()) {
        if (standard_value(dm, d, nodes) < standard_value(dm, w, nodes))
            return CoverDecision{Verdict::NotCovers, Method::BigProof, {}, std::move(nodes),
                                 false};
    }

    // Stage 3: constructive sufficient condition.
    CoverDecision sufficient = cover_sufficient(g, w, d);
    if (sufficient.verdict != Verdict::Unknown) return sufficient;

    // Stage 4: exact search, unless disabled.
    if (!oracle_limits) return sufficient;
    ExactResult exact = covers_exact(g, w, d, *oracle_limits);
    switch (exact.outcome) {
        case ExactOutcome::Covers:
            return CoverDecision{Verdict::Covers, Method::Oracle, std::move(exact.moves),
                                 {}, false};
        case ExactOutcome::NotCovers:
            return CoverDecision{Verdict::NotCovers, Method::Oracle, {}, {}, true};
        case ExactOutcome::LimitExceeded:
            return CoverDecision{Verdict::Unknown, Method::Oracle, {}, {}, false};
    }
    throw InternalError("decide_cover: unreachable");
}

CoverPebblingNumber cover_pebbling_number(const Graph& g, const Distribution& w) {
    check_positive_weights(w);
    StackingNumber sn = stacking_number(g.distances(), w);
    return CoverPebblingNumber{std::move(sn.value), sn.argmax};
}

Distribution worst_distribution(const Graph& g, const Distribution& w) {
    CoverPebblingNumber phi = cover_pebbling_number(g, w);
    Distribution d = Distribution::zeros(g.vertex_count());
    d[phi.critical_vertex] = (phi.value - BigUint(1)).to_uint64();
    return d;
}

void write_certificate(std::ostream& out, const MoveSequence& seq) {
    out << "CERT " << seq.size() << "\n";
    for (Move m : seq) out << "MOVE " << m.source << " " << m.target << "\n";
}

MoveSequence read_certificate(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw FormatError("empty certificate");
    std::istringstream header(lines[0]);
    std::string tag;
    long long count = -1;
    if (!(header >> tag >> count) || tag != "CERT" || count < 0)
        throw FormatError("bad certificate header, expected \"CERT n\"");
    if (lines.size() != static_cast<std::size_t>(count) + 1)
        throw FormatError("certificate move count mismatch");
    MoveSequence seq;
    seq.reserve(static_cast<std::size_t>(count));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ms(lines[i]);
        long long u = 0, v = 0;
        std::string extra;
        if (!(ms >> tag >> u >> v) || tag != "MOVE" || (ms >> extra))
            throw FormatError("bad certificate line: " + lines[i]);
        seq.push_back(Move{static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return seq;
}

} // namespace coverpeb
