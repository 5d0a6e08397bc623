#include "coverpeb/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "coverpeb/errors.hpp"

namespace coverpeb {

bool next_composition(std::vector<std::uint64_t>& c) {
    const std::size_t n = c.size();
    if (n <= 1) return false;
    if (c.back() > 0) {
        std::uint64_t tail = c.back();
        c[n - 2] += 1;
        c[n - 1] = tail - 1;
        return true;
    }
    // Tail is zero: carry out of the rightmost positive position. If that is
    // c[0] (or the total is zero) the sequence is exhausted.
    std::size_t j = n - 1;
    while (j > 0 && c[j] == 0) --j;
    if (j == 0) return false;
    std::uint64_t moved = c[j];
    c[j] = 0;
    c[j - 1] += 1;
    c[n - 1] = moved - 1;
    return true;
}

bool next_vector_in_box(std::vector<std::uint64_t>& c, std::uint64_t lo, std::uint64_t hi) {
    for (std::size_t j = c.size(); j-- > 0;) {
        if (c[j] < hi) {
            c[j] += 1;
            std::fill(c.begin() + static_cast<std::ptrdiff_t>(j) + 1, c.end(), lo);
            return true;
        }
    }
    return false;
}

bool next_vector_with_sum_at_most(std::vector<std::uint64_t>& c, std::uint64_t bound) {
    std::uint64_t prefix = std::accumulate(c.begin(), c.end(), std::uint64_t{0});
    for (std::size_t j = c.size(); j-- > 0;) {
        prefix -= c[j]; // now the sum of c[0..j-1]
        if (prefix + c[j] + 1 <= bound) {
            c[j] += 1;
            std::fill(c.begin() + static_cast<std::ptrdiff_t>(j) + 1, c.end(), 0);
            return true;
        }
    }
    return false;
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1) throw PreconditionError("vertex count must be >= 1");
    if (n > 7)
        throw TooManyVerticesError(n, 7); // 2^C(n,2) labeled graphs past this
    std::vector<std::pair<Vertex, Vertex>> all_pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);

    std::vector<std::vector<std::pair<Vertex, Vertex>>> edge_sets;
    const std::uint32_t masks = 1u << all_pairs.size();
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t i = 0; i < all_pairs.size(); ++i)
            if (mask & (1u << i)) edges.push_back(all_pairs[i]);

        // Quick connectivity check before paying for graph construction.
        std::vector<int> root(static_cast<std::size_t>(n));
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        int components = n;
        for (auto [u, v] : edges) {
            int ru = find(u), rv = find(v);
            if (ru != rv) {
                root[ru] = rv;
                --components;
            }
        }
        if (components == 1) edge_sets.push_back(std::move(edges));
    }
    std::sort(edge_sets.begin(), edge_sets.end());

    std::vector<Graph> out;
    out.reserve(edge_sets.size());
    for (const auto& edges : edge_sets) out.push_back(Graph::from_edges(n, edges));
    return out;
}

} // namespace coverpeb
