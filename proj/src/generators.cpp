#include "qdg/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace qdg::gen {

namespace {

// Bounded draws are hand-rolled on top of the (standard-fixed) mt19937_64
// stream so that sequences are identical on every platform;
// std::uniform_int_distribution is implementation-defined.
int bounded(std::mt19937_64& rng, int n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % static_cast<std::uint64_t>(n));
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<int>(x % static_cast<std::uint64_t>(n));
}

double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void shuffle_in_place(std::vector<int>& v, std::mt19937_64& rng) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(bounded(rng, i + 1))]);
}

// Graph on 2n vertices with edgeless natural clusters and cross edges given
// by the circulant with the supplied shift set: (v_{1,i}, v_{2,j}) is an edge
// iff (j - i) mod n is a shift.
LabeledGraph bipartite_from_shifts(int n, const std::vector<int>& shifts) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int s : shifts) edges.emplace_back(i + 1, n + ((i + s) % n) + 1);
    return {Graph(2 * n, edges), ClusterLabeling::natural(2, n)};
}

} // namespace

LabeledGraph complete_graph(int m, int n) {
    if (m < 1 || n < 1 || m * n < 2)
        throw std::invalid_argument("complete_graph: need m, n >= 1 and mn >= 2");
    const int N = m * n;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(N) * (N - 1) / 2);
    for (int u = 1; u <= N; ++u)
        for (int v = u + 1; v <= N; ++v) edges.emplace_back(u, v);
    return {Graph(N, edges), ClusterLabeling::natural(m, n)};
}

LabeledGraph complete_bipartite(int n) {
    std::vector<int> identity(static_cast<std::size_t>(2) * n);
    std::iota(identity.begin(), identity.end(), 1);
    return complete_bipartite(n, identity);
}

LabeledGraph complete_bipartite(int n, const std::vector<int>& part_permutation) {
    if (n < 1) throw std::invalid_argument("complete_bipartite: n must be positive");
    if (static_cast<int>(part_permutation.size()) != 2 * n)
        throw std::invalid_argument("complete_bipartite: permutation must list all 2n vertices");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = n; b < 2 * n; ++b)
            edges.emplace_back(part_permutation[static_cast<std::size_t>(a)],
                               part_permutation[static_cast<std::size_t>(b)]);
    return {Graph(2 * n, edges), ClusterLabeling::natural(2, n)};
}

LabeledGraph k33_twisted() {
    return complete_bipartite(3, {1, 4, 5, 2, 3, 6});
}

LabeledGraph werner_graph(int d) {
    if (d < 2) throw std::invalid_argument("werner_graph: d must be at least 2");
    const int N = d * d;
    auto index = [d](int i, int j) { return (i - 1) * d + j; };
    std::vector<int> loops(static_cast<std::size_t>(N));
    std::iota(loops.begin(), loops.end(), 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) edges.emplace_back(index(i, j), index(j, i));
    return {Graph(N, edges, loops), ClusterLabeling::natural(d, d)};
}

LabeledGraph partially_symmetric_regular(int n, int r, std::uint64_t seed) {
    if (n < 1 || r < 1 || r > n)
        throw std::invalid_argument("partially_symmetric_regular: need 1 <= r <= n");
    // Shift sets closed under negation mod n give symmetric circulants.
    // Self-paired shifts: 0, and n/2 when n is even; the rest come in
    // {s, n-s} pairs.
    std::vector<int> selfs{0};
    if (n % 2 == 0 && n >= 2) selfs.push_back(n / 2);
    std::vector<int> pair_starts;
    for (int s = 1; 2 * s < n; ++s) pair_starts.push_back(s);

    std::mt19937_64 rng(seed);
    shuffle_in_place(selfs, rng);
    shuffle_in_place(pair_starts, rng);

    std::vector<int> shifts;
    int remaining = r;
    std::size_t self_at = 0;
    if (remaining % 2 == 1) {
        shifts.push_back(selfs[self_at++]);
        --remaining;
    }
    std::size_t pair_at = 0;
    while (remaining >= 2 && pair_at < pair_starts.size()) {
        shifts.push_back(pair_starts[pair_at]);
        shifts.push_back(n - pair_starts[pair_at]);
        ++pair_at;
        remaining -= 2;
    }
    // Pairs run out only for r = n with n even; the leftover self-paired
    // shifts cover the rest.
    while (remaining > 0 && self_at < selfs.size()) {
        shifts.push_back(selfs[self_at++]);
        --remaining;
    }
    if (remaining != 0) throw std::invalid_argument("partially_symmetric_regular: infeasible (n, r)");
    return bipartite_from_shifts(n, shifts);
}

LabeledGraph regular_normal_block(int n, int r, std::uint64_t seed) {
    if (n < 1 || r < 1 || r > n)
        throw std::invalid_argument("regular_normal_block: need 1 <= r <= n");
    // r consecutive circulant shifts starting at a seeded offset; any
    // circulant is normal. Offset 1 by default keeps small blocks asymmetric.
    const int offset = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n));
    std::vector<int> shifts;
    for (int k = 0; k < r; ++k) shifts.push_back((offset + k) % n);
    return bipartite_from_shifts(n, shifts);
}

LabeledGraph separable_two_qubit() {
    return {Graph(4, {{1, 3}, {1, 4}, {2, 3}}), ClusterLabeling::natural(2, 2)};
}

LabeledGraph random_graph(int m, int n, double edge_probability, std::uint64_t seed) {
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw std::invalid_argument("random_graph: probability must lie in [0, 1]");
    const int N = m * n;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= N; ++u)
        for (int v = u + 1; v <= N; ++v)
            if (unit(rng) < edge_probability) edges.emplace_back(u, v);
    return {Graph(N, edges), ClusterLabeling::natural(m, n)};
}

LabeledGraph local_relabel(const Graph& g, const ClusterLabeling& lab,
                           const std::vector<int>& slot_permutation) {
    const int n = lab.n();
    if (static_cast<int>(slot_permutation.size()) != n)
        throw std::invalid_argument("local_relabel: slot permutation must have length n");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int s : slot_permutation) {
        if (s < 1 || s > n || seen[static_cast<std::size_t>(s)])
            throw std::invalid_argument("local_relabel: not a permutation of [1, n]");
        seen[static_cast<std::size_t>(s)] = 1;
    }
    // Vertex formerly at slot i moves to slot pi(i) in the same cluster:
    // new position (mu, pi(i)) holds the old occupant of (mu, i).
    std::vector<int> perm(static_cast<std::size_t>(lab.vertex_count()));
    for (int mu = 1; mu <= lab.m(); ++mu)
        for (int i = 1; i <= n; ++i) {
            const int target = slot_permutation[static_cast<std::size_t>(i - 1)];
            perm[static_cast<std::size_t>((mu - 1) * n + (target - 1))] = lab.vertex_at(mu, i);
        }
    return {g, ClusterLabeling(lab.m(), n, perm)};
}

std::vector<int> random_permutation(int n, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::mt19937_64 rng(seed);
    shuffle_in_place(perm, rng);
    return perm;
}

} // namespace qdg::gen
