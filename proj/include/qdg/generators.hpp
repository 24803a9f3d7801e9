#ifndef QDG_GENERATORS_HPP
#define QDG_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "qdg/graph.hpp"

namespace qdg::gen {

// Certified graph families plus seeded random instances. Everything here is
// deterministic in its parameters and seed (std::mt19937_64 with hand-rolled
// bounded draws, so sequences are identical across platforms).

/// Complete graph K_{mn} with the natural labeling. Zero discord for every
/// labeling and either sign.
LabeledGraph complete_graph(int m, int n);

/// Complete bipartite graph on 2n vertices whose parts are the two natural
/// clusters. Zero discord.
LabeledGraph complete_bipartite(int n);

/// Complete bipartite graph on 2n vertices whose parts are the first and
/// second halves of `part_permutation`, while the cluster labeling stays
/// natural. Misaligning the parts with the clusters generally produces
/// nonzero discord.
LabeledGraph complete_bipartite(int n, const std::vector<int>& part_permutation);

/// K_{3,3} with parts {1,4,5} / {2,3,6} under natural clusters {1,2,3} /
/// {4,5,6}: isomorphic to complete_bipartite(3) but discordant.
LabeledGraph k33_twisted();

/// Graph of the Werner state at x = 1 in local dimension d: d^2 vertices
/// v_{i,j} with m = n = d, a loop on every vertex, and an edge between
/// v_{i,j} and v_{j,i} for every i < j. Every off-diagonal block is a
/// one-entry matrix E_{nu,mu}, which is never normal, so qd > 0.
LabeledGraph werner_graph(int d);

/// Two edgeless clusters joined by a symmetric r-regular circulant block:
/// bipartite, partially symmetric, regular; zero discord.
LabeledGraph partially_symmetric_regular(int n, int r, std::uint64_t seed = 0);

/// Two edgeless clusters joined by an r-regular circulant block (normal but
/// in general asymmetric); zero discord.
LabeledGraph regular_normal_block(int n, int r, std::uint64_t seed = 0);

/// The 4-vertex bipartite partially symmetric graph whose Laplacian state is
/// a separable two-qubit state with nonzero discord: m = n = 2, edges
/// (v11,v21), (v11,v22), (v12,v21).
LabeledGraph separable_two_qubit();

/// Erdos-Renyi style instance with natural labeling, reproducible in
/// (m, n, edge_probability, seed).
LabeledGraph random_graph(int m, int n, double edge_probability, std::uint64_t seed);

/// Rename slot i to slot_permutation[i-1] inside every cluster
/// simultaneously (the I (x) P local unitary). The graph is unchanged; every
/// block conjugates as P^t A P, so qd is invariant.
LabeledGraph local_relabel(const Graph& g, const ClusterLabeling& lab,
                           const std::vector<int>& slot_permutation);

/// Seeded Fisher-Yates permutation of [1..n].
std::vector<int> random_permutation(int n, std::uint64_t seed);

} // namespace qdg::gen

#endif // QDG_GENERATORS_HPP
