#include "qdg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qdg {

Graph::Graph(int vertex_count,
             const std::vector<std::pair<int, int>>& edge_list,
             const std::vector<int>& loop_list)
    : vertex_count_(vertex_count) {
    if (vertex_count < 1) throw std::invalid_argument("Graph: vertex_count must be positive");

    auto check_index = [this](int v) {
        if (v < 1 || v > vertex_count_)
            throw std::out_of_range("Graph: vertex index " + std::to_string(v) + " out of [1, " +
                                    std::to_string(vertex_count_) + "]");
    };

    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        check_index(u);
        check_index(v);
        if (u == v)
            throw std::invalid_argument("Graph: self-pair (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") in edge list; use the loop list");
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    loops_ = loop_list;
    for (int v : loops_) check_index(v);
    std::sort(loops_.begin(), loops_.end());
    loops_.erase(std::unique(loops_.begin(), loops_.end()), loops_.end());

    degree_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
    for (auto [u, v] : edges_) {
        ++degree_[static_cast<std::size_t>(u)];
        ++degree_[static_cast<std::size_t>(v)];
    }
    for (int v : loops_) ++degree_[static_cast<std::size_t>(v)];
    total_degree_ = std::accumulate(degree_.begin(), degree_.end(), 0LL);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    auto e = std::make_pair(std::min(u, v), std::max(u, v));
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Graph::has_loop(int v) const {
    return std::binary_search(loops_.begin(), loops_.end(), v);
}

Graph build_graph(int vertex_count,
                  const std::vector<std::pair<int, int>>& edge_list,
                  const std::vector<int>& loop_list) {
    return Graph(vertex_count, edge_list, loop_list);
}

ClusterLabeling::ClusterLabeling(int m, int n, const std::vector<int>& permutation)
    : m_(m), n_(n), perm_(permutation) {
    if (m < 1 || n < 1) throw std::invalid_argument("ClusterLabeling: m and n must be positive");
    const int N = m * n;
    if (static_cast<int>(perm_.size()) != N)
        throw std::invalid_argument("ClusterLabeling: permutation length " +
                                    std::to_string(perm_.size()) + " != m*n = " + std::to_string(N));
    std::vector<char> seen(static_cast<std::size_t>(N) + 1, 0);
    for (int v : perm_) {
        if (v < 1 || v > N || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("ClusterLabeling: permutation is not a bijection on [1, N]");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    cluster_of_.assign(static_cast<std::size_t>(N) + 1, 0);
    slot_of_.assign(static_cast<std::size_t>(N) + 1, 0);
    for (int k = 1; k <= N; ++k) {
        const int v = perm_[static_cast<std::size_t>(k - 1)];
        cluster_of_[static_cast<std::size_t>(v)] = (k - 1) / n + 1;
        slot_of_[static_cast<std::size_t>(v)] = (k - 1) % n + 1;
    }
}

ClusterLabeling ClusterLabeling::natural(int m, int n) {
    std::vector<int> perm(static_cast<std::size_t>(m) * n);
    std::iota(perm.begin(), perm.end(), 1);
    return ClusterLabeling(m, n, perm);
}

int ClusterLabeling::vertex_at(int mu, int i) const {
    if (mu < 1 || mu > m_ || i < 1 || i > n_)
        throw std::out_of_range("ClusterLabeling::vertex_at: index out of range");
    return perm_[static_cast<std::size_t>((mu - 1) * n_ + (i - 1))];
}

bool ClusterLabeling::is_natural() const {
    for (int k = 0; k < static_cast<int>(perm_.size()); ++k)
        if (perm_[static_cast<std::size_t>(k)] != k + 1) return false;
    return true;
}

ClusterLabeling make_labeling(int m, int n, const std::vector<int>& permutation) {
    return ClusterLabeling(m, n, permutation);
}

} // namespace qdg
