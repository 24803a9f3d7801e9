#ifndef QDG_GRAPH_HPP
#define QDG_GRAPH_HPP

#include <utility>
#include <vector>

namespace qdg {

/// Labeled undirected graph on vertices 1..N. Simple edges live in the edge
/// set; self-loops are kept separately and never appear as (v,v) pairs.
/// Immutable after construction.
class Graph {
public:
    Graph(int vertex_count,
          const std::vector<std::pair<int, int>>& edge_list,
          const std::vector<int>& loop_list = {});

    int vertex_count() const { return vertex_count_; }
    /// Deduplicated edges, normalized to u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& loops() const { return loops_; }

    bool has_edge(int u, int v) const;
    bool has_loop(int v) const;

    /// Degree in the whole graph; a loop contributes 1.
    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
    long long total_degree() const { return total_degree_; }
    int loop_count() const { return static_cast<int>(loops_.size()); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> loops_;
    std::vector<int> degree_; // index 1..N
    long long total_degree_ = 0;
};

Graph build_graph(int vertex_count,
                  const std::vector<std::pair<int, int>>& edge_list,
                  const std::vector<int>& loop_list = {});

/// Assignment of the N = m*n vertices to m clusters of n slots each.
/// Position k of the defining permutation is assigned to cluster
/// ceil(k/n), slot ((k-1) mod n)+1; i.e. the first n positions fill C_1.
class ClusterLabeling {
public:
    ClusterLabeling(int m, int n, const std::vector<int>& permutation);

    static ClusterLabeling natural(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int vertex_count() const { return m_ * n_; }

    int cluster_of(int v) const { return cluster_of_[static_cast<std::size_t>(v)]; }
    int slot_of(int v) const { return slot_of_[static_cast<std::size_t>(v)]; }
    int vertex_at(int mu, int i) const;

    /// The defining permutation: position k (1-based) holds the vertex
    /// assigned to (ceil(k/n), ((k-1) mod n)+1).
    const std::vector<int>& permutation() const { return perm_; }

    bool is_natural() const;

    friend bool operator==(const ClusterLabeling&, const ClusterLabeling&) = default;

private:
    int m_ = 0, n_ = 0;
    std::vector<int> perm_;
    std::vector<int> cluster_of_, slot_of_; // index 1..N
};

ClusterLabeling make_labeling(int m, int n, const std::vector<int>& permutation);

struct LabeledGraph {
    Graph graph;
    ClusterLabeling labeling;
};

} // namespace qdg

#endif // QDG_GRAPH_HPP
