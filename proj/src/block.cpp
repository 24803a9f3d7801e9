#include "qdg/block.hpp"

#include <stdexcept>
#include <string>

#include "qdg/errors.hpp"

namespace qdg {

const BinaryMatrix& BlockDecomposition::block(int mu, int nu) const {
    if (mu < 1 || mu > m || nu < 1 || nu > m)
        throw std::out_of_range("BlockDecomposition::block: cluster index out of range");
    return blocks[static_cast<std::size_t>((mu - 1) * m + (nu - 1))];
}

int BlockDecomposition::degree(int mu, int i) const {
    if (mu < 1 || mu > m || i < 1 || i > n)
        throw std::out_of_range("BlockDecomposition::degree: index out of range");
    return degrees[static_cast<std::size_t>((mu - 1) * n + (i - 1))];
}

BlockDecomposition block_decompose(const Graph& g, const ClusterLabeling& lab) {
    if (g.vertex_count() != lab.vertex_count())
        throw DimensionError("block_decompose: graph has " + std::to_string(g.vertex_count()) +
                             " vertices but labeling expects " + std::to_string(lab.vertex_count()));
    const int m = lab.m(), n = lab.n();
    BlockDecomposition d;
    d.m = m;
    d.n = n;
    d.blocks.assign(static_cast<std::size_t>(m) * m, BinaryMatrix(n));
    d.degrees.assign(static_cast<std::size_t>(m) * n, 0);
    d.loop_count = g.loop_count();

    for (int mu = 1; mu <= m; ++mu) {
        for (int nu = 1; nu <= m; ++nu) {
            BinaryMatrix& b = d.blocks[static_cast<std::size_t>((mu - 1) * m + (nu - 1))];
            for (int i = 1; i <= n; ++i) {
                const int u = lab.vertex_at(mu, i);
                for (int j = 1; j <= n; ++j) {
                    const int v = lab.vertex_at(nu, j);
                    int bit = 0;
                    if (u == v)
                        bit = g.has_loop(u) ? 1 : 0;
                    else
                        bit = g.has_edge(u, v) ? 1 : 0;
                    b.set(i - 1, j - 1, bit);
                }
            }
        }
    }
    for (int mu = 1; mu <= m; ++mu)
        for (int i = 1; i <= n; ++i)
            d.degrees[static_cast<std::size_t>((mu - 1) * n + (i - 1))] = g.degree(lab.vertex_at(mu, i));
    d.total_degree = g.total_degree();
    return d;
}

int edge_characteristic(const BlockDecomposition& d, int mu, int nu, int i, int j) {
    if (i < 1 || i > d.n || j < 1 || j > d.n)
        throw std::out_of_range("edge_characteristic: slot index out of range");
    return d.block(mu, nu).at(i - 1, j - 1);
}

bool is_partially_symmetric(const BlockDecomposition& d) {
    for (int mu = 1; mu <= d.m; ++mu)
        for (int nu = 1; nu <= d.m; ++nu)
            if (!d.block(mu, nu).is_symmetric()) return false;
    return true;
}

Graph bipartite_graph_of(const BinaryMatrix& M) {
    const int n = M.order();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (M.at(i, j)) edges.emplace_back(i + 1, n + j + 1);
    return Graph(2 * n, edges);
}

DensityMatrix density_matrix(const BlockDecomposition& d, Sign s) {
    const int N = d.m * d.n;
    const int sv = sign_value(s);
    // trace(D + sA) = d + s * #loops; the loop diagonal of A is the only
    // place where A contributes to the trace.
    const std::int64_t denom = d.total_degree + sv * d.loop_count;
    if (denom <= 0)
        throw std::domain_error("density_matrix: graph has no edges, no quantum state");

    DensityMatrix rho;
    rho.order = N;
    rho.denominator = denom;
    rho.sign = s;
    rho.source_total_degree = d.total_degree;
    rho.numerators.assign(static_cast<std::size_t>(N) * N, 0);

    for (int mu = 1; mu <= d.m; ++mu) {
        for (int nu = 1; nu <= d.m; ++nu) {
            const BinaryMatrix& b = d.block(mu, nu);
            for (int i = 1; i <= d.n; ++i) {
                for (int j = 1; j <= d.n; ++j) {
                    const int r = (mu - 1) * d.n + (i - 1);
                    const int c = (nu - 1) * d.n + (j - 1);
                    std::int64_t v = sv * static_cast<std::int64_t>(b.at(i - 1, j - 1));
                    if (r == c) v += d.degree(mu, i);
                    rho.numerators[static_cast<std::size_t>(r) * N + c] = v;
                }
            }
        }
    }
    return rho;
}

} // namespace qdg
