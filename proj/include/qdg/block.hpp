#ifndef QDG_BLOCK_HPP
#define QDG_BLOCK_HPP

#include <cstdint>
#include <vector>

#include "qdg/binary_matrix.hpp"
#include "qdg/graph.hpp"

namespace qdg {

/// Which of the two graph states a computation refers to:
/// laplacian  (s = -1) -> rho_l = L(G)/d,
/// signless   (s = +1) -> rho_q = Q(G)/d.
enum class Sign : int { laplacian = -1, signless = +1 };

constexpr int sign_value(Sign s) { return static_cast<int>(s); }

/// The m x m grid of adjacency blocks A_{mu,nu} of a graph under a cluster
/// labeling, together with the whole-graph vertex degrees. blocks[nu][mu] is
/// always the transpose of blocks[mu][nu]; diagonal blocks are symmetric with
/// a 1 at (i,i) exactly when v_{mu,i} carries a loop.
struct BlockDecomposition {
    int m = 0;
    int n = 0;
    std::vector<BinaryMatrix> blocks; // m*m, row-major by (mu, nu)
    std::vector<int> degrees;         // m*n, indexed by (mu-1)*n + (i-1)
    long long total_degree = 0;
    int loop_count = 0;

    const BinaryMatrix& block(int mu, int nu) const; // 1-based
    int degree(int mu, int i) const;                 // 1-based
};

BlockDecomposition block_decompose(const Graph& g, const ClusterLabeling& lab);

/// X_{mu,nu}(i,j): 1 iff (v_{mu,i}, v_{nu,j}) is an edge (or a loop when all
/// four indices coincide). All indices 1-based.
int edge_characteristic(const BlockDecomposition& d, int mu, int nu, int i, int j);

/// True iff every block A_{mu,nu} is a symmetric matrix, i.e. the edge
/// (v_{mu,i}, v_{nu,j}) always implies (v_{nu,i}, v_{mu,j}).
bool is_partially_symmetric(const BlockDecomposition& d);

/// The bipartite graph G_M on 2n vertices whose adjacency matrix is
/// [[0, M], [M^t, 0]]; vertex k <= n is v_{mu,k} and n+k is v_{nu,k}.
Graph bipartite_graph_of(const BinaryMatrix& M);

/// Density matrix of a graph state with exact rational entries, stored as
/// int64 numerators over a common denominator. The denominator is
/// trace(D + sA), which equals the total degree d for loop-free graphs, so
/// entries are exactly (D + sA)/d there; for loopy graphs the trace
/// normalizer keeps the trace exactly 1.
struct DensityMatrix {
    int order = 0;
    std::vector<std::int64_t> numerators; // order*order, row-major, (mu,i)-major order
    std::int64_t denominator = 0;
    Sign sign = Sign::laplacian;
    std::int64_t source_total_degree = 0;

    std::int64_t num(int r, int c) const { // 0-based
        return numerators[static_cast<std::size_t>(r) * order + c];
    }
    double value(int r, int c) const {
        return static_cast<double>(num(r, c)) / static_cast<double>(denominator);
    }
};

/// Throws std::domain_error when the normalizer is zero (edgeless graph).
DensityMatrix density_matrix(const BlockDecomposition& d, Sign s);

} // namespace qdg

#endif // QDG_BLOCK_HPP
