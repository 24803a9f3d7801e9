#ifndef QDG_ENTROPY_HPP
#define QDG_ENTROPY_HPP

#include "qdg/block.hpp"

namespace qdg::oracle {

/// Entropic quantities of a bipartite state, in bits (log base 2).
/// discord_fixed_basis is the measured-minus-quantum conditional entropy for
/// the projective measurement in the computational basis of the n-dimensional
/// subsystem: sum_k p_k S(rho_k) - [S(rho) - S(rho_B)].
struct EntropyReport {
    double s_rho = 0.0;
    double s_rho_b = 0.0;
    double conditional = 0.0;
    double discord_fixed_basis = 0.0;
};

/// rho is read as an m x m grid of n x n blocks; measuring slot k projects
/// onto the m x m matrix [(rho_{mu,nu})_{kk}] with weight p_k (columns with
/// p_k = 0 are skipped). Throws DimensionError when order != m*n and
/// std::invalid_argument when rho fails validate_density.
EntropyReport fixed_basis_discord(const DensityMatrix& rho, int m, int n);

} // namespace qdg::oracle

#endif // QDG_ENTROPY_HPP
