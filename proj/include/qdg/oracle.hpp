#ifndef QDG_ORACLE_HPP
#define QDG_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdg/block.hpp"
#include "qdg/discord.hpp"

namespace qdg::oracle {

// Verification layer: everything here goes through plain dense matrix
// algebra (integer products, symmetric eigensolves) and never touches the
// neighborhood-counting route it is used to check.

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

IntMatrix to_int_matrix(const BinaryMatrix& m);

/// D_mu + s*A_{mu,mu}, the integer matrix d*rho_{mu,mu}.
IntMatrix diagonal_block(const BlockDecomposition& d, int mu, Sign s);

/// sum_{i,j} |(AB - BA)_{ij}| by direct multiplication.
long long commutator_l1(const IntMatrix& a, const IntMatrix& b);

/// sum_{i,j} |(M M^t - M^t M)_{ij}|.
long long normality_defect_l1(const IntMatrix& m);

struct BlockConditions {
    bool prop1 = false; // diagonal blocks normal (holds identically)
    bool prop2 = false; // off-diagonal blocks normal
    bool prop3 = false; // off-diagonal blocks commute pairwise
    bool prop4 = false; // diagonal blocks commute with off-diagonal ones
    bool prop5 = false; // diagonal blocks commute pairwise
    bool all() const { return prop1 && prop2 && prop3 && prop4 && prop5; }
};

BlockConditions check_block_conditions(const BlockDecomposition& d, Sign s);

/// The violation total computed entirely on the matrix side:
/// sum of normality defects of off-diagonal blocks, commutators of distinct
/// off-diagonal pairs, commutators [D_mu + s*A_mm, A_ab], and commutators of
/// diagonal-block pairs. Must equal qd(...).qd_total exactly.
long long qd_by_matrix_algebra(const BlockDecomposition& d, Sign s);

struct DensityCheck {
    bool ok = false;
    std::string reason;         // "ok", "not_symmetric", "trace_not_one", "not_psd"
    double min_eigenvalue = 0.0;
};

/// Exact symmetry and unit-trace checks on the rational entries, then
/// positive semidefiniteness with eigenvalues >= -tolerance.
DensityCheck validate_density(const DensityMatrix& rho, double tolerance = 1e-9);

struct OrderStats {
    int order = 0;
    long long matrices = 0;
    long long nn_checked = 0;
    long long nc1_checked = 0;
    long long nc2_checked = 0;
    long long nc3_checked = 0;
    long long mismatches = 0;
    bool exhaustive = false;
};

struct EquivalenceSummary {
    long long checked = 0;
    long long mismatches = 0;
    std::string mode; // "exhaustive" (bound <= 3) or "sampled"
    std::uint64_t seed = 0;
    std::vector<OrderStats> per_order;
};

/// Checks nn == normality_defect_l1 and nc1/nc2/nc3 == commutator_l1 on
/// their domains: exhaustively over all binary matrices (and pairs) of
/// order <= min(order_bound, 3), and on seeded random pairs at orders
/// 4..order_bound. Throws std::invalid_argument for order_bound < 1 or > 10.
EquivalenceSummary exhaustive_equivalence(int order_bound,
                                          long long pairs_per_sampled_order = 10000,
                                          std::uint64_t seed = 0x51ab5eedULL);

struct AgreementSummary {
    long long checked = 0;
    long long mismatches = 0;
    std::uint64_t seed = 0;
};

/// qd() vs qd_by_matrix_algebra() on seeded random graphs, both signs.
AgreementSummary random_graph_agreement(int graphs, int m, int n, std::uint64_t seed);

} // namespace qdg::oracle

#endif // QDG_ORACLE_HPP
