#ifndef QDG_DISCORD_HPP
#define QDG_DISCORD_HPP

#include <cstdint>
#include <vector>

#include "qdg/block.hpp"
#include "qdg/graph.hpp"

namespace qdg {

// Neighborhood-counting measures of non-normality and non-commutativity.
// All of them are exact integers equal to the entrywise L1 norm of the
// corresponding matrix expression (M M^t - M^t M resp. AB - BA); the matrix
// route lives in qdg::oracle and must stay an independent code path.

/// Non-normality of M: sum_{i,j} |#(nbd(v_{mu,i}) cap nbd(v_{mu,j})) -
/// #(nbd(v_{nu,i}) cap nbd(v_{nu,j}))|. Zero iff M is normal.
long long nn(const BinaryMatrix& M);

/// Non-commutativity of two arbitrary binary matrices of equal order.
/// Zero iff AB = BA.
long long nc1(const BinaryMatrix& A, const BinaryMatrix& B);

/// (AB - BA)_{ij} for symmetric A and arbitrary B, computed from
/// neighborhood intersections; i, j are 1-based.
long long nc2_entry(const BinaryMatrix& A, const BinaryMatrix& B, int i, int j);
long long nc2(const BinaryMatrix& A, const BinaryMatrix& B);

/// (AB - BA)_{ij} for symmetric A and B; i, j are 1-based.
long long nc3_entry(const BinaryMatrix& A, const BinaryMatrix& B, int i, int j);
long long nc3(const BinaryMatrix& A, const BinaryMatrix& B);

enum class Condition { prop2, prop3, prop4, prop5 };

/// One signed summand of a violation sum. Index fields are 1-based; the
/// unused block indices of a condition stay 0 (prop2/prop5 use (mu,nu),
/// prop4 uses mu and (alpha,beta), prop3 uses both pairs).
struct PairContribution {
    Condition condition = Condition::prop2;
    int mu = 0, nu = 0;
    int alpha = 0, beta = 0;
    int i = 0, j = 0;
    long long value = 0;
};

struct ViolationBreakdown {
    long long prop2_total = 0;
    long long prop3_total = 0;
    long long prop4_total = 0;
    long long prop5_total = 0;
    std::vector<PairContribution> per_pair; // nonzero summands only
    long long total() const { return prop2_total + prop3_total + prop4_total + prop5_total; }
};

// Violation sums of the block conditions, over ordered index tuples exactly
// as displayed in the defining sums.
long long violation_prop2(const BlockDecomposition& d);
long long violation_prop3(const BlockDecomposition& d);
long long violation_prop4(const BlockDecomposition& d, Sign s);
long long violation_prop5(const BlockDecomposition& d, Sign s);

ViolationBreakdown collect_violations(const BlockDecomposition& d, Sign s);

struct DiscordReport {
    int m = 0;
    int n = 0;
    Sign sign = Sign::laplacian;
    ViolationBreakdown breakdown;
    long long qd_total = 0;
    bool zero_discord() const { return qd_total == 0; }
};

/// QD(G) for the labeled graph: prop2 + prop3 + prop4 + prop5 violations.
/// Throws std::domain_error when the graph has total degree 0 (no state).
DiscordReport qd(const Graph& g, const ClusterLabeling& lab, Sign s);

bool is_zero_discord(const Graph& g, const ClusterLabeling& lab, Sign s);

} // namespace qdg

#endif // QDG_DISCORD_HPP
