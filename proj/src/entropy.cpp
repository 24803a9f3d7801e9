#include "qdg/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "qdg/errors.hpp"
#include "qdg/oracle.hpp"

namespace qdg::oracle {

namespace {

// Von Neumann entropy in bits from an eigenvalue vector; 0*log(0) = 0 and
// tiny negative eigenvalues from the solver are treated as 0.
double entropy_bits(const Eigen::VectorXd& eigenvalues) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
        const double lambda = eigenvalues(k);
        if (lambda > 1e-15) s -= lambda * std::log2(lambda);
    }
    return s;
}

double entropy_of(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    return entropy_bits(solver.eigenvalues());
}

} // namespace

EntropyReport fixed_basis_discord(const DensityMatrix& rho, int m, int n) {
    if (m < 1 || n < 1 || rho.order != m * n)
        throw DimensionError("fixed_basis_discord: order " + std::to_string(rho.order) +
                             " != m*n = " + std::to_string(m) + "*" + std::to_string(n));
    const DensityCheck check = validate_density(rho, 1e-9);
    if (!check.ok)
        throw std::invalid_argument("fixed_basis_discord: invalid density matrix (" + check.reason + ")");

    const int N = rho.order;
    const double denom = static_cast<double>(rho.denominator);

    Eigen::MatrixXd full(N, N);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) full(r, c) = static_cast<double>(rho.num(r, c)) / denom;

    // Reduced state on the n-dimensional subsystem: (rho_B)_{ij} = sum_mu (rho_{mu,mu})_{ij}.
    Eigen::MatrixXd rho_b = Eigen::MatrixXd::Zero(n, n);
    for (int mu = 0; mu < m; ++mu) rho_b += full.block(mu * n, mu * n, n, n);

    EntropyReport report;
    report.s_rho = entropy_of(full);
    report.s_rho_b = entropy_of(rho_b);

    // Projective measurement of slot k: outcome weight p_k and post-measurement
    // state [(rho_{mu,nu})_{kk}]/p_k on the m-dimensional subsystem. p_k = 0 is
    // decided exactly on the integer numerators.
    double conditional = 0.0;
    for (int k = 0; k < n; ++k) {
        std::int64_t p_num = 0;
        for (int mu = 0; mu < m; ++mu) p_num += rho.num(mu * n + k, mu * n + k);
        if (p_num == 0) continue;
        Eigen::MatrixXd rho_k(m, m);
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu)
                rho_k(mu, nu) = static_cast<double>(rho.num(mu * n + k, nu * n + k)) /
                                static_cast<double>(p_num);
        conditional += (static_cast<double>(p_num) / denom) * entropy_of(rho_k);
    }
    report.conditional = conditional;
    report.discord_fixed_basis = conditional - (report.s_rho - report.s_rho_b);
    return report;
}

} // namespace qdg::oracle
