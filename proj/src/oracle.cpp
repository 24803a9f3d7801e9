#include "qdg/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "qdg/generators.hpp"

namespace qdg::oracle {

namespace {

long long l1(const IntMatrix& m) {
    long long total = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) total += std::llabs(m(r, c));
    return total;
}

BinaryMatrix symmetrized(const BinaryMatrix& m) {
    BinaryMatrix s = m;
    for (int r = 0; r < m.order(); ++r)
        for (int c = r + 1; c < m.order(); ++c) s.set(c, r, m.at(r, c));
    return s;
}

BinaryMatrix random_binary(int order, std::mt19937_64& rng) {
    BinaryMatrix m(order);
    for (int r = 0; r < order; ++r)
        for (int c = 0; c < order; ++c) m.set(r, c, static_cast<int>(rng() & 1u));
    return m;
}

} // namespace

IntMatrix to_int_matrix(const BinaryMatrix& m) {
    IntMatrix out(m.order(), m.order());
    for (int r = 0; r < m.order(); ++r)
        for (int c = 0; c < m.order(); ++c) out(r, c) = m.at(r, c);
    return out;
}

IntMatrix diagonal_block(const BlockDecomposition& d, int mu, Sign s) {
    IntMatrix out = sign_value(s) * to_int_matrix(d.block(mu, mu));
    for (int i = 1; i <= d.n; ++i) out(i - 1, i - 1) += d.degree(mu, i);
    return out;
}

long long commutator_l1(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("commutator_l1: order mismatch");
    return l1(a * b - b * a);
}

long long normality_defect_l1(const IntMatrix& m) {
    const IntMatrix t = m.transpose();
    return l1(m * t - t * m);
}

BlockConditions check_block_conditions(const BlockDecomposition& d, Sign s) {
    BlockConditions out;
    std::vector<IntMatrix> diag, off;
    for (int mu = 1; mu <= d.m; ++mu) diag.push_back(diagonal_block(d, mu, s));
    for (int mu = 1; mu <= d.m; ++mu)
        for (int nu = 1; nu <= d.m; ++nu)
            if (mu != nu) off.push_back(to_int_matrix(d.block(mu, nu)));

    out.prop1 = true;
    for (const auto& b : diag)
        if (normality_defect_l1(b) != 0) out.prop1 = false;

    out.prop2 = true;
    for (const auto& b : off)
        if (normality_defect_l1(b) != 0) out.prop2 = false;

    out.prop3 = true;
    for (std::size_t x = 0; x < off.size(); ++x)
        for (std::size_t y = 0; y < off.size(); ++y)
            if (x != y && commutator_l1(off[x], off[y]) != 0) out.prop3 = false;

    out.prop4 = true;
    for (const auto& b : diag)
        for (const auto& a : off)
            if (commutator_l1(b, a) != 0) out.prop4 = false;

    out.prop5 = true;
    for (std::size_t x = 0; x < diag.size(); ++x)
        for (std::size_t y = 0; y < diag.size(); ++y)
            if (x != y && commutator_l1(diag[x], diag[y]) != 0) out.prop5 = false;

    return out;
}

long long qd_by_matrix_algebra(const BlockDecomposition& d, Sign s) {
    std::vector<IntMatrix> diag;
    std::vector<IntMatrix> off;
    for (int mu = 1; mu <= d.m; ++mu) diag.push_back(diagonal_block(d, mu, s));
    for (int mu = 1; mu <= d.m; ++mu)
        for (int nu = 1; nu <= d.m; ++nu)
            if (mu != nu) off.push_back(to_int_matrix(d.block(mu, nu)));

    long long total = 0;
    for (const auto& b : off) total += normality_defect_l1(b);
    for (std::size_t x = 0; x < off.size(); ++x)
        for (std::size_t y = 0; y < off.size(); ++y)
            if (x != y) total += commutator_l1(off[x], off[y]);
    for (const auto& b : diag)
        for (const auto& a : off) total += commutator_l1(b, a);
    for (std::size_t x = 0; x < diag.size(); ++x)
        for (std::size_t y = 0; y < diag.size(); ++y)
            if (x != y) total += commutator_l1(diag[x], diag[y]);
    return total;
}

DensityCheck validate_density(const DensityMatrix& rho, double tolerance) {
    DensityCheck out;
    const int N = rho.order;
    for (int r = 0; r < N; ++r)
        for (int c = r + 1; c < N; ++c)
            if (rho.num(r, c) != rho.num(c, r)) {
                out.reason = "not_symmetric";
                return out;
            }
    std::int64_t trace = 0;
    for (int r = 0; r < N; ++r) trace += rho.num(r, r);
    if (trace != rho.denominator) {
        out.reason = "trace_not_one";
        return out;
    }
    Eigen::MatrixXd m(N, N);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) m(r, c) = rho.value(r, c);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = solver.eigenvalues().minCoeff();
    if (out.min_eigenvalue < -tolerance) {
        out.reason = "not_psd";
        return out;
    }
    out.ok = true;
    out.reason = "ok";
    return out;
}

EquivalenceSummary exhaustive_equivalence(int order_bound, long long pairs_per_sampled_order,
                                          std::uint64_t seed) {
    if (order_bound < 1)
        throw std::invalid_argument("exhaustive_equivalence: order bound must be positive");
    if (order_bound > 10)
        throw std::invalid_argument("exhaustive_equivalence: order bound above 10 not supported");

    EquivalenceSummary summary;
    summary.seed = seed;
    summary.mode = order_bound <= 3 ? "exhaustive" : "sampled";
    std::mt19937_64 rng(seed);

    auto check_pair = [](const BinaryMatrix& A, const BinaryMatrix& B, OrderStats& st) {
        const IntMatrix ia = to_int_matrix(A), ib = to_int_matrix(B);
        ++st.nc1_checked;
        if (nc1(A, B) != commutator_l1(ia, ib)) ++st.mismatches;
        if (A.is_symmetric()) {
            ++st.nc2_checked;
            if (nc2(A, B) != commutator_l1(ia, ib)) ++st.mismatches;
            if (B.is_symmetric()) {
                ++st.nc3_checked;
                if (nc3(A, B) != commutator_l1(ia, ib)) ++st.mismatches;
            }
        }
    };

    for (int order = 1; order <= std::min(order_bound, 3); ++order) {
        OrderStats st;
        st.order = order;
        st.exhaustive = true;
        const std::uint64_t count = 1ULL << (order * order);
        st.matrices = static_cast<long long>(count);
        std::vector<BinaryMatrix> all;
        all.reserve(count);
        for (std::uint64_t mask = 0; mask < count; ++mask)
            all.push_back(BinaryMatrix::from_mask(order, mask));
        for (const auto& m : all) {
            ++st.nn_checked;
            if (nn(m) != normality_defect_l1(to_int_matrix(m))) ++st.mismatches;
        }
        for (const auto& a : all)
            for (const auto& b : all) check_pair(a, b, st);
        summary.per_order.push_back(st);
    }

    for (int order = 4; order <= order_bound; ++order) {
        OrderStats st;
        st.order = order;
        st.exhaustive = false;
        for (long long t = 0; t < pairs_per_sampled_order; ++t) {
            BinaryMatrix a = random_binary(order, rng);
            BinaryMatrix b = random_binary(order, rng);
            ++st.nn_checked;
            if (nn(a) != normality_defect_l1(to_int_matrix(a))) ++st.mismatches;
            check_pair(a, b, st);
            // Force the symmetric domains to be exercised too.
            BinaryMatrix sa = symmetrized(a);
            ++st.nc2_checked;
            if (nc2(sa, b) != commutator_l1(to_int_matrix(sa), to_int_matrix(b))) ++st.mismatches;
            BinaryMatrix sb = symmetrized(b);
            ++st.nc3_checked;
            if (nc3(sa, sb) != commutator_l1(to_int_matrix(sa), to_int_matrix(sb))) ++st.mismatches;
            st.matrices += 2;
        }
        summary.per_order.push_back(st);
    }

    for (const auto& st : summary.per_order) {
        summary.checked += st.nn_checked + st.nc1_checked + st.nc2_checked + st.nc3_checked;
        summary.mismatches += st.mismatches;
    }
    return summary;
}

AgreementSummary random_graph_agreement(int graphs, int m, int n, std::uint64_t seed) {
    AgreementSummary out;
    out.seed = seed;
    for (int t = 0; t < graphs; ++t) {
        // Vary density across instances so sparse and dense regimes both show up.
        const double p = 0.15 + 0.7 * (static_cast<double>(t % 10) / 9.0);
        LabeledGraph lg = gen::random_graph(m, n, p, seed + static_cast<std::uint64_t>(t));
        if (lg.graph.total_degree() == 0) continue;
        BlockDecomposition d = block_decompose(lg.graph, lg.labeling);
        for (Sign s : {Sign::laplacian, Sign::signless}) {
            ++out.checked;
            if (qd(lg.graph, lg.labeling, s).qd_total != qd_by_matrix_algebra(d, s)) ++out.mismatches;
        }
    }
    return out;
}

} // namespace qdg::oracle
