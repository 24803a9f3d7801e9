#include "qdg/discord.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qdg {

namespace {

using Supports = std::vector<std::vector<int>>;

Supports row_supports(const BinaryMatrix& m) {
    Supports s(static_cast<std::size_t>(m.order()));
    for (int i = 0; i < m.order(); ++i) s[static_cast<std::size_t>(i)] = m.row_support(i);
    return s;
}

Supports col_supports(const BinaryMatrix& m) {
    Supports s(static_cast<std::size_t>(m.order()));
    for (int i = 0; i < m.order(); ++i) s[static_cast<std::size_t>(i)] = m.col_support(i);
    return s;
}

// #(a cap b) for sorted index sets.
long long isect(const std::vector<int>& a, const std::vector<int>& b) {
    long long count = 0;
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x] < b[y])
            ++x;
        else if (a[x] > b[y])
            ++y;
        else {
            ++count;
            ++x;
            ++y;
        }
    }
    return count;
}

void require_same_order(const BinaryMatrix& a, const BinaryMatrix& b, const char* who) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(who) + ": matrices must have equal order");
}

void require_symmetric(const BinaryMatrix& a, const char* who) {
    if (!a.is_symmetric())
        throw std::invalid_argument(std::string(who) + ": matrix must be symmetric");
}

// Per-decomposition neighborhood cache: row and column supports of every
// block, 0-based.
struct SupportCache {
    int m = 0;
    std::vector<Supports> rows, cols; // index (mu-1)*m + (nu-1)

    explicit SupportCache(const BlockDecomposition& d) : m(d.m) {
        rows.reserve(d.blocks.size());
        cols.reserve(d.blocks.size());
        for (const auto& b : d.blocks) {
            rows.push_back(row_supports(b));
            cols.push_back(col_supports(b));
        }
    }
    const Supports& row(int mu, int nu) const {
        return rows[static_cast<std::size_t>((mu - 1) * m + (nu - 1))];
    }
    const Supports& col(int mu, int nu) const {
        return cols[static_cast<std::size_t>((mu - 1) * m + (nu - 1))];
    }
};

// Signed summands of the four violation sums; i, j are 0-based here.

long long prop2_value(const SupportCache& c, int mu, int nu, int i, int j) {
    const auto& rows = c.row(mu, nu);
    const auto& cols = c.col(mu, nu);
    return isect(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]) -
           isect(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
}

long long prop3_value(const SupportCache& c, int mu, int nu, int al, int be, int i, int j) {
    // (A_{mu,nu} A_{al,be} - A_{al,be} A_{mu,nu})_{ij} via Theorem-style
    // neighborhood counts: rows of the first factor against columns of the
    // second.
    return isect(c.row(mu, nu)[static_cast<std::size_t>(i)], c.col(al, be)[static_cast<std::size_t>(j)]) -
           isect(c.row(al, be)[static_cast<std::size_t>(i)], c.col(mu, nu)[static_cast<std::size_t>(j)]);
}

long long nc2_value(const SupportCache& c, const BlockDecomposition&, int mu, int al, int be, int i,
                    int j) {
    // A_{mu,mu} is symmetric, so nbd(v_{mu,i}) is its row i either way.
    return isect(c.row(mu, mu)[static_cast<std::size_t>(i)], c.col(al, be)[static_cast<std::size_t>(j)]) -
           isect(c.row(mu, mu)[static_cast<std::size_t>(j)], c.row(al, be)[static_cast<std::size_t>(i)]);
}

long long prop4_value(const SupportCache& c, const BlockDecomposition& d, Sign s, int mu, int al,
                      int be, int i, int j) {
    const long long x = d.block(al, be).at(i, j);
    const long long ddiff = d.degree(mu, i + 1) - d.degree(mu, j + 1);
    return x * ddiff + sign_value(s) * nc2_value(c, d, mu, al, be, i, j);
}

long long prop5_value(const SupportCache& c, const BlockDecomposition& d, Sign s, int mu, int nu,
                      int i, int j) {
    const long long nc3e =
        isect(c.row(mu, mu)[static_cast<std::size_t>(i)], c.row(nu, nu)[static_cast<std::size_t>(j)]) -
        isect(c.row(mu, mu)[static_cast<std::size_t>(j)], c.row(nu, nu)[static_cast<std::size_t>(i)]);
    const long long xnn = d.block(nu, nu).at(i, j);
    const long long xmm = d.block(mu, mu).at(i, j);
    const long long dmu = d.degree(mu, i + 1) - d.degree(mu, j + 1);
    const long long dnu = d.degree(nu, j + 1) - d.degree(nu, i + 1);
    return nc3e + sign_value(s) * (xnn * dmu + xmm * dnu);
}

template <typename Visit>
void for_each_prop2(const BlockDecomposition& d, const SupportCache& c, Visit visit) {
    for (int mu = 1; mu <= d.m; ++mu)
        for (int nu = 1; nu <= d.m; ++nu) {
            if (mu == nu) continue;
            for (int i = 0; i < d.n; ++i)
                for (int j = 0; j < d.n; ++j) visit(mu, nu, i, j, prop2_value(c, mu, nu, i, j));
        }
}

template <typename Visit>
void for_each_prop3(const BlockDecomposition& d, const SupportCache& c, Visit visit) {
    for (int mu = 1; mu <= d.m; ++mu)
        for (int nu = 1; nu <= d.m; ++nu) {
            if (mu == nu) continue;
            for (int al = 1; al <= d.m; ++al)
                for (int be = 1; be <= d.m; ++be) {
                    if (al == be || (mu == al && nu == be)) continue;
                    for (int i = 0; i < d.n; ++i)
                        for (int j = 0; j < d.n; ++j)
                            visit(mu, nu, al, be, i, j, prop3_value(c, mu, nu, al, be, i, j));
                }
        }
}

template <typename Visit>
void for_each_prop4(const BlockDecomposition& d, const SupportCache& c, Sign s, Visit visit) {
    for (int mu = 1; mu <= d.m; ++mu)
        for (int al = 1; al <= d.m; ++al)
            for (int be = 1; be <= d.m; ++be) {
                if (al == be) continue;
                for (int i = 0; i < d.n; ++i)
                    for (int j = 0; j < d.n; ++j)
                        visit(mu, al, be, i, j, prop4_value(c, d, s, mu, al, be, i, j));
            }
}

template <typename Visit>
void for_each_prop5(const BlockDecomposition& d, const SupportCache& c, Sign s, Visit visit) {
    for (int mu = 1; mu <= d.m; ++mu)
        for (int nu = 1; nu <= d.m; ++nu) {
            if (mu == nu) continue;
            for (int i = 0; i < d.n; ++i)
                for (int j = 0; j < d.n; ++j) visit(mu, nu, i, j, prop5_value(c, d, s, mu, nu, i, j));
        }
}

} // namespace

long long nn(const BinaryMatrix& M) {
    const auto rows = row_supports(M);
    const auto cols = col_supports(M);
    long long total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            total += std::llabs(isect(rows[i], rows[j]) - isect(cols[i], cols[j]));
    return total;
}

long long nc1(const BinaryMatrix& A, const BinaryMatrix& B) {
    require_same_order(A, B, "nc1");
    const auto rowsA = row_supports(A), colsA = col_supports(A);
    const auto rowsB = row_supports(B), colsB = col_supports(B);
    long long total = 0;
    for (std::size_t i = 0; i < rowsA.size(); ++i)
        for (std::size_t j = 0; j < rowsA.size(); ++j)
            total += std::llabs(isect(rowsA[i], colsB[j]) - isect(rowsB[i], colsA[j]));
    return total;
}

long long nc2_entry(const BinaryMatrix& A, const BinaryMatrix& B, int i, int j) {
    require_same_order(A, B, "nc2");
    require_symmetric(A, "nc2");
    if (i < 1 || i > A.order() || j < 1 || j > A.order())
        throw std::out_of_range("nc2_entry: index out of range");
    return isect(A.row_support(i - 1), B.col_support(j - 1)) -
           isect(A.row_support(j - 1), B.row_support(i - 1));
}

long long nc2(const BinaryMatrix& A, const BinaryMatrix& B) {
    require_same_order(A, B, "nc2");
    require_symmetric(A, "nc2");
    const auto nbdA = row_supports(A);
    const auto rowsB = row_supports(B), colsB = col_supports(B);
    long long total = 0;
    for (std::size_t i = 0; i < nbdA.size(); ++i)
        for (std::size_t j = 0; j < nbdA.size(); ++j)
            total += std::llabs(isect(nbdA[i], colsB[j]) - isect(nbdA[j], rowsB[i]));
    return total;
}

long long nc3_entry(const BinaryMatrix& A, const BinaryMatrix& B, int i, int j) {
    require_same_order(A, B, "nc3");
    require_symmetric(A, "nc3");
    require_symmetric(B, "nc3");
    if (i < 1 || i > A.order() || j < 1 || j > A.order())
        throw std::out_of_range("nc3_entry: index out of range");
    return isect(A.row_support(i - 1), B.row_support(j - 1)) -
           isect(A.row_support(j - 1), B.row_support(i - 1));
}

long long nc3(const BinaryMatrix& A, const BinaryMatrix& B) {
    require_same_order(A, B, "nc3");
    require_symmetric(A, "nc3");
    require_symmetric(B, "nc3");
    const auto nbdA = row_supports(A);
    const auto nbdB = row_supports(B);
    long long total = 0;
    for (std::size_t i = 0; i < nbdA.size(); ++i)
        for (std::size_t j = 0; j < nbdA.size(); ++j)
            total += std::llabs(isect(nbdA[i], nbdB[j]) - isect(nbdA[j], nbdB[i]));
    return total;
}

long long violation_prop2(const BlockDecomposition& d) {
    SupportCache c(d);
    long long total = 0;
    for_each_prop2(d, c, [&](int, int, int, int, long long v) { total += std::llabs(v); });
    return total;
}

long long violation_prop3(const BlockDecomposition& d) {
    SupportCache c(d);
    long long total = 0;
    for_each_prop3(d, c, [&](int, int, int, int, int, int, long long v) { total += std::llabs(v); });
    return total;
}

long long violation_prop4(const BlockDecomposition& d, Sign s) {
    SupportCache c(d);
    long long total = 0;
    for_each_prop4(d, c, s, [&](int, int, int, int, int, long long v) { total += std::llabs(v); });
    return total;
}

long long violation_prop5(const BlockDecomposition& d, Sign s) {
    SupportCache c(d);
    long long total = 0;
    for_each_prop5(d, c, s, [&](int, int, int, int, long long v) { total += std::llabs(v); });
    return total;
}

ViolationBreakdown collect_violations(const BlockDecomposition& d, Sign s) {
    SupportCache c(d);
    ViolationBreakdown out;
    for_each_prop2(d, c, [&](int mu, int nu, int i, int j, long long v) {
        out.prop2_total += std::llabs(v);
        if (v != 0)
            out.per_pair.push_back({Condition::prop2, mu, nu, 0, 0, i + 1, j + 1, v});
    });
    for_each_prop3(d, c, [&](int mu, int nu, int al, int be, int i, int j, long long v) {
        out.prop3_total += std::llabs(v);
        if (v != 0)
            out.per_pair.push_back({Condition::prop3, mu, nu, al, be, i + 1, j + 1, v});
    });
    for_each_prop4(d, c, s, [&](int mu, int al, int be, int i, int j, long long v) {
        out.prop4_total += std::llabs(v);
        if (v != 0)
            out.per_pair.push_back({Condition::prop4, mu, 0, al, be, i + 1, j + 1, v});
    });
    for_each_prop5(d, c, s, [&](int mu, int nu, int i, int j, long long v) {
        out.prop5_total += std::llabs(v);
        if (v != 0)
            out.per_pair.push_back({Condition::prop5, mu, nu, 0, 0, i + 1, j + 1, v});
    });
    return out;
}

DiscordReport qd(const Graph& g, const ClusterLabeling& lab, Sign s) {
    if (g.total_degree() == 0)
        throw std::domain_error("qd: empty graph has no quantum state");
    BlockDecomposition d = block_decompose(g, lab);
    DiscordReport report;
    report.m = d.m;
    report.n = d.n;
    report.sign = s;
    report.breakdown = collect_violations(d, s);
    report.qd_total = report.breakdown.total();
    return report;
}

bool is_zero_discord(const Graph& g, const ClusterLabeling& lab, Sign s) {
    return qd(g, lab, s).qd_total == 0;
}

} // namespace qdg
