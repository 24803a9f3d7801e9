#include "qdg/binary_matrix.hpp"

#include <stdexcept>

namespace qdg {

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    BinaryMatrix m(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n)
            throw std::invalid_argument("BinaryMatrix::from_rows: ragged rows");
        for (int c = 0; c < n; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

BinaryMatrix BinaryMatrix::identity(int order) {
    BinaryMatrix m(order);
    for (int i = 0; i < order; ++i) m.set(i, i, 1);
    return m;
}

BinaryMatrix BinaryMatrix::ones(int order) {
    BinaryMatrix m(order);
    for (int r = 0; r < order; ++r)
        for (int c = 0; c < order; ++c) m.set(r, c, 1);
    return m;
}

BinaryMatrix BinaryMatrix::from_mask(int order, std::uint64_t mask) {
    if (order * order > 64)
        throw std::invalid_argument("BinaryMatrix::from_mask: order too large for a 64-bit mask");
    BinaryMatrix m(order);
    for (int r = 0; r < order; ++r)
        for (int c = 0; c < order; ++c)
            m.set(r, c, static_cast<int>((mask >> (r * order + c)) & 1u));
    return m;
}

void BinaryMatrix::set(int r, int c, int value) {
    if (value != 0 && value != 1)
        throw std::invalid_argument("BinaryMatrix entries must be 0 or 1");
    a_[static_cast<std::size_t>(r) * order_ + c] = static_cast<std::uint8_t>(value);
}

bool BinaryMatrix::is_symmetric() const {
    for (int r = 0; r < order_; ++r)
        for (int c = r + 1; c < order_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

bool BinaryMatrix::is_zero() const {
    for (auto v : a_)
        if (v) return false;
    return true;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(order_);
    for (int r = 0; r < order_; ++r)
        for (int c = 0; c < order_; ++c) t.set(c, r, at(r, c));
    return t;
}

std::vector<int> BinaryMatrix::row_support(int r) const {
    std::vector<int> s;
    for (int c = 0; c < order_; ++c)
        if (at(r, c)) s.push_back(c);
    return s;
}

std::vector<int> BinaryMatrix::col_support(int c) const {
    std::vector<int> s;
    for (int r = 0; r < order_; ++r)
        if (at(r, c)) s.push_back(r);
    return s;
}

std::vector<int> neighborhood(const BinaryMatrix& block, Side side, int i) {
    if (i < 1 || i > block.order())
        throw std::out_of_range("neighborhood: index out of range");
    std::vector<int> s = side == Side::row ? block.row_support(i - 1) : block.col_support(i - 1);
    for (auto& v : s) ++v;
    return s;
}

} // namespace qdg
