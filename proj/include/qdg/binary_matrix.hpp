#ifndef QDG_BINARY_MATRIX_HPP
#define QDG_BINARY_MATRIX_HPP

#include <cstdint>
#include <vector>

namespace qdg {

/// Dense square matrix over {0,1}. Storage is row-major; entry indices are
/// 0-based. The 1-based index convention of the neighborhood/measure
/// formulas lives in the free functions that take (i, j) arguments.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    explicit BinaryMatrix(int order) : order_(order), a_(static_cast<std::size_t>(order) * order, 0) {}

    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);
    static BinaryMatrix identity(int order);
    static BinaryMatrix ones(int order);
    /// Bit k of `mask` (row-major, LSB first) fills the matrix. Only used for
    /// exhaustive enumeration of small orders (order*order <= 64).
    static BinaryMatrix from_mask(int order, std::uint64_t mask);

    int order() const { return order_; }
    int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * order_ + c]; }
    void set(int r, int c, int value);

    bool is_symmetric() const;
    bool is_zero() const;
    BinaryMatrix transposed() const;

    /// 0-based column indices of the 1-entries in row r.
    std::vector<int> row_support(int r) const;
    /// 0-based row indices of the 1-entries in column c.
    std::vector<int> col_support(int c) const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    int order_ = 0;
    std::vector<std::uint8_t> a_;
};

enum class Side { row, column };

/// Support of row/column `i` (1-based) as a 1-based index set: for a block
/// A_{mu,nu} the row side is nbd(v_{mu,i}) and the column side nbd(v_{nu,i}).
std::vector<int> neighborhood(const BinaryMatrix& block, Side side, int i);

} // namespace qdg

#endif // QDG_BINARY_MATRIX_HPP
