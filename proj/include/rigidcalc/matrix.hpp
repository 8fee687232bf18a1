#pragma once

#include "rigidcalc/cyclotomic.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rigidcalc {

using CycVector = std::vector<CycNumber>;

/// Dense row-major matrix over Q(zeta_N). All entries are kept at the same
/// order N; combining matrices of different orders lifts to the lcm.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, long order = 1);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<CycNumber> entries);

    static ExactMatrix identity(std::size_t n, long order = 1);
    static ExactMatrix scalar(std::size_t n, const CycNumber& value);
    static ExactMatrix diagonal(const std::vector<CycNumber>& values);
    /// Convenience for tests and fixtures: integer entries over Q.
    static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows)
    {
        return from_rows(std::vector<std::vector<long>>(rows.begin(), rows.end()));
    }
    static ExactMatrix from_rows(const std::vector<std::vector<CycNumber>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long order() const { return order_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<CycNumber>& entries() const { return entries_; }

    const CycNumber& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const CycNumber& value);

    ExactMatrix lift(long target) const;
    ExactMatrix transpose() const;
    ExactMatrix pow(long exponent) const;
    /// Top-left corner at (row, col) with the given shape.
    ExactMatrix block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const;

    bool is_zero() const;
    bool is_identity() const;

    CycVector apply(const CycVector& v) const;

    ExactMatrix& operator+=(const ExactMatrix& rhs);
    ExactMatrix& operator-=(const ExactMatrix& rhs);
    ExactMatrix& operator*=(const CycNumber& s);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const CycNumber& s) { return a *= s; }
    friend ExactMatrix operator*(const CycNumber& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    long order_ = 1;
    std::vector<CycNumber> entries_;
};

struct RankKernel {
    std::size_t rank = 0;
    /// Null space basis read off the reduced row echelon form: one vector per
    /// free column, with a 1 in that column and zeros in the other free columns.
    std::vector<CycVector> kernel;
};

/// Reduced row echelon form computed by fraction-free elimination followed
/// by one normalization pass. Pivots are the first nonzero entry found
/// scanning rows top to bottom in each column.
struct RowEchelon {
    ExactMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};

RowEchelon row_echelon(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
RankKernel rank_kernel(const ExactMatrix& m);
ExactMatrix inverse(const ExactMatrix& m);
CycNumber determinant(const ExactMatrix& m);

/// Matrix whose columns are the given vectors.
ExactMatrix from_columns(const std::vector<CycVector>& columns, std::size_t length);

} // namespace rigidcalc
