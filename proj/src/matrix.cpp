#include "rigidcalc/matrix.hpp"

#include "rigidcalc/errors.hpp"

#include <string>
#include <utility>

namespace rigidcalc {

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

long common_order(const std::vector<CycNumber>& entries)
{
    long order = 1;
    for (const auto& e : entries)
        order = lcm_long(order, e.order());
    return order;
}

using Rows = std::vector<CycVector>;

Rows to_rows(const ExactMatrix& m)
{
    Rows rows(m.rows(), CycVector(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = m(r, c);
    return rows;
}

struct Forward {
    Rows rows;
    std::vector<std::size_t> pivots;
    bool odd_swaps = false;
};

// Fraction-free (Bareiss) forward elimination. Rows are first scaled to clear
// denominators, which changes neither rank nor row space. Each update
//   a_ij <- (a_rc a_ij - a_ic a_rj) / previous_pivot
// divides exactly, so entries stay in Z[zeta] and grow like minors.
Forward bareiss_forward(const ExactMatrix& m, std::size_t column_limit)
{
    Forward f;
    f.rows = to_rows(m);
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    for (auto& row : f.rows) {
        mpz_class den = 1;
        for (const auto& e : row)
            den = lcm(den, e.denominator());
        if (den != 1) {
            const CycNumber scale(Rational(den), m.order());
            for (auto& e : row)
                e *= scale;
        }
    }
    CycNumber previous_inverse(Rational(1), m.order());
    std::size_t r = 0;
    for (std::size_t c = 0; c < column_limit && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && f.rows[p][c].is_zero())
            ++p;
        if (p == nrows)
            continue;
        if (p != r) {
            std::swap(f.rows[p], f.rows[r]);
            f.odd_swaps = !f.odd_swaps;
        }
        const CycNumber pivot = f.rows[r][c];
        const bool unit_step = previous_inverse.is_one() && pivot.is_one();
        for (std::size_t i = r + 1; i < nrows; ++i) {
            auto& row = f.rows[i];
            const CycNumber lead = row[c];
            for (std::size_t j = c + 1; j < ncols; ++j) {
                if (unit_step) {
                    if (!lead.is_zero() && !f.rows[r][j].is_zero())
                        row[j] -= lead * f.rows[r][j];
                    continue;
                }
                CycNumber value = pivot * row[j];
                if (!lead.is_zero() && !f.rows[r][j].is_zero())
                    value -= lead * f.rows[r][j];
                if (!previous_inverse.is_one())
                    value *= previous_inverse;
                row[j] = std::move(value);
            }
            row[c] = CycNumber(Rational(0), m.order());
        }
        previous_inverse = pivot.inverse();
        f.pivots.push_back(c);
        ++r;
    }
    return f;
}

} // namespace

// -- ExactMatrix --------------------------------------------------------------

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, long order)
    : rows_(rows), cols_(cols), order_(order), entries_(rows * cols, CycNumber(Rational(0), order))
{
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<CycNumber> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows * cols)
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(entries_.size()) + " entries for a " + shape(rows, cols) + " matrix");
    order_ = common_order(entries_);
    for (auto& e : entries_)
        if (e.order() != order_)
            e = e.lift(order_);
}

ExactMatrix ExactMatrix::identity(std::size_t n, long order)
{
    ExactMatrix out(n, n, order);
    for (std::size_t i = 0; i < n; ++i)
        out.entries_[i * n + i] = CycNumber(Rational(1), order);
    return out;
}

ExactMatrix ExactMatrix::scalar(std::size_t n, const CycNumber& value)
{
    ExactMatrix out(n, n, value.order());
    for (std::size_t i = 0; i < n; ++i)
        out.entries_[i * n + i] = value;
    return out;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<CycNumber>& values)
{
    const std::size_t n = values.size();
    std::vector<CycNumber> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        entries[i * n + i] = values[i];
    return {n, n, std::move(entries)};
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    std::vector<std::vector<CycNumber>> converted;
    for (const auto& row : rows)
        converted.emplace_back(row.begin(), row.end());
    return from_rows(converted);
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<CycNumber>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<CycNumber> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return {r, c, std::move(entries)};
}

void ExactMatrix::set(std::size_t r, std::size_t c, const CycNumber& value)
{
    if (value.order() == order_) {
        entries_[r * cols_ + c] = value;
        return;
    }
    const long target = lcm_long(order_, value.order());
    if (target != order_)
        *this = lift(target);
    entries_[r * cols_ + c] = value.lift(target);
}

ExactMatrix ExactMatrix::lift(long target) const
{
    if (target == order_)
        return *this;
    ExactMatrix out = *this;
    for (auto& e : out.entries_)
        e = e.lift(target);
    out.order_ = target;
    return out;
}

ExactMatrix ExactMatrix::transpose() const
{
    ExactMatrix out(cols_, rows_, order_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out.entries_[c * rows_ + r] = (*this)(r, c);
    return out;
}

ExactMatrix ExactMatrix::pow(long exponent) const
{
    if (!is_square())
        throw Error(ErrorCode::DimensionMismatch, "power of non-square " + shape(rows_, cols_) + " matrix");
    ExactMatrix base = exponent < 0 ? inverse(*this) : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    ExactMatrix result = identity(rows_, order_);
    while (e != 0) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e != 0)
            base = base * base;
    }
    return result;
}

ExactMatrix ExactMatrix::block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const
{
    if (row + rows > rows_ || col + cols > cols_)
        throw Error(ErrorCode::DimensionMismatch, "block out of range");
    ExactMatrix out(rows, cols, order_);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            out.entries_[r * cols + c] = (*this)(row + r, col + c);
    return out;
}

bool ExactMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

bool ExactMatrix::is_identity() const
{
    if (!is_square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& e = (*this)(r, c);
            if (r == c ? !e.is_one() : !e.is_zero())
                return false;
        }
    return true;
}

CycVector ExactMatrix::apply(const CycVector& v) const
{
    if (v.size() != cols_)
        throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(v.size()) + " for " + shape(rows_, cols_));
    CycVector out(rows_, CycNumber(Rational(0), order_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& e = (*this)(r, c);
            if (!e.is_zero() && !v[c].is_zero())
                out[r] += e * v[c];
        }
    return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorCode::DimensionMismatch, shape(rows_, cols_) + " + " + shape(rhs.rows_, rhs.cols_));
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += rhs.entries_[i];
    order_ = common_order(entries_);
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorCode::DimensionMismatch, shape(rows_, cols_) + " - " + shape(rhs.rows_, rhs.cols_));
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= rhs.entries_[i];
    order_ = common_order(entries_);
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const CycNumber& s)
{
    for (auto& e : entries_)
        e *= s;
    order_ = common_order(entries_);
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(ErrorCode::DimensionMismatch, shape(a.rows_, a.cols_) + " * " + shape(b.rows_, b.cols_));
    const long order = lcm_long(a.order_, b.order_);
    const ExactMatrix& lhs = a.order_ == order ? a : a.lift(order);
    const ExactMatrix& rhs = b.order_ == order ? b : b.lift(order);
    ExactMatrix out(a.rows_, b.cols_, order);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycNumber& x = lhs(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const CycNumber& y = rhs(k, j);
                if (!y.is_zero())
                    out.entries_[i * b.cols_ + j] += x * y;
            }
        }
    return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

// -- elimination ----------------------------------------------------------------

RowEchelon row_echelon(const ExactMatrix& m)
{
    Forward f = bareiss_forward(m, m.cols());
    auto& rows = f.rows;
    // Normalization pass: scale pivots to 1 and clear above them.
    for (std::size_t k = f.pivots.size(); k-- > 0;) {
        const std::size_t pc = f.pivots[k];
        const CycNumber inv = rows[k][pc].inverse();
        for (std::size_t j = pc; j < m.cols(); ++j)
            if (!rows[k][j].is_zero())
                rows[k][j] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            const CycNumber factor = rows[i][pc];
            if (factor.is_zero())
                continue;
            for (std::size_t j = pc; j < m.cols(); ++j)
                if (!rows[k][j].is_zero())
                    rows[i][j] -= factor * rows[k][j];
        }
    }
    std::vector<CycNumber> entries;
    entries.reserve(m.rows() * m.cols());
    for (auto& row : rows)
        for (auto& e : row)
            entries.push_back(std::move(e));
    return {ExactMatrix(m.rows(), m.cols(), std::move(entries)).lift(m.order()), std::move(f.pivots)};
}

std::size_t rank(const ExactMatrix& m) { return bareiss_forward(m, m.cols()).pivots.size(); }

RankKernel rank_kernel(const ExactMatrix& m)
{
    RowEchelon e = row_echelon(m);
    RankKernel out;
    out.rank = e.pivot_columns.size();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_columns)
        is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        CycVector v(m.cols(), CycNumber(Rational(0), m.order()));
        v[free] = CycNumber(Rational(1), m.order());
        for (std::size_t k = 0; k < e.pivot_columns.size(); ++k)
            v[e.pivot_columns[k]] = -e.reduced(k, free);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

ExactMatrix inverse(const ExactMatrix& m)
{
    if (!m.is_square())
        throw Error(ErrorCode::DimensionMismatch, "inverse of non-square " + shape(m.rows(), m.cols()) + " matrix");
    const std::size_t n = m.rows();
    ExactMatrix augmented(n, 2 * n, m.order());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            augmented.set(r, c, m(r, c));
        augmented.set(r, n + r, CycNumber(Rational(1), m.order()));
    }
    RowEchelon e = row_echelon(augmented);
    if (e.pivot_columns.size() < n || (n > 0 && e.pivot_columns[n - 1] != n - 1))
        throw Error(ErrorCode::SingularMatrix, "matrix of size " + std::to_string(n) + " is singular");
    return e.reduced.block(0, n, n, n);
}

CycNumber determinant(const ExactMatrix& m)
{
    if (!m.is_square())
        throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return CycNumber(Rational(1), m.order());
    Forward f = bareiss_forward(m, n);
    if (f.pivots.size() < n)
        return CycNumber(Rational(0), m.order());
    // The last Bareiss pivot is the determinant of the row-scaled matrix.
    CycNumber det = f.rows[n - 1][n - 1];
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class den = 1;
        for (std::size_t c = 0; c < n; ++c)
            den = lcm(den, m(r, c).denominator());
        if (den != 1)
            det /= CycNumber(Rational(den), m.order());
    }
    return f.odd_swaps ? -det : det;
}

ExactMatrix from_columns(const std::vector<CycVector>& columns, std::size_t length)
{
    std::vector<CycNumber> entries(length * columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != length)
            throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
        for (std::size_t r = 0; r < length; ++r)
            entries[r * columns.size() + c] = columns[c][r];
    }
    return {length, columns.size(), std::move(entries)};
}

} // namespace rigidcalc
