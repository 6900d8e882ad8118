#include "ratmod/matrix.hpp"

#include "ratmod/error.hpp"

#include <stdexcept>
#include <utility>

namespace ratmod {

Scalar parse_scalar(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    Scalar q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Column>& columns, std::size_t rows)
{
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw std::invalid_argument("column length does not match row count");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

Column Matrix::column(std::size_t c) const
{
    Column v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

Column Matrix::apply(const Column& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("dimension mismatch in Matrix::apply");
    Column out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0)
                out[i] += (*this)(i, j) * v[j];
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("dimension mismatch in matrix product");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (sgn(other(k, j)) != 0)
                    out(i, j) += a * other(k, j);
        }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& e : entries_)
        if (sgn(e) != 0)
            return false;
    return true;
}

bool is_zero(const Column& v)
{
    for (const auto& e : v)
        if (sgn(e) != 0)
            return false;
    return true;
}

Reduction reduce(const Matrix& m)
{
    Reduction out{m, 0, {}};
    Matrix& a = out.rref;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && sgn(a(pivot, col)) == 0)
            ++pivot;
        if (pivot == a.rows())
            continue;
        if (pivot != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(pivot, j), a(row, j));
        const Scalar inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j)
            a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || sgn(a(i, col)) == 0)
                continue;
            const Scalar factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (sgn(a(row, j)) != 0)
                    a(i, j) -= factor * a(row, j);
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.rank = out.pivot_columns.size();
    return out;
}

std::size_t rank_of(const Matrix& m) { return reduce(m).rank; }

std::size_t rank_of_columns(const std::vector<Column>& columns, std::size_t dim)
{
    if (columns.empty())
        return 0;
    return rank_of(Matrix::from_columns(columns, dim));
}

KernelImage kernel_and_image(const Matrix& m)
{
    const Reduction red = reduce(m);
    KernelImage out;
    for (std::size_t p : red.pivot_columns)
        out.image_basis.push_back(m.column(p));

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : red.pivot_columns)
        is_pivot[p] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Column v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < red.rank; ++r)
            v[red.pivot_columns[r]] = -red.rref(r, free);
        for (const auto& e : v)
            if (sgn(e) != 0) {
                const Scalar lead = e;
                for (auto& x : v)
                    x /= lead;
                break;
            }
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

std::vector<std::size_t> complement_indices(const std::vector<Column>& subspace_basis, std::size_t ambient_dim)
{
    for (const auto& c : subspace_basis)
        if (c.size() != ambient_dim)
            throw Error(ErrorKind::usage, "subspace vector has wrong ambient dimension");
    if (rank_of_columns(subspace_basis, ambient_dim) != subspace_basis.size())
        throw Error(ErrorKind::usage, "dependent subspace basis");

    // Incremental elimination: keep the span in reduced form and add e_i
    // whenever it is not already spanned.
    std::vector<Column> span = subspace_basis;
    std::size_t rank = span.size();
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < ambient_dim && rank < ambient_dim; ++i) {
        Column e(ambient_dim);
        e[i] = 1;
        span.push_back(e);
        const std::size_t r = rank_of_columns(span, ambient_dim);
        if (r > rank) {
            rank = r;
            chosen.push_back(i);
        }
        else {
            span.pop_back();
        }
    }
    return chosen;
}

std::vector<Column> complement_in(const std::vector<Column>& subspace_basis, std::size_t ambient_dim)
{
    std::vector<Column> out;
    for (std::size_t i : complement_indices(subspace_basis, ambient_dim)) {
        Column e(ambient_dim);
        e[i] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<Column> solve(const Matrix& m, const Column& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("dimension mismatch in solve");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const Reduction red = reduce(aug);
    if (!red.pivot_columns.empty() && red.pivot_columns.back() == m.cols())
        return std::nullopt;
    Column x(m.cols());
    for (std::size_t r = 0; r < red.rank; ++r)
        x[red.pivot_columns[r]] = red.rref(r, m.cols());
    return x;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::internal, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const Reduction red = reduce(aug);
    if (red.rank < n || (n > 0 && red.pivot_columns[n - 1] != n - 1))
        throw Error(ErrorKind::internal, "singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = red.rref(i, n + j);
    return inv;
}

Scalar determinant(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a(pivot, col)) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(a(i, col)) == 0)
                continue;
            const Scalar factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j)
                a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

}  // namespace ratmod
