#pragma once

#include "ratmod/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ratmod {

using Column = std::vector<Scalar>;

// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<long>>& rows);
    static Matrix from_columns(const std::vector<Column>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Column column(std::size_t c) const;
    Column apply(const Column& v) const;
    Matrix operator*(const Matrix& other) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

struct Reduction {
    Matrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

// Gauss-Jordan with first-nonzero pivoting; deterministic.
Reduction reduce(const Matrix& m);

struct KernelImage {
    std::vector<Column> kernel_basis;  // each scaled so its first nonzero entry is 1
    std::vector<Column> image_basis;   // the pivot columns of m
};

KernelImage kernel_and_image(const Matrix& m);

std::size_t rank_of(const Matrix& m);
std::size_t rank_of_columns(const std::vector<Column>& columns, std::size_t dim);

// Standard basis vectors extending `subspace_basis` to a basis of Q^ambient_dim,
// smallest indices first. Throws Error(usage, "dependent subspace basis").
std::vector<Column> complement_in(const std::vector<Column>& subspace_basis, std::size_t ambient_dim);
// Same, but returns the chosen standard-basis indices.
std::vector<std::size_t> complement_indices(const std::vector<Column>& subspace_basis, std::size_t ambient_dim);

// Some x with m x = b, or nullopt.
std::optional<Column> solve(const Matrix& m, const Column& b);

// Throws Error(internal, ...) when m is singular.
Matrix inverse(const Matrix& m);

Scalar determinant(const Matrix& m);

bool is_zero(const Column& v);

}  // namespace ratmod
