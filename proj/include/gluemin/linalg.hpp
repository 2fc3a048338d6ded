#pragma once

#include "gluemin/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace gluemin {

using Vec = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> init);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    // Columns are the given vectors; used for basis-to-ambient inclusion maps.
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& other) const;
    Vec apply(const Vec& v) const; // this * v, v a column vector
    Matrix operator+(const Matrix& other) const;
    Matrix operator-() const;

    bool operator==(const Matrix& other) const = default;

    bool is_zero() const;
    bool is_identity() const;

    std::vector<Vec> row_vectors() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Unique reduced row echelon form; row space preserved.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Solves a * x = b for x (b may have several columns). Returns nullopt when
// inconsistent; otherwise one particular solution (free variables set to 0).
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// True iff a has a two-sided inverse (square, full rank).
std::optional<Matrix> inverse(const Matrix& a);

// [a | b] side by side and stacked on top of each other.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

Vec concat(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);

} // namespace gluemin
