#include "gluemin/linalg.hpp"

#include <stdexcept>

namespace gluemin {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged matrix initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        v[c] = at(r, c);
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(c, r) = at(r, c);
    return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(r, k);
            if (x == 0)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                m.at(r, c) += x * other.at(k, c);
        }
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("matrix apply shape mismatch");
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += at(r, c) * v[c];
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = data_[i] + other.data_[i];
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = -data_[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

bool Matrix::is_identity() const {
    return rows_ == cols_ && *this == identity(rows_);
}

std::vector<Vec> Matrix::row_vectors() const {
    std::vector<Vec> rows;
    rows.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        rows.push_back(row(r));
    return rows;
}

Matrix rref(const Matrix& m) {
    Matrix a = m;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a.at(sel, col) == 0)
            ++sel;
        if (sel == a.rows())
            continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(sel, c), a.at(pivot_row, c));
        Rational inv = Rational(1) / a.at(pivot_row, col);
        for (std::size_t c = col; c < a.cols(); ++c)
            a.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a.at(r, col) == 0)
                continue;
            Rational factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= factor * a.at(pivot_row, c);
        }
        ++pivot_row;
    }
    return a;
}

std::size_t rank(const Matrix& m) {
    Matrix r = rref(m);
    std::size_t n = 0;
    for (std::size_t i = 0; i < r.rows(); ++i)
        if (!is_zero_vec(r.row(i)))
            ++n;
    return n;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve shape mismatch");
    Matrix aug = rref(hstack(a, b));
    // Inconsistent iff some pivot falls in the b-columns.
    std::vector<long> pivot_of_col(a.cols(), -1);
    for (std::size_t r = 0; r < aug.rows(); ++r) {
        std::size_t c = 0;
        while (c < aug.cols() && aug.at(r, c) == 0)
            ++c;
        if (c == aug.cols())
            continue;
        if (c >= a.cols())
            return std::nullopt;
        pivot_of_col[c] = static_cast<long>(r);
    }
    Matrix x(a.cols(), b.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (pivot_of_col[c] >= 0)
            for (std::size_t k = 0; k < b.cols(); ++k)
                x.at(c, k) = aug.at(static_cast<std::size_t>(pivot_of_col[c]), a.cols() + k);
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols())
        return std::nullopt;
    auto x = solve(a, Matrix::identity(a.rows()));
    if (!x || !((a * *x).is_identity()))
        return std::nullopt;
    return x;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack shape mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack shape mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            m.at(a.rows() + r, c) = b.at(r, c);
    return m;
}

Vec concat(const Vec& a, const Vec& b) {
    Vec v = a;
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

} // namespace gluemin
