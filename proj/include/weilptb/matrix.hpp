#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <weilptb/error.hpp>

namespace weilptb {

namespace detail {

template <typename T>
bool is_zero(const T &x)
{
    if constexpr (requires { x.is_zero(); }) {
        return x.is_zero();
    } else {
        return sgn(x) == 0;
    }
}

template <typename T>
T scalar_inverse(const T &x)
{
    if constexpr (requires { x.inverse(); }) {
        return x.inverse();
    } else {
        return T(1) / x;
    }
}

} // namespace detail

// Dense row-major matrix over an exact scalar type. T must provide T(0),
// T(1), +, -, *, ==, is_zero() (or comparison with 0) and inverse() for
// the elimination routines. Noncommutative scalars are supported: all row
// operations multiply on the left.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] bool is_zero() const
    {
        for (const auto &x : data_) {
            if (!detail::is_zero(x)) {
                return false;
            }
        }
        return true;
    }

    // Copy of the [r0, r0+nr) x [c0, c0+nc) sub-block.
    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        Matrix out(nr, nc);
        for (std::size_t i = 0; i < nr; ++i) {
            for (std::size_t j = 0; j < nc; ++j) {
                out(i, j) = (*this)(r0 + i, c0 + j);
            }
        }
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix &b)
    {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                (*this)(r0 + i, c0 + j) = b(i, j);
            }
        }
    }

    friend Matrix operator*(const Matrix &x, const Matrix &y)
    {
        if (x.cols_ != y.rows_) {
            throw Error(Errc::invalid_argument, "matrix shape mismatch in product");
        }
        Matrix out(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T &a = x(i, k);
                if (detail::is_zero(a)) {
                    continue;
                }
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    if (!detail::is_zero(y(k, j))) {
                        out(i, j) += a * y(k, j);
                    }
                }
            }
        }
        return out;
    }

    friend Matrix operator+(const Matrix &x, const Matrix &y)
    {
        Matrix out = x;
        for (std::size_t n = 0; n < out.data_.size(); ++n) {
            out.data_[n] += y.data_[n];
        }
        return out;
    }

    friend Matrix operator-(const Matrix &x, const Matrix &y)
    {
        Matrix out = x;
        for (std::size_t n = 0; n < out.data_.size(); ++n) {
            out.data_[n] -= y.data_[n];
        }
        return out;
    }

    friend Matrix operator*(const T &s, const Matrix &x)
    {
        Matrix out = x;
        for (auto &e : out.data_) {
            e = s * e;
        }
        return out;
    }

    friend bool operator==(const Matrix &x, const Matrix &y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};


// Gauss-Jordan inverse; std::nullopt when singular. Valid over division rings.
template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T> &m)
{
    if (!m.is_square()) {
        throw Error(Errc::invalid_argument, "inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Matrix<T> a = m;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && detail::is_zero(a(pivot, col))) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const T s = detail::scalar_inverse(a(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = s * a(col, j);
            inv(col, j) = s * inv(col, j);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || detail::is_zero(a(r, col))) {
                continue;
            }
            const T f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

// Determinant by fraction-carrying elimination. Commutative scalars only.
template <typename T>
T determinant(Matrix<T> a)
{
    if (!a.is_square()) {
        throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
    }
    const std::size_t n = a.rows();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && detail::is_zero(a(pivot, col))) {
            ++pivot;
        }
        if (pivot == n) {
            return T(0);
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
            }
            det = T(0) - det;
        }
        det = det * a(col, col);
        const T s = detail::scalar_inverse(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (detail::is_zero(a(r, col))) {
                continue;
            }
            const T f = a(r, col) * s;
            for (std::size_t j = col; j < n; ++j) {
                a(r, j) -= f * a(col, j);
            }
        }
    }
    return det;
}

// Row rank over a field.
template <typename T>
std::size_t rank(Matrix<T> a)
{
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < a.rows() && detail::is_zero(a(pivot, col))) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::swap(a(pivot, j), a(r, j));
        }
        const T s = detail::scalar_inverse(a(r, col));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (detail::is_zero(a(i, col))) {
                continue;
            }
            const T f = a(i, col) * s;
            for (std::size_t j = col; j < a.cols(); ++j) {
                a(i, j) -= f * a(r, j);
            }
        }
        ++r;
    }
    return r;
}

} // namespace weilptb
