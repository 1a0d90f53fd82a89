#pragma once

// Small dense matrices with exact determinant, rank and solve.

#include "symlag/exact.hpp"

#include <cmath>
#include <initializer_list>
#include <optional>
#include <vector>

namespace symlag {

/// Row-major dense matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw InvalidArgument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    Matrix leading_block(std::size_t k) const {
        Matrix out(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) out(r, c) = (*this)(r, c);
        return out;
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
    if (m.cols() != v.size()) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<T> out(m.rows(), T{0});
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

/// Fraction-free (Bareiss) elimination over the integers. Every division is
/// exact; row swaps flip the sign.
inline BigInt bareiss_determinant(Matrix<BigInt> a) {
    if (!a.square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Exact determinant of a rational matrix: each row is scaled to integers by
/// the lcm of its denominators, then Bareiss runs over the integers.
inline Rational determinant(const Matrix<Rational>& m) {
    if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<BigInt> a(n, n);
    BigInt scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        BigInt l = 1;
        for (std::size_t c = 0; c < n; ++c) l = boost::multiprecision::lcm(l, denominator(m(r, c)));
        for (std::size_t c = 0; c < n; ++c) a(r, c) = numerator(m(r, c)) * (l / denominator(m(r, c)));
        scale *= l;
    }
    return Rational(bareiss_determinant(std::move(a)), scale);
}

inline BigInt determinant(const Matrix<BigInt>& m) { return bareiss_determinant(m); }

/// Leading principal minors det(A[1..k,1..k]) for k = 1..n.
inline std::vector<BigInt> leading_principal_minors(const Matrix<BigInt>& m) {
    if (!m.square()) throw DimensionMismatch("minors of a non-square matrix");
    std::vector<BigInt> out;
    out.reserve(m.rows());
    for (std::size_t k = 1; k <= m.rows(); ++k) out.push_back(bareiss_determinant(m.leading_block(k)));
    return out;
}

/// Sylvester's criterion on a symmetric integer matrix.
inline bool is_positive_definite(const Matrix<BigInt>& m) {
    if (m != m.transposed()) return false;
    for (const auto& minor : leading_principal_minors(m))
        if (minor <= 0) return false;
    return true;
}

inline std::size_t rank(Matrix<Rational> a) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(rank, p);
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            if (a(r, c) == 0) continue;
            const Rational f = a(r, c) / a(rank, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Unique solution of A x = b over the rationals; nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve(Matrix<Rational> a, std::vector<Rational> b) {
    if (!a.square() || a.rows() != b.size()) throw DimensionMismatch("linear system size mismatch");
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return std::nullopt;
        a.swap_rows(k, p);
        std::swap(b[k], b[p]);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k) == 0) continue;
            const Rational f = a(r, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(r, j) -= f * a(k, j);
            b[r] -= f * b[k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational s = b[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= a(k, j) * x[j];
        x[k] = s / a(k, k);
    }
    return x;
}

struct FloatDeterminant {
    double value = 0.0;
    /// Hadamard bound: product of the Euclidean row norms.
    double row_norm_product = 0.0;
};

/// LU with partial pivoting in double precision.
inline FloatDeterminant float_determinant(Matrix<double> a) {
    if (!a.square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    FloatDeterminant out;
    out.row_norm_product = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < n; ++c) s += a(r, c) * a(r, c);
        out.row_norm_product *= std::sqrt(s);
    }
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a(r, k)) > std::abs(a(p, k))) p = r;
        if (a(p, k) == 0.0) {
            det = 0.0;
            break;
        }
        if (p != k) {
            a.swap_rows(k, p);
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = a(r, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(r, j) -= f * a(k, j);
        }
    }
    out.value = det;
    return out;
}

}  // namespace symlag
