#pragma once

#include "scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liekit {

using Vec = std::vector<Scalar>;

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

inline Vec& add_scaled(Vec& dst, const Scalar& c, const Vec& src) {
    if (dst.size() != src.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
    return dst;
}

/// Dense rows x cols grid of rationals. Dimensions are fixed at construction
/// and every access is bounds-checked.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
        }
        return m;
    }

    static Matrix diagonal(const Vec& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) {
        check(r, c);
        return data_[r * cols_ + c];
    }
    const Scalar& at(std::size_t r, std::size_t c) const {
        check(r, c);
        return data_[r * cols_ + c];
    }

    Vec row(std::size_t r) const {
        if (r >= rows_) throw std::out_of_range("matrix row out of range");
        return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    Vec col(std::size_t c) const {
        Vec out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!liekit::is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
        Vec out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            Scalar s(0);
            for (std::size_t c = 0; c < cols_; ++c)
                if (!liekit::is_zero(at(r, c))) s += at(r, c) * v[c];
            out[r] = s;
        }
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix p(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& a = at(r, k);
                if (liekit::is_zero(a)) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) p.at(r, c) += a * o.at(k, c);
            }
        return p;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix s(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
        return s;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix s(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
        return s;
    }

    Matrix scaled(const Scalar& c) const {
        Matrix s(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = c * data_[i];
        return s;
    }

    Matrix power(std::size_t k) const {
        if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
        Matrix acc = identity(rows_);
        for (std::size_t i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    bool is_nilpotent() const { return power(rows_).is_zero(); }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    }
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace liekit
