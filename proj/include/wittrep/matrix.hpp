#pragma once

// Dense matrices over a CommutativeRing, with row reduction, rank and null
// spaces when the ring is a field.

#include "wittrep/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wittrep {

template <CommutativeRing R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const R& proto)
        : rows_(rows), cols_(cols), proto_(proto.zero_like()), data_(rows * cols, proto_) {}

    static Matrix identity(std::size_t n, const R& proto) {
        Matrix m(n, n, proto);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = proto.one_like();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const R& proto() const noexcept { return proto_; }

    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<R>& data() const noexcept { return data_; }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch in product");
        Matrix out(rows_, o.cols_, proto_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const R& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = out(i, j) + a * o(k, j);
            }
        }
        return out;
    }

    std::vector<R> operator*(const std::vector<R>& v) const {
        std::vector<R> out(rows_, proto_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }

    Matrix operator+(const Matrix& o) const {
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
        return out;
    }

    Matrix operator-(const Matrix& o) const {
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
        return out;
    }

    Matrix scale(const R& c) const {
        Matrix out = *this;
        for (auto& x : out.data_) x = x * c;
        return out;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!(data_[i] == o.data_[i])) return false;
        return true;
    }

    Matrix pow(std::uint64_t e) const {
        Matrix result = identity(rows_, proto_);
        Matrix base = *this;
        for (; e != 0; e >>= 1U) {
            if (e & 1U) result = result * base;
            if (e > 1) base = base * base;
        }
        return result;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_, proto_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        const R one = proto_.one_like();
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!((*this)(i, j) == (i == j ? one : proto_))) return false;
        return true;
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !(*this)(i, j).is_zero()) return false;
        return true;
    }

    std::vector<R> column(std::size_t j) const {
        std::vector<R> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    /// Stacks the rows of other below this matrix.
    Matrix stack(const Matrix& other) const {
        if (rows_ == 0) return other;
        if (other.cols_ != cols_) throw Error(ErrorKind::InvalidArgument, "column mismatch in stack");
        Matrix out = *this;
        out.rows_ += other.rows_;
        out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
        return out;
    }

    static Matrix from_columns(const std::vector<std::vector<R>>& cols, std::size_t nrows, const R& proto) {
        Matrix out(nrows, cols.size(), proto);
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < nrows; ++i) out(i, j) = cols[j][i];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    R proto_{};
    std::vector<R> data_;
};

/// Reduced row echelon form over a field; pivot columns are returned in order.
template <UnitTestableRing F>
Matrix<F> row_reduce(Matrix<F> m, std::vector<std::size_t>* pivots = nullptr) {
    std::size_t row = 0;
    std::vector<std::size_t> piv;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const F inv = m(row, col).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const F factor = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

template <UnitTestableRing F>
std::size_t rank(const Matrix<F>& m) {
    std::vector<std::size_t> piv;
    row_reduce(m, &piv);
    return piv.size();
}

/// Basis of {x : m x = 0}.
template <UnitTestableRing F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
    std::vector<std::size_t> piv;
    const Matrix<F> rref = row_reduce(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), m.proto());
        v[free] = m.proto().one_like();
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rref(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// True when v lies in the column span of the given vectors.
template <UnitTestableRing F>
bool in_span(const std::vector<std::vector<F>>& spanning, const std::vector<F>& v, const F& proto) {
    const Matrix<F> base = Matrix<F>::from_columns(spanning, v.size(), proto);
    auto with = spanning;
    with.push_back(v);
    const Matrix<F> ext = Matrix<F>::from_columns(with, v.size(), proto);
    return rank(base) == rank(ext);
}

}  // namespace wittrep
