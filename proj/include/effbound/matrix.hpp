#pragma once

#include "effbound/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace effbound {

/// Dense row-major matrix. Small (rank <= ~50) and exact, so no expression
/// templates or views; copies are cheap enough.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    /// Principal submatrix on the given (ordered) index set.
    Matrix principal(std::span<const std::size_t> idx) const
    {
        Matrix m(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b)
                m(a, b) = (*this)(idx[a], idx[b]);
        return m;
    }

    bool symmetric() const
    {
        if (!square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    bool operator==(const Matrix& other) const
    {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

inline RatVector to_rational(const IntVector& v)
{
    RatVector r;
    r.reserve(v.size());
    for (const auto& x : v)
        r.emplace_back(x);
    return r;
}

template <typename T, typename V>
std::vector<Rational> multiply(const Matrix<T>& m, const std::vector<V>& v)
{
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] += Rational(m(i, j)) * Rational(v[j]);
    return out;
}

} // namespace effbound
