#ifndef RZK_MATRIX_HPP
#define RZK_MATRIX_HPP

#include "rzk/integer.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rzk {

using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix. Either dimension may be zero.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            for (auto v : row) data_.emplace_back(v);
        }
    }

    static IntegerMatrix identity(std::size_t n)
    {
        IntegerMatrix id(n, n);
        for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
        return id;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c)
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const Integer& operator()(std::size_t r, std::size_t c) const
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    [[nodiscard]] IntVector column(std::size_t c) const
    {
        IntVector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    [[nodiscard]] bool is_zero() const
    {
        for (const auto& v : data_) {
            if (!v.is_zero()) return false;
        }
        return true;
    }

    [[nodiscard]] IntegerMatrix transpose() const
    {
        IntegerMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        }
        return t;
    }

    // Rows [first, first + count) as a new matrix.
    [[nodiscard]] IntegerMatrix row_block(std::size_t first, std::size_t count) const
    {
        IntegerMatrix out(count, cols_);
        for (std::size_t r = 0; r < count; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
        }
        return out;
    }

    [[nodiscard]] IntegerMatrix col_block(std::size_t first, std::size_t count) const
    {
        IntegerMatrix out(rows_, count);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
        }
        return out;
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

inline IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out_row = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik.is_zero()) continue;
            auto b_row = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b_row[j].is_zero()) out_row[j].add_mul(aik, b_row[j]);
            }
        }
    }
    return out;
}

inline IntVector operator*(const IntegerMatrix& a, std::span<const Integer> x)
{
    if (a.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    IntVector out(a.rows());
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!x[k].is_zero()) support.push_back(k);
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = a.row(i);
        for (std::size_t k : support) {
            if (!row[k].is_zero()) out[i].add_mul(row[k], x[k]);
        }
    }
    return out;
}

inline IntVector operator*(const IntegerMatrix& a, const IntVector& x) { return a * std::span<const Integer>(x); }

inline bool is_zero(std::span<const Integer> v)
{
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

} // namespace rzk

#endif // RZK_MATRIX_HPP
