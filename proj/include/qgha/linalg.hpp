/*
   Copyright 2026 The qgha Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QGHA_LINALG_HPP
#define QGHA_LINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace qgha {

/// Dense row-major matrix over a field context.
template <Field F>
class Matrix {
   public:
    using Element = Elem<F>;

    Matrix(const F& field, std::size_t rows, std::size_t cols)
        : field_(&field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }
    static Matrix scalar(const F& field, std::size_t n, const Element& s) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }

    const F& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Element& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!e.is_zero()) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix& operator*=(const Element& s) {
        for (auto& e : a_) e *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Element& s) { return a *= s; }
    friend Matrix operator*(const Element& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix r(*a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Element& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::vector<Element> apply(const std::vector<Element>& v) const {
        std::vector<Element> out(rows_, field_->zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

   private:
    const F* field_;
    std::size_t rows_, cols_;
    std::vector<Element> a_;
};

template <Field F>
Matrix<F> matrix_power(Matrix<F> m, unsigned e) {
    Matrix<F> r = Matrix<F>::identity(m.field(), m.rows());
    while (e) {
        if (e & 1) r = r * m;
        m = m * m;
        e >>= 1;
    }
    return r;
}

/// p(M) by Horner's rule.
template <Field F>
Matrix<F> evaluate(const Poly<F>& p, const Matrix<F>& m) {
    Matrix<F> r(m.field(), m.rows(), m.cols());
    const Matrix<F> id = Matrix<F>::identity(m.field(), m.rows());
    for (int i = p.degree(); i >= 0; --i) r = r * m + id * p.coeff(i);
    return r;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <Field F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const auto inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const auto factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <Field F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Basis of {v : M v = 0}, one vector per free column, with that free
/// coordinate equal to 1 and the other free coordinates 0.
template <Field F>
std::vector<std::vector<Elem<F>>> nullspace(Matrix<F> m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem<F>>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem<F>> v(m.cols(), m.field().zero());
        v[free] = m.field().one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// A solution of M v = b with free coordinates set to 0, if one exists.
template <Field F>
std::optional<std::vector<Elem<F>>> solve(const Matrix<F>& m, const std::vector<Elem<F>>& b) {
    Matrix<F> aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Elem<F>> v(m.cols(), m.field().zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = aug(r, m.cols());
    return v;
}

template <Field F>
bool is_invertible(const Matrix<F>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

template <Field F>
std::string to_string(const Matrix<F>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? "; " : "";
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + m.field().format(m(i, j));
    }
    return out + "]";
}

}  // namespace qgha

#endif
