#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qadhm/exactcore/gauss_rational.hpp"

namespace qadhm {

// Bareiss needs exact division; for F_p plain elimination is cheaper.
template <class T>
struct prefers_fraction_free : std::true_type {};
struct Zp;
template <>
struct prefers_fraction_free<Zp> : std::false_type {};

namespace detail {
// free-function lookup kept outside the class so Matrix::is_zero() does not hide it
template <class T>
bool qadhm_is_zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail

// Dense row-major matrix over a field T.  T must provide +,-,*,/, unary -,
// inverse(), == and a free is_zero(T).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
    Matrix(std::size_t r, std::size_t c, std::vector<T> entries) : r_(r), c_(c), a_(std::move(entries)) {
        if (a_.size() != r * c) throw std::invalid_argument("Matrix: entry count mismatch");
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.c_) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<T>& data() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!detail::qadhm_is_zero(x)) return false;
        return true;
    }
    bool is_square() const { return r_ == c_; }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> m(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.a_) x = -x;
        return m;
    }
    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& x : a.a_) x = s * x;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (detail::qadhm_is_zero(x)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const {
        if (i0 + nr > r_ || j0 + nc > c_) throw std::out_of_range("Matrix: block out of range");
        Matrix m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }
    void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
        if (i0 + b.r_ > r_ || j0 + b.c_ > c_) throw std::out_of_range("Matrix: set_block out of range");
        for (std::size_t i = 0; i < b.r_; ++i)
            for (std::size_t j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }
    Matrix column(std::size_t j) const { return block(0, j, r_, 1); }

    static Matrix hstack(const std::vector<Matrix>& ms) {
        if (ms.empty()) return {};
        std::size_t r = ms[0].r_, c = 0;
        for (const auto& m : ms) {
            if (m.r_ != r) throw std::invalid_argument("Matrix: hstack row mismatch");
            c += m.c_;
        }
        Matrix out(r, c);
        std::size_t off = 0;
        for (const auto& m : ms) {
            out.set_block(0, off, m);
            off += m.c_;
        }
        return out;
    }
    static Matrix vstack(const std::vector<Matrix>& ms) {
        if (ms.empty()) return {};
        std::size_t c = ms[0].c_, r = 0;
        for (const auto& m : ms) {
            if (m.c_ != c) throw std::invalid_argument("Matrix: vstack column mismatch");
            r += m.r_;
        }
        Matrix out(r, c);
        std::size_t off = 0;
        for (const auto& m : ms) {
            out.set_block(off, 0, m);
            off += m.r_;
        }
        return out;
    }

    // Fraction-free (Bareiss) rank; over F_p ordinary elimination.
    std::size_t rank() const {
        if constexpr (prefers_fraction_free<T>::value) return bareiss().first;
        else return rref().second.size();
    }

    T det() const {
        if (!is_square()) throw std::invalid_argument("Matrix: det of non-square");
        if (r_ == 0) return T(1);
        return bareiss().second;
    }

    // Reduced row echelon form and pivot columns.
    std::pair<Matrix, std::vector<std::size_t>> rref() const {
        Matrix m = *this;
        std::vector<std::size_t> piv;
        std::size_t row = 0;
        for (std::size_t col = 0; col < c_ && row < r_; ++col) {
            std::size_t sel = r_;
            for (std::size_t i = row; i < r_; ++i)
                if (!detail::qadhm_is_zero(m(i, col))) { sel = i; break; }
            if (sel == r_) continue;
            m.swap_rows(sel, row);
            T inv = T(1) / m(row, col);
            for (std::size_t j = col; j < c_; ++j) m(row, j) = m(row, j) * inv;
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == row || detail::qadhm_is_zero(m(i, col))) continue;
                T f = m(i, col);
                for (std::size_t j = col; j < c_; ++j)
                    if (!detail::qadhm_is_zero(m(row, j))) m(i, j) = m(i, j) - f * m(row, j);
            }
            piv.push_back(col);
            ++row;
        }
        return {std::move(m), std::move(piv)};
    }

    // Columns form a basis of the right kernel.
    Matrix kernel() const {
        auto [m, piv] = rref();
        std::vector<char> is_piv(c_, 0);
        for (auto p : piv) is_piv[p] = 1;
        std::vector<std::size_t> freec;
        for (std::size_t j = 0; j < c_; ++j)
            if (!is_piv[j]) freec.push_back(j);
        Matrix k(c_, freec.size());
        for (std::size_t f = 0; f < freec.size(); ++f) {
            k(freec[f], f) = T(1);
            for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], f) = -m(i, freec[f]);
        }
        return k;
    }

    // Some X with (*this) X = rhs, or nullopt when inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs) const {
        if (rhs.r_ != r_) throw std::invalid_argument("Matrix: solve shape mismatch");
        Matrix aug = hstack({*this, rhs});
        auto [m, piv] = aug.rref();
        for (auto p : piv)
            if (p >= c_) return std::nullopt;
        Matrix x(c_, rhs.c_);
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t j = 0; j < rhs.c_; ++j) x(piv[i], j) = m(i, c_ + j);
        return x;
    }

    std::optional<Matrix> inverse() const {
        if (!is_square()) throw std::invalid_argument("Matrix: inverse of non-square");
        auto [m, piv] = hstack({*this, identity(r_)}).rref();
        if (piv.size() < r_ || (r_ > 0 && piv[r_ - 1] >= r_)) return std::nullopt;
        return m.block(0, r_, r_, r_);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

private:
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    // returns (rank, signed last pivot) -- the latter is det for square full rank
    std::pair<std::size_t, T> bareiss() const {
        Matrix m = *this;
        T prev(1);
        std::size_t rank = 0;
        bool negate = false;
        for (std::size_t col = 0; col < c_ && rank < r_; ++col) {
            std::size_t sel = r_;
            for (std::size_t i = rank; i < r_; ++i)
                if (!detail::qadhm_is_zero(m(i, col))) { sel = i; break; }
            if (sel == r_) continue;
            if (sel != rank) {
                m.swap_rows(sel, rank);
                negate = !negate;
            }
            const T piv = m(rank, col);
            for (std::size_t i = rank + 1; i < r_; ++i) {
                const T f = m(i, col);
                for (std::size_t j = col + 1; j < c_; ++j) m(i, j) = (piv * m(i, j) - f * m(rank, j)) / prev;
                m(i, col) = T();
            }
            prev = piv;
            ++rank;
        }
        T d = (rank == r_ && r_ == c_) ? prev : T();
        if (negate) d = -d;
        return {rank, d};
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using QMatrix = Matrix<GaussRational>;

inline QMatrix dagger(const QMatrix& m) {
    return m.transpose().map([](const GaussRational& x) { return x.conj(); });
}

inline std::vector<std::vector<std::string>> to_strings(const QMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).str();
    return out;
}

}  // namespace qadhm
