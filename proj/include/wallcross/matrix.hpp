#pragma once

// Small dense matrices over exact rationals. Everything downstream is
// desk-scale (rank <= 4 lattices, graded components of dimension <= 4,
// Koszul blocks of a few dozen rows), so plain Gaussian elimination
// over cpp_rational is the right tool.

#include "wallcross/rational.hpp"

#include <initializer_list>
#include <vector>

namespace wallcross {

class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols), Rat(0)) {}

    QMat(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = int(rows.size());
        cols_ = rows_ ? int(rows.begin()->size()) : 0;
        a_.reserve(size_t(rows_) * size_t(cols_));
        for (const auto& r : rows) {
            if (int(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
            for (long long v : r) a_.emplace_back(v);
        }
    }

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const QMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    QMat operator*(const QMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        QMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }

    QMat transpose() const {
        QMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const Rat& v : a_)
            if (v != 0) return false;
        return true;
    }

    int rank() const {
        QMat m = *this;
        int rk = 0;
        for (int col = 0; col < m.cols_ && rk < m.rows_; ++col) {
            int piv = -1;
            for (int i = rk; i < m.rows_; ++i)
                if (m.at(i, col) != 0) { piv = i; break; }
            if (piv < 0) continue;
            for (int j = 0; j < m.cols_; ++j) std::swap(m.at(piv, j), m.at(rk, j));
            Rat inv = Rat(1) / m.at(rk, col);
            for (int i = rk + 1; i < m.rows_; ++i) {
                Rat f = m.at(i, col) * inv;
                if (f == 0) continue;
                for (int j = col; j < m.cols_; ++j) m.at(i, j) -= f * m.at(rk, j);
            }
            ++rk;
        }
        return rk;
    }

    int kernel_dim() const { return cols_ - rank(); }

    // Gauss-Jordan inverse; throws on singular input.
    QMat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        int n = rows_;
        QMat m = *this;
        QMat inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int i = col; i < n; ++i)
                if (m.at(i, col) != 0) { piv = i; break; }
            if (piv < 0) throw std::invalid_argument("singular matrix");
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
            Rat d = m.at(col, col);
            for (int j = 0; j < n; ++j) {
                m.at(col, j) /= d;
                inv.at(col, j) /= d;
            }
            for (int i = 0; i < n; ++i) {
                if (i == col) continue;
                Rat f = m.at(i, col);
                if (f == 0) continue;
                for (int j = 0; j < n; ++j) {
                    m.at(i, j) -= f * m.at(col, j);
                    inv.at(i, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct Signature {
    int pos = 0, neg = 0, zero = 0;
};

// Signature of a symmetric matrix by exact congruent diagonalization
// (LDL^T with symmetric pivoting). When the remaining diagonal is all
// zero but an off-diagonal entry a_ij survives, the congruence
// x_i -> x_i + x_j makes the i-th diagonal entry 2*a_ij and the
// elimination continues; this keeps hyperbolic blocks like
// [[0,1],[1,0]] in scope.
inline Signature symmetric_signature(QMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("signature of non-square matrix");
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("matrix is not symmetric");

    Signature sig;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, i) != 0) { piv = i; break; }
        if (piv < 0) {
            int pi = -1, pj = -1;
            for (int i = k; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (m.at(i, j) != 0) { pi = i; pj = j; break; }
            if (pi < 0) {
                sig.zero += n - k;
                return sig;
            }
            for (int t = 0; t < n; ++t) m.at(pi, t) += m.at(pj, t);
            for (int t = 0; t < n; ++t) m.at(t, pi) += m.at(t, pj);
            piv = pi;
        }
        if (piv != k) {
            for (int t = 0; t < n; ++t) std::swap(m.at(piv, t), m.at(k, t));
            for (int t = 0; t < n; ++t) std::swap(m.at(t, piv), m.at(t, k));
        }
        const Rat d = m.at(k, k);
        if (d > 0) ++sig.pos; else ++sig.neg;
        for (int i = k + 1; i < n; ++i) {
            Rat f = m.at(i, k) / d;
            if (f == 0) continue;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
        for (int j = k + 1; j < n; ++j) m.at(k, j) = 0;
    }
    return sig;
}

}  // namespace wallcross
