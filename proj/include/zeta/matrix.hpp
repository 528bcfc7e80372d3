#pragma once

#include "zeta/series.hpp"

#include <stdexcept>
#include <vector>

namespace zeta {

// Dense square matrix over an exact coefficient ring.
template <typename R>
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(check_size(n)), a_(static_cast<std::size_t>(n) * n, RingTraits<R>::zero()) {}

    static DenseMatrix identity(int n) {
        DenseMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = RingTraits<R>::one();
        return m;
    }

    int size() const { return n_; }

    R& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const R& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_zero() const {
        for (const R& x : a_)
            if (!RingTraits<R>::is_zero(x)) return false;
        return true;
    }

    R trace() const {
        R t = RingTraits<R>::zero();
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    DenseMatrix scaled(const Rational& s) const {
        DenseMatrix m(n_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = RingTraits<R>::scaled(a_[k], s);
        return m;
    }

    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
        check_same(a, b);
        DenseMatrix m(a.n_);
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
        return m;
    }

    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
        check_same(a, b);
        DenseMatrix m(a.n_);
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
        return m;
    }

    DenseMatrix operator-() const {
        DenseMatrix m(n_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
        return m;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        check_same(a, b);
        DenseMatrix m(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const R& x = a.at(i, k);
                if (RingTraits<R>::is_zero(x)) continue;
                for (int j = 0; j < a.n_; ++j) {
                    if (RingTraits<R>::is_zero(b.at(k, j))) continue;
                    m.at(i, j) += x * b.at(k, j);
                }
            }
        return m;
    }

    bool operator==(const DenseMatrix& o) const {
        if (n_ != o.n_) return false;
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!(a_[k] == o.a_[k])) return false;
        return true;
    }
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

private:
    static int check_size(int n) {
        if (n < 0) throw std::invalid_argument("matrix size must be >= 0");
        return n;
    }
    static void check_same(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    }

    int n_ = 0;
    std::vector<R> a_;
};

// Square matrix of truncated series, stored as one constant matrix per
// degree of u. Degree sparsity is what keeps pencils like I - Tu cheap:
// products skip coefficient matrices that are identically zero.
template <typename R>
class SeriesMatrix {
public:
    SeriesMatrix(int n, int order)
        : n_(n), c_(static_cast<std::size_t>(check_order(order)) + 1, DenseMatrix<R>(n)) {}

    static SeriesMatrix identity(int n, int order) {
        SeriesMatrix m(n, order);
        m.c_[0] = DenseMatrix<R>::identity(n);
        return m;
    }

    int size() const { return n_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }

    const DenseMatrix<R>& coeff(int k) const {
        if (k < 0 || k > order()) throw std::out_of_range("series matrix coefficient out of range");
        return c_[k];
    }

    void set_coeff(int k, DenseMatrix<R> m) {
        if (k < 0 || k > order()) throw std::out_of_range("series matrix coefficient out of range");
        if (m.size() != n_) throw std::invalid_argument("matrix size mismatch");
        c_[k] = std::move(m);
    }

    bool is_zero() const {
        for (const auto& m : c_)
            if (!m.is_zero()) return false;
        return true;
    }

    friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
        check_compatible(a, b);
        SeriesMatrix m(a.n_, std::min(a.order(), b.order()));
        for (int k = 0; k <= m.order(); ++k) m.c_[k] = a.c_[k] + b.c_[k];
        return m;
    }

    friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
        check_compatible(a, b);
        SeriesMatrix m(a.n_, std::min(a.order(), b.order()));
        for (int k = 0; k <= m.order(); ++k) m.c_[k] = a.c_[k] - b.c_[k];
        return m;
    }

    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
        check_compatible(a, b);
        SeriesMatrix m(a.n_, std::min(a.order(), b.order()));
        std::vector<bool> az(a.order() + 1), bz(b.order() + 1);
        for (int k = 0; k <= a.order(); ++k) az[k] = a.c_[k].is_zero();
        for (int k = 0; k <= b.order(); ++k) bz[k] = b.c_[k].is_zero();
        for (int i = 0; i <= m.order(); ++i) {
            if (az[i]) continue;
            for (int j = 0; i + j <= m.order(); ++j) {
                if (bz[j]) continue;
                m.c_[i + j] = m.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return m;
    }

    SeriesMatrix scaled(const Rational& s) const {
        SeriesMatrix m(n_, order());
        for (int k = 0; k <= order(); ++k) m.c_[k] = c_[k].scaled(s);
        return m;
    }

    TruncatedSeries<R> trace() const {
        TruncatedSeries<R> t(order());
        for (int k = 0; k <= order(); ++k) t.set_coeff(k, c_[k].trace());
        return t;
    }

    bool operator==(const SeriesMatrix& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const SeriesMatrix& o) const { return !(*this == o); }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
        return order;
    }
    static void check_compatible(const SeriesMatrix& a, const SeriesMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    }

    int n_ = 0;
    std::vector<DenseMatrix<R>> c_;
};

// Row-sum estimate of the operator norm: max over rows of the summed l1
// norms of the entries. Bounds the l2 operator norm of the periodic
// operator the matrix presents.
template <typename R>
Rational row_sum_norm(const DenseMatrix<R>& m) {
    Rational best(0);
    for (int i = 0; i < m.size(); ++i) {
        Rational row(0);
        for (int j = 0; j < m.size(); ++j) row += RingTraits<R>::l1_norm(m.at(i, j));
        if (row > best) best = row;
    }
    return best;
}

// Log(A) for A with identity constant term: -sum_{m=1..N} S^m / m with
// S = Id - A. S has zero constant term, so S^m contributes nothing below
// degree m and the sum terminates at the truncation order.
template <typename R>
SeriesMatrix<R> matrix_log(const SeriesMatrix<R>& A) {
    if (!(A.coeff(0) == DenseMatrix<R>::identity(A.size())))
        throw std::invalid_argument("matrix log: constant term must be the identity");
    const int n = A.order();
    SeriesMatrix<R> S = SeriesMatrix<R>::identity(A.size(), n) - A;
    SeriesMatrix<R> L(A.size(), n);
    SeriesMatrix<R> P = S;
    for (int m = 1; m <= n && !P.is_zero(); ++m) {
        L = L - P.scaled(frac(1, m));
        if (m < n) P = P * S;
    }
    return L;
}

} // namespace zeta
