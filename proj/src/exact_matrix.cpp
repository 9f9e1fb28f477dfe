#include "easygram/exact_matrix.hpp"

#include <algorithm>

namespace easygram {

ExactMatrix ExactMatrix::identity(size_t n) {
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product: inner dimensions differ");
    ExactMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference: shape");
    ExactMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v.is_zero(); });
}

Rational ExactMatrix::trace() const {
    Rational t;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    size_t n = m.size();
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return BigInt(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
            }
            m[i][k] = BigInt(0);
        }
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>> m) {
    size_t n = m.size();
    if (n == 0) return IntPoly(1);
    IntPoly prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return IntPoly();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = IntPoly();
        }
        prev = m[k][k];
    }
    IntPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Rational ExactMatrix::determinant() const {
    if (rows_ != cols_) throw ShapeError("determinant: square matrix required");
    size_t n = rows_;
    if (n == 0) return Rational(1);
    // scale rows to integers, run fraction-free elimination, divide back
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    Rational scale(1);
    for (size_t i = 0; i < n; ++i) {
        BigInt lcm(1);
        for (size_t j = 0; j < n; ++j) {
            const BigInt& d = at(i, j).den();
            lcm = (lcm * d).divide_exact(BigInt::gcd(lcm, d));
        }
        scale *= Rational(BigInt(1), lcm);
        for (size_t j = 0; j < n; ++j) {
            const Rational& v = at(i, j);
            m[i][j] = v.num() * lcm.divide_exact(v.den());
        }
    }
    return Rational(bareiss_determinant(std::move(m))) * scale;
}

namespace {

// Gauss-Jordan on [A | B]; returns rank, A reduced in place to RREF.
// pivot_cols receives the pivot column of each produced row.
size_t gauss_jordan(std::vector<std::vector<Rational>>& a, std::vector<std::vector<Rational>>* b,
                    std::vector<size_t>* pivot_cols) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        if (b) std::swap((*b)[piv], (*b)[rank]);
        Rational inv = Rational(1) / a[rank][col];
        for (auto& v : a[rank]) v *= inv;
        if (b)
            for (auto& v : (*b)[rank]) v *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (size_t j = 0; j < cols; ++j) a[r][j] -= f * a[rank][j];
            if (b)
                for (size_t j = 0; j < (*b)[r].size(); ++j) (*b)[r][j] -= f * (*b)[rank][j];
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

} // namespace

size_t ExactMatrix::rank() const {
    std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j);
    return gauss_jordan(a, nullptr, nullptr);
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw ShapeError("inverse: square matrix required");
    std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_));
    std::vector<std::vector<Rational>> b(rows_, std::vector<Rational>(cols_));
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j);
        b[i][i] = Rational(1);
    }
    size_t r = gauss_jordan(a, &b, nullptr);
    if (r != rows_) throw DomainError("inverse: singular matrix");
    ExactMatrix out(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = b[i][j];
    out.index_ = index_;
    return out;
}

ExactMatrix ExactMatrix::pseudo_inverse() const {
    // full-rank factorization from the RREF: B = pivot columns of A,
    // C = nonzero rows of RREF(A); then A = B C
    std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j);
    std::vector<size_t> pivots;
    size_t r = gauss_jordan(a, nullptr, &pivots);
    if (r == 0) return ExactMatrix(cols_, rows_);  // zero matrix maps to zero

    ExactMatrix B(rows_, r), C(r, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < r; ++j) B.at(i, j) = at(i, pivots[j]);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < cols_; ++j) C.at(i, j) = a[i][j];

    ExactMatrix Bt = B.transpose(), Ct = C.transpose();
    ExactMatrix left = (Bt * B).inverse();
    ExactMatrix right = (C * Ct).inverse();
    ExactMatrix out = Ct * right * left * Bt;
    out.index_ = index_;
    return out;
}

ExactMatrix ExactMatrix::quasi_inverse() const {
    if (rows_ == cols_ && rank() == rows_) return inverse();
    return pseudo_inverse();
}

} // namespace easygram
