#pragma once

#include "easygram/partition.hpp"
#include "easygram/poly.hpp"
#include "easygram/rational.hpp"

#include <vector>

namespace easygram {

// Dense matrix of exact rationals. When constructed from a Gram computation
// it carries the ordered list of index partitions.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Partition>& index() const { return index_; }
    void set_index(std::vector<Partition> idx) { index_ = std::move(idx); }

    static ExactMatrix identity(size_t n);
    ExactMatrix transpose() const;

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Rational trace() const;

    // exact determinant; integer matrices go through fraction-free
    // (Bareiss) elimination
    Rational determinant() const;

    size_t rank() const;

    // exact inverse; throws DomainError on singular input
    ExactMatrix inverse() const;

    // exact Moore-Penrose pseudo-inverse via the full-rank factorization
    // A = B C, pinv(A) = C^T (C C^T)^{-1} (B^T B)^{-1} B^T
    ExactMatrix pseudo_inverse() const;

    // inverse when nonsingular, pseudo-inverse otherwise
    ExactMatrix quasi_inverse() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
    std::vector<Partition> index_;
};

// fraction-free determinant of an integer matrix
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

// fraction-free determinant over Z[N]; exact polynomial divisions
IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>> m);

} // namespace easygram
