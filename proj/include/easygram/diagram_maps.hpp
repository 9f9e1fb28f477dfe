#pragma once

#include "easygram/categories.hpp"
#include "easygram/partition.hpp"

#include <complex>
#include <string>
#include <vector>

namespace easygram {

// 1 iff every block of pi carries a constant index; indices are 1-based
int delta_symbol(const Partition& pi, const std::vector<int>& upper_idx,
                 const std::vector<int>& lower_idx);

// Dense 0/1 matrix of the linear map attached to a partition on tensor powers
// of an N-dimensional space: N^l rows, N^k columns, row-major mixed radix over
// {1..N}^l and {1..N}^k.
struct IntegerMatrix {
    size_t rows = 0, cols = 0;
    std::vector<int8_t> data;

    int8_t at(size_t i, size_t j) const { return data[i * cols + j]; }

    bool operator==(const IntegerMatrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }
};

inline constexpr size_t kTMatrixBudget = 1u << 22;

IntegerMatrix t_matrix(const Partition& pi, int N);

struct FunctorialityReport {
    bool tensor_law = false;       // T_pi (x) T_sigma = T_[pi sigma]
    bool composition_law = false;  // T_pi T_sigma = N^c T_[^sigma_pi]
    bool composition_applicable = false;
    bool involution_law = false;   // transpose(T_pi) = T_{pi*}
    bool pass() const {
        return tensor_law && involution_law && (!composition_applicable || composition_law);
    }
};

FunctorialityReport check_functoriality(const Partition& pi, const Partition& sigma, int N);

// xi_pi written out in the N^k-dimensional tensor power, as a 0/1 vector
std::vector<int8_t> partition_vector(const Partition& one_row, int N);

// exact fixed-vector test g^{(x) k} xi_pi = xi_pi for a matrix with entries in
// any exact ring (signed permutation entries, cyclotomic entries as doubles
// are handled by the float overload below). White letters act by g, black
// letters by the conjugate.
bool is_fixed_vector(const Partition& one_row,
                     const std::vector<std::vector<std::complex<double>>>& g, double tolerance);

// residual norm ||g^{(x)k} xi - xi||; used by the color convention check
double fixed_vector_residual(const Partition& one_row,
                             const std::vector<std::vector<std::complex<double>>>& g);

} // namespace easygram
