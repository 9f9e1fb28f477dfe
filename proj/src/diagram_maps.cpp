#include "easygram/diagram_maps.hpp"

#include <cmath>

namespace easygram {

int delta_symbol(const Partition& pi, const std::vector<int>& upper_idx,
                 const std::vector<int>& lower_idx) {
    if (upper_idx.size() != pi.upper_size() || lower_idx.size() != pi.lower_size())
        throw ShapeError("delta: index tuple lengths do not match the rows");
    size_t k = pi.upper_size();
    auto value = [&](int leg) {
        return leg < static_cast<int>(k) ? upper_idx[leg] : lower_idx[leg - k];
    };
    for (const auto& block : pi.blocks()) {
        int v = value(block[0]);
        for (int leg : block)
            if (value(leg) != v) return 0;
    }
    return 1;
}

namespace {

size_t checked_power(size_t base, size_t exp) {
    size_t r = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (r > kTMatrixBudget) throw CapacityError("t_matrix: dimension over budget");
        r *= base;
    }
    return r;
}

// decode a row-major mixed-radix rank into a 1-based index tuple
void decode(size_t rank, int N, size_t len, std::vector<int>& out) {
    out.resize(len);
    for (size_t i = len; i-- > 0;) {
        out[i] = static_cast<int>(rank % N) + 1;
        rank /= N;
    }
}

} // namespace

IntegerMatrix t_matrix(const Partition& pi, int N) {
    if (N < 1) throw DomainError("t_matrix: N >= 1 required");
    size_t k = pi.upper_size(), l = pi.lower_size();
    size_t cols = checked_power(N, k), rows = checked_power(N, l);
    if (rows * cols > kTMatrixBudget) throw CapacityError("t_matrix: size over budget");
    IntegerMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.data.assign(rows * cols, 0);
    std::vector<int> iu, il;
    for (size_t c = 0; c < cols; ++c) {
        decode(c, N, k, iu);
        for (size_t r = 0; r < rows; ++r) {
            decode(r, N, l, il);
            m.data[r * cols + c] = static_cast<int8_t>(delta_symbol(pi, iu, il));
        }
    }
    return m;
}

namespace {

IntegerMatrix kronecker(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix m;
    m.rows = a.rows * b.rows;
    m.cols = a.cols * b.cols;
    m.data.assign(m.rows * m.cols, 0);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) {
            if (!a.at(i, j)) continue;
            for (size_t p = 0; p < b.rows; ++p)
                for (size_t q = 0; q < b.cols; ++q)
                    m.data[(i * b.rows + p) * m.cols + (j * b.cols + q)] = b.at(p, q);
        }
    return m;
}

// integer product; entries can exceed 1, so widen
std::vector<int64_t> multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    std::vector<int64_t> r(a.rows * b.cols, 0);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            if (!a.at(i, k)) continue;
            for (size_t j = 0; j < b.cols; ++j)
                if (b.at(k, j)) r[i * b.cols + j] += 1;
        }
    return r;
}

} // namespace

FunctorialityReport check_functoriality(const Partition& pi, const Partition& sigma, int N) {
    FunctorialityReport rep;
    IntegerMatrix tp = t_matrix(pi, N), ts = t_matrix(sigma, N);

    rep.tensor_law = kronecker(tp, ts) == t_matrix(horizontal_concat(pi, sigma), N);

    Partition istar = involute(pi);
    IntegerMatrix tstar = t_matrix(istar, N);
    bool inv_ok = tstar.rows == tp.cols && tstar.cols == tp.rows;
    if (inv_ok)
        for (size_t i = 0; i < tp.rows && inv_ok; ++i)
            for (size_t j = 0; j < tp.cols; ++j)
                if (tp.at(i, j) != tstar.at(j, i)) {
                    inv_ok = false;
                    break;
                }
    rep.involution_law = inv_ok;

    if (sigma.lower() == pi.upper()) {
        rep.composition_applicable = true;
        CompositionResult comp = vertical_concat(pi, sigma);
        std::vector<int64_t> prod = multiply(tp, ts);
        IntegerMatrix expected = t_matrix(comp.result, N);
        int64_t scale = 1;
        for (int c = 0; c < comp.loops; ++c) scale *= N;
        bool ok = prod.size() == expected.data.size();
        for (size_t i = 0; i < prod.size() && ok; ++i)
            ok = prod[i] == scale * expected.data[i];
        rep.composition_law = ok;
    }
    return rep;
}

std::vector<int8_t> partition_vector(const Partition& one_row, int N) {
    if (!one_row.is_one_row()) throw ShapeError("partition_vector: one-row input required");
    size_t k = one_row.lower_size();
    size_t dim = checked_power(N, k);
    std::vector<int8_t> v(dim, 0);
    std::vector<int> idx;
    for (size_t r = 0; r < dim; ++r) {
        decode(r, N, k, idx);
        v[r] = static_cast<int8_t>(delta_symbol(one_row, {}, idx));
    }
    return v;
}

namespace {

using CMat = std::vector<std::vector<std::complex<double>>>;

// apply (x)_m g^(e_m) to a vector in the tensor power, one factor at a time
std::vector<std::complex<double>> apply_tensor_power(const CMat& g, const ColoredWord& word,
                                                     std::vector<std::complex<double>> v) {
    size_t N = g.size();
    size_t k = word.size();
    std::vector<std::complex<double>> w(v.size());
    size_t stride = v.size();
    for (size_t m = 0; m < k; ++m) {
        stride /= N;
        std::fill(w.begin(), w.end(), std::complex<double>(0));
        // factor m acts on the digit with the current stride
        for (size_t base = 0; base < v.size(); ++base) {
            size_t digit = (base / stride) % N;
            size_t rest = base - digit * stride;
            for (size_t i = 0; i < N; ++i) {
                std::complex<double> entry =
                    word[m] == Color::White ? g[i][digit] : std::conj(g[i][digit]);
                if (entry != std::complex<double>(0))
                    w[rest + i * stride] += entry * v[base];
            }
        }
        std::swap(v, w);
    }
    return v;
}

} // namespace

double fixed_vector_residual(const Partition& one_row, const CMat& g) {
    size_t N = g.size();
    for (const auto& row : g)
        if (row.size() != N) throw ShapeError("fixed_vector: square matrix required");
    std::vector<int8_t> xi = partition_vector(one_row, static_cast<int>(N));
    std::vector<std::complex<double>> v(xi.begin(), xi.end());
    std::vector<std::complex<double>> gv =
        apply_tensor_power(g, one_row.lower(), v);
    double norm2 = 0;
    for (size_t i = 0; i < v.size(); ++i) norm2 += std::norm(gv[i] - v[i]);
    return std::sqrt(norm2);
}

bool is_fixed_vector(const Partition& one_row, const CMat& g, double tolerance) {
    return fixed_vector_residual(one_row, g) <= tolerance;
}

} // namespace easygram
