#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "easygram/diagram_maps.hpp"
#include "easygram/gram.hpp"

#include <random>

using namespace easygram;

namespace {
const Color W = Color::White;
const Color B = Color::Black;

Partition make1(size_t k, std::vector<std::vector<int>> blocks) {
    return Partition::one_row_uncolored(k, std::move(blocks));
}

using CMat = std::vector<std::vector<std::complex<double>>>;

CMat permutation_matrix(const std::vector<int>& images) {
    size_t n = images.size();
    CMat g(n, std::vector<std::complex<double>>(n, 0.0));
    for (size_t j = 0; j < n; ++j) g[images[j]][j] = 1.0;
    return g;
}

} // namespace

TEST_CASE("delta symbol on the two-block P(3,3) example") {
    // upper {0,1} with lower {1,2} in one block, upper {2} with lower {0}
    Partition eta({W, W, W}, {W, W, W}, {{0, 1, 4, 5}, {2, 3}});
    // delta(a,b,c; d,e,f) = [a=b=e=f][c=d]
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                for (int d = 1; d <= 2; ++d)
                    for (int e = 1; e <= 2; ++e)
                        for (int f = 1; f <= 2; ++f) {
                            int expected = (a == b && b == e && e == f && c == d) ? 1 : 0;
                            CHECK(delta_symbol(eta, {a, b, c}, {d, e, f}) == expected);
                        }
}

TEST_CASE("delta symbol basics") {
    Partition id2 = Partition::identity({W, W});
    CHECK(delta_symbol(id2, {1, 2}, {1, 2}) == 1);
    CHECK(delta_symbol(id2, {1, 2}, {2, 1}) == 0);
    Partition oneblock({W, W}, {W, W}, {{0, 1, 2, 3}});
    CHECK(delta_symbol(oneblock, {7, 7}, {7, 7}) == 1);
    CHECK_THROWS_AS(delta_symbol(id2, {1}, {1, 2}), ShapeError);
}

TEST_CASE("t_matrix special shapes") {
    // identity strand gives the N x N identity
    IntegerMatrix id = t_matrix(Partition::identity({W}), 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) CHECK(id.at(i, j) == (i == j ? 1 : 0));

    // fork: T(e_i (x) e_j) = delta_ij e_i
    Partition fork({W, W}, {W}, {{0, 1, 2}});
    IntegerMatrix f = t_matrix(fork, 3);
    CHECK(f.rows == 3);
    CHECK(f.cols == 9);
    for (size_t i = 0; i < 3; ++i)
        for (size_t a = 0; a < 3; ++a)
            for (size_t b = 0; b < 3; ++b)
                CHECK(f.at(i, a * 3 + b) == ((a == b && a == i) ? 1 : 0));

    // duality arc: T(1) = sum_i e_i (x) e_i
    Partition arc({}, {W, W}, {{0, 1}});
    IntegerMatrix r = t_matrix(arc, 3);
    CHECK(r.cols == 1);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(r.at(i * 3 + j, 0) == (i == j ? 1 : 0));
}

TEST_CASE("functoriality on the worked pairs") {
    Partition cap({}, {W, W}, {{0, 1}});   // 0 -> 2
    Partition cup({W, W}, {}, {{0, 1}});   // 2 -> 0
    FunctorialityReport r = check_functoriality(cup, cap, 2);
    CHECK(r.tensor_law);
    CHECK(r.composition_applicable);
    CHECK(r.composition_law);
    CHECK(r.involution_law);

    Partition fork({W, W}, {W}, {{0, 1, 2}});
    FunctorialityReport r2 = check_functoriality(fork, involute(fork), 2);
    CHECK(r2.pass());

    Partition id2 = Partition::identity({W, W});
    FunctorialityReport r3 = check_functoriality(id2, fork, 3);
    CHECK(r3.tensor_law);
}

TEST_CASE("functoriality exhaustive for small shapes, N in {2,3}") {
    // all partitions with <= 3 legs per row
    std::vector<Partition> pool;
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
            if (k + l == 0) continue;
            for (const auto& p : enumerate_partitions(uncolored_word(k + l))) {
                // refold: first k legs up (inverse of the boundary rotation)
                ColoredWord upper(k, W), lower(l, W);
                std::vector<std::vector<int>> blocks;
                for (const auto& bl : p.blocks()) {
                    std::vector<int> nb;
                    for (int leg : bl)
                        nb.push_back(leg < k ? leg : k + (l - 1 - (leg - k)));
                    blocks.push_back(nb);
                }
                pool.emplace_back(upper, lower, blocks);
            }
        }
    for (int N : {2, 3})
        for (const auto& pi : pool) {
            Partition istar = involute(pi);
            IntegerMatrix tp = t_matrix(pi, N);
            IntegerMatrix ts = t_matrix(istar, N);
            bool inv_ok = tp.rows == ts.cols && tp.cols == ts.rows;
            for (size_t i = 0; inv_ok && i < tp.rows; ++i)
                for (size_t j = 0; j < tp.cols; ++j)
                    if (tp.at(i, j) != ts.at(j, i)) {
                        inv_ok = false;
                        break;
                    }
            CHECK(inv_ok);
            for (const auto& sigma : pool) {
                // the tensor law doubles the leg count; keep it in budget
                if (pi.total_legs() + sigma.total_legs() <= 8) {
                    FunctorialityReport rep = check_functoriality(pi, sigma, N);
                    CHECK(rep.tensor_law);
                    if (rep.composition_applicable) CHECK(rep.composition_law);
                } else if (sigma.lower() == pi.upper()) {
                    // composition only; the tensor square would be oversized
                    IntegerMatrix a = t_matrix(pi, N);
                    IntegerMatrix b = t_matrix(sigma, N);
                    CompositionResult comp = vertical_concat(pi, sigma);
                    IntegerMatrix expect = t_matrix(comp.result, N);
                    int64_t scale = 1;
                    for (int c = 0; c < comp.loops; ++c) scale *= N;
                    bool ok = a.cols == b.rows;
                    for (size_t i = 0; ok && i < a.rows; ++i)
                        for (size_t j = 0; j < b.cols; ++j) {
                            int64_t acc = 0;
                            for (size_t t = 0; t < a.cols; ++t)
                                acc += int64_t(a.at(i, t)) * b.at(t, j);
                            if (acc != scale * expect.at(i, j)) {
                                ok = false;
                                break;
                            }
                        }
                    CHECK(ok);
                }
            }
        }
}

TEST_CASE("permutation matrices fix every partition vector") {
    std::vector<std::vector<int>> s3 = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& im : s3) {
        CMat g = permutation_matrix(im);
        for (const auto& pi : enumerate_partitions(uncolored_word(3)))
            CHECK(is_fixed_vector(pi, g, 1e-12));
    }
}

TEST_CASE("signed permutations distinguish even from odd block structure") {
    CMat g = {{1.0, 0.0}, {0.0, -1.0}};
    CHECK(is_fixed_vector(make1(2, {{0, 1}}), g, 1e-12));
    CHECK(!is_fixed_vector(make1(2, {{0}, {1}}), g, 1e-12));
    CMat id = {{1.0, 0.0}, {0.0, 1.0}};
    for (const auto& pi : enumerate_partitions(uncolored_word(2)))
        CHECK(is_fixed_vector(pi, id, 1e-12));
}

TEST_CASE("color convention: the white-black arc is the unitary duality vector") {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int N = 3;
    Partition mixed = Partition::one_row({W, B}, {{0, 1}});
    Partition same = Partition::one_row({W, W}, {{0, 1}});
    int same_color_failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        // complex Gaussian matrix, Gram-Schmidt orthonormalized
        CMat g(N, std::vector<std::complex<double>>(N));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) g[i][j] = {gauss(rng), gauss(rng)};
        for (int c = 0; c < N; ++c) {
            for (int p = 0; p < c; ++p) {
                std::complex<double> dot = 0;
                for (int i = 0; i < N; ++i) dot += std::conj(g[i][p]) * g[i][c];
                for (int i = 0; i < N; ++i) g[i][c] -= dot * g[i][p];
            }
            double norm = 0;
            for (int i = 0; i < N; ++i) norm += std::norm(g[i][c]);
            norm = std::sqrt(norm);
            for (int i = 0; i < N; ++i) g[i][c] /= norm;
        }
        CHECK(fixed_vector_residual(mixed, g) < 1e-9);
        if (fixed_vector_residual(same, g) > 1e-6) ++same_color_failures;
    }
    CHECK(same_color_failures > 0);
}

TEST_CASE("gram consistency: partition vector inner products") {
    for (int N : {2, 3, 5}) {
        auto all = enumerate_partitions(uncolored_word(4));
        for (const auto& a : all)
            for (const auto& b : all) {
                auto va = partition_vector(a, N);
                auto vb = partition_vector(b, N);
                int64_t dot = 0;
                for (size_t i = 0; i < va.size(); ++i) dot += int64_t(va[i]) * vb[i];
                CHECK(BigInt(dot) == BigInt::pow(BigInt(N), join(a, b).num_blocks()));
            }
    }
}
