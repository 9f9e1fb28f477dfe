#pragma once

#include "easygram/partition.hpp"

#include <utility>
#include <vector>

namespace easygram {

// block-size profiles of set partitions, with the lattice Moebius value
// against the one-block partition; the classical weight mu(nu, 1_n) depends
// only on the number of blocks of nu
struct PartitionProfile {
    std::vector<int> block_sizes;
    BigInt mobius_to_top;  // mu(nu, 1_n)
};

// every partition of n points (full lattice), cached per n
const std::vector<PartitionProfile>& partition_profiles(int n);
// every noncrossing partition of n points, with the noncrossing-lattice
// Moebius value mu_NC(nu, 1_n) computed by the lattice recurrence on the
// noncrossing poset itself
const std::vector<PartitionProfile>& noncrossing_profiles(int n);

// Moebius function of the noncrossing lattice on explicit arguments (test
// oracle scale; the profile tables above serve the bulk transforms)
BigInt nc_mobius(const Partition& a, const Partition& b);

inline constexpr int kCumulantOrderCap = 12;

// ---- moment/cumulant transforms over any commutative ring R ----
// sequences are 1-based in meaning: v[0] = first moment/cumulant

namespace detail {

template <class R>
R block_product(const std::vector<int>& sizes, const std::vector<R>& per_size) {
    R prod(1);
    for (int s : sizes) prod = prod * per_size[static_cast<size_t>(s - 1)];
    return prod;
}

template <class R>
std::vector<R> to_cumulants(const std::vector<R>& m,
                            const std::vector<PartitionProfile>& (*profiles)(int)) {
    int n = static_cast<int>(m.size());
    if (n > kCumulantOrderCap) throw CapacityError("cumulants: order over cap");
    std::vector<R> k;
    for (int order = 1; order <= n; ++order) {
        R sum(0);
        for (const auto& prof : profiles(order))
            sum = sum + ring_cast<R>(prof.mobius_to_top) * block_product(prof.block_sizes, m);
        k.push_back(std::move(sum));
    }
    return k;
}

template <class R>
std::vector<R> to_moments(const std::vector<R>& k,
                          const std::vector<PartitionProfile>& (*profiles)(int)) {
    int n = static_cast<int>(k.size());
    if (n > kCumulantOrderCap) throw CapacityError("cumulants: order over cap");
    std::vector<R> m;
    for (int order = 1; order <= n; ++order) {
        R sum(0);
        for (const auto& prof : profiles(order))
            sum = sum + block_product(prof.block_sizes, k);
        m.push_back(std::move(sum));
    }
    return m;
}

} // namespace detail

template <class R>
std::vector<R> moments_to_cumulants_classical(const std::vector<R>& m) {
    return detail::to_cumulants(m, &partition_profiles);
}
template <class R>
std::vector<R> cumulants_to_moments_classical(const std::vector<R>& k) {
    return detail::to_moments(k, &partition_profiles);
}
template <class R>
std::vector<R> moments_to_cumulants_free(const std::vector<R>& m) {
    return detail::to_cumulants(m, &noncrossing_profiles);
}
template <class R>
std::vector<R> cumulants_to_moments_free(const std::vector<R>& k) {
    return detail::to_moments(k, &noncrossing_profiles);
}

template <class R>
std::vector<R> classical_convolve(const std::vector<R>& m1, const std::vector<R>& m2) {
    if (m1.size() != m2.size()) throw ShapeError("convolve: order mismatch");
    std::vector<R> k1 = moments_to_cumulants_classical(m1);
    std::vector<R> k2 = moments_to_cumulants_classical(m2);
    for (size_t i = 0; i < k1.size(); ++i) k1[i] = k1[i] + k2[i];
    return cumulants_to_moments_classical(k1);
}

template <class R>
std::vector<R> free_convolve(const std::vector<R>& m1, const std::vector<R>& m2) {
    if (m1.size() != m2.size()) throw ShapeError("convolve: order mismatch");
    std::vector<R> k1 = moments_to_cumulants_free(m1);
    std::vector<R> k2 = moments_to_cumulants_free(m2);
    for (size_t i = 0; i < k1.size(); ++i) k1[i] = k1[i] + k2[i];
    return cumulants_to_moments_free(k1);
}

// classical cumulants reinterpreted as free cumulants
template <class R>
std::vector<R> bp_map(const std::vector<R>& m) {
    return cumulants_to_moments_free(moments_to_cumulants_classical(m));
}
template <class R>
std::vector<R> bp_map_inverse(const std::vector<R>& m) {
    return cumulants_to_moments_classical(moments_to_cumulants_free(m));
}

// ---- truncated formal series ----

// coefficients c[0..order] of a power series truncated at the given order;
// arithmetic is closed at that order
template <class R>
struct FormalSeries {
    std::vector<R> c;

    size_t order() const { return c.empty() ? 0 : c.size() - 1; }
    R coeff(size_t i) const { return i < c.size() ? c[i] : R(0); }
    bool operator==(const FormalSeries& o) const { return c == o.c; }
};

namespace detail {

template <class R>
FormalSeries<R> series_mul(const FormalSeries<R>& a, const FormalSeries<R>& b, size_t order) {
    FormalSeries<R> r;
    r.c.assign(order + 1, R(0));
    for (size_t i = 0; i <= order && i < a.c.size(); ++i)
        for (size_t j = 0; i + j <= order && j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    return r;
}

// reciprocal of a series with invertible constant term (units only; all our
// rings are fields or polynomial rings with constant term 1)
template <class R>
FormalSeries<R> series_reciprocal(const FormalSeries<R>& a, size_t order) {
    FormalSeries<R> r;
    r.c.assign(order + 1, R(0));
    // constant term must be 1 in the ring
    r.c[0] = R(1);
    for (size_t n = 1; n <= order; ++n) {
        R acc(0);
        for (size_t j = 1; j <= n && j < a.c.size(); ++j) acc = acc + a.c[j] * r.c[n - j];
        r.c[n] = R(0) - acc;
    }
    return r;
}

} // namespace detail

// R-transform coefficients: viewing the series R(x) = sum kappa_n x^{n-1},
// returned as the coefficient list (kappa_1, kappa_2, ...)
template <class R>
std::vector<R> r_series(const std::vector<R>& m) {
    return moments_to_cumulants_free(m);
}

// the moment generating data g(u) = 1 + M_1 u + M_2 u^2 + ... of the Cauchy
// transform G(xi) = u g(u) at u = 1/xi
template <class R>
FormalSeries<R> cauchy_series(const std::vector<R>& m) {
    FormalSeries<R> g;
    g.c.push_back(R(1));
    for (const R& v : m) g.c.push_back(v);
    return g;
}

// verifies K(G(xi)) = xi as a truncated identity, where K(z) = 1/z + R(z):
// in terms of u = 1/xi this reads  1/g(u) + sum_n kappa_n u^n g(u)^{n-1} = 1
template <class R>
bool check_inversion(const std::vector<R>& m) {
    size_t order = m.size();
    std::vector<R> kappa = moments_to_cumulants_free(m);
    FormalSeries<R> g = cauchy_series(m);
    FormalSeries<R> acc = detail::series_reciprocal(g, order);
    FormalSeries<R> gpow;
    gpow.c.assign(1, R(1));
    for (size_t n = 1; n <= order; ++n) {
        // gpow = g^{n-1}; add kappa_n u^n g^{n-1}
        for (size_t i = 0; i + n <= order && i < gpow.c.size(); ++i)
            acc.c[i + n] = acc.c[i + n] + kappa[n - 1] * gpow.c[i];
        gpow = detail::series_mul(gpow, g, order);
    }
    if (!(acc.c[0] == R(1))) return false;
    for (size_t i = 1; i <= order; ++i)
        if (!(acc.c[i] == R(0))) return false;
    return true;
}

} // namespace easygram
