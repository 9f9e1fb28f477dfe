#include "easygram/cumulants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

namespace easygram {

namespace {

std::vector<int> sizes_of(const Partition& p) {
    std::vector<int> s;
    for (const auto& b : p.blocks()) s.push_back(static_cast<int>(b.size()));
    return s;
}

// partitions of the block set of p, emitted as merged partitions of the
// original points
void for_each_coarsening(const Partition& p,
                         const std::function<void(const Partition&)>& emit) {
    int nb = static_cast<int>(p.num_blocks());
    if (nb == 0) {
        emit(p);
        return;
    }
    std::vector<int> rgs(nb, 0);
    std::function<void(int, int)> rec = [&](int pos, int maxv) {
        if (pos == nb) {
            std::vector<std::vector<int>> merged(maxv + 1);
            for (int b = 0; b < nb; ++b)
                for (int leg : p.blocks()[b]) merged[rgs[b]].push_back(leg);
            emit(Partition(p.upper(), p.lower(), std::move(merged)));
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[pos] = v;
            rec(pos + 1, std::max(maxv, v));
        }
    };
    rec(1, 0);
}

} // namespace

const std::vector<PartitionProfile>& partition_profiles(int n) {
    static std::map<int, std::vector<PartitionProfile>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<PartitionProfile> out;
    for (const auto& p : enumerate_partitions(uncolored_word(n)))
        out.push_back({sizes_of(p), mobius_full_lattice(static_cast<int>(p.num_blocks()))});
    return cache.emplace(n, std::move(out)).first->second;
}

const std::vector<PartitionProfile>& noncrossing_profiles(int n) {
    static std::map<int, std::vector<PartitionProfile>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    PartitionClassFilter nc{PartitionClass::Noncrossing, nullptr};
    std::vector<Partition> members = enumerate_partitions(uncolored_word(n), nc);
    // mu(pi, 1_n) by the dual recurrence mu(pi, 1) = -sum_{tau > pi} mu(tau, 1),
    // processed from the coarsest member down
    std::vector<size_t> order(members.size());
    for (size_t i = 0; i < members.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return members[a].num_blocks() < members[b].num_blocks();
    });
    std::unordered_map<std::string, BigInt> mu_table;
    for (size_t oi : order) {
        const Partition& pi = members[oi];
        if (pi.num_blocks() <= 1) {
            mu_table[pi.key()] = BigInt(1);
            continue;
        }
        BigInt acc(0);
        for_each_coarsening(pi, [&](const Partition& tau) {
            if (tau == pi) return;
            if (!is_noncrossing(tau)) return;
            acc += mu_table.at(tau.key());
        });
        mu_table[pi.key()] = -acc;
    }

    std::vector<PartitionProfile> out;
    for (const auto& p : members) out.push_back({sizes_of(p), mu_table.at(p.key())});
    return cache.emplace(n, std::move(out)).first->second;
}

BigInt nc_mobius(const Partition& a, const Partition& b) {
    if (!same_shape(a, b)) throw ShapeError("nc_mobius: mismatched point sets");
    if (!is_noncrossing(a) || !is_noncrossing(b))
        throw DomainError("nc_mobius: arguments must be noncrossing");
    if (!leq(a, b)) return BigInt(0);
    if (a == b) return BigInt(1);
    // dual recurrence on the interval [a, b] within the noncrossing poset
    std::vector<Partition> interval;
    for_each_coarsening(a, [&](const Partition& tau) {
        if (is_noncrossing(tau) && leq(tau, b)) interval.push_back(tau);
    });
    std::sort(interval.begin(), interval.end(),
              [](const Partition& x, const Partition& y) {
                  return x.num_blocks() < y.num_blocks();
              });
    std::unordered_map<std::string, BigInt> mu_table;
    for (const auto& pi : interval) {
        if (pi == b) {
            mu_table[pi.key()] = BigInt(1);
            continue;
        }
        BigInt acc(0);
        for_each_coarsening(pi, [&](const Partition& tau) {
            if (tau == pi || !is_noncrossing(tau) || !leq(tau, b)) return;
            acc += mu_table.at(tau.key());
        });
        mu_table[pi.key()] = -acc;
    }
    return mu_table.at(a.key());
}

} // namespace easygram
