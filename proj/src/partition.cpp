#include "easygram/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace easygram {

ColoredWord uncolored_word(size_t k) { return ColoredWord(k, Color::White); }

ColoredWord parse_word(const std::string& s) {
    ColoredWord w;
    for (char c : s) {
        if (c == 'o' || c == 'w' || c == 'O' || c == 'W') w.push_back(Color::White);
        else if (c == 'b' || c == 'B') w.push_back(Color::Black);
        else if (c == ' ') continue;
        else throw DomainError(std::string("bad color letter '") + c + "'");
    }
    return w;
}

std::string word_to_string(const ColoredWord& w) {
    std::string s;
    for (Color c : w) s += (c == Color::White ? 'o' : 'b');
    return s;
}

Partition::Partition(ColoredWord upper, ColoredWord lower, std::vector<std::vector<int>> blocks)
    : upper_(std::move(upper)), lower_(std::move(lower)), blocks_(std::move(blocks)) {
    canonicalize();
}

void Partition::canonicalize() {
    size_t n = upper_.size() + lower_.size();
    std::vector<char> seen(n, 0);
    for (auto& b : blocks_) {
        if (b.empty()) throw ShapeError("empty block");
        std::sort(b.begin(), b.end());
        for (int leg : b) {
            if (leg < 0 || leg >= static_cast<int>(n)) throw ShapeError("leg out of range");
            if (seen[leg]) throw ShapeError("leg in two blocks");
            seen[leg] = 1;
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (!seen[i]) throw ShapeError("leg not covered");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

Partition Partition::one_row(ColoredWord word, std::vector<std::vector<int>> blocks) {
    return Partition({}, std::move(word), std::move(blocks));
}

Partition Partition::one_row_uncolored(size_t k, std::vector<std::vector<int>> blocks) {
    return Partition({}, uncolored_word(k), std::move(blocks));
}

Partition Partition::identity(const ColoredWord& w) {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        blocks.push_back({i, static_cast<int>(w.size()) + i});
    return Partition(w, w, std::move(blocks));
}

std::vector<int> Partition::leg_to_block() const {
    std::vector<int> m(total_legs(), -1);
    for (size_t b = 0; b < blocks_.size(); ++b)
        for (int leg : blocks_[b]) m[leg] = static_cast<int>(b);
    return m;
}

// finer partitions first (more blocks), then lexicographic on the block
// lists; this matches the usual ordering of the printed Gram matrices
bool Partition::operator<(const Partition& o) const {
    if (upper_ != o.upper_) return upper_ < o.upper_;
    if (lower_ != o.lower_) return lower_ < o.lower_;
    if (blocks_.size() != o.blocks_.size()) return blocks_.size() > o.blocks_.size();
    return blocks_ < o.blocks_;
}

std::string Partition::key() const {
    std::string s = word_to_string(upper_);
    s += '|';
    s += word_to_string(lower_);
    for (const auto& b : blocks_) {
        s += ';';
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) s += ',';
            // two digits per leg keep the textual order aligned with leg order
            if (b[i] < 10) s += '0';
            s += std::to_string(b[i]);
        }
    }
    return s;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) os << " ";
        os << "(";
        for (size_t i = 0; i < blocks_[b].size(); ++i) {
            int leg = blocks_[b][i];
            if (i) os << ",";
            if (leg < static_cast<int>(upper_.size())) os << "u" << leg;
            else os << "l" << (leg - upper_.size());
        }
        os << ")";
    }
    os << "}";
    return os.str();
}

Partition Partition::rotate_to_one_row() const {
    if (is_one_row()) return *this;
    size_t k = upper_.size(), l = lower_.size();
    // boundary order: upper 0..k-1 keeps its position; lower j moves to
    // position k + (l-1-j), with its color inverted
    ColoredWord word(k + l, Color::White);
    for (size_t i = 0; i < k; ++i) word[i] = upper_[i];
    for (size_t j = 0; j < l; ++j) word[k + (l - 1 - j)] = invert(lower_[j]);
    std::vector<std::vector<int>> blocks;
    for (const auto& b : blocks_) {
        std::vector<int> nb;
        for (int leg : b) {
            if (leg < static_cast<int>(k)) nb.push_back(leg);
            else nb.push_back(static_cast<int>(k + (l - 1 - (leg - k))));
        }
        blocks.push_back(std::move(nb));
    }
    return Partition::one_row(std::move(word), std::move(blocks));
}

bool is_noncrossing(const Partition& p) {
    const Partition q = p.is_one_row() ? p : p.rotate_to_one_row();
    std::vector<int> blk = q.leg_to_block();
    int n = static_cast<int>(blk.size());
    // stack scan: an open block must sit on top whenever it is revisited
    std::vector<int> first(q.num_blocks(), -1), last(q.num_blocks(), -1);
    for (int i = 0; i < n; ++i) {
        if (first[blk[i]] < 0) first[blk[i]] = i;
        last[blk[i]] = i;
    }
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        int b = blk[i];
        if (first[b] == i) {
            stack.push_back(b);
        } else if (stack.empty() || stack.back() != b) {
            return false;
        }
        if (last[b] == i) stack.pop_back();
    }
    return true;
}

bool has_even_blocks(const Partition& p) {
    for (const auto& b : p.blocks())
        if (b.size() % 2) return false;
    return true;
}

bool is_pairing(const Partition& p) {
    for (const auto& b : p.blocks())
        if (b.size() != 2) return false;
    return true;
}

bool blocks_at_most_two(const Partition& p) {
    for (const auto& b : p.blocks())
        if (b.size() > 2) return false;
    return true;
}

bool same_shape(const Partition& a, const Partition& b) {
    return a.upper() == b.upper() && a.lower() == b.lower();
}

bool leq(const Partition& a, const Partition& b) {
    if (!same_shape(a, b)) throw ShapeError("leq: mismatched point sets");
    std::vector<int> blk = b.leg_to_block();
    for (const auto& block : a.blocks()) {
        int target = blk[block[0]];
        for (int leg : block)
            if (blk[leg] != target) return false;
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Partition blocks_from_uf(const Partition& shape, UnionFind& uf) {
    int n = static_cast<int>(shape.total_legs());
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, legs] : groups) blocks.push_back(std::move(legs));
    return Partition(shape.upper(), shape.lower(), std::move(blocks));
}

} // namespace

Partition join(const Partition& a, const Partition& b) {
    if (!same_shape(a, b)) throw ShapeError("join: mismatched point sets");
    UnionFind uf(static_cast<int>(a.total_legs()));
    for (const auto& block : a.blocks())
        for (size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
    for (const auto& block : b.blocks())
        for (size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
    return blocks_from_uf(a, uf);
}

// mu(0_m, 1_m) on the full partition lattice, from the defining recurrence
//   mu(0, 1_m) = -sum_{tau < 1_m} mu(0, tau)
// together with multiplicativity of lower intervals over the blocks of tau.
// The A_k * M_k = I identity test exercises these values exhaustively.
BigInt mobius_full_lattice(int m) {
    static std::vector<BigInt> cache{BigInt(1), BigInt(1)};  // m = 0, 1
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= m) {
        int n = static_cast<int>(cache.size());
        // sum over partitions tau of n points with tau != 1_n, via restricted
        // growth strings; every block of such tau has size < n
        BigInt total(0);
        std::vector<int> rgs(n, 0);
        std::function<void(int, int)> rec = [&](int pos, int maxv) {
            if (pos == n) {
                int nblocks = maxv + 1;
                if (nblocks == 1) return;  // exclude the top element
                std::vector<int> sizes(nblocks, 0);
                for (int v : rgs) sizes[v]++;
                BigInt prod(1);
                for (int s : sizes) prod *= cache[s];
                total += prod;
                return;
            }
            for (int v = 0; v <= maxv + 1; ++v) {
                rgs[pos] = v;
                rec(pos + 1, std::max(maxv, v));
            }
        };
        rgs[0] = 0;
        rec(1, 0);
        cache.push_back(-total);
    }
    return cache[m];
}

BigInt mobius(const Partition& a, const Partition& b) {
    if (!same_shape(a, b)) throw ShapeError("mobius: mismatched point sets");
    if (!leq(a, b)) return BigInt(0);
    // interval [a, b] factors over the blocks of b; each factor is a full
    // partition lattice on the a-blocks inside that b-block
    std::vector<int> ablk = a.leg_to_block();
    BigInt result(1);
    for (const auto& block : b.blocks()) {
        std::vector<int> inner;
        for (int leg : block) inner.push_back(ablk[leg]);
        std::sort(inner.begin(), inner.end());
        inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
        result *= mobius_full_lattice(static_cast<int>(inner.size()));
    }
    return result;
}

Partition kernel(const std::vector<int>& indices) {
    return kernel_colored(indices, uncolored_word(indices.size()));
}

Partition kernel_colored(const std::vector<int>& indices, const ColoredWord& w) {
    if (indices.empty()) throw DomainError("kernel: empty index tuple");
    if (indices.size() != w.size()) throw ShapeError("kernel: word length mismatch");
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < indices.size(); ++i) groups[indices[i]].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> blocks;
    for (auto& [v, legs] : groups) blocks.push_back(std::move(legs));
    return Partition::one_row(w, std::move(blocks));
}

bool PartitionClassFilter::accepts(const Partition& p) const {
    switch (cls) {
        case PartitionClass::All: break;
        case PartitionClass::Noncrossing:
            if (!is_noncrossing(p)) return false;
            break;
        case PartitionClass::Pairings:
            if (!is_pairing(p)) return false;
            break;
        case PartitionClass::NoncrossingPairings:
            if (!is_pairing(p) || !is_noncrossing(p)) return false;
            break;
        case PartitionClass::EvenBlocks:
            if (!has_even_blocks(p)) return false;
            break;
        case PartitionClass::SingletonsAndPairings:
            if (!blocks_at_most_two(p)) return false;
            break;
    }
    return !extra || extra(p);
}

namespace {

// all set partitions of {0..n-1} as restricted growth strings
void enumerate_rgs(int n, const std::function<void(const std::vector<int>&, int)>& emit) {
    if (n == 0) {
        std::vector<int> empty;
        emit(empty, 0);
        return;
    }
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int maxv) {
        if (pos == n) {
            emit(rgs, maxv + 1);
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[pos] = v;
            rec(pos + 1, std::max(maxv, v));
        }
    };
    rec(1, 0);
}

std::vector<std::vector<int>> rgs_to_blocks(const std::vector<int>& rgs, int nblocks) {
    std::vector<std::vector<int>> blocks(nblocks);
    for (int i = 0; i < static_cast<int>(rgs.size()); ++i) blocks[rgs[i]].push_back(i);
    return blocks;
}

// perfect matchings of the given (sorted) positions, first leg matched in turn
void enumerate_matchings(std::vector<int> pts, std::vector<std::vector<int>>& cur,
                         const std::function<void()>& emit) {
    if (pts.empty()) {
        emit();
        return;
    }
    int first = pts[0];
    for (size_t i = 1; i < pts.size(); ++i) {
        std::vector<int> rest;
        for (size_t j = 1; j < pts.size(); ++j)
            if (j != i) rest.push_back(pts[j]);
        cur.push_back({first, pts[i]});
        enumerate_matchings(rest, cur, emit);
        cur.pop_back();
    }
}

// noncrossing partitions of the sorted point list: choose the rest of the
// block of the minimum, split the remainder into the gaps, recurse
void enumerate_noncrossing(const std::vector<int>& pts, std::vector<std::vector<int>>& cur,
                           const std::function<void()>& emit) {
    if (pts.empty()) {
        emit();
        return;
    }
    int n = static_cast<int>(pts.size());
    // subsets of pts[1..] joined with pts[0]
    for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> block{pts[0]};
        for (int i = 0; i < n - 1; ++i)
            if (mask & (1u << i)) block.push_back(pts[i + 1]);
        // remaining points fall into gaps delimited by the chosen block
        std::vector<std::vector<int>> gaps(block.size());
        bool ok = true;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) continue;
            int p = pts[i + 1];
            size_t g = 0;
            while (g + 1 < block.size() && p > block[g + 1]) ++g;
            // p sits between block[g] and block[g+1] (or after the last)
            gaps[g].push_back(p);
        }
        (void)ok;
        cur.push_back(block);
        // recurse over the gaps as independent noncrossing partitions
        std::function<void(size_t)> rec_gap = [&](size_t gi) {
            if (gi == gaps.size()) {
                emit();
                return;
            }
            enumerate_noncrossing(gaps[gi], cur, [&]() { rec_gap(gi + 1); });
        };
        rec_gap(0);
        cur.pop_back();
    }
}

// noncrossing pairings: pair the first point at an odd distance, recurse on
// the enclosed and the remaining points
void enumerate_nc_pairings(const std::vector<int>& pts, std::vector<std::vector<int>>& cur,
                           const std::function<void()>& emit) {
    if (pts.empty()) {
        emit();
        return;
    }
    int n = static_cast<int>(pts.size());
    for (int i = 1; i < n; i += 2) {
        std::vector<int> inside(pts.begin() + 1, pts.begin() + i);
        std::vector<int> outside(pts.begin() + i + 1, pts.end());
        cur.push_back({pts[0], pts[i]});
        enumerate_nc_pairings(inside, cur, [&]() { enumerate_nc_pairings(outside, cur, emit); });
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(const ColoredWord& word,
                                            const PartitionClassFilter& filter) {
    size_t k = word.size();
    if (k > kEnumerationCap) throw CapacityError("enumerate: more than 16 points");
    std::vector<Partition> out;
    auto push = [&](std::vector<std::vector<int>> blocks) {
        Partition p = Partition::one_row(word, std::move(blocks));
        if (filter.accepts(p)) out.push_back(std::move(p));
    };

    std::vector<int> all_pts(k);
    std::iota(all_pts.begin(), all_pts.end(), 0);
    std::vector<std::vector<int>> cur;

    switch (filter.cls) {
        case PartitionClass::Pairings:
            if (k % 2) return {};
            enumerate_matchings(all_pts, cur, [&]() { push(cur); });
            break;
        case PartitionClass::NoncrossingPairings:
            if (k % 2) return {};
            enumerate_nc_pairings(all_pts, cur, [&]() { push(cur); });
            break;
        case PartitionClass::Noncrossing:
            enumerate_noncrossing(all_pts, cur, [&]() { push(cur); });
            break;
        default:
            enumerate_rgs(static_cast<int>(k),
                          [&](const std::vector<int>& rgs, int nb) { push(rgs_to_blocks(rgs, nb)); });
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_by_blocks(int k, int b, const PartitionClassFilter& filter) {
    if (b < 0 || b > k) throw DomainError("count_by_blocks: need 0 <= b <= k");
    if (k == 0) return BigInt(b == 0 ? 1 : 0);
    BigInt count(0);
    for (const auto& p : enumerate_partitions(uncolored_word(k), filter))
        if (static_cast<int>(p.num_blocks()) == b) count += BigInt(1);
    return count;
}

BigInt stirling2(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    if (n == 0) return BigInt(1);
    std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, BigInt(0)));
    s[0][0] = BigInt(1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            s[i][j] = BigInt(j) * s[i - 1][j] + s[i - 1][j - 1];
    return s[n][k];
}

BigInt bell_number(int n) {
    BigInt total(0);
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

BigInt catalan_number(int n) {
    return BigInt::binomial(2 * n, n).divide_exact(BigInt(n + 1));
}

Partition fatten(const Partition& p) {
    if (!p.is_one_row()) throw DomainError("fatten: one-row input required");
    if (!is_noncrossing(p)) throw DomainError("fatten: crossing input");
    size_t k = p.lower_size();
    std::vector<std::vector<int>> pairs;
    for (const auto& block : p.blocks()) {
        size_t m = block.size();
        // leg b doubles to 2b (left copy) and 2b+1 (right copy); the block
        // contour pairs each right copy with the next left copy, cyclically
        for (size_t j = 0; j + 1 < m; ++j)
            pairs.push_back({2 * block[j] + 1, 2 * block[j + 1]});
        pairs.push_back({2 * block[0], 2 * block[m - 1] + 1});
    }
    return Partition::one_row_uncolored(2 * k, std::move(pairs));
}

Partition shrink(const Partition& p) {
    if (!p.is_one_row()) throw DomainError("shrink: one-row input required");
    if (p.lower_size() % 2 || !is_pairing(p) || !is_noncrossing(p))
        throw DomainError("shrink: input must be a noncrossing pairing of 2k points");
    size_t k = p.lower_size() / 2;
    UnionFind uf(static_cast<int>(k));
    for (const auto& pr : p.blocks()) {
        int a = pr[0] / 2, b = pr[1] / 2;
        uf.unite(a, b);
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(k); ++i) groups[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, legs] : groups) blocks.push_back(std::move(legs));
    return Partition::one_row_uncolored(k, std::move(blocks));
}

} // namespace easygram
