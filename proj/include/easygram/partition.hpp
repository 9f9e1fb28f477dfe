#pragma once

#include "easygram/bigint.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace easygram {

enum class Color : uint8_t { White = 0, Black = 1 };

inline Color invert(Color c) { return c == Color::White ? Color::Black : Color::White; }

// A word over {white, black}; uncolored computations treat every letter as white.
using ColoredWord = std::vector<Color>;

ColoredWord uncolored_word(size_t k);
// parses letters 'o'/'w' (white) and 'b' (black)
ColoredWord parse_word(const std::string& s);
std::string word_to_string(const ColoredWord& w);

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A set partition of the legs of a two-row diagram: an upper row of k colored
// points and a lower row of l colored points. Legs are numbered 0..k-1 on the
// upper row (left to right) and k..k+l-1 on the lower row. One-row partitions
// live on the lower row, with an empty upper row, so that the same type serves
// Gram vectors (lower row only) and diagram algebra elements (both rows).
//
// Canonical form: legs sorted within blocks, blocks sorted by least leg.
// All instances are kept canonical, so equality is structural.
class Partition {
public:
    Partition() = default;
    Partition(ColoredWord upper, ColoredWord lower, std::vector<std::vector<int>> blocks);

    // one-row partition: all legs on the lower row
    static Partition one_row(ColoredWord word, std::vector<std::vector<int>> blocks);
    static Partition one_row_uncolored(size_t k, std::vector<std::vector<int>> blocks);

    // identity in P(w, w): upper leg i joined to lower leg i
    static Partition identity(const ColoredWord& w);

    const ColoredWord& upper() const { return upper_; }
    const ColoredWord& lower() const { return lower_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    size_t upper_size() const { return upper_.size(); }
    size_t lower_size() const { return lower_.size(); }
    size_t total_legs() const { return upper_.size() + lower_.size(); }
    size_t num_blocks() const { return blocks_.size(); }
    bool is_one_row() const { return upper_.empty(); }

    Color leg_color(int leg) const {
        return leg < static_cast<int>(upper_.size()) ? upper_[leg]
                                                     : lower_[leg - upper_.size()];
    }

    // block index of each leg
    std::vector<int> leg_to_block() const;

    bool operator==(const Partition& o) const {
        return upper_ == o.upper_ && lower_ == o.lower_ && blocks_ == o.blocks_;
    }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const;  // canonical total order

    // stable text key, e.g. "ow|o;0,2|1" style; used for hashing and output order
    std::string key() const;
    size_t hash() const { return std::hash<std::string>{}(key()); }

    // unfolds a two-row partition to a single row read around the boundary:
    // upper legs left to right, then lower legs right to left with colors
    // inverted. Planarity of the two-row picture is noncrossingness of the
    // unfolded word.
    Partition rotate_to_one_row() const;

    std::string to_string() const;

private:
    ColoredWord upper_;
    ColoredWord lower_;
    std::vector<std::vector<int>> blocks_;
    void canonicalize();
};

struct PartitionHash {
    size_t operator()(const Partition& p) const { return p.hash(); }
};

// ---- predicates ----

// interleaved legs a<b<c<d with a,c in one block and b,d in another
bool is_noncrossing(const Partition& p);
bool has_even_blocks(const Partition& p);
bool is_pairing(const Partition& p);
bool blocks_at_most_two(const Partition& p);

// ---- lattice structure on a common leg set ----

bool same_shape(const Partition& a, const Partition& b);
// every block of a contained in a block of b
bool leq(const Partition& a, const Partition& b);
// least upper bound, by transitive closure of the union of block relations
Partition join(const Partition& a, const Partition& b);
// Moebius function of the full partition lattice on the given leg set
BigInt mobius(const Partition& a, const Partition& b);
// Moebius value mu(0, 1) on the lattice of partitions of m points, memoized
BigInt mobius_full_lattice(int m);

// partition with legs i, j in one block iff indices[i] == indices[j]
Partition kernel(const std::vector<int>& indices);
Partition kernel_colored(const std::vector<int>& indices, const ColoredWord& w);

// ---- enumeration ----

enum class PartitionClass {
    All,
    Noncrossing,
    Pairings,
    NoncrossingPairings,
    EvenBlocks,
    SingletonsAndPairings,
};

struct PartitionClassFilter {
    PartitionClass cls = PartitionClass::All;
    // optional extra predicate, conjoined with the class
    std::function<bool(const Partition&)> extra;

    bool accepts(const Partition& p) const;
};

inline constexpr size_t kEnumerationCap = 16;

// All one-row partitions of the word satisfying the filter, in canonical
// lexicographic order (by number of blocks is NOT imposed; order is the
// canonical key order), without duplicates. Throws CapacityError past the cap.
std::vector<Partition> enumerate_partitions(const ColoredWord& word,
                                            const PartitionClassFilter& filter = {});

// number of filtered partitions of k uncolored points with exactly b blocks
BigInt count_by_blocks(int k, int b, const PartitionClassFilter& filter = {});

// Stirling number of the second kind
BigInt stirling2(int n, int k);
BigInt bell_number(int n);
BigInt catalan_number(int n);

// ---- fattening bijection NC(k) <-> NC_2(2k) ----

// doubles every leg and every string; input must be a noncrossing one-row
// partition. The image is a noncrossing pairing of 2k points.
Partition fatten(const Partition& p);
// collapses consecutive leg pairs (2i, 2i+1); inverse of fatten
Partition shrink(const Partition& p);

} // namespace easygram
