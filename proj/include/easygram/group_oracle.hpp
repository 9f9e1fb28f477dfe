#pragma once

#include "easygram/cyclotomic.hpp"
#include "easygram/partition.hpp"
#include "easygram/rational.hpp"

#include <string>
#include <vector>

namespace easygram {

enum class GroupFamily {
    Cyclic,             // rotation matrices of the N-cycle
    Dihedral,           // N-gon symmetries as permutation matrices
    Symmetric,          // all permutation matrices
    Alternating,        // even permutations
    Hyperoctahedral,    // signed permutation matrices
    ComplexReflection,  // permutation matrices with s-th root-of-unity phases
};

struct GroupSpec {
    GroupFamily family;
    int n = 1;
    int s = 1;  // phase order; 2 for Hyperoctahedral, given for ComplexReflection

    int phase_order() const {
        switch (family) {
            case GroupFamily::Hyperoctahedral: return 2;
            case GroupFamily::ComplexReflection: return s;
            default: return 1;
        }
    }
    BigInt order() const;
    std::string name() const;
};

// Generalized permutation matrix: entry at (sigma[j], j) is zeta_s^{phase[j]},
// zero elsewhere. Phases reduced mod s.
struct GenPermMatrix {
    std::vector<int> sigma;   // image of each column, 0-based
    std::vector<int> phase;   // phase exponent per column

    // entry exponent at (i, j), or -1 when the entry vanishes
    int entry_exponent(int i, int j) const { return sigma[j] == i ? phase[j] : -1; }

    Cyclotomic trace(int s) const;

    bool operator==(const GenPermMatrix& o) const {
        return sigma == o.sigma && phase == o.phase;
    }
};

inline constexpr int64_t kGroupOrderCap = 1000000;

// all elements, sigma lexicographic then phase vectors lexicographic
std::vector<GenPermMatrix> enumerate_group(const GroupSpec& g);

struct DiscreteLaw {
    struct Atom {
        Cyclotomic value;
        Rational probability;
    };
    std::vector<Atom> atoms;  // distinct values, deterministic order

    Rational probability_of(const Rational& v) const;
    bool operator==(const DiscreteLaw& o) const;
};

DiscreteLaw make_law(std::vector<std::pair<Cyclotomic, Rational>> weighted);

// exact distribution of the trace over the group
DiscreteLaw character_law(const GroupSpec& g);

// law of the upper-left s x s diagonal sum over the symmetric group,
// by enumeration, cross-checked internally against the closed convolution
// formula; a disagreement throws
DiscreteLaw truncated_character_law(const GroupSpec& g, int cutoff);

// closed forms of the character laws used as oracles
DiscreteLaw cyclic_character_law_closed(int n);
DiscreteLaw dihedral_character_law_closed(int n);
DiscreteLaw symmetric_character_law_closed(int n);
DiscreteLaw symmetric_truncated_law_closed(int n, int cutoff);

// (1/|G|) sum over the group of products of matrix entries; white letters
// take the entry, black letters its conjugate
Cyclotomic integrate_exact(const GroupSpec& g, const ColoredWord& exponents,
                           const std::vector<int>& rows, const std::vector<int>& cols);

// (1/|G|) sum of products of colored traces; asserts the result is a
// nonnegative rational integer
BigInt fix_dim(const GroupSpec& g, const ColoredWord& word);

// exact fixed-vector test for a generalized permutation matrix: white letters
// act by the matrix, black letters by its conjugate
bool is_fixed_vector_exact(const Partition& one_row, const GenPermMatrix& g, int phase_order);

} // namespace easygram
