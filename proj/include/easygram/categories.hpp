#pragma once

#include "easygram/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace easygram {

// The named families of partitions that span intertwiners of the classical
// and free easy groups. The parameter s of Ps/NCs is a positive integer or
// infinity (s = 0 encodes infinity); s = 1 reduces Ps to P, s = 2 to P_even,
// s = infinity to the color-balanced family CPeven.
enum class CategoryFamily {
    P,
    P_even,
    CPeven,
    Ps,
    P2,
    CP2,
    P12,
    CP12,
    NC,
    NC_even,
    CNCeven,
    NCs,
    NC2,
    CNC2,
    NC12,
};

struct CategoryId {
    CategoryFamily family = CategoryFamily::P;
    int s = 1;  // used by Ps / NCs only; 0 means infinity

    static CategoryId of(CategoryFamily f) { return {f, 1}; }
    static CategoryId ps(int s) { return {CategoryFamily::Ps, s}; }
    static CategoryId ncs(int s) { return {CategoryFamily::NCs, s}; }

    bool noncrossing() const {
        switch (family) {
            case CategoryFamily::NC:
            case CategoryFamily::NC_even:
            case CategoryFamily::CNCeven:
            case CategoryFamily::NCs:
            case CategoryFamily::NC2:
            case CategoryFamily::CNC2:
            case CategoryFamily::NC12:
                return true;
            default:
                return false;
        }
    }

    // lowercase wire token, e.g. "p_even", "p_s:4", "cnc2"
    std::string token() const;
    static CategoryId from_token(const std::string& token);
};

// Membership test. One-row partitions are tested directly; a two-row
// partition is tested by rotating its lower legs to the upper row with color
// inversion first, so membership is consistent with Frobenius rotation.
bool contains(const CategoryId& cat, const Partition& p);

// All one-row members on the given word, canonical order.
std::vector<Partition> members(const CategoryId& cat, const ColoredWord& word);

struct CompositionResult {
    Partition result;
    int loops = 0;  // closed components erased from the middle row
};

// [pi sigma]: sigma placed to the right of pi on both rows
Partition horizontal_concat(const Partition& pi, const Partition& sigma);

// [^sigma_pi]: sigma glued on top of pi along the middle row. Requires
// sigma's lower word to equal pi's upper word. Middle points are deleted;
// components living entirely in the middle are counted as loops.
CompositionResult vertical_concat(const Partition& pi, const Partition& sigma);

// upside-down turning: rows swapped, colors inverted
Partition involute(const Partition& p);

struct AxiomReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// Exhaustive closure check of the category axioms on all members with at
// most k_max total legs: horizontal/vertical concatenation, involution,
// presence of the identity and the semicircle, and of the crossing for the
// crossing-stable classical families.
AxiomReport verify_axioms(const CategoryId& cat, int k_max);

// same closure checks against an arbitrary finite family (used to exhibit
// non-examples)
AxiomReport verify_axioms_of_set(const std::vector<Partition>& members_with_colors, int k_max);

} // namespace easygram
