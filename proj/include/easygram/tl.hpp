#pragma once

#include "easygram/categories.hpp"
#include "easygram/laurent.hpp"
#include "easygram/partition.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace easygram {

// The loop parameter: a formal variable, a numeric value, or the bracket
// value -A^2 - A^{-2}. Represented uniformly as a Laurent polynomial; the
// formal variable occupies four quarter-units, the bracket variable one.
struct LoopParam {
    LaurentPoly value;

    static LoopParam formal() { return {LaurentPoly::variable(4)}; }
    static LoopParam numeric(int64_t n) { return {LaurentPoly(n)}; }
    // -A^2 - A^{-2} with A one quarter-unit
    static LoopParam bracket() {
        return {LaurentPoly::term(BigInt(-1), 2) + LaurentPoly::term(BigInt(-1), -2)};
    }
    // q^{1/2} + q^{-1/2} with q four quarter-units
    static LoopParam root_sum() {
        return {LaurentPoly::term(BigInt(1), 2) + LaurentPoly::term(BigInt(1), -2)};
    }
};

// Element of the diagram algebra on k strands: a formal sum of noncrossing
// pairings of k upper and k lower points with Laurent coefficients.
class TLElement {
public:
    TLElement() = default;
    explicit TLElement(int strands) : strands_(strands) {}

    static TLElement identity(int strands);
    // the cup-cap generator joining strands i and i+1 (1-based i)
    static TLElement generator(int strands, int i);
    static TLElement basis(const Partition& diagram);

    int strands() const { return strands_; }
    const std::map<Partition, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& diagram, const LaurentPoly& coeff);

    TLElement operator+(const TLElement& o) const;
    TLElement operator-() const;
    TLElement scale(const LaurentPoly& c) const;
    bool operator==(const TLElement& o) const {
        return strands_ == o.strands_ && terms_ == o.terms_;
    }
    bool operator!=(const TLElement& o) const { return !(*this == o); }

    // upside-down turn, extended antilinearly in spirit but with integer
    // coefficients kept as they are
    TLElement star() const;

    std::string to_string() const;

private:
    int strands_ = 0;
    std::map<Partition, LaurentPoly> terms_;
};

// concatenation product: x stacked above y, loops worth delta each
TLElement tl_multiply(const TLElement& x, const TLElement& y, const LoopParam& delta);

// closure trace: tr(D) = delta^{loops(closure) - k}, linear extension
LaurentPoly markov_trace(const TLElement& x, const LoopParam& delta);

// number of closed loops left by joining upper i to lower i on a basis diagram
int closure_loops(const Partition& diagram);

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;  // +i / -i for the i-th generator, 1-based

    int writhe() const {
        int w = 0;
        for (int l : letters) w += l > 0 ? 1 : -1;
        return w;
    }
    static BraidWord parse(int strands, const std::string& text);
};

enum class BraidMap {
    Kauffman,  // g 	-> A + A^{-1} eps, loop value -A^2 - A^{-2}
    Jones,     // g -> q^{1/2} eps - 1, loop value q^{1/2} + q^{-1/2}
};

TLElement braid_to_tl(const BraidWord& w, BraidMap map);

// Kauffman bracket of the braid closure, normalized so the unknot gives 1
LaurentPoly kauffman_bracket(const BraidWord& w);

// bracket with the writhe correction (-A)^{-3 writhe}, rendered in the
// output variable by the quarter-turn substitution fixed against the
// reference values (trefoil = q + q^3 - q^4)
LaurentPoly jones_polynomial(const BraidWord& w);

struct MarkovReport {
    bool pass = true;
    int trials = 0;
    std::string failing_moves;  // description of the first offending sequence
};

// random conjugations and stabilizations, checking invariance exactly
MarkovReport markov_invariance_test(const BraidWord& w, int trials, uint64_t seed);

struct SkeinReport {
    bool found = false;
    // identity q^{e1} V_+ - q^{e2} V_- = c (q^{1/2} +- q^{-1/2}) V_0 described
    // by its label when one of the candidate sign patterns holds
    std::string relation;
};

SkeinReport skein_check(const BraidWord& w, size_t position);

} // namespace easygram
