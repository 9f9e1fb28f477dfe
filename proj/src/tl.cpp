#include "easygram/tl.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace easygram {

TLElement TLElement::identity(int strands) {
    TLElement e(strands);
    e.terms_[Partition::identity(uncolored_word(strands))] = LaurentPoly(1);
    return e;
}

TLElement TLElement::generator(int strands, int i) {
    if (i < 1 || i >= strands) throw DomainError("generator index out of range");
    int k = strands;
    std::vector<std::vector<int>> blocks;
    blocks.push_back({i - 1, i});          // upper cup
    blocks.push_back({k + i - 1, k + i});  // lower cap
    for (int j = 0; j < k; ++j)
        if (j != i - 1 && j != i) blocks.push_back({j, k + j});
    TLElement e(strands);
    e.terms_[Partition(uncolored_word(k), uncolored_word(k), std::move(blocks))] =
        LaurentPoly(1);
    return e;
}

TLElement TLElement::basis(const Partition& diagram) {
    if (diagram.upper_size() != diagram.lower_size())
        throw ShapeError("basis diagram must have equal rows");
    if (!is_pairing(diagram) || !is_noncrossing(diagram))
        throw DomainError("basis diagram must be a planar pairing");
    TLElement e(static_cast<int>(diagram.upper_size()));
    e.terms_[diagram] = LaurentPoly(1);
    return e;
}

void TLElement::add_term(const Partition& diagram, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(diagram);
    if (it == terms_.end()) {
        terms_[diagram] = coeff;
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TLElement TLElement::operator+(const TLElement& o) const {
    if (strands_ != o.strands_) throw ShapeError("tl sum: strand mismatch");
    TLElement r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

TLElement TLElement::operator-() const {
    TLElement r(strands_);
    for (const auto& [d, c] : terms_) r.terms_[d] = -c;
    return r;
}

TLElement TLElement::scale(const LaurentPoly& c) const {
    TLElement r(strands_);
    if (c.is_zero()) return r;
    for (const auto& [d, coeff] : terms_) r.terms_[d] = coeff * c;
    return r;
}

TLElement TLElement::star() const {
    // upside-down turn; diagrams here are uncolored, so only rows swap
    TLElement r(strands_);
    for (const auto& [d, c] : terms_) {
        size_t k = d.upper_size(), l = d.lower_size();
        std::vector<std::vector<int>> blocks;
        for (const auto& b : d.blocks()) {
            std::vector<int> nb;
            for (int leg : b)
                nb.push_back(leg < static_cast<int>(k) ? static_cast<int>(l) + leg
                                                       : leg - static_cast<int>(k));
            blocks.push_back(std::move(nb));
        }
        r.terms_[Partition(uncolored_word(l), uncolored_word(k), std::move(blocks))] = c;
    }
    return r;
}

std::string TLElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string("x") << ")*" << d.to_string();
        first = false;
    }
    return os.str();
}

TLElement tl_multiply(const TLElement& x, const TLElement& y, const LoopParam& delta) {
    if (x.strands() != y.strands()) throw ShapeError("tl product: strand mismatch");
    TLElement r(x.strands());
    for (const auto& [dx, cx] : x.terms())
        for (const auto& [dy, cy] : y.terms()) {
            // x stacked above y
            CompositionResult comp = vertical_concat(dy, dx);
            LaurentPoly coeff = cx * cy;
            for (int l = 0; l < comp.loops; ++l) coeff *= delta.value;
            r.add_term(comp.result, coeff);
        }
    return r;
}

int closure_loops(const Partition& diagram) {
    int k = static_cast<int>(diagram.upper_size());
    std::vector<int> parent(2 * k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& b : diagram.blocks())
        for (size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
    for (int j = 0; j < k; ++j) unite(j, k + j);  // close around the side
    int comps = 0;
    for (int v = 0; v < 2 * k; ++v)
        if (find(v) == v) ++comps;
    return comps;
}

LaurentPoly markov_trace(const TLElement& x, const LoopParam& delta) {
    // delta^{c - k} needs an invertible loop value: a single Laurent term
    if (delta.value.terms().size() != 1)
        throw DomainError("markov trace: loop parameter must be a monomial");
    auto [dexp, dcoef] = *delta.value.terms().begin();
    if (!(dcoef == BigInt(1) || dcoef == BigInt(-1)))
        throw DomainError("markov trace: loop coefficient must be a unit");
    LaurentPoly out;
    int k = x.strands();
    for (const auto& [d, c] : x.terms()) {
        int e = closure_loops(d) - k;
        BigInt unit = (dcoef == BigInt(-1) && (e % 2 != 0)) ? BigInt(-1) : BigInt(1);
        out += c * LaurentPoly::term(unit, dexp * e);
    }
    return out;
}

BraidWord BraidWord::parse(int strands, const std::string& text) {
    BraidWord w;
    w.strands = strands;
    std::istringstream is(text);
    int v;
    while (is >> v) {
        if (v == 0 || std::abs(v) >= strands)
            throw DomainError("braid letter out of generator range");
        w.letters.push_back(v);
    }
    return w;
}

TLElement braid_to_tl(const BraidWord& w, BraidMap map) {
    LoopParam delta = map == BraidMap::Kauffman ? LoopParam::bracket() : LoopParam::root_sum();
    TLElement acc = TLElement::identity(w.strands);
    for (int letter : w.letters) {
        int i = std::abs(letter);
        TLElement gen = TLElement::generator(w.strands, i);
        TLElement factor(w.strands);
        if (map == BraidMap::Kauffman) {
            // g -> A + A^{-1} eps, inverse letter swaps the weights
            int a = letter > 0 ? 1 : -1;
            factor = TLElement::identity(w.strands).scale(LaurentPoly::term(BigInt(1), a)) +
                     gen.scale(LaurentPoly::term(BigInt(1), -a));
        } else {
            // g -> t eps - 1 with t = q^{1/2}; the inverse is t^{-1} eps - 1
            int tq = letter > 0 ? 2 : -2;
            factor = gen.scale(LaurentPoly::term(BigInt(1), tq)) +
                     TLElement::identity(w.strands).scale(LaurentPoly(-1));
        }
        acc = tl_multiply(acc, factor, delta);
    }
    return acc;
}

namespace {

// closure sum with one loop worth of normalization removed: the unknot and
// every braid closure carry at least one loop
LaurentPoly raw_bracket(const TLElement& x) {
    LaurentPoly delta = LoopParam::bracket().value;
    LaurentPoly out;
    for (const auto& [d, c] : x.terms()) {
        int loops = closure_loops(d);
        out += c * LaurentPoly::pow(delta, static_cast<uint64_t>(loops - 1));
    }
    return out;
}

// the substitution A = q^{-1/4}: fixed so that the reference trefoil braid
// "1 1 1" evaluates to q + q^3 - q^4
constexpr int kQuarterTurn = -1;

} // namespace

LaurentPoly kauffman_bracket(const BraidWord& w) {
    return raw_bracket(braid_to_tl(w, BraidMap::Kauffman));
}

LaurentPoly jones_polynomial(const BraidWord& w) {
    LaurentPoly bracket = kauffman_bracket(w);
    int wr = w.writhe();
    // (-A)^{-3 wr}
    BigInt sign = (3 * wr) % 2 ? BigInt(-1) : BigInt(1);
    LaurentPoly normalized = bracket * LaurentPoly::term(sign, -3 * wr);
    LaurentPoly v = normalized.scale_exponents(kQuarterTurn);
    if (!v.exponents_divisible_by(2))
        throw std::logic_error("jones polynomial: quarter powers survived normalization");
    return v;
}

MarkovReport markov_invariance_test(const BraidWord& w, int trials, uint64_t seed) {
    if (trials < 1) throw DomainError("markov test: trials >= 1");
    MarkovReport report;
    report.trials = trials;
    LaurentPoly reference = jones_polynomial(w);
    std::mt19937_64 rng(seed);
    // each trial applies an independent short sequence of moves to the base
    // word and demands exact equality of the invariant
    for (int t = 0; t < trials; ++t) {
        BraidWord cur = w;
        std::ostringstream moves;
        int stabilizations = 0;
        int nmoves = 1 + static_cast<int>(rng() % 3);
        for (int m = 0; m < nmoves; ++m) {
            bool stabilize = stabilizations < 2 && (rng() % 3 == 0);
            if (stabilize) {
                int sign = (rng() & 1) ? 1 : -1;
                int letter = sign * cur.strands;
                cur.strands += 1;
                cur.letters.push_back(letter);
                ++stabilizations;
                moves << "s" << letter << " ";
            } else if (cur.strands >= 2) {
                int gen = 1 + static_cast<int>(rng() % (cur.strands - 1));
                int sign = (rng() & 1) ? 1 : -1;
                std::vector<int> conj;
                conj.push_back(sign * gen);
                conj.insert(conj.end(), cur.letters.begin(), cur.letters.end());
                conj.push_back(-sign * gen);
                cur.letters = std::move(conj);
                moves << "c" << sign * gen << " ";
            }
        }
        if (jones_polynomial(cur) != reference) {
            report.pass = false;
            report.failing_moves = moves.str();
            return report;
        }
    }
    return report;
}

SkeinReport skein_check(const BraidWord& w, size_t position) {
    if (position >= w.letters.size()) throw DomainError("skein: position out of range");
    BraidWord plus = w, minus = w, zero = w;
    int i = std::abs(w.letters[position]);
    plus.letters[position] = i;
    minus.letters[position] = -i;
    zero.letters.erase(zero.letters.begin() + static_cast<long>(position));
    LaurentPoly vp = jones_polynomial(plus);
    LaurentPoly vm = jones_polynomial(minus);
    LaurentPoly v0 = jones_polynomial(zero);

    LaurentPoly q = LaurentPoly::term(BigInt(1), 4);
    LaurentPoly qinv = LaurentPoly::term(BigInt(1), -4);
    LaurentPoly sqrt_sum = LaurentPoly::term(BigInt(1), 2) + LaurentPoly::term(BigInt(1), -2);
    LaurentPoly sqrt_diff = LaurentPoly::term(BigInt(1), 2) - LaurentPoly::term(BigInt(1), -2);

    struct Candidate {
        LaurentPoly lhs_plus, lhs_minus, rhs;
        const char* label;
    };
    std::vector<Candidate> candidates = {
        {qinv, q, sqrt_sum, "q^{-1} V+ - q V- = (q^{1/2}+q^{-1/2}) V0"},
        {qinv, q, -sqrt_sum, "q^{-1} V+ - q V- = -(q^{1/2}+q^{-1/2}) V0"},
        {qinv, q, sqrt_diff, "q^{-1} V+ - q V- = (q^{1/2}-q^{-1/2}) V0"},
        {qinv, q, -sqrt_diff, "q^{-1} V+ - q V- = -(q^{1/2}-q^{-1/2}) V0"},
        {q, qinv, sqrt_sum, "q V+ - q^{-1} V- = (q^{1/2}+q^{-1/2}) V0"},
        {q, qinv, -sqrt_sum, "q V+ - q^{-1} V- = -(q^{1/2}+q^{-1/2}) V0"},
        {q, qinv, sqrt_diff, "q V+ - q^{-1} V- = (q^{1/2}-q^{-1/2}) V0"},
        {q, qinv, -sqrt_diff, "q V+ - q^{-1} V- = -(q^{1/2}-q^{-1/2}) V0"},
    };
    SkeinReport report;
    for (const auto& c : candidates) {
        if (c.lhs_plus * vp - c.lhs_minus * vm == c.rhs * v0) {
            report.found = true;
            report.relation = c.label;
            return report;
        }
    }
    return report;
}

} // namespace easygram
