#include "easygram/categories.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace easygram {

std::string CategoryId::token() const {
    switch (family) {
        case CategoryFamily::P: return "p";
        case CategoryFamily::P_even: return "p_even";
        case CategoryFamily::CPeven: return "cp_even";
        case CategoryFamily::Ps: return "p_s:" + std::to_string(s);
        case CategoryFamily::P2: return "p2";
        case CategoryFamily::CP2: return "cp2";
        case CategoryFamily::P12: return "p12";
        case CategoryFamily::CP12: return "cp12";
        case CategoryFamily::NC: return "nc";
        case CategoryFamily::NC_even: return "nc_even";
        case CategoryFamily::CNCeven: return "cnc_even";
        case CategoryFamily::NCs: return "nc_s:" + std::to_string(s);
        case CategoryFamily::NC2: return "nc2";
        case CategoryFamily::CNC2: return "cnc2";
        case CategoryFamily::NC12: return "nc12";
    }
    return "p";
}

CategoryId CategoryId::from_token(const std::string& token) {
    auto colon = token.find(':');
    std::string head = colon == std::string::npos ? token : token.substr(0, colon);
    int s = 1;
    if (colon != std::string::npos) {
        std::string tail = token.substr(colon + 1);
        s = (tail == "inf" || tail == "infinity") ? 0 : std::stoi(tail);
        if (s < 0) throw DomainError("category parameter s must be >= 1 (or inf)");
    }
    if (head == "p") return of(CategoryFamily::P);
    if (head == "p_even") return of(CategoryFamily::P_even);
    if (head == "cp_even") return of(CategoryFamily::CPeven);
    if (head == "p_s") return {CategoryFamily::Ps, s};
    if (head == "p2") return of(CategoryFamily::P2);
    if (head == "cp2") return of(CategoryFamily::CP2);
    if (head == "p12") return of(CategoryFamily::P12);
    if (head == "cp12") return of(CategoryFamily::CP12);
    if (head == "nc") return of(CategoryFamily::NC);
    if (head == "nc_even") return of(CategoryFamily::NC_even);
    if (head == "cnc_even") return of(CategoryFamily::CNCeven);
    if (head == "nc_s") return {CategoryFamily::NCs, s};
    if (head == "nc2") return of(CategoryFamily::NC2);
    if (head == "cnc2") return of(CategoryFamily::CNC2);
    if (head == "nc12") return of(CategoryFamily::NC12);
    throw DomainError("unknown category token: " + token);
}

namespace {

// signed color count (#white - #black) of one block
int block_color_balance(const Partition& p, const std::vector<int>& block) {
    int bal = 0;
    for (int leg : block) bal += (p.leg_color(leg) == Color::White) ? 1 : -1;
    return bal;
}

bool one_row_member(const CategoryId& cat, const Partition& p) {
    auto balanced_mod = [&](int s) {
        for (const auto& b : p.blocks()) {
            int bal = block_color_balance(p, b);
            if (s == 0) {
                if (bal != 0) return false;
            } else if (((bal % s) + s) % s != 0) {
                return false;
            }
        }
        return true;
    };
    auto pairs_match_colors = [&]() {
        for (const auto& b : p.blocks()) {
            if (b.size() == 2 && block_color_balance(p, b) != 0) return false;
        }
        return true;
    };

    switch (cat.family) {
        case CategoryFamily::P:
            return true;
        case CategoryFamily::P_even:
            return has_even_blocks(p);
        case CategoryFamily::CPeven:
            return balanced_mod(0);
        case CategoryFamily::Ps:
            return balanced_mod(cat.s);
        case CategoryFamily::P2:
            return is_pairing(p);
        case CategoryFamily::CP2:
            return is_pairing(p) && pairs_match_colors();
        case CategoryFamily::P12:
            return blocks_at_most_two(p);
        case CategoryFamily::CP12:
            return blocks_at_most_two(p) && pairs_match_colors();
        case CategoryFamily::NC:
            return is_noncrossing(p);
        case CategoryFamily::NC_even:
            return has_even_blocks(p) && is_noncrossing(p);
        case CategoryFamily::CNCeven:
            return balanced_mod(0) && is_noncrossing(p);
        case CategoryFamily::NCs:
            return balanced_mod(cat.s) && is_noncrossing(p);
        case CategoryFamily::NC2:
            return is_pairing(p) && is_noncrossing(p);
        case CategoryFamily::CNC2:
            return is_pairing(p) && pairs_match_colors() && is_noncrossing(p);
        case CategoryFamily::NC12:
            return blocks_at_most_two(p) && is_noncrossing(p);
    }
    return false;
}

} // namespace

bool contains(const CategoryId& cat, const Partition& p) {
    return one_row_member(cat, p.is_one_row() ? p : p.rotate_to_one_row());
}

std::vector<Partition> members(const CategoryId& cat, const ColoredWord& word) {
    PartitionClassFilter filter;
    switch (cat.family) {
        case CategoryFamily::P2:
        case CategoryFamily::CP2:
            filter.cls = PartitionClass::Pairings;
            break;
        case CategoryFamily::NC2:
        case CategoryFamily::CNC2:
            filter.cls = PartitionClass::NoncrossingPairings;
            break;
        case CategoryFamily::NC:
        case CategoryFamily::NC_even:
        case CategoryFamily::CNCeven:
        case CategoryFamily::NCs:
        case CategoryFamily::NC12:
            filter.cls = PartitionClass::Noncrossing;
            break;
        default:
            break;
    }
    filter.extra = [cat](const Partition& p) { return one_row_member(cat, p); };
    return enumerate_partitions(word, filter);
}

Partition horizontal_concat(const Partition& pi, const Partition& sigma) {
    size_t ku = pi.upper_size(), kl = pi.lower_size();
    size_t su = sigma.upper_size(), sl = sigma.lower_size();
    ColoredWord upper = pi.upper(), lower = pi.lower();
    upper.insert(upper.end(), sigma.upper().begin(), sigma.upper().end());
    lower.insert(lower.end(), sigma.lower().begin(), sigma.lower().end());
    // pi legs: upper 0..ku-1 stays; lower shifts by su
    // sigma legs: upper -> +ku, lower -> +ku+kl
    std::vector<std::vector<int>> blocks;
    for (const auto& b : pi.blocks()) {
        std::vector<int> nb;
        for (int leg : b)
            nb.push_back(leg < static_cast<int>(ku) ? leg : leg + static_cast<int>(su));
        blocks.push_back(std::move(nb));
    }
    for (const auto& b : sigma.blocks()) {
        std::vector<int> nb;
        for (int leg : b)
            nb.push_back(leg < static_cast<int>(su) ? leg + static_cast<int>(ku)
                                                    : leg + static_cast<int>(ku + kl));
        blocks.push_back(std::move(nb));
    }
    (void)sl;
    return Partition(std::move(upper), std::move(lower), std::move(blocks));
}

CompositionResult vertical_concat(const Partition& pi, const Partition& sigma) {
    if (sigma.lower() != pi.upper())
        throw ShapeError("vertical_concat: middle words do not match");
    size_t k = sigma.upper_size();   // outer upper
    size_t m = sigma.lower_size();   // middle
    size_t l = pi.lower_size();      // outer lower
    // glue on k + m + l nodes: sigma-upper [0,k), middle [k,k+m), pi-lower [k+m,...)
    std::vector<int> parent(k + m + l);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (const auto& b : sigma.blocks())
        for (size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);  // sigma legs already 0..k+m
    for (const auto& b : pi.blocks())
        for (size_t i = 1; i < b.size(); ++i)
            unite(b[0] + static_cast<int>(k), b[i] + static_cast<int>(k));
    // pi's upper leg j is the same middle node as sigma's lower leg j: both map
    // to index k + j, so no extra unions are needed beyond the shift above.

    std::map<int, std::vector<int>> comps;
    for (int v = 0; v < static_cast<int>(k + m + l); ++v) comps[find(v)].push_back(v);

    std::vector<std::vector<int>> blocks;
    int loops = 0;
    for (auto& [root, nodes] : comps) {
        std::vector<int> outer;
        for (int v : nodes) {
            if (v < static_cast<int>(k)) outer.push_back(v);
            else if (v >= static_cast<int>(k + m))
                outer.push_back(v - static_cast<int>(m));
        }
        if (outer.empty()) ++loops;
        else blocks.push_back(std::move(outer));
    }
    return {Partition(sigma.upper(), pi.lower(), std::move(blocks)), loops};
}

Partition involute(const Partition& p) {
    size_t k = p.upper_size(), l = p.lower_size();
    ColoredWord upper(l), lower(k);
    for (size_t j = 0; j < l; ++j) upper[j] = invert(p.lower()[j]);
    for (size_t i = 0; i < k; ++i) lower[i] = invert(p.upper()[i]);
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks()) {
        std::vector<int> nb;
        for (int leg : b) {
            if (leg < static_cast<int>(k)) nb.push_back(static_cast<int>(l) + leg);
            else nb.push_back(leg - static_cast<int>(k));
        }
        blocks.push_back(std::move(nb));
    }
    return Partition(std::move(upper), std::move(lower), std::move(blocks));
}

namespace {

// semicircle over the given two-letter word, as an element of P(0, ab)
Partition semicircle(Color a, Color b) {
    return Partition::one_row({a, b}, {{0, 1}});
}

std::vector<ColoredWord> all_words(size_t len, bool colored) {
    std::vector<ColoredWord> out;
    if (!colored) {
        out.push_back(uncolored_word(len));
        return out;
    }
    for (uint32_t mask = 0; mask < (1u << len); ++mask) {
        ColoredWord w(len);
        for (size_t i = 0; i < len; ++i)
            w[i] = (mask >> i) & 1 ? Color::Black : Color::White;
        out.push_back(std::move(w));
    }
    return out;
}

bool color_sensitive(const CategoryId& cat) {
    switch (cat.family) {
        case CategoryFamily::CPeven:
        case CategoryFamily::CP2:
        case CategoryFamily::CP12:
        case CategoryFamily::CNCeven:
        case CategoryFamily::CNC2:
            return true;
        case CategoryFamily::Ps:
        case CategoryFamily::NCs:
            // s = 2 degenerates to the size parity, s = 1 to no condition
            return cat.s == 0 || cat.s >= 3;
        default:
            return false;
    }
}

// members as two-row partitions with <= k_max total legs, over all row splits
// and (for color-sensitive categories) all color words
std::vector<Partition> two_row_members(const CategoryId& cat, int k_max) {
    std::vector<Partition> out;
    bool colored = color_sensitive(cat);
    for (int total = 0; total <= k_max; ++total) {
        for (const ColoredWord& w : all_words(static_cast<size_t>(total), colored)) {
            for (const Partition& p : members(cat, w)) {
                // refold the boundary word at every split: the inverse of
                // rotate_to_one_row with upper size k
                for (int k = 0; k <= total; ++k) {
                    int l = total - k;
                    ColoredWord upper(w.begin(), w.begin() + k);
                    ColoredWord lower(l);
                    for (int j = 0; j < l; ++j) lower[j] = invert(w[k + (l - 1 - j)]);
                    std::vector<std::vector<int>> blocks;
                    for (const auto& b : p.blocks()) {
                        std::vector<int> nb;
                        for (int leg : b) {
                            if (leg < k) nb.push_back(leg);
                            else nb.push_back(k + (l - 1 - (leg - k)));
                        }
                        blocks.push_back(std::move(nb));
                    }
                    out.emplace_back(std::move(upper), std::move(lower), std::move(blocks));
                }
            }
        }
    }
    return out;
}

} // namespace

AxiomReport verify_axioms_of_set(const std::vector<Partition>& mem, int k_max) {
    AxiomReport report;
    std::set<std::string> keys;
    for (const auto& p : mem) keys.insert(p.key());
    auto is_member = [&](const Partition& p) { return keys.count(p.key()) > 0; };
    auto fail = [&](const std::string& what, const Partition& ex) {
        report.pass = false;
        if (report.failures.size() < 8) report.failures.push_back(what + ": " + ex.to_string());
    };

    for (const auto& a : mem) {
        if (!is_member(involute(a))) fail("involution escapes the set", a);
        for (const auto& b : mem) {
            if (static_cast<int>(a.total_legs() + b.total_legs()) <= k_max) {
                Partition h = horizontal_concat(a, b);
                if (!is_member(h)) fail("horizontal concatenation escapes the set", h);
            }
            if (b.lower() == a.upper() &&
                static_cast<int>(b.upper_size() + a.lower_size()) <= k_max) {
                CompositionResult v = vertical_concat(a, b);
                if (!is_member(v.result)) fail("vertical concatenation escapes the set", v.result);
            }
        }
    }
    return report;
}

AxiomReport verify_axioms(const CategoryId& cat, int k_max) {
    if (k_max > 6) throw CapacityError("verify_axioms: k_max over 6");
    std::vector<Partition> mem = two_row_members(cat, k_max);
    AxiomReport report = verify_axioms_of_set(mem, k_max);

    auto expect_member = [&](const Partition& p, const std::string& what) {
        if (!contains(cat, p)) {
            report.pass = false;
            report.failures.push_back("missing " + what + ": " + p.to_string());
        }
    };
    expect_member(Partition::identity({Color::White}), "identity");
    expect_member(semicircle(Color::White, Color::Black), "semicircle (white black)");
    expect_member(semicircle(Color::Black, Color::White), "semicircle (black white)");
    if (!cat.noncrossing()) {
        // the basic crossing, with matched colors on the vertical
        Partition crossing({Color::White, Color::White}, {Color::White, Color::White},
                           {{0, 3}, {1, 2}});
        expect_member(crossing, "crossing");
    }
    return report;
}

} // namespace easygram
