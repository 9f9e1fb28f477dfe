// Command line frontend: exact partition combinatorics, Gram/Weingarten
// calculus, finite group oracles, moment laws, cumulants, and the braid
// closure invariant. Output is JSON (or CSV for matrices) on standard
// output; progress and usage go to standard error.

#include "CLI11.hpp"
#include "json.hpp"

#include "easygram/cumulants.hpp"
#include "easygram/cyclotomic.hpp"
#include "easygram/gram.hpp"
#include "easygram/group_oracle.hpp"
#include "easygram/prob_laws.hpp"
#include "easygram/tl.hpp"
#include "easygram/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace easygram;

namespace {

constexpr const char* kSchema = "easygram/1";

std::string g_out_file;
bool g_float = false;

std::string rat_str(const Rational& r) {
    if (!g_float) return r.to_string();
    std::ostringstream os;
    os.precision(12);
    os << r.to_double();
    return os.str();
}

void emit(const json& doc) {
    std::string text = doc.dump(2);
    if (!g_out_file.empty()) {
        std::ofstream f(g_out_file);
        f << text << "\n";
    }
    std::cout << text << "\n";
}

void emit_csv(const std::string& text) {
    if (!g_out_file.empty()) {
        std::ofstream f(g_out_file);
        f << text;
    }
    std::cout << text;
}

json partition_json(const Partition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks()) {
        json legs = json::array();
        for (int leg : b) {
            if (leg < static_cast<int>(p.upper_size()))
                legs.push_back("u" + std::to_string(leg));
            else
                legs.push_back("l" + std::to_string(leg - p.upper_size()));
        }
        blocks.push_back(legs);
    }
    return json{{"upper", word_to_string(p.upper())},
                {"lower", word_to_string(p.lower())},
                {"blocks", blocks}};
}

json law_json(const DiscreteLaw& law) {
    json atoms = json::array();
    for (const auto& a : law.atoms) {
        json atom;
        if (a.value.is_rational()) {
            atom["atom"] = a.value.rational_value().to_string();
        } else {
            json coeffs = json::array();
            for (const auto& c : a.value.coeffs()) coeffs.push_back(c.to_string());
            atom["atom"] = json{{"coeffs", coeffs}, {"order", a.value.order()}};
        }
        atom["prob"] = a.probability.to_string();
        atoms.push_back(atom);
    }
    return atoms;
}

json laurent_json(const LaurentPoly& p) {
    json out = json::object();
    for (const auto& [e, c] : p.terms())
        out["q^{" + p.exponent_label(e) + "}"] = c.to_int64();
    return out;
}

json matrix_json(const ExactMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_csv(const ExactMatrix& m) {
    std::ostringstream os;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ",";
            os << m.at(i, j).to_string();
        }
        os << "\n";
    }
    return os.str();
}

std::vector<int> parse_indices(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ','))
        if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ','))
        if (!cur.empty()) out.push_back(Rational::parse(cur));
    return out;
}

GroupSpec group_from_token(const std::string& token, int n, int s) {
    if (token == "zn") return {GroupFamily::Cyclic, n, 1};
    if (token == "dn") return {GroupFamily::Dihedral, n, 1};
    if (token == "sn") return {GroupFamily::Symmetric, n, 1};
    if (token == "an") return {GroupFamily::Alternating, n, 1};
    if (token == "hn") return {GroupFamily::Hyperoctahedral, n, 2};
    if (token == "hns") return {GroupFamily::ComplexReflection, n, s};
    throw DomainError("unknown group token: " + token);
}

json poly_json(const IntPoly& p, const std::string& var) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
    return json{{"variable", var}, {"coeffs_low_to_high", coeffs}, {"text", p.to_string(var)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition combinatorics and diagram algebra toolkit"};
    app.require_subcommand(1);
    app.add_option("--out", g_out_file, "also write the payload to this file");
    app.add_flag("--float", g_float, "render rationals as decimal approximations");

    // ---- partitions ----
    auto* partitions = app.add_subcommand("partitions", "enumerate set partitions");
    std::string p_mode, p_colors, p_class = "p", p_format = "json";
    int p_points = 0, p_blocks = -1;
    partitions->add_option("mode", p_mode)->required()->check(CLI::IsMember({"list", "count"}));
    partitions->add_option("--points", p_points)->required();
    partitions->add_option("--colors", p_colors);
    partitions->add_option("--class", p_class);
    partitions->add_option("--blocks", p_blocks);
    partitions->add_option("--format", p_format)->check(CLI::IsMember({"json", "csv"}));

    // ---- gram ----
    auto* gram = app.add_subcommand("gram", "Gram matrices and determinants");
    std::string g_mode, g_cat = "p", g_colors, g_formula = "direct", g_format = "json";
    int g_k = 0, g_n = 0;
    bool g_symbolic = false;
    gram->add_option("mode", g_mode)->required()->check(CLI::IsMember({"matrix", "det", "rank"}));
    gram->add_option("--category", g_cat)->required();
    gram->add_option("--k", g_k)->required();
    gram->add_option("--colors", g_colors);
    gram->add_option("--n", g_n);
    gram->add_option("--formula", g_formula)
        ->check(CLI::IsMember({"direct", "lindstrom", "young-on", "young-bn", "difrancesco"}));
    gram->add_flag("--symbolic", g_symbolic);
    gram->add_option("--format", g_format)->check(CLI::IsMember({"json", "csv"}));

    // ---- wg ----
    auto* wg = app.add_subcommand("wg", "Weingarten calculus");
    std::string w_mode, w_cat = "p", w_expo, w_rows, w_cols, w_t = "1";
    int w_k = 0, w_n = 0, w_s = 0;
    bool w_asymptotic = false;
    std::string w_format = "json";
    wg->add_option("mode", w_mode)
        ->required()
        ->check(CLI::IsMember({"matrix", "integrate", "char-moment"}));
    wg->add_option("--category", w_cat)->required();
    wg->add_option("--k", w_k);
    wg->add_option("--n", w_n);
    wg->add_option("--exponents", w_expo);
    wg->add_option("--rows", w_rows);
    wg->add_option("--cols", w_cols);
    wg->add_option("--s", w_s);
    wg->add_flag("--asymptotic", w_asymptotic);
    wg->add_option("--t", w_t);
    wg->add_option("--format", w_format)->check(CLI::IsMember({"json", "csv"}));

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "finite matrix group ground truth");
    std::string o_mode, o_group, o_expo, o_rows, o_cols, o_word;
    int o_n = 1, o_s = 2, o_k = -1;
    oracle->add_option("mode", o_mode)
        ->required()
        ->check(CLI::IsMember({"elements", "law", "trunc-law", "integrate", "fixdim"}));
    oracle->add_option("--group", o_group)->required();
    oracle->add_option("--n", o_n)->required();
    oracle->add_option("--s", o_s);
    oracle->add_option("--exponents", o_expo);
    oracle->add_option("--rows", o_rows);
    oracle->add_option("--cols", o_cols);
    oracle->add_option("--word", o_word);
    oracle->add_option("--k", o_k);

    // ---- law ----
    auto* law_cmd = app.add_subcommand("law", "moment laws and densities");
    std::string l_mode, l_name, l_t = "1", l_grid, l_word;
    int l_order = 8, l_s = 2;
    double l_eps = 1e-3;
    law_cmd->add_option("mode", l_mode)
        ->required()
        ->check(CLI::IsMember({"moments", "density", "invert"}));
    law_cmd->add_option("--law", l_name)->required();
    law_cmd->add_option("--t", l_t);
    law_cmd->add_option("--order", l_order);
    law_cmd->add_option("--grid", l_grid);
    law_cmd->add_option("--eps", l_eps);
    law_cmd->add_option("--s", l_s);
    law_cmd->add_option("--colors", l_word);

    // ---- cum ----
    auto* cum = app.add_subcommand("cum", "moment-cumulant calculus");
    std::string c_mode, c_moments;
    int c_order = 0;
    cum->add_option("mode", c_mode)
        ->required()
        ->check(CLI::IsMember({"classical", "free", "bp", "rseries"}));
    cum->add_option("--moments", c_moments)->required();
    cum->add_option("--order", c_order);

    // ---- jones ----
    auto* jones = app.add_subcommand("jones", "braid closure invariant");
    std::string j_braid;
    int j_strands = 2, j_markov = 0;
    uint64_t j_seed = 1;
    bool j_bracket_only = false;
    jones->add_option("--strands", j_strands)->required();
    jones->add_option("--braid", j_braid)->required();
    jones->add_flag("--bracket-only", j_bracket_only);
    jones->add_option("--check-markov", j_markov);
    jones->add_option("--seed", j_seed);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    std::string v_suite = "all";
    verify->add_option("--suite", v_suite)
        ->check(CLI::IsMember({"all", "gram", "weingarten", "oracle", "laws", "cumulants",
                               "jones"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << app.help() << "\n";
        return 64;
    }

    try {
        if (*partitions) {
            ColoredWord word =
                p_colors.empty() ? uncolored_word(p_points) : parse_word(p_colors);
            if (static_cast<int>(word.size()) != p_points)
                throw ShapeError("colors length must equal --points");
            CategoryId cat = CategoryId::from_token(p_class);
            std::vector<Partition> mem = members(cat, word);
            if (p_blocks >= 0) {
                std::vector<Partition> filtered;
                for (auto& p : mem)
                    if (static_cast<int>(p.num_blocks()) == p_blocks)
                        filtered.push_back(std::move(p));
                mem = std::move(filtered);
            }
            if (p_mode == "count") {
                emit(json{{"schema", kSchema}, {"count", mem.size()}});
            } else if (p_format == "csv") {
                std::ostringstream os;
                for (const auto& p : mem) os << p.to_string() << "\n";
                emit_csv(os.str());
            } else {
                json list = json::array();
                for (const auto& p : mem) list.push_back(partition_json(p));
                emit(json{{"schema", kSchema}, {"count", mem.size()}, {"partitions", list}});
            }
            return 0;
        }

        if (*gram) {
            CategoryId cat = CategoryId::from_token(g_cat);
            ColoredWord word = g_colors.empty() ? uncolored_word(g_k) : parse_word(g_colors);
            if (g_mode == "matrix") {
                ExactMatrix m = gram_matrix(cat, word, g_n);
                if (g_format == "csv") emit_csv(matrix_csv(m));
                else
                    emit(json{{"schema", kSchema},
                              {"size", m.rows()},
                              {"matrix", matrix_json(m)}});
                return 0;
            }
            if (g_mode == "rank") {
                emit(json{{"schema", kSchema},
                          {"rank", gram_matrix(cat, word, g_n).rank()}});
                return 0;
            }
            // determinant, by the requested formula; the closed formulas
            // also report their factor lists
            auto factors_of = [&]() -> std::optional<FactoredDet> {
                if (g_formula == "lindstrom") return lindstrom_factors(cat, g_k);
                if (g_formula == "young-on") return on_factors(g_k);
                if (g_formula == "young-bn") return bn_factors(g_k);
                if (g_formula == "difrancesco") return difrancesco_factors(cat, g_k);
                return std::nullopt;
            };
            auto factors_json = [&](const FactoredDet& f) {
                json arr = json::array();
                for (const auto& [base, expo] : f.factors)
                    arr.push_back(json{{"base", base.to_string("N")},
                                       {"exponent", expo.to_string()}});
                return arr;
            };
            if (g_symbolic) {
                IntPoly value;
                if (g_formula == "direct") value = gram_det_direct_symbolic(cat, word);
                else if (g_formula == "lindstrom") value = lindstrom_det_symbolic(cat, g_k);
                else if (g_formula == "young-on") value = on_det_symbolic(g_k);
                else if (g_formula == "young-bn") value = bn_det_symbolic(g_k);
                else value = difrancesco_det_symbolic(cat, g_k);
                json out{{"schema", kSchema},
                         {"formula", g_formula},
                         {"determinant", poly_json(value, "N")}};
                if (auto f = factors_of()) out["factors"] = factors_json(*f);
                emit(out);
                return 0;
            }
            BigInt value;
            if (g_formula == "direct") value = gram_det_direct(cat, word, g_n);
            else if (g_formula == "lindstrom") value = lindstrom_det(cat, g_k, g_n);
            else if (g_formula == "young-on") value = on_det(g_k, g_n);
            else if (g_formula == "young-bn") value = bn_det(g_k, g_n);
            else value = difrancesco_det(cat, g_k, g_n);
            json out{{"schema", kSchema},
                     {"formula", g_formula},
                     {"determinant", value.to_string()}};
            if (auto f = factors_of()) out["factors"] = factors_json(*f);
            emit(out);
            return 0;
        }

        if (*wg) {
            CategoryId cat = CategoryId::from_token(w_cat);
            if (w_mode == "matrix") {
                ExactMatrix m = weingarten_matrix(cat, uncolored_word(w_k), w_n);
                if (w_format == "csv") emit_csv(matrix_csv(m));
                else
                    emit(json{{"schema", kSchema},
                              {"size", m.rows()},
                              {"matrix", matrix_json(m)}});
                return 0;
            }
            if (w_mode == "integrate") {
                ColoredWord expo = parse_word(w_expo);
                Rational v = integrate_monomial(cat, w_n, expo, parse_indices(w_rows),
                                                parse_indices(w_cols));
                emit(json{{"schema", kSchema}, {"value", rat_str(v)}});
                return 0;
            }
            // char-moment
            if (w_asymptotic) {
                Rational t = Rational::parse(w_t);
                Rational v = asymptotic_moment(cat, uncolored_word(w_k), t);
                emit(json{{"schema", kSchema}, {"asymptotic", true}, {"value", rat_str(v)}});
                return 0;
            }
            Rational v = truncated_moment(cat, w_n, uncolored_word(w_k), w_s);
            emit(json{{"schema", kSchema}, {"value", rat_str(v)}});
            return 0;
        }

        if (*oracle) {
            GroupSpec spec = group_from_token(o_group, o_n, o_s);
            if (o_mode == "elements") {
                auto elems = enumerate_group(spec);
                json list = json::array();
                for (const auto& m : elems) {
                    json sig = json::array(), ph = json::array();
                    for (int v : m.sigma) sig.push_back(v);
                    for (int v : m.phase) ph.push_back(v);
                    list.push_back(json{{"sigma", sig}, {"phase", ph}});
                }
                emit(json{{"schema", kSchema},
                          {"group", spec.name()},
                          {"order", elems.size()},
                          {"elements", list}});
                return 0;
            }
            if (o_mode == "law") {
                emit(json{{"schema", kSchema},
                          {"group", spec.name()},
                          {"law", law_json(character_law(spec))}});
                return 0;
            }
            if (o_mode == "trunc-law") {
                emit(json{{"schema", kSchema},
                          {"group", spec.name()},
                          {"cutoff", o_s},
                          {"law", law_json(truncated_character_law(spec, o_s))}});
                return 0;
            }
            if (o_mode == "integrate") {
                Cyclotomic v = integrate_exact(spec, parse_word(o_expo),
                                               parse_indices(o_rows), parse_indices(o_cols));
                json out{{"schema", kSchema}};
                if (v.is_rational()) {
                    out["value"] = v.rational_value().to_string();
                } else {
                    json coeffs = json::array();
                    for (const auto& cc : v.coeffs()) coeffs.push_back(cc.to_string());
                    out["value"] = json{{"coeffs", coeffs}, {"order", v.order()}};
                }
                emit(out);
                return 0;
            }
            // fixdim
            ColoredWord word = o_word.empty() ? uncolored_word(o_k < 0 ? 1 : o_k)
                                              : parse_word(o_word);
            emit(json{{"schema", kSchema},
                      {"dimension", fix_dim(spec, word).to_string()}});
            return 0;
        }

        if (*law_cmd) {
            LawSpec law;
            law.family = law_family_from_token(l_name);
            law.t = Rational::parse(l_t);
            law.s = l_s;
            if (law.family == LawFamily::Dirac) law.c = Rational::parse(l_t);
            if (l_mode == "moments") {
                json out{{"schema", kSchema}, {"law", l_name}, {"t", l_t}};
                if (!l_word.empty()) {
                    RatPoly m = colored_moment_poly(law, parse_word(l_word));
                    out["word"] = l_word;
                    out["moment"] = m.evaluate(law.t).to_string();
                } else {
                    json arr = json::array();
                    for (const auto& v : moments(law, l_order)) arr.push_back(rat_str(v));
                    out["moments"] = arr;
                }
                emit(out);
                return 0;
            }
            // parse grid "a:b:step"
            double ga = -2, gb = 2, gs = 0.1;
            if (!l_grid.empty()) {
                std::istringstream is(l_grid);
                std::string part;
                std::getline(is, part, ':');
                ga = std::stod(part);
                std::getline(is, part, ':');
                gb = std::stod(part);
                std::getline(is, part, ':');
                gs = std::stod(part);
            }
            if (l_mode == "density") {
                std::ostringstream os;
                os.precision(12);
                for (double x = ga; x <= gb + 1e-12; x += gs)
                    os << x << "," << density(law, x) << "\n";
                emit_csv(os.str());
                json atoms = json::array();
                for (const auto& a : density_atoms(law))
                    atoms.push_back(json{{"position", a.position.to_string()},
                                         {"mass", a.mass.to_string()}});
                if (!atoms.empty()) std::cerr << "atoms: " << atoms.dump() << "\n";
                return 0;
            }
            // invert
            auto m = moments(law, l_order);
            std::ostringstream os;
            os.precision(12);
            for (double x = ga; x <= gb + 1e-12; x += gs)
                os << x << "," << stieltjes_invert(m, x, l_eps) << "\n";
            emit_csv(os.str());
            return 0;
        }

        if (*cum) {
            std::vector<Rational> m = parse_rationals(c_moments);
            if (c_order > 0 && c_order < static_cast<int>(m.size()))
                m.resize(static_cast<size_t>(c_order));
            json out{{"schema", kSchema}};
            auto render = [](const std::vector<Rational>& v) {
                json arr = json::array();
                for (const auto& x : v) arr.push_back(rat_str(x));
                return arr;
            };
            if (c_mode == "classical") out["cumulants"] = render(moments_to_cumulants_classical(m));
            else if (c_mode == "free") out["cumulants"] = render(moments_to_cumulants_free(m));
            else if (c_mode == "bp") out["moments"] = render(bp_map(m));
            else {
                out["order"] = m.size();
                out["r_coefficients"] = render(r_series(m));
                out["inversion_identity"] = check_inversion(m);
            }
            emit(out);
            return 0;
        }

        if (*jones) {
            BraidWord w = BraidWord::parse(j_strands, j_braid);
            json out{{"schema", kSchema},
                     {"strands", j_strands},
                     {"writhe", w.writhe()}};
            if (j_bracket_only) {
                LaurentPoly b = kauffman_bracket(w);
                json terms = json::object();
                for (const auto& [e, coeff] : b.terms())
                    terms["A^{" + std::to_string(e) + "}"] = coeff.to_int64();
                out["bracket"] = terms;
            } else {
                out["polynomial"] = laurent_json(jones_polynomial(w));
            }
            if (j_markov > 0) {
                MarkovReport rep = markov_invariance_test(w, j_markov, j_seed);
                out["markov"] = json{{"trials", rep.trials},
                                     {"pass", rep.pass},
                                     {"failing_moves", rep.failing_moves}};
                emit(out);
                return rep.pass ? 0 : 2;
            }
            emit(out);
            return 0;
        }

        if (*verify) {
            std::cerr << "running suite '" << v_suite << "'\n";
            auto items = run_verification(v_suite);
            json ledger = json::array();
            for (const auto& it : items) {
                ledger.push_back(json{{"criterion", it.id},
                                      {"name", it.name},
                                      {"suite", it.suite},
                                      {"pass", it.pass},
                                      {"detail", it.detail},
                                      {"seconds", it.seconds}});
                std::cerr << (it.pass ? "[PASS] " : "[FAIL] ") << it.id << " " << it.name
                          << "\n";
            }
            emit(json{{"schema", kSchema},
                      {"suite", v_suite},
                      {"pass", all_passed(items)},
                      {"items", ledger}});
            return all_passed(items) ? 0 : 2;
        }
    } catch (const std::exception& e) {
        emit(json{{"error", "computation failed"}, {"detail", e.what()}});
        return 1;
    }
    return 0;
}
