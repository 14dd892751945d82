// dq: command-line front end for the D_q(n) library.
//
// Exit codes: 0 success, 1 mathematical failure (e.g. a verification that
// returns false), 2 usage or parse errors.

#include <CLI11.hpp>
#include <dqn/dqn.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace dqn;

struct GlobalOpts {
    int n = 2;
    std::string q_value;  // empty = symbolic
    bool json = false;
};

FieldConfig field_of(const GlobalOpts& g) {
    if (g.q_value.empty()) return FieldConfig::symbolic();
    try {
        return FieldConfig::specialized(Rational(g.q_value));
    } catch (const zero_q&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error(0, "an exact rational for --q");
    }
}

/// Splits a comma-separated list, ignoring commas nested in brackets or
/// parentheses (generator indices contain commas).
std::vector<std::string> split_list(const std::string& src) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : src) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

KeepSet parse_keep(const std::string& src, const Algebra& alg) {
    std::vector<Gen> gens;
    for (const auto& part : split_list(src)) {
        Element e = parse_element(part, alg);
        if (e.terms().size() != 1 || e.terms().begin()->first.degree() != 1 ||
            !e.terms().begin()->second.is_one())
            throw parse_error(0, "a plain generator d[i,j] in the keep list");
        Word w = to_word(e.terms().begin()->first, alg.n());
        gens.push_back(w[0]);
    }
    return KeepSet::of(gens, alg.n());
}

OrderSpec parse_order(const std::string& src, const Algebra& alg, bool allow_natural) {
    if (src.empty() || src == "paper-lex") return OrderSpec::paper_lex();
    if (src == "deg-paper-lex") return OrderSpec::deg_paper_lex();
    if (allow_natural && src == "natural-lex") return OrderSpec::natural_lex();
    if (src.rfind("elim:", 0) == 0) {
        KeepSet keep = parse_keep(src.substr(5), alg);
        return elimination_order(keep, alg);
    }
    throw parse_error(0, "an order name (paper-lex, deg-paper-lex, elim:<keep-list>)");
}

std::vector<Element> parse_generators(const std::string& src, const Algebra& alg) {
    std::vector<Element> out;
    for (const auto& part : split_list(src)) {
        Element e = parse_element(part, alg);
        if (!e.is_zero()) out.push_back(std::move(e));
    }
    return out;
}

int cmd_verify_gsb(const GlobalOpts& g) {
    GsbReport report = verify_gsb(g.n, field_of(g));
    if (g.json) {
        json out{{"n", report.n},
                 {"ambiguities", report.ambiguity_count},
                 {"passed", report.passed}};
        json fails = json::array();
        for (const auto& f : report.failures)
            fails.push_back(json{{"ambiguity", to_string(f.ambiguity.w)},
                                 {"normal_form", to_string(f.normal_form)}});
        out["failures"] = fails;
        std::cout << out.dump(2) << "\n";
    } else if (report.passed) {
        std::cout << "ambiguities: " << report.ambiguity_count
                  << ", all compositions reduce to 0\n";
    } else {
        std::cout << "ambiguities: " << report.ambiguity_count << ", "
                  << report.failures.size() << " nonzero compositions\n";
        for (const auto& f : report.failures)
            std::cout << "  " << to_string(f.ambiguity.w) << " -> " << to_string(f.normal_form)
                      << "\n";
    }
    return report.passed ? 0 : 1;
}

void print_element(const Element& e, const OrderSpec& order, const GlobalOpts& g) {
    if (g.json)
        std::cout << element_to_json(e, order, g.n).dump(2) << "\n";
    else
        std::cout << to_string(e, order, g.n) << "\n";
}

int cmd_nf(const GlobalOpts& g, const std::string& expr, const std::string& order_name) {
    Algebra alg(g.n, field_of(g));
    OrderSpec order = parse_order(order_name, alg, false);
    print_element(parse_element(expr, alg), order, g);
    return 0;
}

int cmd_mul(const GlobalOpts& g, const std::string& lhs, const std::string& rhs) {
    Algebra alg(g.n, field_of(g));
    OrderSpec order = OrderSpec::paper_lex();
    Element prod = multiply(parse_element(lhs, alg), parse_element(rhs, alg), alg);
    print_element(prod, order, g);
    return 0;
}

int cmd_gb(const GlobalOpts& g, const std::string& gens, const std::string& order_name,
           bool trace) {
    Algebra alg(g.n, field_of(g));
    OrderSpec order = parse_order(order_name, alg, false);
    GroebnerBasis G = buchberger({parse_generators(gens, alg), order}, alg);
    if (g.json) {
        json elems = json::array();
        for (const auto& e : G.elements) elems.push_back(element_to_json(e, order, g.n));
        json out{{"n", g.n}, {"order", order.name()}, {"elements", elems}};
        if (trace) {
            json tr = json::array();
            for (const auto& ev : G.trace)
                tr.push_back(json{{"pair", {ev.a, ev.b}},
                                  {"reduced_to_zero", ev.reduced_to_zero},
                                  {"adjoined_index", ev.adjoined_index}});
            out["trace"] = tr;
        }
        std::cout << out.dump(2) << "\n";
    } else if (trace) {
        std::cout << to_string(G, g.n);
    } else {
        for (std::size_t k = 0; k < G.elements.size(); ++k)
            std::cout << "g" << k << " = " << to_string(G.elements[k], order, g.n) << "\n";
    }
    return 0;
}

int cmd_gkdim(const GlobalOpts& g, const std::string& gens) {
    Algebra alg(g.n, field_of(g));
    OrderSpec order = OrderSpec::deg_paper_lex();
    std::vector<Element> L = parse_generators(gens, alg);
    GroebnerBasis G = L.empty() ? GroebnerBasis{{}, order, {}, {}}
                                : buchberger({L, order}, alg);
    DimensionReport report = gk_dim_quotient(G, alg);
    if (g.json) {
        std::vector<std::string> texts;
        for (const auto& e : L) texts.push_back(to_string(e, order, g.n));
        std::cout << to_json(report, g.n, order.name(), texts).dump(2) << "\n";
    } else {
        std::cout << "gk_dim " << report.gk_dim << "\n";
        std::cout << "witness:";
        for (const auto& w : report.witness_variable_set)
            std::cout << " d[" << w.row << "," << w.col << "]";
        std::cout << "\ncross_checked: " << (report.cross_checked ? "yes" : "no") << "\n";
    }
    return report.cross_checked ? 0 : 1;
}

int cmd_hilbert(const GlobalOpts& g, unsigned upto, const std::string& gens) {
    Algebra alg(g.n, field_of(g));
    OrderSpec order = OrderSpec::deg_paper_lex();
    std::vector<cpp_int> values;
    std::string series;
    if (gens.empty()) {
        series = hilbert_series(g.n).closed_form;
        for (unsigned k = 0; k <= upto; ++k) values.push_back(hilbert_function(g.n, k));
    } else {
        GroebnerBasis G = buchberger({parse_generators(gens, alg), order}, alg);
        for (unsigned k = 0; k <= upto; ++k)
            values.push_back(quotient_hilbert_function(G, k, g.n));
    }
    if (g.json) {
        json vals = json::array();
        for (const auto& v : values) vals.push_back(v.str());
        std::cout << json{{"n", g.n}, {"series", series}, {"values", vals}}.dump(2) << "\n";
    } else {
        if (!series.empty()) std::cout << "series: " << series << "\n";
        for (unsigned k = 0; k <= upto; ++k) std::cout << "h(" << k << ") = " << values[k] << "\n";
    }
    return 0;
}

int cmd_eliminate(const GlobalOpts& g, const std::string& gens, const std::string& keep_src) {
    Algebra alg(g.n, field_of(g));
    KeepSet keep = parse_keep(keep_src, alg);
    std::vector<Element> inter = eliminate({parse_generators(gens, alg)}, keep, alg);
    OrderSpec order = OrderSpec::deg_paper_lex();
    if (g.json) {
        json elems = json::array();
        for (const auto& e : inter) elems.push_back(element_to_json(e, order, g.n));
        std::cout << json{{"n", g.n},
                          {"keep", split_list(keep_src)},
                          {"intersection", elems},
                          {"nonzero", !inter.empty()}}
                         .dump(2)
                  << "\n";
    } else if (inter.empty()) {
        std::cout << "intersection is zero\n";
    } else {
        for (const auto& e : inter) std::cout << to_string(e, order, g.n) << "\n";
    }
    return 0;
}

int cmd_check_order(const GlobalOpts& g, const std::string& order_name, int max_degree) {
    Algebra alg(g.n, field_of(g));
    OrderSpec order = parse_order(order_name, alg, true);
    SolvabilityReport report = validate_ordering(order, alg, max_degree);
    if (g.json) {
        json pairs = json::array();
        for (const auto& pr : report.generator_pair_results)
            pairs.push_back(json{{"lower", to_string(pr.lower)},
                                 {"upper", to_string(pr.upper)},
                                 {"lambda", to_string(pr.lambda)},
                                 {"ok", pr.ok}});
        std::cout << json{{"n", g.n},
                          {"order", order.name()},
                          {"degree_cap", report.degree_cap},
                          {"condition2_ok", report.condition2_ok},
                          {"condition3_ok", report.condition3_ok},
                          {"pairs", pairs},
                          {"passed", report.passed}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "order " << order.name() << " n=" << g.n << " cap=" << report.degree_cap
                  << ": " << (report.passed ? "passed" : "failed") << "\n";
        if (!report.passed) {
            for (const auto& pr : report.generator_pair_results)
                if (!pr.ok)
                    std::cout << "  pair (" << to_string(pr.upper) << "," << to_string(pr.lower)
                              << ") violates the leading-monomial condition\n";
            if (!report.failure_note.empty()) std::cout << "  " << report.failure_note << "\n";
        }
    }
    return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic computation in the quantized matrix algebra D_q(n)"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--q", g.q_value, "specialize q to an exact nonzero rational (default symbolic)");
    app.add_flag("--json", g.json, "JSON output");

    std::string expr, lhs, rhs, gens, keep, order_name;
    unsigned upto = 6;
    int max_degree = 3;
    bool trace = false;

    auto* verify = app.add_subcommand("verify-gsb", "verify the rewriting system is confluent");
    verify->add_option("--n", g.n, "matrix size")->required();

    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("--n", g.n)->required();
    nf->add_option("--expr", expr)->required();
    nf->add_option("--order", order_name);

    auto* mul = app.add_subcommand("mul", "product of two elements");
    mul->add_option("--n", g.n)->required();
    mul->add_option("--lhs", lhs)->required();
    mul->add_option("--rhs", rhs)->required();

    auto* gb = app.add_subcommand("gb", "reduced left Groebner basis");
    gb->add_option("--n", g.n)->required();
    gb->add_option("--gens", gens)->required();
    gb->add_option("--order", order_name);
    gb->add_flag("--trace", trace);

    auto* gkdim = app.add_subcommand("gkdim", "GK dimension of the cyclic quotient");
    gkdim->add_option("--n", g.n)->required();
    gkdim->add_option("--gens", gens);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series / function values");
    hilbert->add_option("--n", g.n)->required();
    hilbert->add_option("--upto", upto);
    hilbert->add_option("--gens", gens);

    auto* elim = app.add_subcommand("eliminate", "intersect a left ideal with a kept span");
    elim->add_option("--n", g.n)->required();
    elim->add_option("--gens", gens)->required();
    elim->add_option("--keep", keep)->required();

    auto* check = app.add_subcommand("check-order", "validate a monomial ordering");
    check->add_option("--n", g.n)->required();
    check->add_option("--order", order_name)->required();
    check->add_option("--max-degree", max_degree);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify_gsb(g);
        if (nf->parsed()) return cmd_nf(g, expr, order_name);
        if (mul->parsed()) return cmd_mul(g, lhs, rhs);
        if (gb->parsed()) return cmd_gb(g, gens, order_name, trace);
        if (gkdim->parsed()) return cmd_gkdim(g, gens);
        if (hilbert->parsed()) return cmd_hilbert(g, upto, gens);
        if (elim->parsed()) return cmd_eliminate(g, gens, keep);
        if (check->parsed()) return cmd_check_order(g, order_name, max_degree);
    } catch (const dqn::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dqn::order_not_solvable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
