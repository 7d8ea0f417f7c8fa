#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliquealg/corpus.hpp"
#include "cliquealg/freealg.hpp"
#include "cliquealg/graph.hpp"
#include "cliquealg/groebner.hpp"
#include "cliquealg/oracle.hpp"
#include "cliquealg/series.hpp"
#include "cliquealg/trace.hpp"

using namespace cliquealg;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

std::vector<int> parse_order(const std::string& order) {
    std::vector<int> ids;
    std::string tok;
    std::istringstream in(order);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = tok.find_first_of("0123456789");
        if (pos == std::string::npos)
            throw GraphError("bad --order entry: " + tok);
        ids.push_back(std::stoi(tok.substr(pos)));
    }
    return ids;
}

SignAssignment resolve_signs(const WeightedGraph& g, const std::string& policy) {
    if (policy == "default") return signs_default(g);
    if (policy == "zero") return signs_zero(g);
    if (policy == "explicit") {
        SignAssignment s;
        for (const auto& e : g.edges()) {
            if (!e.sign)
                throw GraphError("--signs explicit requires a sign on every edge");
            s.push_back(*e.sign);
        }
        return s;
    }
    if (policy.rfind("random:", 0) == 0) {
        std::mt19937_64 rng(std::stoull(policy.substr(7)));
        std::uniform_int_distribution<int> bit(0, 1);
        SignAssignment s(g.edge_count());
        for (int& q : s) q = bit(rng);
        return s;
    }
    throw GraphError("unknown sign policy: " + policy);
}

json series_json(const TruncatedSeries& s) { return json::parse(s.to_json()); }

json clique_poly_json(const CliquePolynomial& p) {
    json j;
    for (auto [deg, c] : p.coefficients) j[std::to_string(deg)] = c;
    return json{{"coefficients", j}};
}

json word_ids_json(const Word& w, const WeightedGraph& g) {
    json arr = json::array();
    for (int v : w) arr.push_back(g.id(v));
    return arr;
}

int run_verify(const WeightedGraph& g, int degree, int trials, unsigned long seed,
               const std::vector<int>& order) {
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        all_ok = all_ok && ok;
    };

    TruncatedSeries via_clique = hilbert_series(g, degree);
    TruncatedSeries via_gb = hilbert_via_groebner(g, order, degree);
    report("hilbert: clique inversion == groebner normal words", via_clique == via_gb,
           via_clique.to_string());

    TruncatedSeries via_traces = hilbert_via_traces(g, degree);
    report("hilbert: clique inversion == trace enumeration (q=0)", via_clique == via_traces);

    int oracle_degree = std::min(degree, 5);
    bool oracle_ok = true;
    std::string oracle_detail = "through degree " + std::to_string(oracle_degree);
    try {
        TruncatedSeries via_oracle = oracle_hilbert(g, {}, oracle_degree);
        for (int k = 0; k <= oracle_degree; ++k)
            oracle_ok = oracle_ok && via_oracle.at(k) == via_clique.at(k);
    } catch (const OracleError& e) {
        oracle_ok = false;
        oracle_detail = e.what();
    }
    report("hilbert: clique inversion == rank oracle", oracle_ok, oracle_detail);

    report("cartier-foata product identity", verify_cartier_foata(g, degree).ok);

    auto sir = verify_sign_independence(g, trials, degree, seed, order);
    report("sign independence of leading words and counts", sir.ok, sir.detail);

    auto inert = inertness_report(g);
    report("inertness criterion matches triangle-freeness",
           inert.matches == inert.triangle_free,
           inert.matches ? "inert" : "not inert");

    bool nonneg = true;
    for (int k = 0; k <= degree; ++k) nonneg = nonneg && via_clique.at(k) >= 0;
    report("hilbert coefficients non-negative", nonneg);

    return all_ok ? kExitOk : kExitMismatch;
}

json presentation_json(const Presentation& pres, const WeightedGraph& g) {
    json j;
    json gens = json::array();
    for (int v = 0; v < pres.alphabet.size(); ++v)
        gens.push_back({{"name", pres.alphabet.names[v]}, {"degree", pres.alphabet.degrees[v]}});
    j["generators"] = gens;
    json rels = json::array();
    for (const auto& r : pres.relations) rels.push_back(r.to_string(pres.alphabet));
    j["relations"] = rels;
    json ys = json::array();
    for (const auto& y : pres.y_generators)
        ys.push_back({{"name", y.name},
                      {"degree", y.degree},
                      {"differential", "[" + pres.alphabet.names[y.a] + "," +
                                           pres.alphabet.names[y.b] + "]"}});
    j["dga_generators"] = ys;
    (void)g;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique polynomials, Hilbert series and trace monoids of weighted graphs"};
    app.require_subcommand(1);

    std::string input, format = "text", method = "clique", signs_policy = "default", order_str;
    int degree = 6, weight_bound = 6, trials = 5;
    unsigned long seed = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input)
            cmd->add_option("input", input, "corpus:<name> or a graph file")->required();
        cmd->add_option("--format", format, "text|json");
        cmd->add_option("--order", order_str, "precedence list, e.g. x1,x3,x5,x2,x4");
        cmd->add_option("--signs", signs_policy, "default|zero|random:<seed>|explicit");
        cmd->add_option("--seed", seed, "seed for randomized checks");
    };

    auto* cmd_clique = app.add_subcommand("clique-poly", "clique polynomial");
    add_common(cmd_clique);

    auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert series of A(Gamma)");
    add_common(cmd_hilbert);
    cmd_hilbert->add_option("--method", method, "clique|groebner|monoid|oracle");
    cmd_hilbert->add_option("--degree", degree, "truncation degree");

    auto* cmd_gb = app.add_subcommand("groebner", "truncated Groebner basis");
    add_common(cmd_gb);
    cmd_gb->add_option("--degree", degree, "completion degree bound");

    auto* cmd_inert = app.add_subcommand("inert", "inertness report");
    add_common(cmd_inert);

    auto* cmd_traces = app.add_subcommand("traces", "trace-monoid normal forms");
    add_common(cmd_traces);
    cmd_traces->add_option("--weight", weight_bound, "weight bound");

    auto* cmd_cf = app.add_subcommand("cartier-foata", "verify the clique-series inverse");
    add_common(cmd_cf);
    cmd_cf->add_option("--weight", weight_bound, "weight bound");

    auto* cmd_verify = app.add_subcommand("verify", "cross-method verification");
    add_common(cmd_verify);
    cmd_verify->add_option("--degree", degree, "degree/weight bound");
    cmd_verify->add_option("--trials", trials, "random sign assignments to test");

    auto* cmd_dga = app.add_subcommand("dga", "A(Gamma) and DGA(Gamma) presentations");
    add_common(cmd_dga);

    CLI11_PARSE(app, argc, argv);

    try {
        WeightedGraph g = load_graph(input);
        std::vector<int> order = order_str.empty() ? std::vector<int>{} : parse_order(order_str);
        bool as_json = (format == "json");

        if (cmd_clique->parsed()) {
            auto p = clique_polynomial(g);
            std::cout << (as_json ? clique_poly_json(p).dump() : p.to_string()) << "\n";
        } else if (cmd_hilbert->parsed()) {
            SignAssignment signs = resolve_signs(g, signs_policy);
            TruncatedSeries s;
            if (method == "clique") {
                s = hilbert_series(g, degree);
            } else if (method == "groebner") {
                Presentation pres = presentation_of(g, order, signs);
                TruncatedGB gb = mora_truncated(pres.relations, pres.alphabet, degree);
                s = count_normal_words(gb.leading_words(), pres.alphabet, degree);
            } else if (method == "monoid") {
                for (int q : signs)
                    if (q != 0)
                        throw GraphError(
                            "--method monoid models q = 0; use --signs zero "
                            "or a graph whose effective signs vanish");
                s = hilbert_via_traces(g, degree);
            } else if (method == "oracle") {
                s = oracle_hilbert(g, signs, degree);
            } else {
                throw GraphError("unknown method: " + method);
            }
            std::cout << (as_json ? s.to_json() : s.to_string()) << "\n";
        } else if (cmd_gb->parsed()) {
            Presentation pres = presentation_of(g, order, resolve_signs(g, signs_policy));
            TruncatedGB gb = mora_truncated(pres.relations, pres.alphabet, degree);
            if (as_json) {
                json rules = json::array();
                for (const auto& r : gb.rules) {
                    json lhs = json::array();
                    for (int v : r.lhs) lhs.push_back(g.id(v));
                    json rhs = json::array();
                    for (const auto& [w, c] : r.rhs.terms)
                        rhs.push_back({{"word", word_ids_json(w, g)},
                                       {"coefficient", c.get_str()}});
                    rules.push_back({{"lhs", lhs}, {"rhs", rhs}});
                }
                std::cout << json{{"degree_bound", gb.degree_bound}, {"rules", rules}}.dump()
                          << "\n";
            } else {
                for (const auto& r : gb.rules)
                    std::cout << pres.alphabet.word_string(r.lhs) << " -> "
                              << r.rhs.to_string(pres.alphabet) << "\n";
            }
        } else if (cmd_inert->parsed()) {
            auto rep = inertness_report(g);
            if (as_json) {
                json j{{"triangle_free", rep.triangle_free},
                       {"matches", rep.matches},
                       {"clique_polynomial", rep.clique_poly.to_string()},
                       {"two_term_polynomial", rep.two_term_polynomial.to_string()}};
                if (rep.witness_triangle) j["witness_triangle"] = *rep.witness_triangle;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (rep.matches ? "inert" : "not inert") << "\n";
                std::cout << "clique polynomial:  " << rep.clique_poly.to_string() << "\n";
                std::cout << "two-term form:      " << rep.two_term_polynomial.to_string()
                          << "\n";
                if (rep.witness_triangle) {
                    std::cout << "witness triangle:   {";
                    for (size_t i = 0; i < rep.witness_triangle->size(); ++i)
                        std::cout << (i ? "," : "") << (*rep.witness_triangle)[i];
                    std::cout << "}\n";
                }
            }
        } else if (cmd_traces->parsed()) {
            Presentation pres = presentation_of(g, order);
            for (const Word& w : enumerate_traces(g, weight_bound))
                std::cout << pres.alphabet.word_string(w) << "\n";
        } else if (cmd_cf->parsed()) {
            Presentation pres = presentation_of(g, order);
            auto res = verify_cartier_foata(g, weight_bound);
            std::cout << (res.ok ? "PASS" : "FAIL")
                      << "  clique series is the inverse of chi_M through weight "
                      << weight_bound << "\n";
            if (!res.ok) {
                std::cout << "left residual:  " << res.residual_left.to_string(g, pres.alphabet)
                          << "\n";
                std::cout << "right residual: " << res.residual_right.to_string(g, pres.alphabet)
                          << "\n";
                return kExitMismatch;
            }
        } else if (cmd_verify->parsed()) {
            return run_verify(g, degree, trials, seed, order);
        } else if (cmd_dga->parsed()) {
            Presentation pres = presentation_of(g, order, resolve_signs(g, signs_policy));
            if (as_json) {
                std::cout << presentation_json(pres, g).dump() << "\n";
            } else {
                std::cout << "A(Gamma) generators:\n";
                for (int v = 0; v < pres.alphabet.size(); ++v)
                    std::cout << "  " << pres.alphabet.names[v] << "  degree "
                              << pres.alphabet.degrees[v] << "\n";
                std::cout << "relations:\n";
                for (const auto& r : pres.relations)
                    std::cout << "  " << r.to_string(pres.alphabet) << "\n";
                std::cout << "DGA(Gamma) extra generators:\n";
                for (const auto& y : pres.y_generators)
                    std::cout << "  " << y.name << "  degree " << y.degree << ",  d" << y.name
                              << " = [" << pres.alphabet.names[y.a] << ","
                              << pres.alphabet.names[y.b] << "]\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
