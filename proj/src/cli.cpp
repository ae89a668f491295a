#include "ytg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "ytg/decomp.hpp"
#include "ytg/io.hpp"
#include "ytg/orthopoly.hpp"
#include "ytg/reference_examples.hpp"
#include "ytg/symfunc.hpp"
#include "ytg/tableaux.hpp"
#include "ytg/toppling_group.hpp"

namespace ytg::cli {

namespace {

bool is_scalar_array(const Json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) {
               return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& f) {
                                               return f.is_primitive();
                                           }));
           });
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Plain-text view of a result: one "key: value" line per field. Polynomials and
// decompositions print their "text" field.
void render(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_primitive()) {
                out << pad << key << ": " << scalar_text(value) << "\n";
            } else if (value.is_object() && value.contains("text")) {
                out << pad << key << ": " << value["text"].get<std::string>() << "\n";
            } else if (is_scalar_array(value)) {
                out << pad << key << ": " << value.dump() << "\n";
            } else {
                out << pad << key << ":\n";
                render(value, out, indent + 2);
            }
        }
        return;
    }
    if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object() && e.contains("text") && e.size() <= 4 && !e.contains("stats")) {
                out << pad << "- " << e["text"].get<std::string>() << "\n";
            } else if (e.is_object()) {
                out << pad << "-\n";
                render(e, out, indent + 2);
            } else {
                out << pad << "- " << (e.is_primitive() ? scalar_text(e) : e.dump()) << "\n";
            }
        }
        return;
    }
    out << pad << scalar_text(j) << "\n";
}

Configuration parse_config(const std::string& text) { return Configuration(parse_int_list(text)); }

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    for (auto v : parse_int_list(text)) {
        parts.push_back(static_cast<int>(v));
    }
    if (std::any_of(parts.begin(), parts.end(), [](int v) { return v < 0; })) {
        throw InvalidInput("partition parts must be nonnegative");
    }
    return Partition(std::move(parts));
}

DominantElement parse_dominant(const std::string& text, int n) {
    auto v = parse_int_list(text);
    if (n <= 0) {
        n = static_cast<int>(v.size()) + ((v.empty() || v.back() != 0) ? 1 : 0);
    }
    if (static_cast<int>(v.size()) > n) {
        throw InvalidInput("lambda has more than n = " + std::to_string(n) + " entries");
    }
    v.resize(static_cast<std::size_t>(n), 0);
    return DominantElement(std::move(v));
}

Json words_json(const std::vector<YamanouchiWord>& ws) {
    Json out = Json::array();
    for (const auto& w : ws) {
        out.push_back(w.to_string());
    }
    return out;
}

struct Options {
    bool json = false;
    std::string graph, config, word, from, to, lambda, mu, alpha, moments, kind = "hatH",
        rule = "determinantal";
    int n = 0;
    int max_size = 0;
    int up_to = 5;
    bool count_only = false, tableaux = false, square_free_only = false, stats = false, poly = false,
         oracle = false, verify = false, hankel = false;
};

Json cmd_topple(const Options& o) {
    Graph g = parse_graph(o.graph);
    auto word = parse_word(o.word);
    Configuration c = apply_word(g, parse_config(o.config), word);
    return {{"config", c.weights}};
}

Json cmd_dominate(const Options& o) {
    Graph g = parse_graph(o.graph);
    DominanceResult r = solve_dominance(g, parse_config(o.from), parse_config(o.to));
    Json out = {{"dominated", static_cast<bool>(r)}};
    if (r) {
        out["lambda"] = r.lambda->parts();
    } else {
        out["reason"] = to_string(r.failure);
        if (!r.solution.empty()) {
            out["solution"] = r.solution;
        }
    }
    return out;
}

Json cmd_sequences(const Options& o, const Budget& budget) {
    Graph g = parse_graph(o.graph);
    const Configuration a = parse_config(o.from);
    const Configuration b = parse_config(o.to);
    DominanceResult r = solve_dominance(g, a, b);
    Json out = {{"dominated", static_cast<bool>(r)}};
    if (!r) {
        out["reason"] = to_string(r.failure);
        out["count"] = "0";
        if (!o.count_only) {
            out["words"] = Json::array();
        }
        return out;
    }
    out["lambda"] = r.lambda->parts();
    Partition shape = Partition::from_exponents(r.lambda->parts());
    out["count"] = to_string(count_syt(shape));
    if (o.count_only) {
        return out;
    }
    auto ws = minimal_yamanouchi_sequences(g, a, b, budget.max_objects);
    out["words"] = words_json(ws);
    if (o.tableaux) {
        Json ts = Json::array();
        for (const auto& w : ws) {
            ts.push_back(syt_to_json(word_to_syt(w)));
        }
        out["tableaux"] = ts;
    }
    return out;
}

Json cmd_decomps(const Options& o, const Budget& budget) {
    DominantElement lambda = parse_dominant(o.lambda, o.n);
    Json out = {{"lambda", lambda.parts()},
                {"n", lambda.n()},
                {"column_multiplicities", column_multiplicities(lambda)},
                {"reduced", reduced_interval_decomposition(lambda).to_string()}};
    if (o.count_only && !o.square_free_only) {
        out["count"] = to_string(count_decompositions(lambda));
    } else {
        auto decs = enumerate_decompositions(lambda, {o.square_free_only, budget.max_objects});
        out["count"] = std::to_string(decs.size());
        if (!o.count_only) {
            Json list = Json::array();
            for (const auto& d : decs) {
                list.push_back(decomposition_to_json(d, o.stats));
            }
            out["decompositions"] = list;
        }
    }
    if (o.poly) {
        out["c"] = poly_to_json(c_polynomial(lambda, budget.max_objects));
        out["c_prime"] = poly_to_json(c_prime_polynomial(lambda, budget.max_objects));
        out["square_free_series"] = poly_to_json(square_free_signed_series(lambda, budget.max_objects));
    }
    return out;
}

Json cmd_series(const Options& o, const Budget& budget) {
    Graph g = parse_graph(o.graph);
    const Configuration a = parse_config(o.alpha);
    SeriesKind kind;
    if (o.kind == "H") {
        kind = SeriesKind::H;
    } else if (o.kind == "hatH") {
        kind = SeriesKind::HatH;
    } else if (o.kind == "hatK") {
        kind = SeriesKind::HatK;
    } else {
        throw ParseError("--kind must be H, hatH or hatK");
    }
    ConfigSeries series = truncated_series(g, a, o.max_size, kind, budget.max_objects);
    Json terms = Json::array();
    for (const auto& lambda : dominant_elements(g.n(), o.max_size)) {
        Configuration beta = apply_exponents(g, a, lambda.parts());
        terms.push_back({{"lambda", lambda.parts()}, {"beta", beta.weights}, {"coef", poly_to_json(series.at(beta))}});
    }
    return {{"kind", o.kind}, {"max_size", o.max_size}, {"terms", terms}};
}

Json cmd_hl(const Options& o, const Budget& budget) {
    Partition alpha = parse_partition(o.alpha);
    const int n = o.n > 0 ? o.n : std::max(alpha.length(), 1);
    NegativeExponentRule rule;
    if (o.rule == "determinantal") {
        rule = NegativeExponentRule::Determinantal;
    } else if (o.rule == "vanish") {
        rule = NegativeExponentRule::Vanish;
    } else {
        throw ParseError("--rule must be determinantal or vanish");
    }
    SchurExpansion e = hall_littlewood_R(alpha, n, rule, budget.max_objects);
    Json out = {{"alpha", alpha.parts()}, {"n", n}, {"rule", o.rule}, {"expansion", schur_expansion_to_json(e)}};
    if (o.oracle) {
        ParamPoly sym = hall_littlewood_oracle(alpha, n, budget);
        out["oracle"] = poly_to_json(sym);
        out["agree"] = expand_schur(e, n) == sym;
    }
    return out;
}

Json cmd_kostka(const Options& o) {
    Partition lambda = parse_partition(o.lambda);
    Partition mu = parse_partition(o.mu);
    const int n = o.n > 0 ? o.n : std::max({lambda.length(), mu.length(), 1});
    Json out = {{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"n", n},
                {"kostka", to_string(kostka_via_toppling(lambda, mu, n))}};
    if (o.oracle) {
        out["oracle"] = to_string(kostka_oracle(lambda, mu));
        out["agree"] = out["oracle"] == out["kostka"];
    }
    return out;
}

Json cmd_ortho(const Options& o, const Budget& budget, bool& failed) {
    MomentSequence m = parse_moments(o.moments);
    Json out = {{"moments", m.name()}};
    if (!o.verify || o.n > 0) {
        out["n"] = o.n;
        out["p"] = ortho_poly_to_json(ortho_poly(m, o.n, budget));
        if (o.hankel) {
            out["hankel"] = ortho_poly_to_json(hankel_oracle(m, o.n));
        }
    }
    if (o.verify) {
        OrthogonalityReport r = verify_orthogonality(m, o.up_to, budget);
        Json polys = Json::array();
        for (const auto& p : r.polys) {
            polys.push_back(ortho_poly_to_json(p));
        }
        Json cross = Json::array();
        for (const auto& c : r.cross) {
            cross.push_back({{"n", c.n}, {"m", c.m}, {"value", to_string(c.value)}});
        }
        Json norms = Json::array();
        for (const auto& c : r.norms) {
            norms.push_back({{"n", c.n},
                             {"norm", to_string(c.norm)},
                             {"leading_product", to_string(c.product)},
                             {"as_stated", c.as_stated},
                             {"with_sign", c.signed_ok}});
        }
        failed = !r.passed();
        out["verify"] = {{"up_to", r.up_to},
                         {"passed", r.passed()},
                         {"cross_ok", r.cross_ok()},
                         {"norm_as_stated_ok", r.norm_as_stated_ok()},
                         {"norm_with_sign_ok", r.norm_signed_ok()},
                         {"degrees_ok", r.degrees_ok()},
                         {"first_degenerate", r.first_degenerate ? Json(*r.first_degenerate) : Json(nullptr)},
                         {"degrees", r.degrees},
                         {"polys", polys},
                         {"cross", cross},
                         {"norms", norms}};
    }
    return out;
}

Json cmd_examples(bool& all_passed) {
    auto examples = run_reference_examples();
    Json list = Json::array();
    std::size_t passed = 0;
    for (const auto& ex : examples) {
        passed += ex.passed;
        list.push_back({{"id", ex.id},
                        {"status", ex.passed ? "pass" : "FAIL"},
                        {"description", ex.description},
                        {"expected", ex.expected},
                        {"actual", ex.actual}});
    }
    all_passed = passed == examples.size();
    return {{"passed", passed}, {"total", examples.size()}, {"examples", list}};
}

void emit_error(std::ostream& err, const char* kind, const std::string& message) {
    err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Yamanouchi toppling game toolkit", "ytg"};
    app.require_subcommand(1);
    Options o;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON instead of text"); };
    auto graph_opt = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph, "path:n | complete:n | cycle:n | JSON | file")->required();
    };

    auto* topple = app.add_subcommand("topple", "Apply a toppling word to a configuration");
    graph_opt(topple);
    topple->add_option("--config", o.config, "Starting configuration, e.g. 5,-3,0,1,-4")->required();
    topple->add_option("--word", o.word, "Word such as 1112 or 1,1,1,2")->required();

    auto* dominate = app.add_subcommand("dominate", "Solve beta = T^lambda(alpha) for lambda in P_n");
    graph_opt(dominate);
    dominate->add_option("--from", o.from, "alpha")->required();
    dominate->add_option("--to", o.to, "beta")->required();

    auto* sequences = app.add_subcommand("sequences", "Minimal Yamanouchi toppling sequences from alpha to beta");
    graph_opt(sequences);
    sequences->add_option("--from", o.from, "alpha")->required();
    sequences->add_option("--to", o.to, "beta")->required();
    sequences->add_flag("--count-only", o.count_only, "Only count the sequences");
    sequences->add_flag("--tableaux", o.tableaux, "Also print the standard Young tableaux");

    auto* decomps = app.add_subcommand("decomps", "Interval decompositions of T^lambda");
    decomps->add_option("--lambda", o.lambda, "Weakly decreasing exponents, e.g. 4,3,1")->required();
    decomps->add_option("--n", o.n, "Number of vertices (lambda is zero-padded)");
    decomps->add_flag("--square-free-only", o.square_free_only, "Only square-free decompositions");
    decomps->add_flag("--stats", o.stats, "Include (l1,l2,l3,d) per decomposition");
    decomps->add_flag("--poly", o.poly, "Include the C and C' polynomials");
    decomps->add_flag("--count-only", o.count_only, "Only count");

    auto* series = app.add_subcommand("series", "Truncated generating series around alpha");
    graph_opt(series);
    series->add_option("--alpha", o.alpha, "Starting configuration")->required();
    series->add_option("--max-size", o.max_size, "Largest |lambda|")->required();
    series->add_option("--kind", o.kind, "H | hatH | hatK")->capture_default_str();

    auto* hl = app.add_subcommand("hl", "Schur expansion of the Hall-Littlewood polynomial R_alpha");
    hl->add_option("--alpha", o.alpha, "Partition, e.g. 2,1")->required();
    hl->add_option("--n", o.n, "Number of variables");
    hl->add_option("--rule", o.rule, "determinantal | vanish")->capture_default_str();
    hl->add_flag("--oracle", o.oracle, "Also symmetrize directly and compare");

    auto* kostka = app.add_subcommand("kostka", "Kostka number via the signed toppling formula");
    kostka->add_option("--lambda", o.lambda, "Shape")->required();
    kostka->add_option("--mu", o.mu, "Content")->required();
    kostka->add_option("--n", o.n, "Number of variables");
    kostka->add_flag("--oracle", o.oracle, "Also count semistandard tableaux");

    auto* ortho = app.add_subcommand("ortho", "Orthogonal polynomials from a moment sequence");
    ortho->add_option("--moments", o.moments, "hermite | legendre | charlier:r | dirac:c | file.json")->required();
    ortho->add_option("--n", o.n, "Degree");
    ortho->add_flag("--hankel", o.hankel, "Also print the monic Hankel-determinant polynomial");
    ortho->add_flag("--verify", o.verify, "Check orthogonality and norms");
    ortho->add_option("--up-to", o.up_to, "Largest degree checked by --verify")->capture_default_str();

    auto* examples = app.add_subcommand("paper-examples", "Recompute the worked reference examples");

    for (auto* sub : {topple, dominate, sequences, decomps, series, hl, kostka, ortho, examples}) {
        add_json(sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        emit_error(err, "usage", e.what());
        return UsageError;
    }

    const Budget budget = Budget::from_env();
    int status = Ok;
    try {
        Json result;
        if (topple->parsed()) {
            result = cmd_topple(o);
        } else if (dominate->parsed()) {
            result = cmd_dominate(o);
        } else if (sequences->parsed()) {
            result = cmd_sequences(o, budget);
        } else if (decomps->parsed()) {
            result = cmd_decomps(o, budget);
        } else if (series->parsed()) {
            result = cmd_series(o, budget);
        } else if (hl->parsed()) {
            result = cmd_hl(o, budget);
        } else if (kostka->parsed()) {
            result = cmd_kostka(o);
        } else if (ortho->parsed()) {
            bool failed = false;
            result = cmd_ortho(o, budget, failed);
            status = failed ? CheckFailed : Ok;
        } else {
            bool all_passed = false;
            result = cmd_examples(all_passed);
            status = all_passed ? Ok : CheckFailed;
        }
        if (o.json) {
            out << result.dump() << "\n";
        } else {
            render(result, out, 0);
        }
    } catch (const ParseError& e) {
        emit_error(err, "parse", e.what());
        return UsageError;
    } catch (const BudgetExceeded& e) {
        emit_error(err, "budget", e.what());
        return BudgetError;
    } catch (const InvalidInput& e) {
        emit_error(err, "domain", e.what());
        return DomainError;
    } catch (const std::exception& e) {
        emit_error(err, "internal", e.what());
        return InternalError;
    }
    return status;
}

}  // namespace ytg::cli
