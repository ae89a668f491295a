#include "ytg/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ytg {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::int64_t parse_int(std::string_view tok) {
    tok = trim(tok);
    if (!tok.empty() && tok.front() == '+') {
        tok.remove_prefix(1);
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("not an integer: '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') {
            throw ParseError("unbalanced bracket in '" + std::string(text) + "'");
        }
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<std::int64_t> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::vector<Vertex> parse_word(std::string_view text) {
    text = trim(text);
    std::vector<Vertex> out;
    if (text.empty() || text == "-") {
        return out;
    }
    if (text.find(',') != std::string_view::npos || text.front() == '[') {
        for (auto v : parse_int_list(text)) {
            out.push_back(static_cast<Vertex>(v));
        }
        return out;
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw ParseError("word letters must be digits, or use commas: '" + std::string(text) + "'");
        }
        out.push_back(c - '0');
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("invalid JSON in " + what + ": " + e.what());
    }
}

Graph graph_from_json(const Json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("each edge must be a pair [i, j]");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph::from_edges(n, std::move(edges));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed graph JSON: ") + e.what());
    }
}

}  // namespace

Graph parse_graph(std::string_view spec) {
    spec = trim(spec);
    if (spec.empty()) {
        throw ParseError("empty graph spec");
    }
    if (spec.front() == '{') {
        return graph_from_json(parse_json_text(std::string(spec), "graph"));
    }
    const auto colon = spec.find(':');
    if (colon != std::string_view::npos) {
        const auto family = spec.substr(0, colon);
        if (family == "path" || family == "complete" || family == "cycle") {
            return Graph::from_family(spec);
        }
    }
    return graph_from_json(parse_json_text(read_file(std::string(spec)), std::string(spec)));
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    return {{"n", g.n()}, {"edges", edges}};
}

Json poly_to_json(const ParamPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"coef", to_string(c)}, {"exp", e}});
    }
    return {{"vars", p.vars()}, {"terms", terms}, {"text", p.to_string()}};
}

ParamPoly poly_from_json(const Json& j) {
    try {
        ParamPoly p(j.at("vars").get<std::vector<std::string>>());
        for (const auto& term : j.at("terms")) {
            auto e = term.at("exp").get<Exponents>();
            if (e.size() != p.vars().size()) {
                throw ParseError("exponent length does not match the variable set");
            }
            p.add_term(e, parse_rational(term.at("coef").get<std::string>()));
        }
        return p;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

Json partition_to_json(const Partition& p) { return p.parts(); }

Json decomposition_to_json(const Decomposition& d, bool with_stats) {
    Json factors = Json::array();
    for (const auto& [f, a] : d.factors()) {
        factors.push_back({{"i", f.i}, {"j", f.j}, {"mult", a}});
    }
    Json out = {{"text", d.to_string()}, {"factors", factors}, {"square_free", d.square_free()}};
    if (with_stats) {
        DecompStats s = stats(d);
        out["stats"] = {{"l1", s.l1}, {"l2", s.l2}, {"l3", s.l3}, {"d", s.d}};
    }
    return out;
}

Json syt_to_json(const StandardYoungTableau& t) { return t.rows(); }

Json schur_expansion_to_json(const SchurExpansion& e) {
    Json out = Json::array();
    for (const auto& [lambda, coef] : e) {
        out.push_back({{"partition", lambda.parts()}, {"coef", poly_to_json(coef)}});
    }
    return out;
}

SchurExpansion schur_expansion_from_json(const Json& j) {
    try {
        SchurExpansion out;
        for (const auto& entry : j) {
            out.emplace(Partition(entry.at("partition").get<std::vector<int>>()), poly_from_json(entry.at("coef")));
        }
        return out;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed Schur expansion JSON: ") + e.what());
    }
}

Json ortho_poly_to_json(const OrthoPoly& p) {
    Json coefs = Json::array();
    for (const auto& c : p.coefficients) {
        coefs.push_back(to_string(c));
    }
    return {{"coefficients", coefs}, {"text", p.to_string()}};
}

OrthoPoly ortho_poly_from_json(const Json& j) {
    try {
        OrthoPoly p;
        for (const auto& c : j.at("coefficients")) {
            p.coefficients.push_back(parse_rational(c.get<std::string>()));
        }
        return p;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

MomentSequence moments_from_json(std::string name, const Json& j) {
    std::vector<BigRational> a;
    try {
        for (const auto& v : j.at("a")) {
            a.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : BigRational(v.get<long>()));
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed moment file: ") + e.what());
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("malformed moment file: ") + e.what());
    }
    if (a.empty()) {
        throw ParseError("moment file has no moments");
    }
    return MomentSequence::finite(std::move(name), std::move(a));
}

MomentSequence load_moments_file(const std::string& path) {
    return moments_from_json(path, parse_json_text(read_file(path), path));
}

MomentSequence parse_moments(std::string_view spec) {
    spec = trim(spec);
    if (spec == "hermite") {
        return MomentSequence::hermite();
    }
    if (spec == "legendre") {
        return MomentSequence::legendre();
    }
    auto rate = [&](std::string_view prefix) {
        try {
            return parse_rational(spec.substr(prefix.size()));
        } catch (const InvalidInput& e) {
            throw ParseError("bad parameter in '" + std::string(spec) + "': " + e.what());
        }
    };
    if (spec.starts_with("charlier:")) {
        return MomentSequence::charlier(rate("charlier:"));
    }
    if (spec.starts_with("dirac:")) {
        return MomentSequence::dirac(rate("dirac:"));
    }
    return load_moments_file(std::string(spec));
}

}  // namespace ytg
