#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ytg/decomp.hpp"
#include "ytg/graph.hpp"
#include "ytg/orthopoly.hpp"
#include "ytg/polynomial.hpp"
#include "ytg/symfunc.hpp"
#include "ytg/tableaux.hpp"

namespace ytg {

using Json = nlohmann::ordered_json;

// Malformed text or JSON (as opposed to well-formed input that violates a precondition).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// "5,-3,0,1,-4", with optional surrounding brackets and spaces; "" and "[]" are empty.
std::vector<std::int64_t> parse_int_list(std::string_view text);

// "1112" (one digit per letter) or "1,1,1,2"; "" and "-" are the empty word.
std::vector<Vertex> parse_word(std::string_view text);

// "path:5" | '{"n":3,"edges":[[1,2],[2,3]]}' | path to a file holding that JSON.
Graph parse_graph(std::string_view spec);
Json graph_to_json(const Graph& g);

// {"vars": [...], "terms": [{"coef": "1/2", "exp": [..]}, ...], "text": "..."}
Json poly_to_json(const ParamPoly& p);
ParamPoly poly_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Json decomposition_to_json(const Decomposition& d, bool with_stats);
Json syt_to_json(const StandardYoungTableau& t);

// [{"partition": [..], "coef": poly}, ...] in increasing partition order.
Json schur_expansion_to_json(const SchurExpansion& e);
SchurExpansion schur_expansion_from_json(const Json& j);

Json ortho_poly_to_json(const OrthoPoly& p);
OrthoPoly ortho_poly_from_json(const Json& j);

// {"a": ["1", "0", "1", ...]}
MomentSequence moments_from_json(std::string name, const Json& j);
MomentSequence load_moments_file(const std::string& path);
// hermite | legendre | charlier:r | dirac:c | path to a moment file.
MomentSequence parse_moments(std::string_view spec);

std::string read_file(const std::string& path);

}  // namespace ytg
