#include "ytg/reference_examples.hpp"

#include <functional>

#include "ytg/decomp.hpp"
#include "ytg/graph.hpp"
#include "ytg/io.hpp"
#include "ytg/orthopoly.hpp"
#include "ytg/symfunc.hpp"
#include "ytg/tableaux.hpp"
#include "ytg/toppling_group.hpp"

namespace ytg {

namespace {

std::string dump(const Json& j) { return j.dump(); }

std::string words(const std::vector<YamanouchiWord>& ws) {
    Json out = Json::array();
    for (const auto& w : ws) {
        out.push_back(w.to_string());
    }
    return dump(out);
}

}  // namespace

std::vector<ReferenceExample> run_reference_examples() {
    std::vector<ReferenceExample> out;
    auto check = [&](std::string id, std::string description, std::string expected,
                     const std::function<std::string()>& compute) {
        ReferenceExample ex{std::move(id), std::move(description), std::move(expected), "", false};
        try {
            ex.actual = compute();
            ex.passed = ex.actual == ex.expected;
        } catch (const std::exception& e) {
            ex.actual = std::string("error: ") + e.what();
        }
        out.push_back(std::move(ex));
    };

    const Graph k5 = Graph::complete(5);
    const Configuration alpha({5, -3, 0, 1, -4});
    const Configuration beta({-6, -4, 4, 5, 0});
    const Graph l3 = Graph::path(3);

    check("offset-path-middle", "toppling offset of vertex 2 on path:3", "[1,-2,1]",
          [&] { return dump(toppling_offset(l3, 2).weights); });
    check("offset-path-end", "toppling offset of vertex 1 on path:3", "[-1,1,0]",
          [&] { return dump(toppling_offset(l3, 1).weights); });
    check("topple-k5", "word 1112 on complete:5 from (5,-3,0,1,-4)", "[-6,-4,4,5,0]", [&] {
        const std::vector<Vertex> w{1, 1, 1, 2};
        return dump(apply_word(k5, alpha, w).weights);
    });
    check("laplacian-k5", "Laplacian solve for beta - alpha on complete:5", "[3,1,0,0,0]",
          [&] { return dump(reduced_laplacian_solve(k5, beta - alpha).lambda); });
    check("normal-form", "normal form of (-3,-1,0,2,0,0,4,0)", "[0,2,3,5,3,3,7,3]", [] {
        const std::vector<std::int64_t> a{-3, -1, 0, 2, 0, 0, 4, 0};
        return dump(normalize(a).exponents());
    });
    check("dominance-k5", "dominance solve on complete:5", "[3,1,0,0,0]",
          [&] { return dump(solve_dominance(k5, alpha, beta).lambda.value().parts()); });
    check("syt-shape-3211", "Yamanouchi word 1121324 to tableau", "[[1,2,4],[3,6],[5],[7]]",
          [] { return dump(syt_to_json(word_to_syt(YamanouchiWord({1, 1, 2, 1, 3, 2, 4})))); });
    check("syt-shape-3211-type", "type of 1121324", "(3,2,1,1)",
          [] { return YamanouchiWord({1, 1, 2, 1, 3, 2, 4}).type().to_string(); });
    check("syt-1112", "Yamanouchi word 1112 to tableau", "[[1,2,3],[4]]",
          [] { return dump(syt_to_json(word_to_syt(YamanouchiWord({1, 1, 1, 2})))); });
    check("word-of-syt", "tableau [[1,3,4],[2]] to word", "1211",
          [] { return syt_to_word(StandardYoungTableau({{1, 3, 4}, {2}})).to_string(); });
    check("syt-count-31", "number of SYT of shape (3,1)", "3",
          [] { return std::to_string(enumerate_syt(Partition({3, 1})).size()); });
    check("minimal-sequences-k5", "minimal Yamanouchi sequences on complete:5", R"(["1112","1121","1211"])",
          [&] { return words(minimal_yamanouchi_sequences(k5, alpha, beta)); });
    check("conjugate", "conjugate of (8,7,4,3,2,2,1)", "(7,6,4,3,2,2,2,1)",
          [] { return conjugate(Partition({8, 7, 4, 3, 2, 2, 1})).to_string(); });

    const DominantElement big({8, 7, 4, 3, 2, 2, 1, 0});
    check("column-multiplicities", "T_[k] multiplicities of (8,7,4,3,2,2,1,0)", "[1,3,1,1,0,1,1]",
          [&] { return dump(column_multiplicities(big)); });
    check("reduced-decomposition", "reduced interval decomposition of (8,7,4,3,2,2,1,0)", "T[1,5]*T[2,3]^2*T[6,8]",
          [&] { return reduced_interval_decomposition(big).to_string(); });
    check("stats", "(l1,l2,l3,d) of T[1,5]*T[2,3]^2*T[6,8]", "[27,8,4,3]", [&] {
        DecompStats s = stats(reduced_interval_decomposition(big));
        return dump(Json{s.l1, s.l2, s.l3, s.d});
    });
    check("two-reduced", "minimal-l3 decompositions of (4,3,1,0)", R"(["T[1,3]*T[2,4]","T[1,4]*T[2,3]"])", [] {
        auto decs = enumerate_decompositions(DominantElement({4, 3, 1, 0}));
        std::int64_t best = -1;
        for (const auto& d : decs) {
            std::int64_t l3 = stats(d).l3;
            best = best < 0 ? l3 : std::min(best, l3);
        }
        Json names = Json::array();
        for (const auto& d : decs) {
            if (stats(d).l3 == best) {
                names.push_back(d.to_string());
            }
        }
        return dump(names);
    });
    check("series-k5", "beta appears in the size-4 truncation from alpha on complete:5", "true", [&] {
        auto series = hat_H_truncated(k5, alpha, 4);
        auto it = series.find(beta);
        return std::string(it != series.end() &&
                                   it->second == c_polynomial(DominantElement({3, 1, 0, 0, 0}))
                               ? "true"
                               : "false");
    });
    check("closed-form-complete", "Y_i/X_i on complete:5", "[[-4,1,1,1,1],[-3,-3,2,2,2],[-2,-2,-2,3,3],[-1,-1,-1,-1,4]]",
          [] {
              Json rows = Json::array();
              for (const auto& [x, y] : closed_form_series(Graph::complete(5))) {
                  rows.push_back((y / x).exponents);
              }
              return dump(rows);
          });
    check("closed-form-path", "Y_i/X_i on path:4", "[[-1,1,0,0],[0,-1,1,0],[0,0,-1,1]]", [] {
        Json rows = Json::array();
        for (const auto& [x, y] : closed_form_series(Graph::path(4))) {
            rows.push_back((y / x).exponents);
        }
        return dump(rows);
    });
    check("p0", "p_0 for Hermite moments", "1", [] { return ortho_poly(MomentSequence::hermite(), 0).to_string(); });
    return out;
}

}  // namespace ytg
