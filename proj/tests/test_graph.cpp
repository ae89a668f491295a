#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ytg/errors.hpp"
#include "ytg/graph.hpp"

using namespace ytg;

namespace {
using W = std::vector<std::int64_t>;
}

TEST_CASE("toppling offsets") {
    CHECK(toppling_offset(Graph::complete(5), 1).weights == W{-4, 1, 1, 1, 1});
    CHECK(toppling_offset(Graph::path(3), 2).weights == W{1, -2, 1});
    CHECK(toppling_offset(Graph::path(3), 1).weights == W{-1, 1, 0});
    CHECK(toppling_offset(Graph::cycle(4), 1).weights == W{-2, 1, 0, 1});
    CHECK_THROWS_AS(toppling_offset(Graph::path(3), 0), InvalidInput);
    CHECK_THROWS_AS(toppling_offset(Graph::path(3), 4), InvalidInput);
}

TEST_CASE("apply_word examples") {
    const Graph k5 = Graph::complete(5);
    const Configuration alpha(W{5, -3, 0, 1, -4});
    const std::vector<Vertex> w1{1, 1, 1, 2};
    CHECK(apply_word(k5, alpha, w1).weights == W{-6, -4, 4, 5, 0});
    CHECK(apply_word(k5, alpha, std::vector<Vertex>{}) == alpha);
    const std::vector<Vertex> all{1, 2, 3, 4, 5};
    CHECK(apply_word(k5, alpha, all) == alpha);
    const std::vector<Vertex> bad{1, 6};
    CHECK_THROWS_AS(apply_word(k5, alpha, bad), InvalidInput);
    CHECK_THROWS_AS(apply_word(k5, Configuration(W{1, 2}), w1), InvalidInput);
}

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}, {1, 2}, {2, 3}}), InvalidInput);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 2}, {2, 1}, {2, 3}}), InvalidInput);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 2}, {2, 4}}), InvalidInput);
    CHECK_THROWS_AS(Graph::from_edges(4, {{1, 2}, {3, 4}}), InvalidInput);
    CHECK_THROWS_AS(Graph::from_family("star:4"), InvalidInput);
    CHECK_THROWS_AS(Graph::from_family("path:x"), InvalidInput);
    CHECK_THROWS_AS(Graph::cycle(2), InvalidInput);
    Graph g = Graph::from_edges(3, {{3, 2}, {1, 2}});
    CHECK(g.degree(2) == 2);
    CHECK(g.neighbors(2) == std::vector<Vertex>{1, 3});
    CHECK(Graph::from_family("complete:4").edges().size() == 6);
    CHECK(Graph::path(1).n() == 1);
}

TEST_CASE("Laplacian solve examples") {
    const Graph k5 = Graph::complete(5);
    auto zero = reduced_laplacian_solve(k5, Configuration::zeros(5));
    REQUIRE(zero);
    CHECK(zero.lambda == W{0, 0, 0, 0, 0});
    auto r = reduced_laplacian_solve(k5, Configuration(W{-6, -4, 4, 5, 0}) - Configuration(W{5, -3, 0, 1, -4}));
    REQUIRE(r);
    CHECK(r.lambda == W{3, 1, 0, 0, 0});
    auto l2 = reduced_laplacian_solve(Graph::path(2), Configuration(W{-1, 1}));
    REQUIRE(l2);
    CHECK(l2.lambda == W{1, 0});
    CHECK(reduced_laplacian_solve(k5, Configuration(W{1, 0, 0, 0, 0})).status == LaplacianStatus::NonZeroSum);
    // On K_5 every offset is 5e_i - (1,...,1); (1,-1,0,0,0) needs fifths.
    CHECK(reduced_laplacian_solve(k5, Configuration(W{1, -1, 0, 0, 0})).status == LaplacianStatus::NonIntegral);
}

TEST_CASE("random graph properties") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 8)(rng);
        const Graph g = oracle::random_connected_graph(rng, n);
        const Configuration c = oracle::random_config(rng, n);
        std::uniform_int_distribution<int> v(1, n);
        std::vector<Vertex> word;
        for (int k = std::uniform_int_distribution<int>(0, 12)(rng); k > 0; --k) {
            word.push_back(v(rng));
        }
        const Configuration out = apply_word(g, c, word);
        CHECK(out.total() == c.total());
        const Vertex i = v(rng), j = v(rng);
        const std::vector<Vertex> ij{i, j}, ji{j, i};
        CHECK(apply_word(g, c, ij) == apply_word(g, c, ji));
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        CHECK(apply_word(g, c, all) == c);
        auto sol = reduced_laplacian_solve(g, out - c);
        REQUIRE(sol);
        CHECK(sol.lambda.back() == 0);
        CHECK(apply_exponents(g, c, sol.lambda) == out);
    }
}
