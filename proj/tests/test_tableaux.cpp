#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "ytg/tableaux.hpp"
#include "ytg/toppling_group.hpp"

using namespace ytg;

namespace {

using W = std::vector<std::int64_t>;
using Rows = std::vector<std::vector<int>>;

// Every bijective filling of the shape, kept when rows and columns increase.
std::size_t brute_force_syt_count(const Partition& shape) {
    const int m = shape.size();
    std::vector<int> fill(static_cast<std::size_t>(m));
    std::iota(fill.begin(), fill.end(), 1);
    std::size_t count = 0;
    do {
        Rows rows;
        std::size_t pos = 0;
        for (int part : shape.parts()) {
            rows.emplace_back(fill.begin() + static_cast<std::ptrdiff_t>(pos),
                              fill.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(part)));
            pos += static_cast<std::size_t>(part);
        }
        try {
            StandardYoungTableau t(rows);
            ++count;
        } catch (const InvalidInput&) {
        }
    } while (std::next_permutation(fill.begin(), fill.end()));
    return count;
}

}  // namespace

TEST_CASE("word to tableau examples") {
    CHECK(word_to_syt(YamanouchiWord({1, 1, 2, 1, 3, 2, 4})).rows() == Rows{{1, 2, 4}, {3, 6}, {5}, {7}});
    CHECK(YamanouchiWord({1, 1, 2, 1, 3, 2, 4}).type() == Partition({3, 2, 1, 1}));
    CHECK(word_to_syt(YamanouchiWord({1, 1, 1, 2})).rows() == Rows{{1, 2, 3}, {4}});
    CHECK(word_to_syt(YamanouchiWord()).rows().empty());
    CHECK_THROWS_AS(YamanouchiWord({2, 1}), InvalidInput);
    CHECK_THROWS_AS(YamanouchiWord({1, 3}), InvalidInput);
}

TEST_CASE("tableau to word examples") {
    CHECK(syt_to_word(StandardYoungTableau({{1, 2, 4}, {3, 6}, {5}, {7}})).to_string() == "1121324");
    CHECK(syt_to_word(StandardYoungTableau({{1, 3, 4}, {2}})).to_string() == "1211");
    CHECK(syt_to_word(StandardYoungTableau()).letters().empty());
    CHECK_THROWS_AS(StandardYoungTableau({{2, 1}}), InvalidInput);
    CHECK_THROWS_AS(StandardYoungTableau({{1, 2}, {3, 4, 5}}), InvalidInput);
    CHECK_THROWS_AS(StandardYoungTableau({{1, 3}, {2, 5}}), InvalidInput);
    CHECK_THROWS_AS(StandardYoungTableau({{1, 2}, {2}}), InvalidInput);
}

TEST_CASE("SYT enumeration") {
    auto t31 = enumerate_syt(Partition({3, 1}));
    REQUIRE(t31.size() == 3);
    CHECK(t31[0].rows() == Rows{{1, 2, 3}, {4}});
    CHECK(t31[1].rows() == Rows{{1, 2, 4}, {3}});
    CHECK(t31[2].rows() == Rows{{1, 3, 4}, {2}});
    CHECK(enumerate_syt(Partition({1, 1, 1, 1, 1})).size() == 1);
    CHECK(enumerate_syt(Partition({2, 2})).size() == brute_force_syt_count(Partition({2, 2})));
    CHECK(enumerate_syt(Partition({2, 2})).size() == 2);
    CHECK(enumerate_syt(Partition()).size() == 1);
    CHECK_THROWS_AS(enumerate_syt(Partition({4, 3, 2, 1}), 10), BudgetExceeded);
    for (int size = 0; size <= 8; ++size) {
        for (const auto& p : partitions_of(size, size)) {
            const auto all = enumerate_syt(p);
            CHECK(BigInt(static_cast<unsigned long>(all.size())) == hook_length_count(p));
            CHECK(count_syt(p) == hook_length_count(p));
            for (std::size_t k = 1; k < all.size(); ++k) {
                CHECK(syt_to_word(all[k - 1]) < syt_to_word(all[k]));
            }
            if (size <= 6) {
                CHECK(all.size() == brute_force_syt_count(p));
            }
        }
    }
}

TEST_CASE("word and tableau round trips") {
    // Exhaustive: all Yamanouchi words of length <= 7 over {1..4}.
    std::size_t seen = 0;
    std::vector<Vertex> w;
    std::function<void()> rec = [&] {
        if (YamanouchiWord::is_yamanouchi(w)) {
            YamanouchiWord y(w);
            auto t = word_to_syt(y);
            CHECK(syt_to_word(t) == y);
            CHECK(word_to_syt(syt_to_word(t)) == t);
            CHECK(t.shape() == y.type());
            ++seen;
        } else {
            return;
        }
        if (w.size() == 7) {
            return;
        }
        for (Vertex v = 1; v <= 4; ++v) {
            w.push_back(v);
            rec();
            w.pop_back();
        }
    };
    rec();
    CHECK(seen > 100);
    // Random large words built letter by letter.
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vertex> letters;
        std::vector<int> counts(12, 0);
        for (int k = 0; k < 60; ++k) {
            std::vector<Vertex> allowed{1};
            for (Vertex v = 2; v <= 12; ++v) {
                if (counts[static_cast<std::size_t>(v - 1)] < counts[static_cast<std::size_t>(v - 2)]) {
                    allowed.push_back(v);
                }
            }
            Vertex v = allowed[std::uniform_int_distribution<std::size_t>(0, allowed.size() - 1)(rng)];
            ++counts[static_cast<std::size_t>(v - 1)];
            letters.push_back(v);
        }
        YamanouchiWord y(letters);
        CHECK(syt_to_word(word_to_syt(y)) == y);
    }
    CHECK(YamanouchiWord({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}).to_string() == "1,2,3,4,5,6,7,8,9,10");
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({8, 7, 4, 3, 2, 2, 1})) == Partition({7, 6, 4, 3, 2, 2, 2, 1}));
    CHECK(conjugate(Partition()) == Partition());
    for (int size = 0; size <= 9; ++size) {
        for (const auto& p : partitions_of(size, size)) {
            CHECK(conjugate(conjugate(p)) == p);
        }
    }
    CHECK_THROWS_AS(Partition({1, 2}), InvalidInput);
    CHECK(Partition({2, 1, 0, 0}).length() == 2);
}

TEST_CASE("minimal Yamanouchi sequences") {
    const Graph k5 = Graph::complete(5);
    const Configuration alpha(W{5, -3, 0, 1, -4}), beta(W{-6, -4, 4, 5, 0});
    auto ws = minimal_yamanouchi_sequences(k5, alpha, beta);
    REQUIRE(ws.size() == 3);
    CHECK(ws[0].to_string() == "1112");
    CHECK(ws[1].to_string() == "1121");
    CHECK(ws[2].to_string() == "1211");
    const std::vector<Rows> tableaux{{{1, 2, 3}, {4}}, {{1, 2, 4}, {3}}, {{1, 3, 4}, {2}}};
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(word_to_syt(ws[k]).rows() == tableaux[k]);
    }

    auto trivial = minimal_yamanouchi_sequences(k5, alpha, alpha);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].letters().empty());

    auto l2 = minimal_yamanouchi_sequences(Graph::path(2), Configuration(W{1, 0}), Configuration(W{0, 1}));
    REQUIRE(l2.size() == 1);
    CHECK(l2[0].to_string() == "1");
    CHECK(minimal_yamanouchi_sequences(Graph::path(2), Configuration(W{0, 1}), Configuration(W{1, 0})).empty());
    CHECK_THROWS_AS(minimal_yamanouchi_sequences(k5, alpha, Configuration(W{1})), InvalidInput);
}

TEST_CASE("every prefix of a minimal sequence stays dominated") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 5)(rng);
        const Graph g = oracle::random_connected_graph(rng, n);
        const Configuration a = oracle::random_config(rng, n);
        const DominantElement lam = oracle::random_dominant(rng, n, 1);
        const Configuration b = apply_exponents(g, a, lam.parts());
        for (const auto& w : minimal_yamanouchi_sequences(g, a, b)) {
            CHECK(apply_word(g, a, w.letters()) == b);
            for (std::size_t k = 0; k <= w.length(); ++k) {
                std::span<const Vertex> prefix(w.letters().data(), k);
                CHECK(dominated_by(g, apply_word(g, a, prefix), a));
            }
        }
    }
}

TEST_CASE("words of type lambda + k(1,...,1) reach the same configuration") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 4)(rng);
        const Graph g = oracle::random_connected_graph(rng, n);
        const Configuration a = oracle::random_config(rng, n);
        const DominantElement lam = oracle::random_dominant(rng, n, 1);
        const Configuration b = apply_exponents(g, a, lam.parts());
        for (int k = 0; k <= 1; ++k) {
            std::vector<int> parts;
            for (auto v : lam.parts()) {
                parts.push_back(static_cast<int>(v) + k);
            }
            Partition shape(parts);
            auto ws = yamanouchi_words(shape, 100000);
            for (std::size_t idx = 0; idx < ws.size(); idx += std::max<std::size_t>(1, ws.size() / 10)) {
                CHECK(apply_word(g, a, ws[idx].letters()) == b);
            }
        }
        // A word of a different type (one extra letter 1) lands somewhere else.
        std::vector<int> other;
        for (auto v : lam.parts()) {
            other.push_back(static_cast<int>(v));
        }
        other[0] += 1;
        auto ws = yamanouchi_words(Partition(other), 100000);
        CHECK(apply_word(g, a, ws.front().letters()) != b);
    }
}
