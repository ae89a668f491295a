#include <doctest.h>

#include "oracles.hpp"
#include "ytg/orthopoly.hpp"

using namespace ytg;

namespace {

using W = std::vector<std::int64_t>;

OrthoPoly poly(std::initializer_list<BigRational> c) { return {std::vector<BigRational>(c)}; }

std::vector<MomentSequence> families() {
    return {MomentSequence::hermite(), MomentSequence::legendre(), MomentSequence::charlier(1),
            MomentSequence::charlier(make_rational(3, 2))};
}

}  // namespace

TEST_CASE("moment families") {
    CHECK(MomentSequence::hermite().first(9) ==
          std::vector<BigRational>{1, 0, 1, 0, 3, 0, 15, 0, 105});
    CHECK(MomentSequence::legendre().first(5) ==
          std::vector<BigRational>{2, 0, make_rational(2, 3), 0, make_rational(2, 5)});
    // Poisson(1) moments are the Bell numbers.
    CHECK(MomentSequence::charlier(1).first(7) == std::vector<BigRational>{1, 1, 2, 5, 15, 52, 203});
    CHECK(MomentSequence::charlier(2).first(4) == std::vector<BigRational>{1, 2, 6, 22});
    auto fin = MomentSequence::finite("f", {1, 2});
    CHECK(fin.at(1) == 2);
    CHECK_THROWS_AS(fin.first(3), InvalidInput);
    CHECK_THROWS_AS(MomentSequence::finite("z", {0, 1}), InvalidInput);
}

TEST_CASE("q polynomial examples") {
    CHECK(q_polynomial(W{1, 0}, 2) == SignedMonomialSum{{{1, 0}, 1}, {{0, 1}, -1}});
    CHECK(q_polynomial(W{0, 0}, 2) == SignedMonomialSum{{{0, 0}, 1}, {{-1, 1}, -1}});
    CHECK(q_polynomial(W{5}, 1) == SignedMonomialSum{{{5}, 1}});
    CHECK_THROWS_AS(q_polynomial(W{1, 0}, 3), InvalidInput);
    Budget b;
    b.max_subset_n = 3;
    CHECK_THROWS_AS(q_polynomial(W{1, 1, 1, 0}, 4, b), BudgetExceeded);
}

TEST_CASE("q polynomial equals the subset sum") {
    for (int n = 1; n <= 5; ++n) {
        W alpha(static_cast<std::size_t>(n), n);
        alpha.back() = 0;
        CHECK(q_polynomial(alpha, n) == oracle::brute_force_q(alpha));
        W other(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            other[static_cast<std::size_t>(k)] = (k * 7 + 3) % 5 - 1;
        }
        CHECK(q_polynomial(other, n) == oracle::brute_force_q(other));
    }
}

TEST_CASE("q_(n,...,n,0) has nonnegative exponents, degree |alpha|, t-degree <= n") {
    for (int n = 1; n <= 6; ++n) {
        W alpha(static_cast<std::size_t>(n) + 1, n);
        alpha.back() = 0;
        for (const auto& [beta, c] : q_polynomial(alpha, n + 1)) {
            CHECK(std::all_of(beta.begin(), beta.end(), [](std::int64_t b) { return b >= 0; }));
            CHECK(std::accumulate(beta.begin(), beta.end(), std::int64_t{0}) == n * n);
            CHECK(beta.back() <= n);
        }
    }
}

TEST_CASE("ortho_poly examples") {
    CHECK(ortho_poly(MomentSequence::hermite(), 0) == poly({1}));
    for (auto m : families()) {
        const auto a = m.first(2);
        CHECK(ortho_poly(m, 1) == poly({a[1], -a[0]}));
    }
    const OrthoPoly h2 = ortho_poly(MomentSequence::hermite(), 2);
    CHECK(h2 == poly({1, 0, -1}));
    CHECK(proportionality_scalar(h2, poly({-1, 0, 1})) == BigRational(-1));
    CHECK(ortho_poly(MomentSequence::hermite(), 3) == poly({0, -6, 0, 2}));
    CHECK(ortho_poly(MomentSequence::hermite(), 4) == poly({36, 0, -72, 0, 12}));
    CHECK_THROWS_AS(ortho_poly(MomentSequence::finite("short", {1, 0, 1}), 2), InvalidInput);
    CHECK_THROWS_AS(ortho_poly(MomentSequence::hermite(), -1), InvalidInput);
}

TEST_CASE("Hankel oracle examples") {
    auto m = MomentSequence::finite("m", {2, 3});
    CHECK(hankel_oracle(m, 1) == poly({make_rational(-3, 2), 1}));
    CHECK(hankel_oracle(MomentSequence::legendre(), 2) == poly({make_rational(-1, 3), 0, 1}));
    CHECK(hankel_oracle(MomentSequence::hermite(), 3) == poly({0, -3, 0, 1}));
    CHECK_THROWS_AS(hankel_oracle(MomentSequence::dirac(1), 2), NotQuasiDefinite);
}

TEST_CASE("inner products") {
    auto m = MomentSequence::charlier(1);
    CHECK(inner_product(m, poly({1}), poly({1})) == 1);
    CHECK(inner_product(m, ortho_poly(m, 1), poly({1})) == 0);
    auto h = MomentSequence::hermite();
    CHECK(inner_product(h, ortho_poly(h, 2), ortho_poly(h, 1)) == 0);
    CHECK(inner_product(MomentSequence::legendre(), poly({1}), poly({1})) == 2);
}

TEST_CASE("proportionality to the Hankel oracle, with scalar p_{n,n}") {
    for (auto m : families()) {
        for (int n = 0; n <= 5; ++n) {
            const OrthoPoly p = ortho_poly(m, n);
            auto s = proportionality_scalar(p, hankel_oracle(m, n));
            REQUIRE(s.has_value());
            CHECK(*s == p.leading());
            CHECK(p.degree() == n);
        }
    }
}

TEST_CASE("leading coefficient from q_(n-1,...,n-1)") {
    for (auto m : families()) {
        for (int n = 1; n <= 6; ++n) {
            CHECK(leading_coefficient_via_q(m, n) == ortho_poly(m, n).leading());
        }
    }
}

TEST_CASE("E x_{n+1}^k q vanishes for k < n") {
    for (auto m : families()) {
        for (int n = 1; n <= 4; ++n) {
            W alpha(static_cast<std::size_t>(n) + 1, n);
            alpha.back() = 0;
            const auto q = q_polynomial(alpha, n + 1);
            for (int k = 0; k < n; ++k) {
                SignedMonomialSum shifted;
                for (const auto& [beta, c] : q) {
                    auto b = beta;
                    b.back() += k;
                    shifted[b] += c;
                }
                CHECK(expectation(m, shifted) == 0);
            }
        }
    }
}

TEST_CASE("verify_orthogonality reports") {
    for (auto m : families()) {
        const auto r = verify_orthogonality(m, 5);
        CHECK(r.cross_ok());
        CHECK(r.degrees_ok());
        CHECK(r.norm_signed_ok());
        // The unsigned identity holds for odd n only.
        for (const auto& c : r.norms) {
            CHECK(c.as_stated == (c.n % 2 == 1));
        }
    }
    const auto trivial = verify_orthogonality(MomentSequence::hermite(), 0);
    CHECK(trivial.cross.empty());
    CHECK(trivial.degrees_ok());

    const auto dirac = verify_orthogonality(MomentSequence::dirac(1), 4);
    REQUIRE(dirac.first_degenerate.has_value());
    CHECK(*dirac.first_degenerate == 2);
    CHECK(dirac.polys[2].leading() == 0);
    CHECK_THROWS_AS(verify_orthogonality(MomentSequence::hermite(), -1), InvalidInput);
}
