#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ytg/errors.hpp"
#include "ytg/graph.hpp"
#include "ytg/polynomial.hpp"
#include "ytg/rational.hpp"
#include "ytg/tableaux.hpp"
#include "ytg/toppling_group.hpp"

namespace ytg {

// sign == 0 means the Schur function vanishes.
struct StraightenResult {
    int sign = 0;
    Partition partition;

    bool is_zero() const { return sign == 0; }
    friend bool operator==(const StraightenResult&, const StraightenResult&) = default;
};

// Rewrites s_beta (Jacobi-Trudi determinant det h_{beta_i - i + j}) as 0 or
// sign * s_lambda. Works on beta + delta, delta = (n-1, ..., 0): zero when an
// entry is negative or repeated, otherwise the sort gives lambda + delta.
// Accepts any integer vector.
StraightenResult straighten(std::span<const std::int64_t> beta);

// How E treats x^beta when beta has a negative entry.
enum class NegativeExponentRule {
    Determinantal,  // straighten as a Jacobi-Trudi determinant (h_k = 0 for k < 0)
    Vanish,         // return zero outright
};

StraightenResult e_functional(std::span<const std::int64_t> beta,
                              NegativeExponentRule rule = NegativeExponentRule::Determinantal);

// Partition -> polynomial in {t}.
using SchurExpansion = std::map<Partition, ParamPoly>;

// One summand of the square-free expansion on the path graph L_n.
struct HLTerm {
    DominantElement lambda;
    Configuration beta;      // T^lambda(alpha)
    ParamPoly coefficient;   // sum over square-free decompositions of (-t)^l3
    StraightenResult schur;  // E applied to x^beta
};

// All lambda in P_n admitting a square-free decomposition, i.e. m_k <= k(n-k).
std::vector<HLTerm> hall_littlewood_terms(const Partition& alpha, int n,
                                          NegativeExponentRule rule = NegativeExponentRule::Determinantal,
                                          std::size_t cap = Budget{}.max_objects);

SchurExpansion hall_littlewood_R(const Partition& alpha, int n,
                                 NegativeExponentRule rule = NegativeExponentRule::Determinantal,
                                 std::size_t cap = Budget{}.max_objects);

// sum_w w(x^alpha prod_{i<j} (x_i - t x_j) / (x_i - x_j)) over {t, x1..xn}, by
// antisymmetrizing the numerator and dividing exactly by the Vandermonde.
ParamPoly hall_littlewood_oracle(const Partition& alpha, int n, const Budget& budget = Budget{});

// h_k(x1..xn) over {t, x1..xn}; zero for k < 0.
ParamPoly complete_homogeneous(int k, int n);

// det(h_{beta_i - i + j}) in n variables over {t, x1..xn}; beta is zero-padded to n.
ParamPoly schur_jacobi_trudi(std::span<const std::int64_t> beta, int n);

// sum coef(t) * s_lambda(x1..xn) over {t, x1..xn}.
ParamPoly expand_schur(const SchurExpansion& e, int n);

// sum_w sign(w) C(gamma_w -> mu), gamma_w = w(lambda + delta) - delta on L_n,
// where C counts the interval decompositions of the dominance solution (0
// when mu is not dominated by gamma_w).
BigInt kostka_via_toppling(const Partition& lambda, const Partition& mu, int n);

// Number of semistandard tableaux of shape lambda and content mu.
BigInt kostka_oracle(const Partition& lambda, const Partition& mu);

}  // namespace ytg
