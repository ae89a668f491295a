#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ytg/errors.hpp"
#include "ytg/graph.hpp"
#include "ytg/polynomial.hpp"
#include "ytg/rational.hpp"
#include "ytg/toppling_group.hpp"

namespace ytg {

// T_[i,j] = T_[i] T_[i+1] ... T_[j-1], where T_[k] = T_1 ... T_k. It covers the
// columns k = i..j-1.
struct IntervalGenerator {
    int i = 1;
    int j = 2;

    friend auto operator<=>(const IntervalGenerator&, const IntervalGenerator&) = default;
    std::string to_string() const;
};

// A finite product of interval generators, stored as sorted (generator, multiplicity) pairs.
class Decomposition {
public:
    Decomposition() = default;
    // Accepts factors in any order with repetitions; multiplicities are merged.
    explicit Decomposition(std::vector<IntervalGenerator> factors);

    const std::vector<std::pair<IntervalGenerator, int>>& factors() const { return factors_; }
    // Sorted factor list with repetitions; this is the canonical ordering key.
    std::vector<IntervalGenerator> flat() const;
    bool empty() const { return factors_.empty(); }
    bool square_free() const;
    // "T[1,5]*T[2,3]^2*T[6,8]", or "1" when empty.
    std::string to_string() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;

private:
    std::vector<std::pair<IntervalGenerator, int>> factors_;
};

struct DecompStats {
    std::int64_t l1 = 0;  // length over the T_i
    std::int64_t l2 = 0;  // length over the T_[i]
    std::int64_t l3 = 0;  // number of interval factors, with multiplicity
    std::int64_t d = 0;   // number of distinct interval factors

    friend bool operator==(const DecompStats&, const DecompStats&) = default;
};

DecompStats stats(const Decomposition& dec);

// m_k = lambda_k - lambda_{k+1}: the multiplicity of T_[k], k = 1..n-1.
std::vector<std::int64_t> column_multiplicities(const DominantElement& lambda);

// Inverse of column_multiplicities for a given n.
DominantElement from_column_multiplicities(const std::vector<std::int64_t>& m);

// Column coverage of a decomposition over n-1 columns.
std::vector<std::int64_t> column_cover(const Decomposition& dec, int n);

// Peels maximal runs of consecutive nonzero columns; each run [i..j-1] becomes T_[i,j].
// Always attains the minimal number of factors.
Decomposition reduced_interval_decomposition(const DominantElement& lambda);

struct EnumerationOptions {
    bool square_free_only = false;
    std::size_t cap = Budget{}.max_objects;
};

// Every multiset of interval generators whose column coverage equals the
// column multiplicities of lambda, in lexicographic order of their flat factor
// lists. Throws BudgetExceeded past the cap.
std::vector<Decomposition> enumerate_decompositions(const DominantElement& lambda, EnumerationOptions opts = {});

// C(lambda), counted by a memoized sweep over columns.
BigInt count_decompositions(const DominantElement& lambda);

// sum over decompositions of z1^l1 z2^l2 z3^l3 q^d.
ParamPoly c_polynomial(const DominantElement& lambda, std::size_t cap = Budget{}.max_objects);

// sum over decompositions of z1^l1 z2^l2 z3^l3 (1-q)^(l3-d) (-q)^d, summed directly.
ParamPoly c_prime_polynomial(const DominantElement& lambda, std::size_t cap = Budget{}.max_objects);

// sum over square-free decompositions of (-t)^l3, a polynomial in {t}.
ParamPoly square_free_signed_series(const DominantElement& lambda, std::size_t cap = Budget{}.max_objects);

// lambda in P_n with |lambda| <= max_size, in increasing size then decreasing lex order.
std::vector<DominantElement> dominant_elements(int n, int max_size);

using ConfigSeries = std::map<Configuration, ParamPoly>;

enum class SeriesKind {
    H,     // coefficient 1 for every beta <= alpha
    HatH,  // C_{alpha,beta}(z1,z2,z3,q)
    HatK,  // C'_{alpha,beta}(z1,z2,z3,q)
};

// beta = T^lambda(alpha) for every lambda in P_n with |lambda| <= max_l1, with
// coefficients per `kind`. Coefficients live over {z1,z2,z3,q}.
ConfigSeries truncated_series(const Graph& g, const Configuration& alpha, int max_l1, SeriesKind kind,
                              std::size_t cap = Budget{}.max_objects);
ConfigSeries hat_H_truncated(const Graph& g, const Configuration& alpha, int max_l1);

struct MonomialPair {
    LaurentMonomial x;  // X_i = x_1^{d_1} ... x_i^{d_i}
    LaurentMonomial y;  // Y_i = prod_{k<=i} prod_{j ~ k} x_j
};

// (X_i, Y_i) for i = 1..n-1. T_[i] multiplies x^alpha by Y_i / X_i.
std::vector<MonomialPair> closed_form_series(const Graph& g);

}  // namespace ytg
