#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ytg/errors.hpp"
#include "ytg/rational.hpp"

namespace ytg {

// The Hankel minor needed for a monic orthogonal polynomial vanishes.
class NotQuasiDefinite : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// Moments a_k = L(t^k). Families are generated on demand; a finite list throws
// past its end.
class MomentSequence {
public:
    using Generator = std::function<std::vector<BigRational>(std::size_t count)>;

    MomentSequence(std::string name, Generator gen);

    static MomentSequence hermite();                    // a_k = (k-1) a_{k-2}, a_0 = 1, a_1 = 0
    static MomentSequence legendre();                   // 2/(k+1) for even k, 0 for odd k
    static MomentSequence charlier(const BigRational& r);  // a_{k+1} = r sum_j C(k,j) a_j
    static MomentSequence dirac(const BigRational& point);  // a_k = point^k
    static MomentSequence finite(std::string name, std::vector<BigRational> moments);

    const std::string& name() const { return name_; }
    // a_0 .. a_{count-1}; throws InvalidInput when a moment is undefined.
    std::vector<BigRational> first(std::size_t count) const;
    BigRational at(std::size_t k) const { return first(k + 1)[k]; }

private:
    std::string name_;
    Generator gen_;
};

// Exponent vector -> integer coefficient.
using SignedMonomialSum = std::map<std::vector<std::int64_t>, BigInt>;

// prod over intervals [i,j] of L_n of (1 - T_[i,j]) applied to x^alpha, where
// T_[i,j] x^beta = x^(beta - e_i + e_j). Equal to the signed sum over subsets.
SignedMonomialSum q_polynomial(std::span<const std::int64_t> alpha, int n, const Budget& budget = Budget{});

// Coefficients by increasing power of t; p_n has exactly n+1 slots.
struct OrthoPoly {
    std::vector<BigRational> coefficients;

    int nominal_degree() const { return static_cast<int>(coefficients.size()) - 1; }
    // Highest power with nonzero coefficient, -1 for the zero polynomial.
    int degree() const;
    const BigRational& leading() const { return coefficients.back(); }
    std::string to_string() const;

    friend bool operator==(const OrthoPoly&, const OrthoPoly&) = default;
};

// sum_beta coef * a_{beta_1} ... a_{beta_n} t^{beta_{n+1}} over q_{(n,...,n,0)} on L_{n+1}; p_0 = 1.
OrthoPoly ortho_poly(const MomentSequence& m, int n, const Budget& budget = Budget{});

// E on a monomial sum with all variables independent: sum coef * prod_i a_{beta_i}.
BigRational expectation(const MomentSequence& m, const SignedMonomialSum& q);

// (-1)^n E q_{(n-1,...,n-1)} on L_n, n >= 1.
BigRational leading_coefficient_via_q(const MomentSequence& m, int n, const Budget& budget = Budget{});

// Monic, from the cofactors of the bordered Hankel determinant.
OrthoPoly hankel_oracle(const MomentSequence& m, int n);

BigRational inner_product(const MomentSequence& m, const OrthoPoly& p, const OrthoPoly& r);

// Nonzero c with a = c * b, checked by cross-multiplying coefficients.
std::optional<BigRational> proportionality_scalar(const OrthoPoly& a, const OrthoPoly& b);

struct CrossProduct {
    int n = 0;
    int m = 0;
    BigRational value;
};

struct NormCheck {
    int n = 0;
    BigRational norm;     // L(p_n^2)
    BigRational product;  // p_{n,n} p_{n+1,n+1}
    bool as_stated = false;  // norm == product
    bool signed_ok = false;  // norm == (-1)^{n+1} product
};

struct OrthogonalityReport {
    int up_to = 0;
    std::vector<OrthoPoly> polys;  // p_0 .. p_{up_to+1}
    std::vector<CrossProduct> cross;
    std::vector<NormCheck> norms;
    std::vector<int> degrees;  // deg p_0 .. deg p_{up_to}
    std::optional<int> first_degenerate;

    bool cross_ok() const;
    bool norm_as_stated_ok() const;
    bool norm_signed_ok() const;
    bool degrees_ok() const { return !first_degenerate.has_value(); }
    bool passed() const { return cross_ok() && norm_as_stated_ok() && degrees_ok(); }
};

OrthogonalityReport verify_orthogonality(const MomentSequence& m, int up_to, const Budget& budget = Budget{});

}  // namespace ytg
