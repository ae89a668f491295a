#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ytg/rational.hpp"

namespace ytg {

// Canonical variable sets. Global order is z1 < z2 < z3 < q < t < x1 < x2 < ...
const std::vector<std::string>& decomposition_vars();  // {z1, z2, z3, q}
const std::vector<std::string>& t_vars();              // {t}
std::vector<std::string> t_x_vars(int n);              // {t, x1, ..., xn}

using Exponents = std::vector<int>;

// Exact sparse polynomial over a fixed, ordered variable set with rational
// coefficients. Terms are keyed by dense exponent vectors; zero coefficients
// are never stored. Binary operations require identical variable sets.
class ParamPoly {
public:
    using TermMap = std::map<Exponents, BigRational>;

    ParamPoly() = default;
    explicit ParamPoly(std::vector<std::string> vars);

    static ParamPoly constant(std::vector<std::string> vars, const BigRational& c);
    static ParamPoly variable(std::vector<std::string> vars, std::string_view name);
    static ParamPoly monomial(std::vector<std::string> vars, Exponents exps, const BigRational& c = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    BigRational coefficient(const Exponents& exps) const;
    std::size_t var_index(std::string_view name) const;
    int degree(std::string_view name) const;

    // Adds c * x^exps in place.
    void add_term(const Exponents& exps, const BigRational& c);

    ParamPoly& operator+=(const ParamPoly& other);
    ParamPoly& operator-=(const ParamPoly& other);
    ParamPoly& operator*=(const ParamPoly& other);
    ParamPoly& operator*=(const BigRational& c);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const BigRational& c) { return a *= c; }
    friend ParamPoly operator*(const BigRational& c, ParamPoly a) { return a *= c; }
    ParamPoly operator-() const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    ParamPoly pow(unsigned k) const;

    // Replaces `var` by a polynomial over the same variable set.
    ParamPoly substitute(std::string_view var, const ParamPoly& replacement) const;

    // Full evaluation; the assignment must cover every variable.
    BigRational eval(const std::map<std::string, BigRational>& assignment) const;

    // Re-expresses the polynomial over `new_vars` (matched by name). Throws if a
    // dropped variable occurs with positive exponent.
    ParamPoly reindex(std::vector<std::string> new_vars) const;
    ParamPoly rename(std::string_view from, std::string_view to) const;

    // Exact division; throws InvalidInput when `divisor` does not divide *this.
    ParamPoly divide_exact(const ParamPoly& divisor) const;

    // Terms in ascending lexicographic exponent order, e.g. "1 - 2*q + 1/3*z1^2*q".
    std::string to_string() const;

private:
    void require_same_vars(const ParamPoly& other, const char* op) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

// A monomial x^e over x1..xn with integer (possibly negative) exponents.
struct LaurentMonomial {
    std::vector<std::int64_t> exponents;

    friend LaurentMonomial operator*(const LaurentMonomial& a, const LaurentMonomial& b);
    friend LaurentMonomial operator/(const LaurentMonomial& a, const LaurentMonomial& b);
    friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
    std::string to_string() const;
};

}  // namespace ytg
