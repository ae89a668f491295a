#include "ytg/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "ytg/errors.hpp"

namespace ytg {

const std::vector<std::string>& decomposition_vars() {
    static const std::vector<std::string> vars{"z1", "z2", "z3", "q"};
    return vars;
}

const std::vector<std::string>& t_vars() {
    static const std::vector<std::string> vars{"t"};
    return vars;
}

std::vector<std::string> t_x_vars(int n) {
    std::vector<std::string> vars{"t"};
    for (int i = 1; i <= n; ++i) {
        vars.push_back("x" + std::to_string(i));
    }
    return vars;
}

ParamPoly::ParamPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

ParamPoly ParamPoly::constant(std::vector<std::string> vars, const BigRational& c) {
    ParamPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

ParamPoly ParamPoly::variable(std::vector<std::string> vars, std::string_view name) {
    ParamPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(e, 1);
    return p;
}

ParamPoly ParamPoly::monomial(std::vector<std::string> vars, Exponents exps, const BigRational& c) {
    ParamPoly p(std::move(vars));
    if (exps.size() != p.vars_.size()) {
        throw InvalidInput("exponent vector length does not match variable set");
    }
    p.add_term(exps, c);
    return p;
}

BigRational ParamPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? BigRational(0) : it->second;
}

std::size_t ParamPoly::var_index(std::string_view name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        throw InvalidInput("unknown variable '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - vars_.begin());
}

int ParamPoly::degree(std::string_view name) const {
    std::size_t k = var_index(name);
    int d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[k]);
    }
    return d;
}

void ParamPoly::add_term(const Exponents& exps, const BigRational& c) {
    if (c == 0) {
        return;
    }
    for (int e : exps) {
        if (e < 0) {
            throw InvalidInput("negative exponent in polynomial term");
        }
    }
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void ParamPoly::require_same_vars(const ParamPoly& other, const char* op) const {
    if (vars_ != other.vars_) {
        throw InvalidInput(std::string("variable-set mismatch in ") + op);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
    require_same_vars(other, "addition");
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
    require_same_vars(other, "subtraction");
    for (const auto& [e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    a.require_same_vars(b, "multiplication");
    ParamPoly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] = ea[k] + eb[k];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
    *this = *this * other;
    return *this;
}

ParamPoly& ParamPoly::operator*=(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) {
        coef *= c;
    }
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out = *this;
    out *= BigRational(-1);
    return out;
}

ParamPoly ParamPoly::pow(unsigned k) const {
    ParamPoly result = constant(vars_, 1);
    ParamPoly base = *this;
    while (k > 0) {
        if (k & 1u) {
            result *= base;
        }
        k >>= 1u;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

ParamPoly ParamPoly::substitute(std::string_view var, const ParamPoly& replacement) const {
    std::size_t k = var_index(var);
    require_same_vars(replacement, "substitution");
    ParamPoly out(vars_);
    std::map<int, ParamPoly> powers;
    for (const auto& [e, c] : terms_) {
        auto it = powers.find(e[k]);
        if (it == powers.end()) {
            it = powers.emplace(e[k], replacement.pow(static_cast<unsigned>(e[k]))).first;
        }
        Exponents rest = e;
        rest[k] = 0;
        out += monomial(vars_, rest, c) * it->second;
    }
    return out;
}

BigRational ParamPoly::eval(const std::map<std::string, BigRational>& assignment) const {
    std::vector<BigRational> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = assignment.find(v);
        if (it == assignment.end()) {
            throw InvalidInput("missing value for variable '" + v + "'");
        }
        values.push_back(it->second);
    }
    BigRational sum = 0;
    for (const auto& [e, c] : terms_) {
        BigRational term = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            for (int p = 0; p < e[k]; ++p) {
                term *= values[k];
            }
        }
        sum += term;
    }
    return sum;
}

ParamPoly ParamPoly::reindex(std::vector<std::string> new_vars) const {
    std::vector<int> target(vars_.size(), -1);
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[k]);
        if (it != new_vars.end()) {
            target[k] = static_cast<int>(it - new_vars.begin());
        }
    }
    ParamPoly out(std::move(new_vars));
    for (const auto& [e, c] : terms_) {
        Exponents ne(out.vars_.size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (target[k] >= 0) {
                ne[static_cast<std::size_t>(target[k])] = e[k];
            } else if (e[k] != 0) {
                throw InvalidInput("cannot drop variable '" + vars_[k] + "' that occurs in the polynomial");
            }
        }
        out.add_term(ne, c);
    }
    return out;
}

ParamPoly ParamPoly::rename(std::string_view from, std::string_view to) const {
    std::size_t k = var_index(from);
    if (std::find(vars_.begin(), vars_.end(), to) != vars_.end()) {
        throw InvalidInput("rename target '" + std::string(to) + "' already present");
    }
    ParamPoly out = *this;
    out.vars_[k] = std::string(to);
    return out;
}

ParamPoly ParamPoly::divide_exact(const ParamPoly& divisor) const {
    require_same_vars(divisor, "division");
    if (divisor.is_zero()) {
        throw InvalidInput("division by the zero polynomial");
    }
    // Leading terms are lexicographically largest exponent vectors.
    const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
    ParamPoly remainder = *this;
    ParamPoly quotient(vars_);
    Exponents shift(vars_.size());
    while (!remainder.is_zero()) {
        const auto& [re, rc] = *remainder.terms_.rbegin();
        for (std::size_t k = 0; k < shift.size(); ++k) {
            shift[k] = re[k] - lead_e[k];
            if (shift[k] < 0) {
                throw InvalidInput("polynomial division is not exact");
            }
        }
        ParamPoly step = monomial(vars_, shift, rc / lead_c);
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigRational mag = abs(c);
        bool negative = c < 0;
        if (first) {
            if (negative) {
                os << "-";
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool constant_term = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
        bool wrote = false;
        if (mag != 1 || constant_term) {
            os << ytg::to_string(mag);
            wrote = true;
        }
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) {
                continue;
            }
            if (wrote) {
                os << "*";
            }
            os << vars_[k];
            if (e[k] != 1) {
                os << "^" << e[k];
            }
            wrote = true;
        }
    }
    return os.str();
}

LaurentMonomial operator*(const LaurentMonomial& a, const LaurentMonomial& b) {
    if (a.exponents.size() != b.exponents.size()) {
        throw InvalidInput("monomial length mismatch");
    }
    LaurentMonomial out = a;
    for (std::size_t k = 0; k < out.exponents.size(); ++k) {
        out.exponents[k] += b.exponents[k];
    }
    return out;
}

LaurentMonomial operator/(const LaurentMonomial& a, const LaurentMonomial& b) {
    if (a.exponents.size() != b.exponents.size()) {
        throw InvalidInput("monomial length mismatch");
    }
    LaurentMonomial out = a;
    for (std::size_t k = 0; k < out.exponents.size(); ++k) {
        out.exponents[k] -= b.exponents[k];
    }
    return out;
}

std::string LaurentMonomial::to_string() const {
    std::ostringstream os;
    bool wrote = false;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] == 0) {
            continue;
        }
        if (wrote) {
            os << "*";
        }
        os << "x" << (k + 1);
        if (exponents[k] != 1) {
            os << "^" << exponents[k];
        }
        wrote = true;
    }
    return wrote ? os.str() : "1";
}

}  // namespace ytg
