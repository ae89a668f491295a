#include "ytg/orthopoly.hpp"

#include <algorithm>
#include <sstream>

#include "ytg/polynomial.hpp"

namespace ytg {

MomentSequence::MomentSequence(std::string name, Generator gen) : name_(std::move(name)), gen_(std::move(gen)) {}

std::vector<BigRational> MomentSequence::first(std::size_t count) const { return gen_(count); }

MomentSequence MomentSequence::hermite() {
    return MomentSequence("hermite", [](std::size_t count) {
        std::vector<BigRational> a;
        for (std::size_t k = 0; k < count; ++k) {
            if (k == 0) {
                a.emplace_back(1);
            } else if (k == 1) {
                a.emplace_back(0);
            } else {
                a.push_back(BigRational(static_cast<long>(k - 1)) * a[k - 2]);
            }
        }
        return a;
    });
}

MomentSequence MomentSequence::legendre() {
    return MomentSequence("legendre", [](std::size_t count) {
        std::vector<BigRational> a;
        for (std::size_t k = 0; k < count; ++k) {
            a.push_back(k % 2 == 0 ? make_rational(2, static_cast<long>(k + 1)) : BigRational(0));
        }
        return a;
    });
}

MomentSequence MomentSequence::charlier(const BigRational& r) {
    return MomentSequence("charlier:" + ytg::to_string(r), [r](std::size_t count) {
        std::vector<BigRational> a;
        for (std::size_t k = 0; k < count; ++k) {
            if (k == 0) {
                a.emplace_back(1);
                continue;
            }
            // a_k = r sum_j C(k-1, j) a_j
            BigRational s = 0;
            BigInt binom = 1;
            for (std::size_t j = 0; j < k; ++j) {
                s += BigRational(binom) * a[j];
                binom = binom * static_cast<unsigned long>(k - 1 - j) / static_cast<unsigned long>(j + 1);
            }
            a.push_back(r * s);
        }
        return a;
    });
}

MomentSequence MomentSequence::dirac(const BigRational& point) {
    return MomentSequence("dirac:" + ytg::to_string(point), [point](std::size_t count) {
        std::vector<BigRational> a;
        BigRational p = 1;
        for (std::size_t k = 0; k < count; ++k) {
            a.push_back(p);
            p *= point;
        }
        return a;
    });
}

MomentSequence MomentSequence::finite(std::string name, std::vector<BigRational> moments) {
    if (!moments.empty() && moments[0] == 0) {
        throw InvalidInput("moment a_0 must be nonzero");
    }
    return MomentSequence(std::move(name), [moments = std::move(moments)](std::size_t count) {
        if (count > moments.size()) {
            throw InvalidInput("moment a_" + std::to_string(count - 1) + " is undefined (only " +
                               std::to_string(moments.size()) + " given)");
        }
        return std::vector<BigRational>(moments.begin(), moments.begin() + static_cast<std::ptrdiff_t>(count));
    });
}

SignedMonomialSum q_polynomial(std::span<const std::int64_t> alpha, int n, const Budget& budget) {
    if (static_cast<int>(alpha.size()) != n || n < 1) {
        throw InvalidInput("exponent vector must have length n >= 1");
    }
    if (n > budget.max_subset_n) {
        throw BudgetExceeded("subset expansion on L_" + std::to_string(n) + " exceeds the limit n <= " +
                             std::to_string(budget.max_subset_n));
    }
    SignedMonomialSum current;
    current.emplace(std::vector<std::int64_t>(alpha.begin(), alpha.end()), 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            SignedMonomialSum next = current;
            for (const auto& [beta, c] : current) {
                auto moved = beta;
                --moved[static_cast<std::size_t>(i)];
                ++moved[static_cast<std::size_t>(j)];
                auto& slot = next[moved];
                slot -= c;
                if (slot == 0) {
                    next.erase(moved);
                }
            }
            current = std::move(next);
        }
    }
    return current;
}

int OrthoPoly::degree() const {
    for (int k = nominal_degree(); k >= 0; --k) {
        if (coefficients[static_cast<std::size_t>(k)] != 0) {
            return k;
        }
    }
    return -1;
}

std::string OrthoPoly::to_string() const {
    ParamPoly p(t_vars());
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        p.add_term({static_cast<int>(k)}, coefficients[k]);
    }
    return p.to_string();
}

OrthoPoly ortho_poly(const MomentSequence& m, int n, const Budget& budget) {
    if (n < 0) {
        throw InvalidInput("degree must be nonnegative");
    }
    if (n == 0) {
        return {{BigRational(1)}};
    }
    std::vector<std::int64_t> alpha(static_cast<std::size_t>(n) + 1, n);
    alpha.back() = 0;
    const SignedMonomialSum q = q_polynomial(alpha, n + 1, budget);
    const auto a = m.first(static_cast<std::size_t>(2 * n));
    OrthoPoly p{std::vector<BigRational>(static_cast<std::size_t>(n) + 1, 0)};
    for (const auto& [beta, c] : q) {
        if (std::any_of(beta.begin(), beta.end(), [](std::int64_t b) { return b < 0; })) {
            throw std::logic_error("negative exponent in q_(n,...,n,0)");
        }
        if (beta.back() > n) {
            throw std::logic_error("t-degree above n in q_(n,...,n,0)");
        }
        BigRational term(c);
        for (std::size_t i = 0; i + 1 < beta.size(); ++i) {
            term *= a.at(static_cast<std::size_t>(beta[i]));
        }
        p.coefficients[static_cast<std::size_t>(beta.back())] += term;
    }
    return p;
}

BigRational expectation(const MomentSequence& m, const SignedMonomialSum& q) {
    std::int64_t top = 0;
    for (const auto& [beta, c] : q) {
        for (std::int64_t b : beta) {
            if (b < 0) {
                throw InvalidInput("expectation of a negative exponent");
            }
            top = std::max(top, b);
        }
    }
    const auto a = m.first(static_cast<std::size_t>(top) + 1);
    BigRational total = 0;
    for (const auto& [beta, c] : q) {
        BigRational term(c);
        for (std::int64_t b : beta) {
            term *= a[static_cast<std::size_t>(b)];
        }
        total += term;
    }
    return total;
}

BigRational leading_coefficient_via_q(const MomentSequence& m, int n, const Budget& budget) {
    if (n < 1) {
        throw InvalidInput("n must be positive");
    }
    std::vector<std::int64_t> alpha(static_cast<std::size_t>(n), n - 1);
    BigRational e = expectation(m, q_polynomial(alpha, n, budget));
    return n % 2 == 0 ? e : BigRational(-e);
}

namespace {

BigRational determinant(std::vector<std::vector<BigRational>> a) {
    const std::size_t n = a.size();
    BigRational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) {
                continue;
            }
            BigRational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    return det;
}

}  // namespace

OrthoPoly hankel_oracle(const MomentSequence& m, int n) {
    if (n < 0) {
        throw InvalidInput("degree must be nonnegative");
    }
    if (n == 0) {
        return {{BigRational(1)}};
    }
    const auto nn = static_cast<std::size_t>(n);
    const auto a = m.first(2 * nn);
    std::vector<std::vector<BigRational>> hankel(nn, std::vector<BigRational>(nn));
    for (std::size_t i = 0; i < nn; ++i) {
        for (std::size_t j = 0; j < nn; ++j) {
            hankel[i][j] = a[i + j];
        }
    }
    const BigRational d = determinant(hankel);
    if (d == 0) {
        throw NotQuasiDefinite("Hankel minor of order " + std::to_string(n) + " vanishes");
    }
    // Expand the bordered determinant along its last row [1, t, ..., t^n].
    OrthoPoly p{std::vector<BigRational>(nn + 1)};
    for (std::size_t k = 0; k <= nn; ++k) {
        std::vector<std::vector<BigRational>> minor(nn);
        for (std::size_t i = 0; i < nn; ++i) {
            for (std::size_t j = 0; j <= nn; ++j) {
                if (j != k) {
                    minor[i].push_back(a[i + j]);
                }
            }
        }
        BigRational cof = determinant(std::move(minor));
        p.coefficients[k] = ((nn + k) % 2 == 0 ? cof : BigRational(-cof)) / d;
    }
    return p;
}

BigRational inner_product(const MomentSequence& m, const OrthoPoly& p, const OrthoPoly& r) {
    const auto a = m.first(p.coefficients.size() + r.coefficients.size() - 1);
    BigRational total = 0;
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
        for (std::size_t j = 0; j < r.coefficients.size(); ++j) {
            total += p.coefficients[i] * r.coefficients[j] * a[i + j];
        }
    }
    return total;
}

std::optional<BigRational> proportionality_scalar(const OrthoPoly& a, const OrthoPoly& b) {
    const std::size_t len = std::max(a.coefficients.size(), b.coefficients.size());
    auto at = [](const OrthoPoly& p, std::size_t k) {
        return k < p.coefficients.size() ? p.coefficients[k] : BigRational(0);
    };
    std::optional<std::size_t> pivot;
    for (std::size_t k = 0; k < len; ++k) {
        if (at(b, k) != 0) {
            pivot = k;
            break;
        }
    }
    if (!pivot || at(a, *pivot) == 0) {
        return std::nullopt;
    }
    for (std::size_t k = 0; k < len; ++k) {
        if (at(a, k) * at(b, *pivot) != at(a, *pivot) * at(b, k)) {
            return std::nullopt;
        }
    }
    return at(a, *pivot) / at(b, *pivot);
}

bool OrthogonalityReport::cross_ok() const {
    return std::all_of(cross.begin(), cross.end(), [](const CrossProduct& c) { return c.value == 0; });
}

bool OrthogonalityReport::norm_as_stated_ok() const {
    return std::all_of(norms.begin(), norms.end(), [](const NormCheck& c) { return c.as_stated; });
}

bool OrthogonalityReport::norm_signed_ok() const {
    return std::all_of(norms.begin(), norms.end(), [](const NormCheck& c) { return c.signed_ok; });
}

OrthogonalityReport verify_orthogonality(const MomentSequence& m, int up_to, const Budget& budget) {
    if (up_to < 0) {
        throw InvalidInput("up_to must be nonnegative");
    }
    OrthogonalityReport rep;
    rep.up_to = up_to;
    for (int n = 0; n <= up_to + 1; ++n) {
        rep.polys.push_back(ortho_poly(m, n, budget));
    }
    for (int n = 0; n <= up_to; ++n) {
        const auto& pn = rep.polys[static_cast<std::size_t>(n)];
        rep.degrees.push_back(pn.degree());
        if (pn.degree() != n && !rep.first_degenerate) {
            rep.first_degenerate = n;
        }
        for (int k = 0; k < n; ++k) {
            rep.cross.push_back({n, k, inner_product(m, pn, rep.polys[static_cast<std::size_t>(k)])});
        }
        NormCheck c;
        c.n = n;
        c.norm = inner_product(m, pn, pn);
        c.product = pn.leading() * rep.polys[static_cast<std::size_t>(n) + 1].leading();
        c.as_stated = c.norm == c.product;
        c.signed_ok = c.norm == (n % 2 == 1 ? c.product : BigRational(-c.product));
        rep.norms.push_back(std::move(c));
    }
    return rep;
}

}  // namespace ytg
