#include "ytg/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "ytg/decomp.hpp"

namespace ytg {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            inversions += perm[i] > perm[j];
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::int64_t> padded_exponents(const Partition& p, int n) {
    if (p.length() > n) {
        throw InvalidInput("partition " + p.to_string() + " has more than n = " + std::to_string(n) + " parts");
    }
    return p.padded(n);
}

}  // namespace

StraightenResult straighten(std::span<const std::int64_t> beta) {
    const auto n = static_cast<std::int64_t>(beta.size());
    std::vector<std::int64_t> shifted(beta.begin(), beta.end());
    for (std::int64_t i = 0; i < n; ++i) {
        shifted[static_cast<std::size_t>(i)] += n - 1 - i;
        if (shifted[static_cast<std::size_t>(i)] < 0) {
            return {};
        }
    }
    // Sign of the sorting permutation is the parity of inversions against descending order.
    int inversions = 0;
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        for (std::size_t j = i + 1; j < shifted.size(); ++j) {
            if (shifted[i] == shifted[j]) {
                return {};
            }
            inversions += shifted[i] < shifted[j];
        }
    }
    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    std::vector<int> parts;
    for (std::int64_t i = 0; i < n; ++i) {
        parts.push_back(static_cast<int>(shifted[static_cast<std::size_t>(i)] - (n - 1 - i)));
    }
    return {inversions % 2 == 0 ? 1 : -1, Partition(std::move(parts))};
}

StraightenResult e_functional(std::span<const std::int64_t> beta, NegativeExponentRule rule) {
    if (rule == NegativeExponentRule::Vanish &&
        std::any_of(beta.begin(), beta.end(), [](std::int64_t b) { return b < 0; })) {
        return {};
    }
    return straighten(beta);
}

std::vector<HLTerm> hall_littlewood_terms(const Partition& alpha, int n, NegativeExponentRule rule,
                                          std::size_t cap) {
    if (n < 1) {
        throw InvalidInput("n must be positive");
    }
    const Graph g = Graph::path(n);
    const Configuration a(padded_exponents(alpha, n));
    std::vector<HLTerm> out;
    // Odometer over m_k in [0, k(n-k)]: the number of intervals covering column k.
    std::vector<std::int64_t> m(static_cast<std::size_t>(n - 1), 0);
    while (true) {
        DominantElement lambda = from_column_multiplicities(m);
        ParamPoly coef = square_free_signed_series(lambda, cap);
        if (!coef.is_zero()) {
            Configuration beta = apply_exponents(g, a, lambda.parts());
            StraightenResult s = e_functional(beta.weights, rule);
            out.push_back({std::move(lambda), std::move(beta), std::move(coef), std::move(s)});
        }
        std::size_t k = 0;
        while (k < m.size()) {
            const auto col = static_cast<std::int64_t>(k + 1);
            if (m[k] < col * (n - col)) {
                ++m[k];
                break;
            }
            m[k] = 0;
            ++k;
        }
        if (k == m.size()) {
            break;
        }
    }
    return out;
}

SchurExpansion hall_littlewood_R(const Partition& alpha, int n, NegativeExponentRule rule, std::size_t cap) {
    SchurExpansion out;
    for (auto& term : hall_littlewood_terms(alpha, n, rule, cap)) {
        if (term.schur.is_zero()) {
            continue;
        }
        auto [it, inserted] = out.try_emplace(term.schur.partition, t_vars());
        it->second += term.coefficient * BigRational(term.schur.sign);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

namespace {

// Applies x_i -> x_{perm[i]} to a polynomial over {t, x1..xn}.
ParamPoly permute_x(const ParamPoly& p, const std::vector<int>& perm) {
    ParamPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exponents f(e.size(), 0);
        f[0] = e[0];
        for (std::size_t i = 0; i < perm.size(); ++i) {
            f[static_cast<std::size_t>(perm[i]) + 1] = e[i + 1];
        }
        out.add_term(f, c);
    }
    return out;
}

}  // namespace

ParamPoly hall_littlewood_oracle(const Partition& alpha, int n, const Budget& budget) {
    if (n < 1) {
        throw InvalidInput("n must be positive");
    }
    if (n > budget.max_symmetrize_n) {
        throw BudgetExceeded("symmetrization over S_" + std::to_string(n) + " exceeds the limit n <= " +
                             std::to_string(budget.max_symmetrize_n));
    }
    const auto vars = t_x_vars(n);
    const auto nn = static_cast<std::size_t>(n);
    Exponents e(nn + 1, 0);
    const auto a = padded_exponents(alpha, n);
    for (std::size_t i = 0; i < nn; ++i) {
        e[i + 1] = static_cast<int>(a[i]);
    }
    ParamPoly f = ParamPoly::monomial(vars, e);
    const ParamPoly t = ParamPoly::variable(vars, "t");
    std::vector<ParamPoly> x;
    for (int i = 1; i <= n; ++i) {
        x.push_back(ParamPoly::variable(vars, "x" + std::to_string(i)));
    }
    for (std::size_t i = 0; i < nn; ++i) {
        for (std::size_t j = i + 1; j < nn; ++j) {
            f *= x[i] - t * x[j];
        }
    }
    // w(V) = sign(w) V, so the symmetrization is (sum_w sign(w) w(f)) / V.
    ParamPoly numerator(vars);
    std::vector<int> perm(nn);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ParamPoly wf = permute_x(f, perm);
        if (permutation_sign(perm) < 0) {
            numerator -= wf;
        } else {
            numerator += wf;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t i = 0; i < nn; ++i) {
        for (std::size_t j = i + 1; j < nn; ++j) {
            numerator = numerator.divide_exact(x[i] - x[j]);
        }
    }
    return numerator;
}

ParamPoly complete_homogeneous(int k, int n) {
    const auto vars = t_x_vars(n);
    ParamPoly out(vars);
    if (k < 0) {
        return out;
    }
    Exponents e(static_cast<std::size_t>(n) + 1, 0);
    // Compositions of k into n parts.
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == n) {
            if (remaining == 0) {
                out.add_term(e, 1);
            }
            return;
        }
        if (pos == n - 1) {
            e[static_cast<std::size_t>(pos) + 1] = remaining;
            out.add_term(e, 1);
            e[static_cast<std::size_t>(pos) + 1] = 0;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            e[static_cast<std::size_t>(pos) + 1] = v;
            rec(pos + 1, remaining - v);
        }
        e[static_cast<std::size_t>(pos) + 1] = 0;
    };
    if (n == 0) {
        if (k == 0) {
            out.add_term(e, 1);
        }
        return out;
    }
    rec(0, k);
    return out;
}

ParamPoly schur_jacobi_trudi(std::span<const std::int64_t> beta, int n) {
    if (static_cast<int>(beta.size()) > n) {
        throw InvalidInput("exponent vector longer than n");
    }
    const auto vars = t_x_vars(n);
    std::vector<std::int64_t> b(beta.begin(), beta.end());
    b.resize(static_cast<std::size_t>(n), 0);
    std::map<std::int64_t, ParamPoly> h;
    auto hk = [&](std::int64_t k) -> const ParamPoly& {
        auto it = h.find(k);
        if (it == h.end()) {
            it = h.emplace(k, complete_homogeneous(static_cast<int>(k), n)).first;
        }
        return it->second;
    };
    ParamPoly det(vars);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ParamPoly prod = ParamPoly::constant(vars, permutation_sign(perm));
        for (int i = 0; i < n && !prod.is_zero(); ++i) {
            const int j = perm[static_cast<std::size_t>(i)];
            const ParamPoly& entry = hk(b[static_cast<std::size_t>(i)] - i + j);
            if (entry.is_zero()) {
                prod = ParamPoly(vars);
                break;
            }
            prod *= entry;
        }
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

ParamPoly expand_schur(const SchurExpansion& e, int n) {
    static std::mutex mu;
    static std::map<std::pair<Partition, int>, ParamPoly> cache;
    const auto vars = t_x_vars(n);
    ParamPoly out(vars);
    for (const auto& [lambda, coef] : e) {
        ParamPoly s;
        {
            std::lock_guard lock(mu);
            auto key = std::make_pair(lambda, n);
            auto it = cache.find(key);
            if (it == cache.end()) {
                it = cache.emplace(key, schur_jacobi_trudi(padded_exponents(lambda, n), n)).first;
            }
            s = it->second;
        }
        out += coef.reindex(vars) * s;
    }
    return out;
}

BigInt kostka_via_toppling(const Partition& lambda, const Partition& mu, int n) {
    if (lambda.size() != mu.size()) {
        throw InvalidInput("Kostka numbers need |lambda| = |mu|");
    }
    const auto l = padded_exponents(lambda, n);
    const Configuration target(padded_exponents(mu, n));
    const Graph g = Graph::path(n);
    const auto nn = static_cast<std::size_t>(n);
    BigInt total = 0;
    std::vector<int> perm(nn);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // gamma_{perm[i]} = (lambda + delta)_i - delta_{perm[i]}
        std::vector<std::int64_t> gamma(nn);
        for (std::size_t i = 0; i < nn; ++i) {
            const auto p = static_cast<std::size_t>(perm[i]);
            gamma[p] = l[i] + static_cast<std::int64_t>(nn - 1 - i) - static_cast<std::int64_t>(nn - 1 - p);
        }
        DominanceResult r = solve_dominance(g, Configuration(gamma), target);
        if (r) {
            BigInt c = count_decompositions(*r.lambda);
            total += permutation_sign(perm) > 0 ? c : BigInt(-c);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

BigInt kostka_oracle(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw InvalidInput("Kostka numbers need |lambda| = |mu|");
    }
    const int rows = lambda.length();
    const int letters = mu.length();
    // Letter k fills a horizontal strip of size mu_k on top of the current shape:
    // a new cell in row r must lie under a cell of row r-1 filled by an earlier letter.
    std::function<BigInt(int, const std::vector<int>&)> fill = [&](int letter,
                                                              const std::vector<int>& prev) -> BigInt {
        if (letter > letters) {
            for (int r = 0; r < rows; ++r) {
                if (prev[static_cast<std::size_t>(r)] != lambda[r + 1]) {
                    return 0;
                }
            }
            return 1;
        }
        std::vector<int> next = prev;
        std::function<BigInt(int, int)> strip = [&](int row, int remaining) -> BigInt {
            if (row == rows) {
                return remaining == 0 ? fill(letter + 1, next) : BigInt(0);
            }
            const auto r = static_cast<std::size_t>(row);
            int limit = lambda[row + 1];
            if (row > 0) {
                limit = std::min(limit, prev[r - 1]);
            }
            BigInt total = 0;
            for (int add = 0; add <= std::min(remaining, limit - prev[r]); ++add) {
                next[r] = prev[r] + add;
                total += strip(row + 1, remaining - add);
            }
            next[r] = prev[r];
            return total;
        };
        return strip(0, mu[letter]);
    };
    return fill(1, std::vector<int>(static_cast<std::size_t>(rows), 0));
}

}  // namespace ytg
