#include "ytg/decomp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ytg/tableaux.hpp"

namespace ytg {

std::string IntervalGenerator::to_string() const {
    return "T[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

Decomposition::Decomposition(std::vector<IntervalGenerator> factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& f : factors) {
        if (f.i < 1 || f.j <= f.i) {
            throw InvalidInput("interval generator needs 1 <= i < j");
        }
        if (!factors_.empty() && factors_.back().first == f) {
            ++factors_.back().second;
        } else {
            factors_.emplace_back(f, 1);
        }
    }
}

std::vector<IntervalGenerator> Decomposition::flat() const {
    std::vector<IntervalGenerator> out;
    for (const auto& [f, a] : factors_) {
        out.insert(out.end(), static_cast<std::size_t>(a), f);
    }
    return out;
}

bool Decomposition::square_free() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const auto& fa) { return fa.second == 1; });
}

std::string Decomposition::to_string() const {
    if (factors_.empty()) {
        return "1";
    }
    std::ostringstream os;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        os << (k ? "*" : "") << factors_[k].first.to_string();
        if (factors_[k].second != 1) {
            os << "^" << factors_[k].second;
        }
    }
    return os.str();
}

namespace {

std::int64_t choose2(std::int64_t v) { return v * (v - 1) / 2; }

}  // namespace

DecompStats stats(const Decomposition& dec) {
    DecompStats s;
    for (const auto& [f, a] : dec.factors()) {
        s.l1 += a * (choose2(f.j) - choose2(f.i));
        s.l2 += a * (f.j - f.i);
        s.l3 += a;
        s.d += 1;
    }
    return s;
}

std::vector<std::int64_t> column_multiplicities(const DominantElement& lambda) {
    std::vector<std::int64_t> m;
    for (int k = 1; k < lambda.n(); ++k) {
        m.push_back(lambda[k] - lambda[k + 1]);
    }
    return m;
}

DominantElement from_column_multiplicities(const std::vector<std::int64_t>& m) {
    std::vector<std::int64_t> lambda(m.size() + 1, 0);
    for (std::size_t k = m.size(); k-- > 0;) {
        if (m[k] < 0) {
            throw InvalidInput("column multiplicities must be nonnegative");
        }
        lambda[k] = lambda[k + 1] + m[k];
    }
    return DominantElement(std::move(lambda));
}

std::vector<std::int64_t> column_cover(const Decomposition& dec, int n) {
    std::vector<std::int64_t> cover(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
    for (const auto& [f, a] : dec.factors()) {
        if (f.j > n) {
            throw InvalidInput("interval " + f.to_string() + " exceeds n = " + std::to_string(n));
        }
        for (int k = f.i; k < f.j; ++k) {
            cover[static_cast<std::size_t>(k - 1)] += a;
        }
    }
    return cover;
}

Decomposition reduced_interval_decomposition(const DominantElement& lambda) {
    std::vector<std::int64_t> m = column_multiplicities(lambda);
    std::vector<IntervalGenerator> factors;
    const int columns = static_cast<int>(m.size());
    while (std::any_of(m.begin(), m.end(), [](std::int64_t v) { return v > 0; })) {
        int k = 1;
        while (k <= columns) {
            if (m[static_cast<std::size_t>(k - 1)] == 0) {
                ++k;
                continue;
            }
            int start = k;
            while (k <= columns && m[static_cast<std::size_t>(k - 1)] > 0) {
                --m[static_cast<std::size_t>(k - 1)];
                ++k;
            }
            factors.push_back({start, k});
        }
    }
    return Decomposition(std::move(factors));
}

namespace {

// Column sweep shared by enumeration and counting. `open[s-1]` is the number of
// intervals started at column s that still cover the previous column. At column
// k a choice closes c_s of them at j = k (yielding [s,k]); the shortfall
// against m_k is opened fresh at k. After the last column everything closes at n.
class ColumnSweep {
public:
    ColumnSweep(const DominantElement& lambda, bool square_free)
        : n_(lambda.n()), m_(column_multiplicities(lambda)), square_free_(square_free),
          open_(m_.size() + 1, 0) {}

    void enumerate(std::size_t cap, std::vector<Decomposition>& out) {
        cap_ = cap;
        out_ = &out;
        column(1);
    }

    BigInt count() { return count_from(1); }

private:
    void column(int k) {
        if (k == n_ || m_.empty()) {
            finish();
            return;
        }
        close_from(k, 1);
    }

    // Chooses how many intervals starting at s close at column k.
    void close_from(int k, int s) {
        if (s == k) {
            std::int64_t remaining = 0;
            for (int t = 1; t < k; ++t) {
                remaining += open_[static_cast<std::size_t>(t - 1)];
            }
            std::int64_t need = m_[static_cast<std::size_t>(k - 1)];
            if (remaining > need) {
                return;
            }
            std::int64_t fresh = need - remaining;
            // Square-free: intervals sharing a start must all close at distinct j in k+1..n.
            if (square_free_ && fresh > n_ - k) {
                return;
            }
            open_[static_cast<std::size_t>(k - 1)] = fresh;
            column(k + 1);
            open_[static_cast<std::size_t>(k - 1)] = 0;
            return;
        }
        std::int64_t& slot = open_[static_cast<std::size_t>(s - 1)];
        const std::int64_t have = slot;
        const std::int64_t max_close = square_free_ ? std::min<std::int64_t>(have, 1) : have;
        for (std::int64_t c = 0; c <= max_close; ++c) {
            if (square_free_ && have - c > n_ - k) {
                continue;
            }
            slot = have - c;
            for (std::int64_t r = 0; r < c; ++r) {
                factors_.push_back({s, k});
            }
            close_from(k, s + 1);
            for (std::int64_t r = 0; r < c; ++r) {
                factors_.pop_back();
            }
        }
        slot = have;
    }

    void finish() {
        std::size_t pushed = 0;
        for (int s = 1; s < n_; ++s) {
            std::int64_t c = open_[static_cast<std::size_t>(s - 1)];
            if (square_free_ && c > 1) {
                factors_.resize(factors_.size() - pushed);
                return;
            }
            for (std::int64_t r = 0; r < c; ++r) {
                factors_.push_back({s, n_});
                ++pushed;
            }
        }
        if (out_->size() >= cap_) {
            throw BudgetExceeded("more than " + std::to_string(cap_) + " decompositions");
        }
        out_->emplace_back(factors_);
        factors_.resize(factors_.size() - pushed);
    }

    BigInt count_from(int k) {
        if (k == n_ || m_.empty()) {
            return 1;
        }
        auto key = std::make_pair(k, open_);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        BigInt total = count_close(k, 1);
        memo_.emplace(std::move(key), total);
        return total;
    }

    BigInt count_close(int k, int s) {
        if (s == k) {
            std::int64_t remaining = 0;
            for (int t = 1; t < k; ++t) {
                remaining += open_[static_cast<std::size_t>(t - 1)];
            }
            std::int64_t need = m_[static_cast<std::size_t>(k - 1)];
            if (remaining > need) {
                return 0;
            }
            open_[static_cast<std::size_t>(k - 1)] = need - remaining;
            BigInt c = count_from(k + 1);
            open_[static_cast<std::size_t>(k - 1)] = 0;
            return c;
        }
        std::int64_t& slot = open_[static_cast<std::size_t>(s - 1)];
        const std::int64_t have = slot;
        BigInt total = 0;
        for (std::int64_t c = 0; c <= have; ++c) {
            slot = have - c;
            total += count_close(k, s + 1);
        }
        slot = have;
        return total;
    }

    int n_;
    std::vector<std::int64_t> m_;
    bool square_free_;
    std::vector<std::int64_t> open_;
    std::vector<IntervalGenerator> factors_;
    std::size_t cap_ = 0;
    std::vector<Decomposition>* out_ = nullptr;
    std::map<std::pair<int, std::vector<std::int64_t>>, BigInt> memo_;
};

}  // namespace

std::vector<Decomposition> enumerate_decompositions(const DominantElement& lambda, EnumerationOptions opts) {
    std::vector<Decomposition> out;
    ColumnSweep(lambda, opts.square_free_only).enumerate(opts.cap, out);
    std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) { return a.flat() < b.flat(); });
    return out;
}

BigInt count_decompositions(const DominantElement& lambda) { return ColumnSweep(lambda, false).count(); }

namespace {

std::map<Exponents, BigInt> stats_histogram(const std::vector<Decomposition>& decs) {
    std::map<Exponents, BigInt> hist;
    for (const auto& dec : decs) {
        DecompStats s = stats(dec);
        Exponents e{static_cast<int>(s.l1), static_cast<int>(s.l2), static_cast<int>(s.l3), static_cast<int>(s.d)};
        hist[e] += 1;
    }
    return hist;
}

}  // namespace

ParamPoly c_polynomial(const DominantElement& lambda, std::size_t cap) {
    ParamPoly out(decomposition_vars());
    for (const auto& [e, count] : stats_histogram(enumerate_decompositions(lambda, {false, cap}))) {
        out.add_term(e, BigRational(count));
    }
    return out;
}

ParamPoly c_prime_polynomial(const DominantElement& lambda, std::size_t cap) {
    const auto& vars = decomposition_vars();
    ParamPoly out(vars);
    const ParamPoly one_minus_q = ParamPoly::constant(vars, 1) - ParamPoly::variable(vars, "q");
    for (const auto& [e, count] : stats_histogram(enumerate_decompositions(lambda, {false, cap}))) {
        const int l3 = e[2];
        const int d = e[3];
        BigRational sign = (d % 2 == 0) ? 1 : -1;
        ParamPoly term = ParamPoly::monomial(vars, {e[0], e[1], l3, d}, sign * BigRational(count));
        out += term * one_minus_q.pow(static_cast<unsigned>(l3 - d));
    }
    return out;
}

ParamPoly square_free_signed_series(const DominantElement& lambda, std::size_t cap) {
    ParamPoly out(t_vars());
    for (const auto& dec : enumerate_decompositions(lambda, {true, cap})) {
        std::int64_t l3 = stats(dec).l3;
        out.add_term({static_cast<int>(l3)}, l3 % 2 == 0 ? 1 : -1);
    }
    return out;
}

std::vector<DominantElement> dominant_elements(int n, int max_size) {
    std::vector<DominantElement> out;
    for (int size = 0; size <= max_size; ++size) {
        for (const auto& p : partitions_of(size, n - 1)) {
            out.emplace_back(p.padded(n));
        }
    }
    return out;
}

ConfigSeries truncated_series(const Graph& g, const Configuration& alpha, int max_l1, SeriesKind kind,
                              std::size_t cap) {
    if (max_l1 < 0) {
        throw InvalidInput("truncation order must be nonnegative");
    }
    if (alpha.size() != g.n()) {
        throw InvalidInput("configuration length does not match graph");
    }
    ConfigSeries out;
    for (const auto& lambda : dominant_elements(g.n(), max_l1)) {
        Configuration beta = apply_exponents(g, alpha, lambda.parts());
        ParamPoly coef;
        switch (kind) {
            case SeriesKind::H: coef = ParamPoly::constant(decomposition_vars(), 1); break;
            case SeriesKind::HatH: coef = c_polynomial(lambda, cap); break;
            case SeriesKind::HatK: coef = c_prime_polynomial(lambda, cap); break;
        }
        if (!out.emplace(std::move(beta), std::move(coef)).second) {
            throw std::logic_error("two dominant elements reached the same configuration");
        }
    }
    return out;
}

ConfigSeries hat_H_truncated(const Graph& g, const Configuration& alpha, int max_l1) {
    return truncated_series(g, alpha, max_l1, SeriesKind::HatH);
}

std::vector<MonomialPair> closed_form_series(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<MonomialPair> out;
    LaurentMonomial x{std::vector<std::int64_t>(n, 0)};
    LaurentMonomial y{std::vector<std::int64_t>(n, 0)};
    for (Vertex i = 1; i < g.n(); ++i) {
        x.exponents[static_cast<std::size_t>(i - 1)] = g.degree(i);
        for (Vertex j : g.neighbors(i)) {
            y.exponents[static_cast<std::size_t>(j - 1)] += 1;
        }
        out.push_back({x, y});
    }
    return out;
}

}  // namespace ytg
