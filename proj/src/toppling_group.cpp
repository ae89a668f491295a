#include "ytg/toppling_group.hpp"

#include <algorithm>
#include <numeric>

#include "ytg/errors.hpp"

namespace ytg {

GroupElement GroupElement::normalize(std::span<const std::int64_t> a) {
    if (a.empty()) {
        throw InvalidInput("group element needs at least one exponent");
    }
    std::int64_t lo = *std::min_element(a.begin(), a.end());
    std::vector<std::int64_t> out(a.begin(), a.end());
    for (auto& v : out) {
        v -= lo;
    }
    return GroupElement(std::move(out));
}

GroupElement GroupElement::identity(int n) {
    return GroupElement(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
}

bool GroupElement::is_identity() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](std::int64_t v) { return v == 0; });
}

GroupElement normalize(std::span<const std::int64_t> a) { return GroupElement::normalize(a); }

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    if (g.n() != h.n()) {
        throw InvalidInput("group elements of different rank");
    }
    std::vector<std::int64_t> sum = g.exponents();
    for (std::size_t k = 0; k < sum.size(); ++k) {
        sum[k] += h.exponents()[k];
    }
    return normalize(sum);
}

GroupElement inverse(const GroupElement& g) {
    const auto& a = g.exponents();
    std::int64_t hi = *std::max_element(a.begin(), a.end());
    std::vector<std::int64_t> out(a.size());
    std::transform(a.begin(), a.end(), out.begin(), [hi](std::int64_t v) { return hi - v; });
    return normalize(out);
}

DominantElement::DominantElement(std::vector<std::int64_t> lambda) : lambda_(std::move(lambda)) {
    if (lambda_.empty() || lambda_.back() != 0) {
        throw InvalidInput("dominant element must end with 0");
    }
    for (std::size_t k = 0; k + 1 < lambda_.size(); ++k) {
        if (lambda_[k] < lambda_[k + 1]) {
            throw InvalidInput("dominant element must be weakly decreasing");
        }
    }
}

std::int64_t DominantElement::size() const {
    return std::accumulate(lambda_.begin(), lambda_.end(), std::int64_t{0});
}

const char* to_string(DominanceFailure f) {
    switch (f) {
        case DominanceFailure::None: return "none";
        case DominanceFailure::SizeMismatch: return "size_mismatch";
        case DominanceFailure::NonIntegral: return "non_integral";
        case DominanceFailure::NotDominated: return "not_dominated";
    }
    return "unknown";
}

DominanceResult solve_dominance(const Graph& g, const Configuration& alpha, const Configuration& beta) {
    if (alpha.size() != g.n() || beta.size() != g.n()) {
        throw InvalidInput("configuration length does not match graph");
    }
    DominanceResult result;
    LaplacianSolution sol = reduced_laplacian_solve(g, beta - alpha);
    switch (sol.status) {
        case LaplacianStatus::NonZeroSum:
            result.failure = DominanceFailure::SizeMismatch;
            return result;
        case LaplacianStatus::NonIntegral:
            result.failure = DominanceFailure::NonIntegral;
            return result;
        case LaplacianStatus::Ok:
            break;
    }
    result.solution = sol.lambda;
    if (!std::is_sorted(sol.lambda.rbegin(), sol.lambda.rend())) {
        result.failure = DominanceFailure::NotDominated;
        return result;
    }
    result.lambda.emplace(std::move(sol.lambda));
    return result;
}

bool dominated_by(const Graph& g, const Configuration& beta, const Configuration& alpha) {
    return static_cast<bool>(solve_dominance(g, alpha, beta));
}

}  // namespace ytg
