#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ytg/graph.hpp"

namespace ytg {

// T^a with a in the normal-form set {a in N^n : min(a) = 0}. Two exponent
// vectors name the same element exactly when they differ by a constant vector.
class GroupElement {
public:
    // Subtracts min(a) from every entry.
    static GroupElement normalize(std::span<const std::int64_t> a);
    static GroupElement identity(int n);

    int n() const { return static_cast<int>(exponents_.size()); }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }
    bool is_identity() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    explicit GroupElement(std::vector<std::int64_t> a) : exponents_(std::move(a)) {}
    std::vector<std::int64_t> exponents_;
};

GroupElement normalize(std::span<const std::int64_t> a);
GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// lambda in P_n: weakly decreasing, lambda_n = 0.
class DominantElement {
public:
    // Throws InvalidInput if `lambda` is not weakly decreasing with last entry 0.
    explicit DominantElement(std::vector<std::int64_t> lambda);
    static DominantElement zero(int n) { return DominantElement(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }

    int n() const { return static_cast<int>(lambda_.size()); }
    const std::vector<std::int64_t>& parts() const { return lambda_; }
    std::int64_t size() const;  // |lambda|
    std::int64_t operator[](int i) const { return lambda_[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const DominantElement&, const DominantElement&) = default;
    friend auto operator<=>(const DominantElement&, const DominantElement&) = default;

private:
    std::vector<std::int64_t> lambda_;
};

enum class DominanceFailure { None, SizeMismatch, NonIntegral, NotDominated };

const char* to_string(DominanceFailure f);

struct DominanceResult {
    std::optional<DominantElement> lambda;
    DominanceFailure failure = DominanceFailure::None;
    // The pinned (lambda_n = 0) Laplacian solution, present whenever an integral
    // solution exists, including the NotDominated case.
    std::vector<std::int64_t> solution;

    explicit operator bool() const { return lambda.has_value(); }
};

// Finds the unique lambda in P_n with T^lambda(alpha) = beta, or reports why none exists.
DominanceResult solve_dominance(const Graph& g, const Configuration& alpha, const Configuration& beta);

// beta <= alpha in toppling dominance.
bool dominated_by(const Graph& g, const Configuration& beta, const Configuration& alpha);

}  // namespace ytg
