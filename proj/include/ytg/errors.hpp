#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ytg {

// Malformed or out-of-contract input (bad index, disconnected graph, invalid tableau, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration or expansion would exceed its configured size limit.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Limits on combinatorial work. Defaults match the CLI defaults; `from_env` reads
// YTG_MAX_OBJECTS, YTG_MAX_SUBSET_N and YTG_MAX_SYMMETRIZE_N.
struct Budget {
    std::size_t max_objects = 1'000'000;
    int max_subset_n = 8;
    int max_symmetrize_n = 7;

    static Budget from_env();
};

}  // namespace ytg
