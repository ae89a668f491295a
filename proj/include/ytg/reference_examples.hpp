#pragma once

#include <string>
#include <vector>

namespace ytg {

struct ReferenceExample {
    std::string id;
    std::string description;
    std::string expected;
    std::string actual;
    bool passed = false;
};

// Recomputes each worked example and compares with the embedded value.
std::vector<ReferenceExample> run_reference_examples();

}  // namespace ytg
