#pragma once

#include <cstdint>
#include <string>

namespace stab {

// Runtime knobs shared by the library, the verification harness and the CLI.
// Every limit is a hard cap: hitting one raises resource_error (or yields an
// explicit "unknown" answer where the API provides one), never a silently
// truncated result.
struct RunConfig {
    std::uint64_t node_budget = 10'000'000;  // search-tree nodes per group computation
    int vertex_cap = 4096;                   // largest product graph we will build
    int coprime_bound = 6;                   // largest candidate common factor tried
    int cofactor_cap = 8;                    // largest cofactor enumerated per candidate
    std::string format = "json";             // json | csv | text
    int jobs = 1;                            // worker threads for sweeps
    std::uint64_t seed = 12345;              // RNG seed for randomised corpora

    void validate() const;  // throws parse_error on out-of-domain values
};

}  // namespace stab
