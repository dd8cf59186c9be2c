#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srg/families.hpp"
#include "srg/graph.hpp"

namespace srg {

enum class SolveStatus {
    Exact,           // the branch-and-bound tree was exhausted
    BoundCertified,  // the incumbent reached the supplied spectral cap
    LowerBoundOnly,  // budget ran out; value is the best incumbent
};

enum class SetMode { Clique, Coclique };

// Search limits.  threads <= 0 selects the hardware concurrency.
struct Budget {
    int64_t max_nodes = 100'000'000;
    double max_seconds = 600.0;
    int threads = 1;
};

struct SolveResult {
    int64_t value = 0;
    std::vector<int> witness;  // sorted vertex indices; always verified
    SolveStatus status = SolveStatus::LowerBoundOnly;
    int64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

// Exact maximum clique by branch and bound with greedy-colouring upper
// bounds.  When spectral_cap is given it must be a proven upper bound on the
// clique number; the search stops as soon as the incumbent reaches it and the
// result is certified optimal without exhausting the tree.  The value and
// status are deterministic for Exact and BoundCertified outcomes regardless
// of thread count; witnesses may vary but always verify.
// Errors: EmptyGraph, InvalidParams (bad budget or nonpositive cap).
SolveResult max_clique(const DenseGraph& g, std::optional<int64_t> spectral_cap = std::nullopt,
                       const Budget& budget = Budget{});

// Identical contract applied to the complement; the witness is a coclique of g.
SolveResult max_coclique(const DenseGraph& g, std::optional<int64_t> spectral_cap = std::nullopt,
                         const Budget& budget = Budget{});

// Cheap lower-bound search: validated hints first, then deterministic greedy,
// then seeded multistart tabu.  Returns a verified clique (or coclique) of
// size >= target, or nothing if the budget runs out first.  max_nodes is
// interpreted as the local-search iteration allowance.  Deterministic for a
// fixed seed.
// Errors: InvalidParams (target < 1 or bad budget).
std::optional<std::vector<int>> seed_search(const DenseGraph& g, int64_t target, SetMode mode,
                                            const WitnessHint& hints = WitnessHint{},
                                            const Budget& budget = Budget{}, uint64_t seed = 0);

// Exact pairwise adjacency (or non-adjacency) check; duplicates fail.
// Errors: IndexOutOfRange.
bool verify_witness(const DenseGraph& g, const std::vector<int>& set, SetMode mode);

}  // namespace srg
