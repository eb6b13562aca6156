#pragma once

#include <cstdint>
#include <string>

#include "kripkit/frame.hpp"

// The tuned-partition engine. A partition is R-tuned when, for every pair of
// blocks (U, V), either no world of U has an R-successor in V or all of them
// do; tuned partitions are exactly the ones whose quotient map is a
// p-morphism. coarsest_tuned_refinement computes the unique coarsest tuned
// refinement by worklist splitting and must stay fast on frames with 10^5
// worlds, so it works on adjacency lists, never on dense matrices.

namespace kripkit {

struct TunedVerdict {
    bool ok = false;
    // On failure: modality, the block pair, and a world of U with no
    // successor in V (while some other world of U has one).
    std::string label;
    int block_u = -1;
    int block_v = -1;
    int world = -1;
    std::string describe() const;
};

TunedVerdict is_tuned(const Frame& f, const Partition& p);

struct TuningReport {
    int input_size = 0;
    int output_size = 0;
    std::uint64_t rounds = 0;  // worklist events processed
    std::uint64_t splits = 0;  // block splits performed
};

struct RefinementResult {
    Partition partition;
    TuningReport report;
};

// Coarsest tuned refinement of p: repeatedly split every block U by the
// predicate "has an R-successor in V" for each (modality, splitter block V)
// until stable. Splits happen only when forced, so every tuned refinement
// of p refines the result; the brute-force oracle in the tests checks this
// coarseness claim directly on small frames.
RefinementResult coarsest_tuned_refinement(const Frame& f, const Partition& p);

inline constexpr std::uint64_t kDefaultProfileBudget = 200'000;

// For each k = 1..n_max, the largest coarsest-tuned-refinement size over
// all partitions of the frame with at most k blocks. Enumerates all set
// partitions, so it refuses (BudgetError) when Bell(|F|) exceeds the budget.
std::vector<int> tunability_profile(const Frame& f, int n_max,
                                    std::uint64_t budget = kDefaultProfileBudget);

// The product-with-finite-factor construction: partition F by the map
// a ↦ (block of (a,b))_{b∈G}, tune that partition in F, then pair with the
// G-coordinate. Returns a tuned refinement of v on F×G of size at most
// r·|G| where r is the tuned refinement size measured on F.
Partition product_refine_with_finite(const Frame& f, const Frame& g, const Partition& v);

}  // namespace kripkit
