#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kripkit/frame.hpp"
#include "kripkit/worldmap.hpp"

// p-morphism verification and search, isomorphism testing.

namespace kripkit {

struct PMorphismVerdict {
    bool ok = false;
    // On failure: which clause broke and where.
    enum class Clause { None, Homomorphism, Back } clause = Clause::None;
    std::string label;
    int world_a = -1;
    int world_b = -1;  // homomorphism: the edge target; back: the target world u
    std::string describe() const;
};

// f is a p-morphism from F to G: every edge maps to an edge, and every edge
// out of an image is matched by an edge out of the preimage (back condition).
PMorphismVerdict is_p_morphism(const WorldMap& f, const Frame& from, const Frame& to);

bool is_surjective(const WorldMap& f);
bool is_onto_p_morphism(const WorldMap& f, const Frame& from, const Frame& to);

struct MorphismSearchResult {
    enum class Status { Found, None, BudgetExhausted } status;
    std::optional<WorldMap> map;  // set iff Found

    bool found() const { return status == Status::Found; }
    bool exhausted_budget() const { return status == Status::BudgetExhausted; }
};

inline constexpr std::uint64_t kDefaultMorphismBudget = 10'000'000;

// Backtracking search for a surjective p-morphism from `from` onto `to`.
// Deterministic: source worlds are tried by descending out-degree sum
// (ties by ascending index), candidate targets in ascending index. The
// third verdict distinguishes a genuinely exhausted search space from a
// spent node budget; a found witness is re-verified in full before being
// returned.
MorphismSearchResult find_p_morphism(const Frame& from, const Frame& to,
                                     std::uint64_t budget = kDefaultMorphismBudget);

// Bijection preserving and reflecting every relation, if one exists.
std::optional<WorldMap> is_isomorphic(const Frame& f, const Frame& g);

}  // namespace kripkit
