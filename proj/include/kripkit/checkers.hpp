#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kripkit/frame.hpp"

// Semantic first-order frame-condition checks and the lemma verification
// suite.

namespace kripkit {

struct CheckResult {
    std::string name;
    bool holds = false;
    std::string witness;  // non-empty iff a universal condition failed
    std::string notes;
    // Wall time of the check; kept out of the rendered reports so that
    // identical inputs produce byte-identical output.
    double seconds = 0.0;
};

// Reducible path property RP_m: every path x_0 R ... R x_{m+1} repeats a
// world or admits a shortcut x_i R x_{j+1} with i < j <= m. The witness of a
// failure is the lexicographically least irreducible path.
CheckResult check_RP(const Relation& r, int m);

// The same property for the mixed relation
// (⋃_A R)^{≤k} ∪ (⋃_B R)^{≤n}; matches validity of gen_rp_prod(m, k, n).
CheckResult check_rp_semantic_poly(const Frame& f, int m, int k, int n,
                                   const std::vector<std::string>& a_labels,
                                   const std::vector<std::string>& b_labels);

// Least m <= cap with RP_m, or nullopt.
std::optional<int> least_rp_index(const Relation& r, int cap);

// R_a ∘ R_b = R_b ∘ R_a; a failure witness is a pair in the symmetric
// difference.
CheckResult check_commutativity(const Frame& f, const std::string& a, const std::string& b);

// x R_a y ∧ x R_b z → ∃u (y R_b u ∧ z R_a u).
CheckResult check_church_rosser(const Frame& f, const std::string& a, const std::string& b);

// Worlds a with R(a) = {a}.
WorldSet terminal_points(const Frame& f, const std::string& label);

// ∀x ∃y (x R y ∧ y terminal). Requires the relation to be a preorder.
CheckResult check_mckinsey(const Frame& f, const std::string& label);

// Strip the R-terminal points of the first relation (or of the named one).
// Requires that relation to be a preorder, and errors when every world is
// terminal (the degenerate case where the frame validates S5 squared).
Frame alpha_strip(const Frame& f, const std::string& label = "");
WorldSet alpha_strip_removed(const Frame& f, const std::string& label = "");

// R₁ ∩ R₂⁻¹ ⊆ R₁⁻¹ for a bimodal frame.
CheckResult check_opposite_arrows(const Frame& f);

// For a point-generated frame with commuting equivalence relations:
// productivize and compare against the rectangle with the matching class
// counts. Reports precondition violations individually.
CheckResult rectangle_quotient_check(const Frame& f);

enum class SuiteScale { Small, Default };

struct SuiteReport {
    std::vector<CheckResult> results;
    bool all_pass() const;
    std::string to_text() const;  // id<TAB>PASS|FAIL<TAB>details lines
    std::string to_json() const;
};

// Runs every lemma-level check at the given scale. Deterministic (fixed
// seeds); the default scale is the acceptance gate.
SuiteReport verify_paper_suite(SuiteScale scale);

}  // namespace kripkit
