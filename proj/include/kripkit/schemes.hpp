#pragma once

#include <string>
#include <vector>

#include "kripkit/formula.hpp"

// Formula schemes and structural translations: the finite-height formulas
// B_h, the reducible-path schemes rp_m, the pretransitive and product
// translations, decoloring, and the fixed formulas of the saw and tack
// families.

namespace kripkit {

// B_0 = ⊥, B_{i+1} = p_{i+1} -> □(◇p_{i+1} ∨ B_i). Uses variables p1..ph.
Formula gen_B(int h, const std::string& label = "1");

// p0 ∧ ◇(p1 ∧ ◇(... ∧ ◇ p_{m+1})) ->
//   ⋁_{i<j≤m+1} ◇^i(p_i ∧ p_j) ∨ ⋁_{i<j≤m} ◇^i(p_i ∧ ◇p_{j+1})
Formula gen_rp_uni(int m, const std::string& label = "1");

// The same scheme with the diamond replaced by
//   φ ↦ ⋁_{1≤i≤k} ◇_A^i φ ∨ ⋁_{1≤i≤n} ◇_B^i φ.
// With k = n = 1 over unimodal alphabets this is exactly
// decolor(gen_rp_uni(m)). Frame validity matches check_rp_semantic_poly
// (the reflexive step that ◇^{≤k} would add never changes path
// reducibility, so both readings of the mixed diamond agree on frames).
Formula gen_rp_prod(int m, int k, int n, const std::vector<std::string>& a_labels,
                    const std::vector<std::string>& b_labels);

// ◇ ↦ ◇_A^{≤m}, compatible with the Boolean connectives. Input is unimodal;
// its diamonds are recognized by any label.
Formula translate_pretrans(const Formula& f, int m, const std::vector<std::string>& a_labels);

// ◇_1 ↦ ◇_A^{≤m}, ◇_2 ↦ ◇_B^{≤n} for a bimodal input over {l1, l2}.
Formula translate_product(const Formula& f, int m, int n,
                          const std::vector<std::string>& a_labels,
                          const std::vector<std::string>& b_labels,
                          const std::string& l1 = "1", const std::string& l2 = "2");

// t(◇φ) = ◇_1 φ ∨ ◇_2 φ on a unimodal input.
Formula decolor(const Formula& f, const std::string& l1 = "1", const std::string& l2 = "2");

// ◇_A^{m+1} p0 -> ◇_A^{≤m} p0; valid exactly on the m-transitive frames.
Formula gen_pretrans_axiom(int m, const std::vector<std::string>& a_labels);

// φ = ◇⊤ ∧ □◇_s(◇_l ¬p ∧ ◇_r p) ∧ □□_s(◇_l p -> ◇_r p) over
// {d, l, r, s5_label}; the naked modality is d.
Formula gen_saw_phi(const std::string& s5_label = "s");

// The six saw axioms over {d, l, r}, in order:
//   (1) □_A³⊥  (2) □_l □_A ⊥  (3) □_r □_A ⊥
//   (4) ◇_l p -> □_l p  (5) ◇_r p -> □_r p  (6) ◇◇_l p -> ◇◇_r p
std::vector<Formula> gen_saw_axioms();

// com(a,b) = ◇_a◇_b p -> ◇_b◇_a p.
Formula gen_com(const std::string& a, const std::string& b);
// chr(a,b) = ◇_a□_b p -> □_b◇_a p.
Formula gen_chr(const std::string& a, const std::string& b);

// ◇₁◇₂□₁□₂p -> □₁□₂◇₁◇₂p (Church-Rosser for the compound modality).
Formula gen_tack2_cr();
// □₁□₂◇₁◇₂p -> ◇₁◇₂□₁□₂p (McKinsey for the compound modality).
Formula gen_tack2_mc();
// ◇₁□₁q ∧ ¬q ∧ p -> □₁(¬q -> ◇₁p).
Formula gen_tack2_relativized_sym();
// All of the above three, in order.
std::vector<Formula> gen_tack2_axioms();

}  // namespace kripkit
