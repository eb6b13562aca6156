#pragma once

#include <string>
#include <vector>

#include "kripkit/frame.hpp"
#include "kripkit/worldmap.hpp"

// Frame-building operations: products, rectangles, sums, quotients,
// productivization, and the named counterexample families (saw, tacks).
//
// World orders are fixed so golden files stay stable:
//   product(F, G): (a, b) is linearized as a*|G| + b.
//   sum_over:      summands in index-world order, worlds inside in order.
//   semi_ordered_sum(F, G): F's worlds first, then G's.

namespace kripkit {

// Equivalence on 0..n-1 as contiguous class ids.
struct Equivalence {
    std::vector<int> class_of;  // class ids 0..k-1, every id used

    explicit Equivalence(std::vector<int> ids);
    static Equivalence diagonal(int n);
    static Equivalence from_partition(const Partition& p);
    int worlds() const { return static_cast<int>(class_of.size()); }
    int classes() const;
};

struct FrameFamily {
    Frame index;                  // frame over the same alphabet as all summands
    std::vector<Frame> summands;  // one per index world
};

struct QuotientResult {
    Frame frame;
    WorldMap map;  // canonical a ↦ [a]
};

// Product frame over the disjoint union of alphabets: horizontal relations
// step the first coordinate, vertical ones the second.
Frame product(const Frame& f, const Frame& g);

// rect(k, m) = cluster(k) × cluster(m) over labels {1, 2}.
Frame rectangle(int k, int m);

// Sum of the family over its index frame: inside-summand edges where i = j,
// index edges everywhere else.
Frame sum_over(const FrameFamily& family);

// Bimodal semi-ordered sum: the first relation gains all of F×G, the second
// stays block-diagonal.
Frame semi_ordered_sum(const Frame& f, const Frame& g);

QuotientResult quotient(const Frame& f, const Equivalence& e);

// Quotient by ~ = ⋂_◇ (R_◇ ∩ R_◇⁻¹). Every relation must be a preorder.
QuotientResult productivize(const Frame& f);

// Saw frame truncation with teeth v_0..v_{k-1} and tips w_0..w_k over
// {d, l, r}. World order: u, v_0..v_{k-1}, w_0..w_k.
Frame saw(int k);

// One-dimensional tack truncation: cluster(k) below a reflexive top,
// a R b iff a < k or b = top.
Frame tack1(int k);

// Two-dimensional tack T(k, m) = rectangle(k, m) ⊕ ∘.
Frame tack2(int k, int m);

Frame cluster(int n, const std::string& label = "1");
Frame chain(int h, bool reflexive = true, const std::string& label = "1");
Frame antichain(int n, const std::string& label = "1");
Frame disjoint_union(const Frame& f, const Frame& g);

// The bireflexive singleton ∘ over {1, 2}.
Frame bireflexive_point();

}  // namespace kripkit
