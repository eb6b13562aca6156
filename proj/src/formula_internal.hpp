#pragma once

#include <cstdint>
#include <vector>

#include "kripkit/formula.hpp"

// Internals shared between formula.cpp and the validity sweep translation
// units. The sweep enumerates valuations in blocks of W*64 (W words) and
// evaluates the formula DAG once per block, one lane word per world. The
// scalar build instantiates W=1; the AVX2 build instantiates W=4 in a TU
// compiled with -mavx2. Both must agree bit-for-bit; test_formulas.cpp
// cross-checks them and the naive per-valuation evaluator.

namespace kripkit {

std::vector<const FormulaNode*> formula_postorder(const Formula& f);

namespace detail {

struct SweepNode {
    NodeKind kind;
    int left = -1;         // postorder index of the child(ren)
    int right = -1;
    int var_ordinal = -1;  // position of the variable in the sorted var list
    int adjacency = -1;    // diamond: index into SweepPlan::adjacency
    bool has_var = false;  // whether any variable occurs below (incl. here)
};

// Successor lists in CSR form: targets[offsets[w]..offsets[w+1]) are the
// successors of world w.
struct Csr {
    std::vector<int> offsets;
    std::vector<int> targets;
};

struct SweepPlan {
    int n = 0;     // worlds
    int bits = 0;  // n * number of distinct variables
    std::vector<SweepNode> nodes;  // postorder; last node is the root
    std::vector<Csr> adjacency;    // one entry per distinct diamond label used
    std::vector<int> vars;         // sorted distinct variable indices
};

SweepPlan build_sweep_plan(const Frame& frame, const Formula& f);

ValidityResult sweep_validity_w1(const SweepPlan& plan);
// Null when the AVX2 translation unit is not available on this target.
using SweepFn = ValidityResult (*)(const SweepPlan&);
SweepFn sweep_validity_w4();

}  // namespace detail
}  // namespace kripkit
