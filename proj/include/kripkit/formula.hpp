#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kripkit/frame.hpp"

// Modal formula AST. The core has four node kinds: Var, Bottom, Implies and
// Diamond; everything else (¬, ∧, ∨, ⊤, □, ◇^{≤m}, alphabet diamonds) is
// built from these by the helpers below, and the parser desugars to the core
// as well. Formulas are immutable and shared; builders reuse subterm
// pointers, so repeated subformulas form a DAG that the evaluators walk once
// per distinct node.

namespace kripkit {

enum class NodeKind { Var, Bottom, Implies, Diamond };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
    NodeKind kind;
    int var = -1;        // Var
    std::string label;   // Diamond
    Formula left;        // Implies lhs / Diamond child
    Formula right;       // Implies rhs
};

Formula var(int index);
Formula bottom();
Formula implies(Formula a, Formula b);
Formula dia(const std::string& label, Formula a);

// Sugar, desugared on construction.
Formula not_(Formula a);                       // a -> ⊥
Formula top();                                 // ⊥ -> ⊥
Formula and_(Formula a, Formula b);            // ¬(a -> ¬b)
Formula or_(Formula a, Formula b);             // ¬a -> b
Formula box(const std::string& label, Formula a);  // ¬◇¬a
Formula and_all(const std::vector<Formula>& parts);  // left-assoc, non-empty
Formula or_all(const std::vector<Formula>& parts);   // left-assoc, non-empty

// ◇_A a = ⋁_{label ∈ A} ◇_label a (single label: plain diamond).
Formula dia_alphabet(const std::vector<std::string>& labels, Formula a);
// ◇_A^i a: i alphabet diamonds stacked.
Formula dia_alphabet_pow(const std::vector<std::string>& labels, int i, Formula a);
// ◇_A^{≤m} a = ⋁_{i≤m} ◇_A^i a, expanded eagerly.
Formula dia_alphabet_leq(const std::vector<std::string>& labels, int m, Formula a);

bool equal(const Formula& a, const Formula& b);

// Distinct variable indices, ascending.
std::vector<int> vars_of(const Formula& f);
// Distinct diamond labels in first-occurrence order.
std::vector<std::string> labels_of(const Formula& f);
// Number of distinct nodes in the DAG.
std::size_t dag_size(const Formula& f);

// Assignment of world sets to variables; unmapped variables denote ∅.
struct Valuation {
    std::map<int, WorldSet> sets;

    const WorldSet* find(int v) const {
        auto it = sets.find(v);
        return it == sets.end() ? nullptr : &it->second;
    }
    void set(int v, WorldSet s) { sets.insert_or_assign(v, std::move(s)); }
};

// θ̄(φ): the set of worlds where f holds. Throws on labels outside the
// frame's alphabet.
WorldSet eval(const Frame& frame, const Valuation& v, const Formula& f);

struct ValidityResult {
    enum class Status { Valid, Falsified, Refused } status;
    // Falsified: the first witness in valuation-enumeration order.
    Valuation countervaluation;
    int world = -1;
    // Refused: the bit budget that would have been needed.
    int needed_bits = 0;

    bool valid() const { return status == Status::Valid; }
    bool refused() const { return status == Status::Refused; }
};

inline constexpr int kDefaultValidityBudget = 24;

// Frame validity by exhaustive sweep over all valuations of the variables
// occurring in f. The sweep enumerates n·|vars(f)| bits of valuation space;
// if that exceeds the budget the call refuses instead of running forever.
// Deterministic: the countervaluation is the first failing valuation in
// enumeration order (variable/world bit-counter, least index first), with
// the least failing world.
ValidityResult valid_on_frame(const Frame& frame, const Formula& f,
                              int budget_bits = kDefaultValidityBudget);

std::string format_valuation(const Valuation& v, const std::vector<int>& vars);

}  // namespace kripkit
