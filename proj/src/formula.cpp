#include "kripkit/formula.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace kripkit {

Formula var(int index) {
    if (index < 0) throw Error("variable indices are non-negative");
    auto n = std::make_shared<FormulaNode>();
    n->kind = NodeKind::Var;
    n->var = index;
    return n;
}

Formula bottom() {
    static const Formula instance = [] {
        auto n = std::make_shared<FormulaNode>();
        n->kind = NodeKind::Bottom;
        return Formula(n);
    }();
    return instance;
}

Formula implies(Formula a, Formula b) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = NodeKind::Implies;
    n->left = std::move(a);
    n->right = std::move(b);
    return n;
}

Formula dia(const std::string& label, Formula a) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = NodeKind::Diamond;
    n->label = label;
    n->left = std::move(a);
    return n;
}

Formula not_(Formula a) { return implies(std::move(a), bottom()); }

Formula top() { return implies(bottom(), bottom()); }

Formula and_(Formula a, Formula b) { return not_(implies(std::move(a), not_(std::move(b)))); }

Formula or_(Formula a, Formula b) { return implies(not_(std::move(a)), std::move(b)); }

Formula box(const std::string& label, Formula a) {
    return not_(dia(label, not_(std::move(a))));
}

Formula and_all(const std::vector<Formula>& parts) {
    if (parts.empty()) throw Error("and_all needs at least one conjunct");
    Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = and_(acc, parts[i]);
    return acc;
}

Formula or_all(const std::vector<Formula>& parts) {
    if (parts.empty()) throw Error("or_all needs at least one disjunct");
    Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = or_(acc, parts[i]);
    return acc;
}

Formula dia_alphabet(const std::vector<std::string>& labels, Formula a) {
    if (labels.empty()) throw Error("alphabet diamond needs at least one label");
    std::vector<Formula> parts;
    parts.reserve(labels.size());
    for (const auto& l : labels) parts.push_back(dia(l, a));
    return or_all(parts);
}

Formula dia_alphabet_pow(const std::vector<std::string>& labels, int i, Formula a) {
    Formula acc = std::move(a);
    for (int k = 0; k < i; ++k) acc = dia_alphabet(labels, acc);
    return acc;
}

Formula dia_alphabet_leq(const std::vector<std::string>& labels, int m, Formula a) {
    if (m < 0) throw Error("diamond power bound must be non-negative");
    std::vector<Formula> parts;
    Formula pow = std::move(a);
    parts.push_back(pow);
    for (int i = 1; i <= m; ++i) {
        pow = dia_alphabet(labels, pow);
        parts.push_back(pow);
    }
    return or_all(parts);
}

bool equal(const Formula& a, const Formula& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case NodeKind::Var: return a->var == b->var;
        case NodeKind::Bottom: return true;
        case NodeKind::Implies: return equal(a->left, b->left) && equal(a->right, b->right);
        case NodeKind::Diamond: return a->label == b->label && equal(a->left, b->left);
    }
    return false;
}

namespace {

// Post-order over the shared-node DAG, each distinct node once.
void postorder(const Formula& f, std::vector<const FormulaNode*>& out,
               std::unordered_set<const FormulaNode*>& seen) {
    if (!f || seen.contains(f.get())) return;
    seen.insert(f.get());
    if (f->left) postorder(f->left, out, seen);
    if (f->right) postorder(f->right, out, seen);
    out.push_back(f.get());
}

}  // namespace

std::vector<const FormulaNode*> formula_postorder(const Formula& f) {
    std::vector<const FormulaNode*> out;
    std::unordered_set<const FormulaNode*> seen;
    postorder(f, out, seen);
    return out;
}

std::vector<int> vars_of(const Formula& f) {
    std::set<int> vars;
    for (const FormulaNode* n : formula_postorder(f))
        if (n->kind == NodeKind::Var) vars.insert(n->var);
    return {vars.begin(), vars.end()};
}

std::vector<std::string> labels_of(const Formula& f) {
    std::vector<std::string> out;
    for (const FormulaNode* n : formula_postorder(f))
        if (n->kind == NodeKind::Diamond &&
            std::find(out.begin(), out.end(), n->label) == out.end())
            out.push_back(n->label);
    return out;
}

std::size_t dag_size(const Formula& f) { return formula_postorder(f).size(); }

WorldSet eval(const Frame& frame, const Valuation& v, const Formula& f) {
    const int n = frame.worlds();
    // Diamond preimages need the relations; materialize each used label once.
    std::unordered_map<std::string, Relation> rels;
    std::unordered_map<const FormulaNode*, WorldSet> memo;
    for (const FormulaNode* node : formula_postorder(f)) {
        switch (node->kind) {
            case NodeKind::Var: {
                const WorldSet* s = v.find(node->var);
                if (s != nullptr) {
                    if (s->universe() != n) throw Error("valuation universe mismatch");
                    memo.emplace(node, *s);
                } else {
                    memo.emplace(node, WorldSet(n));
                }
                break;
            }
            case NodeKind::Bottom:
                memo.emplace(node, WorldSet(n));
                break;
            case NodeKind::Implies: {
                WorldSet out = memo.at(node->left.get()).complement();
                out.unite(memo.at(node->right.get()));
                memo.emplace(node, std::move(out));
                break;
            }
            case NodeKind::Diamond: {
                auto it = rels.find(node->label);
                if (it == rels.end())
                    it = rels.emplace(node->label, frame.relation(node->label)).first;
                memo.emplace(node, it->second.preimage(memo.at(node->left.get())));
                break;
            }
        }
    }
    return memo.at(f.get());
}

std::string format_valuation(const Valuation& v, const std::vector<int>& vars) {
    std::string out;
    for (int p : vars) {
        if (!out.empty()) out += " ";
        out += "p" + std::to_string(p) + "={";
        const WorldSet* s = v.find(p);
        bool first = true;
        if (s != nullptr)
            for (int w : s->to_vector()) {
                if (!first) out += ",";
                out += std::to_string(w);
                first = false;
            }
        out += "}";
    }
    return out;
}

}  // namespace kripkit
