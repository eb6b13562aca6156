#include <string_view>
#include <unordered_map>

#include "formula_internal.hpp"
#include "kripkit/kernels/bitspan.hpp"

namespace kripkit {

namespace detail {

SweepPlan build_sweep_plan(const Frame& frame, const Formula& f) {
    SweepPlan plan;
    plan.n = frame.worlds();
    plan.vars = vars_of(f);
    plan.bits = frame.worlds() * static_cast<int>(plan.vars.size());

    std::unordered_map<int, int> var_ordinal;
    for (std::size_t q = 0; q < plan.vars.size(); ++q)
        var_ordinal[plan.vars[q]] = static_cast<int>(q);

    std::unordered_map<std::string, int> adjacency_of_label;
    const auto order = formula_postorder(f);
    std::unordered_map<const FormulaNode*, int> index_of;
    plan.nodes.reserve(order.size());
    for (const FormulaNode* node : order) {
        SweepNode sn;
        sn.kind = node->kind;
        switch (node->kind) {
            case NodeKind::Var:
                sn.var_ordinal = var_ordinal.at(node->var);
                sn.has_var = true;
                break;
            case NodeKind::Bottom:
                break;
            case NodeKind::Implies:
                sn.left = index_of.at(node->left.get());
                sn.right = index_of.at(node->right.get());
                sn.has_var = plan.nodes[static_cast<std::size_t>(sn.left)].has_var ||
                             plan.nodes[static_cast<std::size_t>(sn.right)].has_var;
                break;
            case NodeKind::Diamond: {
                sn.left = index_of.at(node->left.get());
                sn.has_var = plan.nodes[static_cast<std::size_t>(sn.left)].has_var;
                auto it = adjacency_of_label.find(node->label);
                if (it == adjacency_of_label.end()) {
                    Csr csr;
                    csr.offsets.assign(static_cast<std::size_t>(frame.worlds()) + 1, 0);
                    const EdgeList& edges = frame.edges(node->label);  // throws on foreign label
                    for (const auto& [a, b] : edges)
                        ++csr.offsets[static_cast<std::size_t>(a) + 1];
                    for (std::size_t w = 1; w < csr.offsets.size(); ++w)
                        csr.offsets[w] += csr.offsets[w - 1];
                    csr.targets.resize(edges.size());
                    std::vector<int> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
                    for (const auto& [a, b] : edges)
                        csr.targets[static_cast<std::size_t>(cursor[static_cast<std::size_t>(a)]++)] = b;
                    it = adjacency_of_label.emplace(node->label, static_cast<int>(plan.adjacency.size()))
                             .first;
                    plan.adjacency.push_back(std::move(csr));
                }
                sn.adjacency = it->second;
                break;
            }
        }
        index_of[node] = static_cast<int>(plan.nodes.size());
        plan.nodes.push_back(sn);
    }
    return plan;
}

}  // namespace detail

ValidityResult valid_on_frame(const Frame& frame, const Formula& f, int budget_bits) {
    if (budget_bits > 48) throw Error("validity budget above 48 bits is not supported");
    const int bits = frame.worlds() * static_cast<int>(vars_of(f).size());
    if (bits > budget_bits) {
        ValidityResult r;
        r.status = ValidityResult::Status::Refused;
        r.needed_bits = bits;
        return r;
    }
    const detail::SweepPlan plan = detail::build_sweep_plan(frame, f);
    detail::SweepFn w4 = detail::sweep_validity_w4();
    if (w4 != nullptr && std::string_view(kern::ops().name) == "avx2") return w4(plan);
    return detail::sweep_validity_w1(plan);
}

}  // namespace kripkit
