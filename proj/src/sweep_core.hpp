#pragma once

#include <algorithm>
#include <bit>

#include "formula_internal.hpp"

// Valuation-sweep core, templated on the block width W (words of 64
// valuations). Bit p = q*n + w of the valuation counter decides whether
// world w belongs to θ(p_q); a block holds the truth lanes of every node at
// every world for W*64 consecutive counter values. Aside from witness
// decoding, everything is straight-line word arithmetic, which is the point:
// the W=4 instantiation vectorizes to 256-bit ops under -mavx2.

namespace kripkit::detail {

// Bit t of kVarPattern[p] equals bit p of t, for p < 6.
inline constexpr std::uint64_t kVarPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

template <int W>
ValidityResult sweep_validity(const SweepPlan& plan) {
    const int n = plan.n;
    const std::size_t node_count = plan.nodes.size();
    const std::size_t lane_words = static_cast<std::size_t>(n) * W;
    const std::size_t root = node_count - 1;

    std::vector<std::uint64_t> arena(node_count * lane_words, 0);
    auto lane = [&](std::size_t node, int world) -> std::uint64_t* {
        return arena.data() + node * lane_words + static_cast<std::size_t>(world) * W;
    };

    const std::uint64_t total_words =
        plan.bits >= 6 ? (std::uint64_t{1} << (plan.bits - 6)) : 1;
    const std::uint64_t tail_mask =
        plan.bits >= 6 ? ~std::uint64_t{0}
                       : ((std::uint64_t{1} << (std::uint64_t{1} << plan.bits)) - 1);

    for (std::uint64_t base = 0; base < total_words; base += W) {
        const int wcnt = static_cast<int>(std::min<std::uint64_t>(W, total_words - base));
        for (std::size_t idx = 0; idx < node_count; ++idx) {
            const SweepNode& node = plan.nodes[idx];
            if (!node.has_var && base != 0) continue;  // constant lanes persist
            switch (node.kind) {
                case NodeKind::Var: {
                    for (int w = 0; w < n; ++w) {
                        const int p = node.var_ordinal * n + w;
                        std::uint64_t* out = lane(idx, w);
                        if (p < 6) {
                            for (int k = 0; k < W; ++k) out[k] = kVarPattern[p];
                        } else {
                            for (int k = 0; k < W; ++k)
                                out[k] = (((base + static_cast<std::uint64_t>(k)) >> (p - 6)) & 1)
                                             ? ~std::uint64_t{0}
                                             : 0;
                        }
                    }
                    break;
                }
                case NodeKind::Bottom:
                    break;  // arena is zero-initialized and never written
                case NodeKind::Implies: {
                    const std::uint64_t* a = lane(static_cast<std::size_t>(node.left), 0);
                    const std::uint64_t* b = lane(static_cast<std::size_t>(node.right), 0);
                    std::uint64_t* out = lane(idx, 0);
                    for (std::size_t k = 0; k < lane_words; ++k) out[k] = ~a[k] | b[k];
                    break;
                }
                case NodeKind::Diamond: {
                    const Csr& adj = plan.adjacency[static_cast<std::size_t>(node.adjacency)];
                    const std::uint64_t* child = lane(static_cast<std::size_t>(node.left), 0);
                    for (int w = 0; w < n; ++w) {
                        std::uint64_t acc[W] = {};
                        const int end = adj.offsets[static_cast<std::size_t>(w) + 1];
                        for (int e = adj.offsets[static_cast<std::size_t>(w)]; e < end; ++e) {
                            const std::uint64_t* src =
                                child + static_cast<std::size_t>(adj.targets[static_cast<std::size_t>(e)]) * W;
                            for (int k = 0; k < W; ++k) acc[k] |= src[k];
                        }
                        std::uint64_t* out = lane(idx, w);
                        for (int k = 0; k < W; ++k) out[k] = acc[k];
                    }
                    break;
                }
            }
        }

        // Valid iff the root lane is all-ones at every world for every
        // in-range valuation. On failure, locate the least counter value.
        for (int k = 0; k < wcnt; ++k) {
            const std::uint64_t mask =
                (base + static_cast<std::uint64_t>(k) + 1 == total_words) ? tail_mask
                                                                          : ~std::uint64_t{0};
            std::uint64_t fail = 0;
            for (int w = 0; w < n; ++w) fail |= ~lane(root, w)[k];
            fail &= mask;
            if (fail == 0) continue;

            const int t = std::countr_zero(fail);
            const std::uint64_t index = (base + static_cast<std::uint64_t>(k)) * 64 +
                                        static_cast<std::uint64_t>(t);
            ValidityResult r;
            r.status = ValidityResult::Status::Falsified;
            for (int w = 0; w < n; ++w)
                if ((~lane(root, w)[k] >> t) & 1) { r.world = w; break; }
            for (std::size_t q = 0; q < plan.vars.size(); ++q) {
                WorldSet s(n);
                for (int w = 0; w < n; ++w)
                    if ((index >> (static_cast<int>(q) * n + w)) & 1) s.add(w);
                r.countervaluation.set(plan.vars[q], std::move(s));
            }
            return r;
        }
    }

    ValidityResult r;
    r.status = ValidityResult::Status::Valid;
    return r;
}

}  // namespace kripkit::detail
