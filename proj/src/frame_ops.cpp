#include "kripkit/frame_ops.hpp"

#include <algorithm>

namespace kripkit {

Relation union_relation(const Frame& f) {
    Relation acc(f.worlds());
    for (int i = 0; i < f.modalities(); ++i) acc.unite(f.relation(i));
    return acc;
}

Relation closure_leq(const Frame& f, int m) { return closure_leq(union_relation(f), m); }

Relation star(const Frame& f) { return star(union_relation(f)); }

int pretransitivity_index(const Frame& f) {
    const Relation r = union_relation(f);
    const Relation target = star(r);
    Relation step = Relation::diagonal(f.worlds());
    step.unite(r);
    Relation acc = Relation::diagonal(f.worlds());  // R^{≤0}
    // R^{≤n-1} = R^* on n worlds, so the loop is a hard bound, not a guess.
    for (int m = 0; m < f.worlds(); ++m) {
        if (acc == target) return m;
        acc = compose(acc, step);
    }
    throw Error("internal error: closure did not stabilize within n-1 steps");
}

Partition clusters(const Frame& f) {
    const Relation st = star(f);
    const Relation both = [&] {
        Relation t = st.transpose();
        // ~_F as a bit-matrix: st ∩ st^{-1}
        Relation out(f.worlds());
        for (int a = 0; a < f.worlds(); ++a)
            for (int b = 0; b < f.worlds(); ++b)
                if (st.at(a, b) && t.at(a, b)) out.add(a, b);
        return out;
    }();
    std::vector<int> block_of(static_cast<std::size_t>(f.worlds()), -1);
    int next = 0;
    for (int a = 0; a < f.worlds(); ++a) {
        if (block_of[static_cast<std::size_t>(a)] != -1) continue;
        for (int b = a; b < f.worlds(); ++b)
            if (both.at(a, b)) block_of[static_cast<std::size_t>(b)] = next;
        ++next;
    }
    return Partition::from_block_ids(block_of);
}

Frame skeleton(const Frame& f) {
    const Relation st = star(f);
    const Partition cl = clusters(f);
    const int k = cl.size();
    EdgeList edges;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (st.at(cl.block(i).front(), cl.block(j).front())) edges.emplace_back(i, j);
    return Frame(k, Alphabet({"1"}), {edges});
}

int height(const Frame& f) {
    const Frame sk = skeleton(f);
    const Relation r = sk.relation(0);
    const int k = sk.worlds();
    // longest chain in a finite poset by depth over the strict part
    std::vector<int> depth(static_cast<std::size_t>(k), 0);
    // topological-ish iteration: since k is small, relax k times
    for (int round = 0; round < k; ++round) {
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (a != b && r.at(a, b))
                    depth[static_cast<std::size_t>(b)] =
                        std::max(depth[static_cast<std::size_t>(b)],
                                 depth[static_cast<std::size_t>(a)] + 1);
    }
    int h = 0;
    for (int a = 0; a < k; ++a) h = std::max(h, depth[static_cast<std::size_t>(a)]);
    return h + 1;
}

Frame restrict(const Frame& f, const WorldSet& y) {
    return restrict(f, y.to_vector());
}

Frame restrict(const Frame& f, const std::vector<int>& y_in) {
    std::vector<int> y = y_in;
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    if (y.empty()) throw Error("restriction to the empty set is not a frame");
    std::vector<int> new_index(static_cast<std::size_t>(f.worlds()), -1);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] < 0 || y[i] >= f.worlds()) throw Error("restriction world out of range");
        new_index[static_cast<std::size_t>(y[i])] = static_cast<int>(i);
    }
    std::vector<EdgeList> edges(static_cast<std::size_t>(f.modalities()));
    for (int m = 0; m < f.modalities(); ++m)
        for (const auto& [a, b] : f.edges(m)) {
            const int na = new_index[static_cast<std::size_t>(a)];
            const int nb = new_index[static_cast<std::size_t>(b)];
            if (na != -1 && nb != -1) edges[static_cast<std::size_t>(m)].emplace_back(na, nb);
        }
    return Frame(static_cast<int>(y.size()), f.alphabet(), std::move(edges));
}

GeneratedSubframe generated_subframe(const Frame& f, int w) {
    if (w < 0 || w >= f.worlds()) throw Error("generating world out of range");
    const Relation st = star(f);
    std::vector<int> reach;
    for (int v = 0; v < f.worlds(); ++v)
        if (st.at(w, v)) reach.push_back(v);
    return GeneratedSubframe{restrict(f, reach), reach};
}

bool is_point_generated(const Frame& f) {
    const Relation st = star(f);
    const std::size_t wpr = st.words_per_row();
    const WorldSet all(f.worlds(), true);
    for (int w = 0; w < f.worlds(); ++w) {
        bool full = true;
        for (std::size_t i = 0; i < wpr; ++i)
            if (st.row(w)[i] != all.words()[i]) { full = false; break; }
        if (full) return true;
    }
    return false;
}

int max_cluster_size(const Frame& f) {
    const Partition cl = clusters(f);
    int best = 0;
    for (const auto& block : cl.blocks())
        best = std::max(best, static_cast<int>(block.size()));
    return best;
}

bool is_reflexive(const Relation& r) {
    for (int a = 0; a < r.worlds(); ++a)
        if (!r.at(a, a)) return false;
    return true;
}

bool is_transitive(const Relation& r) { return compose(r, r).subset_of(r); }

bool is_symmetric(const Relation& r) { return r == r.transpose(); }

bool is_preorder(const Relation& r) { return is_reflexive(r) && is_transitive(r); }

bool is_equivalence(const Relation& r) { return is_preorder(r) && is_symmetric(r); }

bool is_partial_order(const Relation& r) {
    if (!is_preorder(r)) return false;
    for (int a = 0; a < r.worlds(); ++a)
        for (int b = a + 1; b < r.worlds(); ++b)
            if (r.at(a, b) && r.at(b, a)) return false;
    return true;
}

}  // namespace kripkit
