#include "kripkit/constructions.hpp"

#include <algorithm>
#include <set>

#include "kripkit/frame_ops.hpp"

namespace kripkit {

Equivalence::Equivalence(std::vector<int> ids) : class_of(std::move(ids)) {
    if (class_of.empty()) throw Error("equivalence over empty world set");
    std::set<int> used(class_of.begin(), class_of.end());
    if (*used.begin() != 0 || *used.rbegin() != static_cast<int>(used.size()) - 1)
        throw Error("equivalence class ids must be contiguous from 0");
}

Equivalence Equivalence::diagonal(int n) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
    return Equivalence(std::move(ids));
}

Equivalence Equivalence::from_partition(const Partition& p) {
    std::vector<int> ids(static_cast<std::size_t>(p.universe()));
    for (int w = 0; w < p.universe(); ++w) ids[static_cast<std::size_t>(w)] = p.block_of(w);
    return Equivalence(std::move(ids));
}

int Equivalence::classes() const {
    int m = 0;
    for (int id : class_of) m = std::max(m, id + 1);
    return m;
}

Frame product(const Frame& f, const Frame& g) {
    if (!f.alphabet().disjoint_from(g.alphabet())) throw Error("product factors share modality labels");
    const Alphabet alphabet = alphabet_union(f.alphabet(), g.alphabet());
    const int gn = g.worlds();
    const int n = f.worlds() * gn;
    std::vector<EdgeList> edges(static_cast<std::size_t>(alphabet.size()));
    for (int m = 0; m < f.modalities(); ++m)
        for (const auto& [a, a2] : f.edges(m))
            for (int b = 0; b < gn; ++b)
                edges[static_cast<std::size_t>(m)].emplace_back(a * gn + b, a2 * gn + b);
    for (int m = 0; m < g.modalities(); ++m)
        for (const auto& [b, b2] : g.edges(m))
            for (int a = 0; a < f.worlds(); ++a)
                edges[static_cast<std::size_t>(f.modalities() + m)].emplace_back(a * gn + b, a * gn + b2);
    return Frame(n, alphabet, std::move(edges));
}

Frame rectangle(int k, int m) {
    if (k < 1 || m < 1) throw Error("rectangle dimensions must be positive");
    return product(cluster(k, "1"), cluster(m, "2"));
}

Frame sum_over(const FrameFamily& family) {
    const Frame& index = family.index;
    if (static_cast<int>(family.summands.size()) != index.worlds())
        throw Error("sum needs exactly one summand per index world");
    for (const Frame& s : family.summands)
        if (!(s.alphabet() == index.alphabet()))
            throw Error("sum summand alphabet differs from the index alphabet");
    std::vector<int> offset(family.summands.size() + 1, 0);
    for (std::size_t i = 0; i < family.summands.size(); ++i)
        offset[i + 1] = offset[i] + family.summands[i].worlds();
    const int n = offset.back();
    std::vector<EdgeList> edges(static_cast<std::size_t>(index.modalities()));
    for (int m = 0; m < index.modalities(); ++m) {
        auto& out = edges[static_cast<std::size_t>(m)];
        for (std::size_t i = 0; i < family.summands.size(); ++i)
            for (const auto& [a, b] : family.summands[i].edges(m))
                out.emplace_back(offset[i] + a, offset[i] + b);
        for (const auto& [i, j] : index.edges(m)) {
            if (i == j) continue;
            for (int a = offset[static_cast<std::size_t>(i)]; a < offset[static_cast<std::size_t>(i) + 1]; ++a)
                for (int b = offset[static_cast<std::size_t>(j)]; b < offset[static_cast<std::size_t>(j) + 1]; ++b)
                    out.emplace_back(a, b);
        }
    }
    return Frame(n, index.alphabet(), std::move(edges));
}

Frame semi_ordered_sum(const Frame& f, const Frame& g) {
    if (f.modalities() != 2 || g.modalities() != 2)
        throw Error("semi-ordered sum is defined for bimodal frames only");
    if (!(f.alphabet() == g.alphabet()))
        throw Error("semi-ordered sum operands must share their alphabet");
    const int nf = f.worlds();
    const int n = nf + g.worlds();
    std::vector<EdgeList> edges(2);
    for (int m = 0; m < 2; ++m) {
        for (const auto& [a, b] : f.edges(m)) edges[static_cast<std::size_t>(m)].emplace_back(a, b);
        for (const auto& [a, b] : g.edges(m))
            edges[static_cast<std::size_t>(m)].emplace_back(nf + a, nf + b);
    }
    for (int a = 0; a < nf; ++a)
        for (int b = nf; b < n; ++b) edges[0].emplace_back(a, b);
    return Frame(n, f.alphabet(), std::move(edges));
}

QuotientResult quotient(const Frame& f, const Equivalence& e) {
    if (e.worlds() != f.worlds()) throw Error("equivalence does not match the frame's worlds");
    const int k = e.classes();
    std::vector<EdgeList> edges(static_cast<std::size_t>(f.modalities()));
    for (int m = 0; m < f.modalities(); ++m) {
        std::set<Edge> seen;
        for (const auto& [a, b] : f.edges(m))
            seen.emplace(e.class_of[static_cast<std::size_t>(a)], e.class_of[static_cast<std::size_t>(b)]);
        edges[static_cast<std::size_t>(m)].assign(seen.begin(), seen.end());
    }
    Frame q(k, f.alphabet(), std::move(edges));
    return QuotientResult{std::move(q), WorldMap(f.worlds(), k, e.class_of)};
}

QuotientResult productivize(const Frame& f) {
    std::vector<Relation> rels;
    rels.reserve(static_cast<std::size_t>(f.modalities()));
    for (int m = 0; m < f.modalities(); ++m) {
        Relation r = f.relation(m);
        for (int a = 0; a < f.worlds(); ++a)
            if (!r.at(a, a))
                throw Error("productivize: relation '" + f.alphabet().label(m) +
                            "' is not reflexive at world " + std::to_string(a));
        const Relation rr = compose(r, r);
        for (int a = 0; a < f.worlds(); ++a)
            for (int b = 0; b < f.worlds(); ++b)
                if (rr.at(a, b) && !r.at(a, b))
                    throw Error("productivize: relation '" + f.alphabet().label(m) +
                                "' is not transitive: missing (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
        rels.push_back(std::move(r));
    }
    // ~ = ⋂_◇ (R_◇ ∩ R_◇⁻¹)
    std::vector<int> class_of(static_cast<std::size_t>(f.worlds()), -1);
    int next = 0;
    for (int a = 0; a < f.worlds(); ++a) {
        if (class_of[static_cast<std::size_t>(a)] != -1) continue;
        for (int b = a; b < f.worlds(); ++b) {
            if (class_of[static_cast<std::size_t>(b)] != -1) continue;
            bool similar = true;
            for (const Relation& r : rels)
                if (!r.at(a, b) || !r.at(b, a)) { similar = false; break; }
            if (similar) class_of[static_cast<std::size_t>(b)] = next;
        }
        ++next;
    }
    return quotient(f, Equivalence(std::move(class_of)));
}

Frame saw(int k) {
    if (k < 1) throw Error("saw frame needs at least one tooth");
    // worlds: u = 0, v_i = 1 + i (i < k), w_j = 1 + k + j (j <= k)
    const int n = 2 * k + 2;
    EdgeList d_edges, l_edges, r_edges;
    for (int i = 0; i < k; ++i) d_edges.emplace_back(0, 1 + i);
    for (int i = 0; i < k; ++i) l_edges.emplace_back(1 + i, 1 + k + i);
    for (int i = 0; i < k; ++i) r_edges.emplace_back(1 + i, 1 + k + i + 1);
    return Frame(n, Alphabet({"d", "l", "r"}), {d_edges, l_edges, r_edges});
}

Frame tack1(int k) {
    if (k < 1) throw Error("tack needs a non-empty cluster");
    const int n = k + 1;  // top is world k
    EdgeList edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a < k || b == k) edges.emplace_back(a, b);
    return Frame(n, Alphabet({"1"}), {edges});
}

Frame tack2(int k, int m) { return semi_ordered_sum(rectangle(k, m), bireflexive_point()); }

Frame cluster(int n, const std::string& label) {
    if (n < 1) throw Error("cluster needs at least one world");
    EdgeList edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) edges.emplace_back(a, b);
    return Frame(n, Alphabet({label}), {edges});
}

Frame chain(int h, bool reflexive, const std::string& label) {
    if (h < 1) throw Error("chain needs at least one world");
    EdgeList edges;
    for (int a = 0; a < h; ++a)
        for (int b = a; b < h; ++b)
            if (a != b || reflexive) edges.emplace_back(a, b);
    return Frame(h, Alphabet({label}), {edges});
}

Frame antichain(int n, const std::string& label) {
    if (n < 1) throw Error("antichain needs at least one world");
    EdgeList edges;
    for (int a = 0; a < n; ++a) edges.emplace_back(a, a);
    return Frame(n, Alphabet({label}), {edges});
}

Frame disjoint_union(const Frame& f, const Frame& g) {
    if (!(f.alphabet() == g.alphabet())) throw Error("disjoint union needs a shared alphabet");
    const int nf = f.worlds();
    std::vector<EdgeList> edges(static_cast<std::size_t>(f.modalities()));
    for (int m = 0; m < f.modalities(); ++m) {
        edges[static_cast<std::size_t>(m)] = f.edges(m);
        for (const auto& [a, b] : g.edges(m))
            edges[static_cast<std::size_t>(m)].emplace_back(nf + a, nf + b);
    }
    return Frame(nf + g.worlds(), f.alphabet(), std::move(edges));
}

Frame bireflexive_point() {
    return Frame(1, Alphabet({"1", "2"}), {{{0, 0}}, {{0, 0}}});
}

}  // namespace kripkit
