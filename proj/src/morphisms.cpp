#include "kripkit/morphisms.hpp"

#include <algorithm>
#include <numeric>

namespace kripkit {

std::string PMorphismVerdict::describe() const {
    if (ok) return "p-morphism";
    if (clause == Clause::Homomorphism)
        return "homomorphism clause fails on <" + label + "> edge (" +
               std::to_string(world_a) + "," + std::to_string(world_b) + ")";
    return "back condition fails at world " + std::to_string(world_a) + " for <" + label +
           "> target " + std::to_string(world_b);
}

PMorphismVerdict is_p_morphism(const WorldMap& f, const Frame& from, const Frame& to) {
    if (!(from.alphabet() == to.alphabet()))
        throw Error("p-morphism check needs equal alphabets");
    if (f.source_worlds != from.worlds() || f.target_worlds != to.worlds())
        throw Error("world map does not match the frames");
    PMorphismVerdict verdict;
    for (int m = 0; m < from.modalities(); ++m) {
        const Relation t = to.relation(m);
        for (const auto& [a, b] : from.edges(m)) {
            if (!t.at(f(a), f(b))) {
                verdict.clause = PMorphismVerdict::Clause::Homomorphism;
                verdict.label = from.alphabet().label(m);
                verdict.world_a = a;
                verdict.world_b = b;
                return verdict;
            }
        }
        const Relation s = from.relation(m);
        for (int a = 0; a < from.worlds(); ++a) {
            for (int u = 0; u < to.worlds(); ++u) {
                if (!t.at(f(a), u)) continue;
                bool matched = false;
                for (int b = 0; b < from.worlds() && !matched; ++b)
                    if (s.at(a, b) && f(b) == u) matched = true;
                if (!matched) {
                    verdict.clause = PMorphismVerdict::Clause::Back;
                    verdict.label = from.alphabet().label(m);
                    verdict.world_a = a;
                    verdict.world_b = u;
                    return verdict;
                }
            }
        }
    }
    verdict.ok = true;
    return verdict;
}

bool is_surjective(const WorldMap& f) {
    std::vector<bool> hit(static_cast<std::size_t>(f.target_worlds), false);
    for (int v : f.image) hit[static_cast<std::size_t>(v)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_onto_p_morphism(const WorldMap& f, const Frame& from, const Frame& to) {
    return is_surjective(f) && is_p_morphism(f, from, to).ok;
}

namespace {

struct Searcher {
    const Frame& from;
    const Frame& to;
    std::vector<Relation> src_rel, dst_rel;
    std::vector<int> order;        // source worlds in assignment order
    std::vector<int> assignment;   // world -> target or -1
    std::vector<int> cover_count;  // target -> how many sources map onto it
    int uncovered = 0;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool out_of_budget = false;

    Searcher(const Frame& f, const Frame& g, std::uint64_t b)
        : from(f), to(g), budget(b) {
        for (int m = 0; m < f.modalities(); ++m) {
            src_rel.push_back(f.relation(m));
            dst_rel.push_back(g.relation(m));
        }
        order.resize(static_cast<std::size_t>(f.worlds()));
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> degree(static_cast<std::size_t>(f.worlds()), 0);
        for (int m = 0; m < f.modalities(); ++m)
            for (const auto& [a, b] : f.edges(m)) ++degree[static_cast<std::size_t>(a)];
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
        });
        assignment.assign(static_cast<std::size_t>(f.worlds()), -1);
        cover_count.assign(static_cast<std::size_t>(g.worlds()), 0);
        uncovered = g.worlds();
    }

    // Homomorphism clause between the newly assigned world and all assigned
    // neighbours, plus the back condition for every assigned world whose
    // successors are now fully assigned.
    bool consistent(int w) {
        for (std::size_t m = 0; m < src_rel.size(); ++m) {
            for (int v = 0; v < from.worlds(); ++v) {
                if (assignment[static_cast<std::size_t>(v)] == -1) continue;
                if (src_rel[m].at(w, v) &&
                    !dst_rel[m].at(assignment[static_cast<std::size_t>(w)],
                                   assignment[static_cast<std::size_t>(v)]))
                    return false;
                if (src_rel[m].at(v, w) &&
                    !dst_rel[m].at(assignment[static_cast<std::size_t>(v)],
                                   assignment[static_cast<std::size_t>(w)]))
                    return false;
            }
        }
        for (int a = 0; a < from.worlds(); ++a) {
            if (assignment[static_cast<std::size_t>(a)] == -1) continue;
            for (std::size_t m = 0; m < src_rel.size(); ++m) {
                bool all_assigned = true;
                for (int b = 0; b < from.worlds() && all_assigned; ++b)
                    if (src_rel[m].at(a, b) && assignment[static_cast<std::size_t>(b)] == -1)
                        all_assigned = false;
                if (!all_assigned) continue;
                for (int u = 0; u < to.worlds(); ++u) {
                    if (!dst_rel[m].at(assignment[static_cast<std::size_t>(a)], u)) continue;
                    bool matched = false;
                    for (int b = 0; b < from.worlds() && !matched; ++b)
                        if (src_rel[m].at(a, b) && assignment[static_cast<std::size_t>(b)] == u)
                            matched = true;
                    if (!matched) return false;
                }
            }
        }
        return true;
    }

    bool search(std::size_t depth) {
        if (nodes >= budget) {
            out_of_budget = true;
            return false;
        }
        if (depth == order.size()) return uncovered == 0;
        // Surjectivity pruning: the remaining worlds must be able to cover
        // the still-uncovered targets.
        if (static_cast<int>(order.size() - depth) < uncovered) return false;
        const int w = order[depth];
        for (int u = 0; u < to.worlds(); ++u) {
            ++nodes;
            if (nodes > budget) {
                out_of_budget = true;
                return false;
            }
            assignment[static_cast<std::size_t>(w)] = u;
            if (cover_count[static_cast<std::size_t>(u)]++ == 0) --uncovered;
            if (consistent(w) && search(depth + 1)) return true;
            if (--cover_count[static_cast<std::size_t>(u)] == 0) ++uncovered;
            assignment[static_cast<std::size_t>(w)] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

MorphismSearchResult find_p_morphism(const Frame& from, const Frame& to, std::uint64_t budget) {
    if (!(from.alphabet() == to.alphabet()))
        throw Error("p-morphism search needs equal alphabets");
    Searcher s(from, to, budget);
    if (s.search(0)) {
        WorldMap map(from.worlds(), to.worlds(), s.assignment);
        // The incremental pruning is an optimization; the returned witness
        // must stand on the full checks alone.
        if (!is_p_morphism(map, from, to).ok || !is_surjective(map))
            throw Error("internal error: search produced an unverified morphism");
        return {MorphismSearchResult::Status::Found, std::move(map)};
    }
    if (s.out_of_budget) return {MorphismSearchResult::Status::BudgetExhausted, std::nullopt};
    return {MorphismSearchResult::Status::None, std::nullopt};
}

namespace {

struct IsoSearcher {
    const Frame& f;
    const Frame& g;
    std::vector<Relation> fr, gr;
    std::vector<std::vector<int>> f_sig, g_sig;  // per-world degree signatures
    std::vector<int> assignment;                  // f world -> g world or -1
    std::vector<bool> used;

    IsoSearcher(const Frame& a, const Frame& b) : f(a), g(b) {
        for (int m = 0; m < f.modalities(); ++m) {
            fr.push_back(f.relation(m));
            gr.push_back(g.relation(m));
        }
        f_sig = signatures(f);
        g_sig = signatures(g);
        assignment.assign(static_cast<std::size_t>(f.worlds()), -1);
        used.assign(static_cast<std::size_t>(g.worlds()), false);
    }

    static std::vector<std::vector<int>> signatures(const Frame& fr) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(fr.worlds()));
        for (int m = 0; m < fr.modalities(); ++m) {
            std::vector<int> out(static_cast<std::size_t>(fr.worlds()), 0);
            std::vector<int> in(static_cast<std::size_t>(fr.worlds()), 0);
            for (const auto& [a, b] : fr.edges(m)) {
                ++out[static_cast<std::size_t>(a)];
                ++in[static_cast<std::size_t>(b)];
            }
            for (int w = 0; w < fr.worlds(); ++w) {
                sig[static_cast<std::size_t>(w)].push_back(out[static_cast<std::size_t>(w)]);
                sig[static_cast<std::size_t>(w)].push_back(in[static_cast<std::size_t>(w)]);
                sig[static_cast<std::size_t>(w)].push_back(
                    fr.relation(m).at(w, w) ? 1 : 0);
            }
        }
        return sig;
    }

    bool consistent(int w, int u) {
        if (f_sig[static_cast<std::size_t>(w)] != g_sig[static_cast<std::size_t>(u)]) return false;
        for (std::size_t m = 0; m < fr.size(); ++m)
            for (int v = 0; v < f.worlds(); ++v) {
                const int uv = assignment[static_cast<std::size_t>(v)];
                if (uv == -1) continue;
                if (fr[m].at(w, v) != gr[m].at(u, uv)) return false;
                if (fr[m].at(v, w) != gr[m].at(uv, u)) return false;
            }
        return true;
    }

    bool search(int w) {
        if (w == f.worlds()) return true;
        for (int u = 0; u < g.worlds(); ++u) {
            if (used[static_cast<std::size_t>(u)]) continue;
            if (!consistent(w, u)) continue;
            assignment[static_cast<std::size_t>(w)] = u;
            used[static_cast<std::size_t>(u)] = true;
            if (search(w + 1)) return true;
            used[static_cast<std::size_t>(u)] = false;
            assignment[static_cast<std::size_t>(w)] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<WorldMap> is_isomorphic(const Frame& f, const Frame& g) {
    if (!(f.alphabet() == g.alphabet())) throw Error("isomorphism check needs equal alphabets");
    if (f.worlds() != g.worlds()) return std::nullopt;
    for (int m = 0; m < f.modalities(); ++m)
        if (f.edges(m).size() != g.edges(m).size()) return std::nullopt;
    IsoSearcher s(f, g);
    {
        // degree-sequence pruning before any backtracking
        auto fs = s.f_sig;
        auto gs = s.g_sig;
        std::sort(fs.begin(), fs.end());
        std::sort(gs.begin(), gs.end());
        if (fs != gs) return std::nullopt;
    }
    if (!s.search(0)) return std::nullopt;
    WorldMap map(f.worlds(), g.worlds(), s.assignment);
    return map;
}

}  // namespace kripkit
