#include "kripkit/checkers.hpp"

#include <algorithm>

#include "kripkit/constructions.hpp"
#include "kripkit/frame_ops.hpp"
#include "kripkit/morphisms.hpp"

namespace kripkit {

namespace {

std::string path_to_string(const std::vector<int>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i != 0) out += " ";
        out += std::to_string(path[i]);
    }
    return out;
}

// DFS for an irreducible path of length m+1. A prefix is extended only while
// it stays irreducible (no repeated world, no shortcut), which is sound: any
// repeat or shortcut inside a prefix satisfies the reduction disjunction for
// every extension. Worlds are tried in ascending order, so the first hit is
// the lexicographically least irreducible path.
bool find_irreducible_path(const Relation& r, int m, std::vector<int>& path) {
    const int target_len = m + 2;  // worlds on a path of m+1 steps
    if (static_cast<int>(path.size()) == target_len) return true;
    const int n = r.worlds();
    for (int next = 0; next < n; ++next) {
        if (!path.empty() && !r.at(path.back(), next)) continue;
        bool reducible = false;
        for (int w : path)
            if (w == next) { reducible = true; break; }
        if (!reducible && path.size() >= 2) {
            // appending at position j+1 = |path|; shortcut x_i R x_{j+1}
            // requires i < j and j <= m, i.e. |path| <= m + 1
            if (static_cast<int>(path.size()) <= m + 1) {
                for (std::size_t i = 0; i + 1 < path.size() && !reducible; ++i)
                    if (r.at(path[i], next)) reducible = true;
            }
        }
        if (reducible) continue;
        path.push_back(next);
        if (find_irreducible_path(r, m, path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

CheckResult check_RP(const Relation& r, int m) {
    CheckResult res;
    res.name = "RP_" + std::to_string(m);
    std::vector<int> path;
    if (find_irreducible_path(r, m, path)) {
        res.holds = false;
        res.witness = "irreducible path: " + path_to_string(path);
    } else {
        res.holds = true;
    }
    return res;
}

std::optional<int> least_rp_index(const Relation& r, int cap) {
    for (int m = 0; m <= cap; ++m)
        if (check_RP(r, m).holds) return m;
    return std::nullopt;
}

namespace {

Relation union_of(const Frame& f, const std::vector<std::string>& labels) {
    if (labels.empty()) throw Error("label set must be non-empty");
    Relation acc(f.worlds());
    for (const auto& l : labels) acc.unite(f.relation(l));
    return acc;
}

}  // namespace

CheckResult check_rp_semantic_poly(const Frame& f, int m, int k, int n,
                                   const std::vector<std::string>& a_labels,
                                   const std::vector<std::string>& b_labels) {
    Relation mixed = closure_leq(union_of(f, a_labels), k);
    mixed.unite(closure_leq(union_of(f, b_labels), n));
    CheckResult res = check_RP(mixed, m);
    res.name = "RP_" + std::to_string(m) + "(" + std::to_string(k) + "," + std::to_string(n) + ")";
    return res;
}

CheckResult check_commutativity(const Frame& f, const std::string& a, const std::string& b) {
    CheckResult res;
    res.name = "com(" + a + "," + b + ")";
    const Relation ab = compose(f.relation(a), f.relation(b));
    const Relation ba = compose(f.relation(b), f.relation(a));
    if (ab == ba) {
        res.holds = true;
        return res;
    }
    for (int x = 0; x < f.worlds(); ++x)
        for (int y = 0; y < f.worlds(); ++y)
            if (ab.at(x, y) != ba.at(x, y)) {
                res.witness = "(" + std::to_string(x) + "," + std::to_string(y) + ") in " +
                              (ab.at(x, y) ? "R_a∘R_b only" : "R_b∘R_a only");
                return res;
            }
    return res;
}

CheckResult check_church_rosser(const Frame& f, const std::string& a, const std::string& b) {
    CheckResult res;
    res.name = "chr(" + a + "," + b + ")";
    const Relation ra = f.relation(a);
    const Relation rb = f.relation(b);
    for (int x = 0; x < f.worlds(); ++x)
        for (int y = 0; y < f.worlds(); ++y) {
            if (!ra.at(x, y)) continue;
            for (int z = 0; z < f.worlds(); ++z) {
                if (!rb.at(x, z)) continue;
                bool ok = false;
                for (int u = 0; u < f.worlds() && !ok; ++u)
                    if (rb.at(y, u) && ra.at(z, u)) ok = true;
                if (!ok) {
                    res.witness = "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                                  " z=" + std::to_string(z);
                    return res;
                }
            }
        }
    res.holds = true;
    return res;
}

WorldSet terminal_points(const Frame& f, const std::string& label) {
    const Relation r = f.relation(label);
    WorldSet out(f.worlds());
    for (int a = 0; a < f.worlds(); ++a) {
        bool terminal = r.at(a, a);
        for (int b = 0; b < f.worlds() && terminal; ++b)
            if (b != a && r.at(a, b)) terminal = false;
        if (terminal) out.add(a);
    }
    return out;
}

CheckResult check_mckinsey(const Frame& f, const std::string& label) {
    const Relation r = f.relation(label);
    if (!is_preorder(r))
        throw Error("mckinsey check requires a reflexive transitive relation");
    CheckResult res;
    res.name = "mckinsey(" + label + ")";
    const WorldSet terminals = terminal_points(f, label);
    for (int x = 0; x < f.worlds(); ++x) {
        if (r.successors(x).intersects(terminals)) continue;
        res.witness = "world " + std::to_string(x) + " sees no terminal point";
        return res;
    }
    res.holds = true;
    return res;
}

WorldSet alpha_strip_removed(const Frame& f, const std::string& label) {
    if (f.modalities() != 2) throw Error("alpha_strip expects a bimodal frame");
    const std::string use = label.empty() ? f.alphabet().label(0) : label;
    if (!is_preorder(f.relation(use)))
        throw Error("alpha_strip requires the stripped relation to be a preorder");
    WorldSet z = terminal_points(f, use);
    if (z.count() == f.worlds())
        throw Error("alpha_strip: every world is terminal (frame validates S5 squared)");
    return z;
}

Frame alpha_strip(const Frame& f, const std::string& label) {
    const WorldSet z = alpha_strip_removed(f, label);
    return restrict(f, z.complement());
}

CheckResult check_opposite_arrows(const Frame& f) {
    if (f.modalities() != 2) throw Error("opposite-arrows check expects a bimodal frame");
    CheckResult res;
    res.name = "opposite-arrows";
    const Relation r = f.relation(0);
    const Relation s = f.relation(1);
    for (int a = 0; a < f.worlds(); ++a)
        for (int b = 0; b < f.worlds(); ++b)
            if (r.at(a, b) && s.at(b, a) && !r.at(b, a)) {
                res.witness = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                return res;
            }
    res.holds = true;
    return res;
}

CheckResult rectangle_quotient_check(const Frame& f) {
    CheckResult res;
    res.name = "rectangle-quotient";
    if (f.modalities() != 2) {
        res.witness = "precondition: frame is not bimodal";
        return res;
    }
    const Relation r1 = f.relation(0);
    const Relation r2 = f.relation(1);
    if (!is_equivalence(r1) || !is_equivalence(r2)) {
        res.witness = "precondition: relations are not both equivalences";
        return res;
    }
    if (!check_commutativity(f, f.alphabet().label(0), f.alphabet().label(1)).holds) {
        res.witness = "precondition: relations do not commute";
        return res;
    }
    if (!is_point_generated(f)) {
        res.witness = "precondition: frame is not point-generated";
        return res;
    }
    auto count_classes = [&](const Relation& r) {
        std::vector<char> seen(static_cast<std::size_t>(f.worlds()), 0);
        int classes = 0;
        for (int a = 0; a < f.worlds(); ++a) {
            if (seen[static_cast<std::size_t>(a)]) continue;
            ++classes;
            for (int b = a; b < f.worlds(); ++b)
                if (r.at(a, b)) seen[static_cast<std::size_t>(b)] = 1;
        }
        return classes;
    };
    const int kappa = count_classes(r1);  // |X/R1|
    const int mu = count_classes(r2);     // |X/R2|
    const QuotientResult q = productivize(f);
    // In rectangle(k, m) the first relation steps the first coordinate, so
    // it has m classes and the second has k: the matching rectangle for
    // (kappa, mu) class counts is rectangle(mu, kappa).
    const Frame target = rectangle(mu, kappa);
    Frame quotient_frame = q.frame;
    // productivize keeps the source alphabet; rename for the comparison
    const std::optional<WorldMap> iso = is_isomorphic(
        Frame(quotient_frame.worlds(), target.alphabet(),
              {quotient_frame.edges(0), quotient_frame.edges(1)}),
        target);
    res.notes = "kappa=" + std::to_string(kappa) + " mu=" + std::to_string(mu);
    if (!iso.has_value()) {
        res.witness = "productivization is not isomorphic to rect(" + std::to_string(mu) + "," +
                      std::to_string(kappa) + ")";
        return res;
    }
    res.holds = true;
    return res;
}

bool SuiteReport::all_pass() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.holds; });
}

std::string SuiteReport::to_text() const {
    std::string out;
    for (const CheckResult& r : results) {
        out += r.name;
        out += '\t';
        out += r.holds ? "PASS" : "FAIL";
        out += '\t';
        out += r.holds ? r.notes : (r.witness.empty() ? r.notes : r.witness);
        out += '\n';
    }
    return out;
}

}  // namespace kripkit
