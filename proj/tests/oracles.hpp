#pragma once

// Test-side oracles, deliberately independent of the library code paths
// they are used to check: naive boolean-matrix closures, per-valuation
// validity enumeration, set-partition enumeration, and seeded random frame
// generators.

#include <cstdint>
#include <random>
#include <vector>

#include "kripkit/formula.hpp"
#include "kripkit/frame.hpp"

namespace oracles {

using BoolMatrix = std::vector<std::vector<bool>>;

inline BoolMatrix to_matrix(const kripkit::Relation& r) {
    BoolMatrix m(static_cast<std::size_t>(r.worlds()),
                 std::vector<bool>(static_cast<std::size_t>(r.worlds()), false));
    for (int a = 0; a < r.worlds(); ++a)
        for (int b = 0; b < r.worlds(); ++b)
            if (r.at(a, b)) m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    return m;
}

inline BoolMatrix multiply(const BoolMatrix& x, const BoolMatrix& y) {
    const std::size_t n = x.size();
    BoolMatrix out(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (x[a][b])
                for (std::size_t c = 0; c < n; ++c)
                    if (y[b][c]) out[a][c] = true;
    return out;
}

inline BoolMatrix identity(std::size_t n) {
    BoolMatrix out(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) out[a][a] = true;
    return out;
}

inline BoolMatrix matrix_union(BoolMatrix x, const BoolMatrix& y) {
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < x.size(); ++b)
            if (y[a][b]) x[a][b] = true;
    return x;
}

// ⋃_{i≤m} R^i by repeated multiplication.
inline BoolMatrix closure_leq_naive(const BoolMatrix& r, int m) {
    BoolMatrix acc = identity(r.size());
    BoolMatrix pow = identity(r.size());
    for (int i = 1; i <= m; ++i) {
        pow = multiply(pow, r);
        acc = matrix_union(acc, pow);
    }
    return acc;
}

inline BoolMatrix star_naive(const BoolMatrix& r) {
    return closure_leq_naive(r, static_cast<int>(r.size()) - 1);
}

inline bool matrices_equal(const BoolMatrix& x, const kripkit::Relation& r) {
    for (int a = 0; a < r.worlds(); ++a)
        for (int b = 0; b < r.worlds(); ++b)
            if (x[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != r.at(a, b))
                return false;
    return true;
}

// Frame validity by brute per-valuation enumeration through eval(); the
// library sweep must agree with this on both the verdict and, on failure,
// freedom from false positives.
struct NaiveValidity {
    bool valid;
    kripkit::Valuation counter;
    int world = -1;
};

inline NaiveValidity valid_naive(const kripkit::Frame& f, const kripkit::Formula& phi) {
    const std::vector<int> vars = kripkit::vars_of(phi);
    const int n = f.worlds();
    const int bits = n * static_cast<int>(vars.size());
    NaiveValidity out{true, {}, -1};
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << bits); ++index) {
        kripkit::Valuation v;
        for (std::size_t q = 0; q < vars.size(); ++q) {
            kripkit::WorldSet s(n);
            for (int w = 0; w < n; ++w)
                if ((index >> (static_cast<int>(q) * n + w)) & 1) s.add(w);
            v.set(vars[q], std::move(s));
        }
        const kripkit::WorldSet truth = kripkit::eval(f, v, phi);
        for (int w = 0; w < n; ++w)
            if (!truth.contains(w)) {
                out.valid = false;
                out.counter = v;
                out.world = w;
                return out;
            }
    }
    return out;
}

// All set partitions of 0..n-1 as block-id vectors (restricted growth
// strings), in enumeration order.
inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> ids(static_cast<std::size_t>(n), 0);
    auto emit = [&] { out.push_back(ids); };
    // odometer over restricted growth strings
    while (true) {
        emit();
        int i = n - 1;
        for (; i > 0; --i) {
            int max_prefix = 0;
            for (int j = 0; j < i; ++j) max_prefix = std::max(max_prefix, ids[static_cast<std::size_t>(j)]);
            if (ids[static_cast<std::size_t>(i)] <= max_prefix) {
                ++ids[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < n; ++j) ids[static_cast<std::size_t>(j)] = 0;
                break;
            }
        }
        if (i == 0) return out;
    }
}

// Deterministic random frames: n worlds, one relation per label, each edge
// present with probability num/den.
inline kripkit::Frame random_frame(std::mt19937_64& rng, int n,
                                   const std::vector<std::string>& labels, double density = 0.5) {
    std::bernoulli_distribution edge(density);
    std::vector<kripkit::EdgeList> rels;
    for (std::size_t m = 0; m < labels.size(); ++m) {
        kripkit::EdgeList edges;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (edge(rng)) edges.emplace_back(a, b);
        rels.push_back(std::move(edges));
    }
    return kripkit::Frame(n, kripkit::Alphabet(labels), std::move(rels));
}

inline kripkit::Frame random_preorder_frame(std::mt19937_64& rng, int n,
                                            const std::string& label, double density = 0.35) {
    const kripkit::Frame base = random_frame(rng, n, {label}, density);
    const kripkit::Relation st = kripkit::star(base.relation(0));
    return kripkit::Frame(n, kripkit::Alphabet({label}), {st.edges()});
}

}  // namespace oracles
