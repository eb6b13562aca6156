#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kripkit/checkers.hpp"
#include "kripkit/constructions.hpp"
#include "kripkit/frame_ops.hpp"
#include "kripkit/morphisms.hpp"
#include "oracles.hpp"

using namespace kripkit;

namespace {

Frame cluster_counterexample(int n) {
    EdgeList edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b + 1) edges.emplace_back(a, b);
    return Frame(n, Alphabet({"1"}), {edges});
}

}  // namespace

TEST_CASE("check_RP basics") {
    // a transitive relation always has the length-2 shortcut
    const Relation transitive = star(Relation(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(check_RP(transitive, 1).holds);

    const Frame c8 = cluster_counterexample(8);
    CHECK(clusters(c8).size() == 1);
    CHECK(check_RP(c8.relation(0), 2).holds);
    CHECK_FALSE(check_RP(c8.relation(0), 1).holds);

    // RP_0 asks every edge to be a loop
    CHECK(check_RP(Relation(2, {{0, 0}, {1, 1}}), 0).holds);
    CHECK_FALSE(check_RP(Relation(2, {{0, 1}}), 0).holds);
}

TEST_CASE("zigzag paths defeat RP on growing rectangles") {
    for (int l = 2; l <= 3; ++l) {
        const Frame rect = rectangle(l + 1, l + 1);
        const Relation u = union_relation(rect);
        const CheckResult res = check_RP(u, 2 * l - 1);
        CHECK_FALSE(res.holds);
        CHECK(res.witness.find("irreducible path") == 0);

        // the explicit zigzag (x_i, y_i), (x_i, y_{i+1}) is irreducible
        std::vector<int> path;
        for (int i = 0; i <= l; ++i) {
            path.push_back(i * (l + 1) + i);
            if (i < l) path.push_back(i * (l + 1) + i + 1);
        }
        REQUIRE(static_cast<int>(path.size()) == 2 * l + 1);
        for (std::size_t s = 0; s + 1 < path.size(); ++s)
            REQUIRE(u.at(path[s], path[s + 1]));
        for (std::size_t i = 0; i < path.size(); ++i)
            for (std::size_t j = i + 1; j < path.size(); ++j) CHECK(path[i] != path[j]);
        const int m = 2 * l - 1;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            for (std::size_t j = i + 1; static_cast<int>(j) <= m; ++j)
                CHECK_FALSE(u.at(path[i], path[j + 1]));
    }

    // the least RP index grows strictly along rect(2,2), rect(3,3), rect(4,4)
    std::vector<int> least;
    for (int m = 2; m <= 4; ++m) {
        const auto idx = least_rp_index(union_relation(rectangle(m, m)), 10);
        REQUIRE(idx.has_value());
        least.push_back(*idx);
    }
    CHECK(least[0] < least[1]);
    CHECK(least[1] < least[2]);
}

TEST_CASE("RP is monotone in m") {
    std::mt19937_64 rng(401);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Frame f = oracles::random_frame(rng, n, {"1"}, 0.4);
        const Relation r = f.relation(0);
        for (int m = 0; m <= 3; ++m)
            if (check_RP(r, m).holds) CHECK(check_RP(r, m + 1).holds);
    }
}

TEST_CASE("RP is inherited by restrictions") {
    std::mt19937_64 rng(403);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Frame f = oracles::random_frame(rng, n, {"1"}, 0.4);
        std::vector<int> subset;
        for (int w = 0; w < n; ++w)
            if (rng() % 2) subset.push_back(w);
        if (subset.empty()) subset.push_back(0);
        const Frame sub = restrict(f, subset);
        for (int m = 0; m <= 3; ++m)
            if (check_RP(f.relation(0), m).holds) CHECK(check_RP(sub.relation(0), m).holds);
    }
}

TEST_CASE("check_rp_semantic_poly") {
    // with k = n = 1 the diagonal never matters: agree with the plain union
    std::mt19937_64 rng(409);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Frame f = oracles::random_frame(rng, n, {"1", "2"}, 0.4);
        Relation u = f.relation(0);
        u.unite(f.relation(1));
        for (int m = 0; m <= 2; ++m)
            CHECK(check_rp_semantic_poly(f, m, 1, 1, {"1"}, {"2"}).holds ==
                  check_RP(u, m).holds);
    }

    // on rect(2,2) the first holding m is 2, matching the scheme validity
    const Frame r22 = rectangle(2, 2);
    CHECK_FALSE(check_rp_semantic_poly(r22, 1, 1, 1, {"1"}, {"2"}).holds);
    CHECK(check_rp_semantic_poly(r22, 2, 1, 1, {"1"}, {"2"}).holds);
}

TEST_CASE("commutativity and Church-Rosser") {
    const Frame prod = product(chain(2, true), cluster(2, "2"));
    CHECK(check_commutativity(prod, "1", "2").holds);
    CHECK(check_church_rosser(prod, "1", "2").holds);

    const Frame bad(3, Alphabet({"1", "2"}), {{{0, 1}}, {{1, 2}}});
    const CheckResult com = check_commutativity(bad, "1", "2");
    CHECK_FALSE(com.holds);
    CHECK(com.witness.find("(0,2)") != std::string::npos);

    const Frame diag(2, Alphabet({"1", "2"}), {{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}});
    CHECK(check_commutativity(diag, "1", "2").holds);
    CHECK(check_church_rosser(diag, "1", "2").holds);
}

TEST_CASE("terminal points and McKinsey") {
    const Frame t = tack1(3);
    CHECK(terminal_points(t, "1") == WorldSet::of(4, {3}));
    CHECK(terminal_points(cluster(2), "1").empty());
    CHECK(check_mckinsey(t, "1").holds);
    CHECK(check_mckinsey(tack2(2, 2), "1").holds);
    CHECK_FALSE(check_mckinsey(cluster(2), "1").holds);
    CHECK_THROWS_AS(check_mckinsey(Frame(2, Alphabet({"1"}), {{{0, 1}}}), "1"), Error);
}

TEST_CASE("alpha_strip") {
    CHECK(is_isomorphic(alpha_strip(tack2(2, 2)), rectangle(2, 2)).has_value());
    for (int k = 1; k <= 3; ++k)
        for (int m = 1; m <= 3; ++m)
            CHECK(is_isomorphic(alpha_strip(tack2(k, m)), rectangle(k, m)).has_value());

    // chain(2)×cluster(2): stripping the terminal top row leaves the bottom
    const Frame prod = product(chain(2, true), cluster(2, "2"));
    CHECK(is_isomorphic(alpha_strip(prod), rectangle(1, 2)).has_value());

    // no terminal points at all: the frame is returned unchanged
    CHECK(alpha_strip(rectangle(2, 2)) == rectangle(2, 2));

    // every point terminal: the degenerate case errors
    const Frame diag(2, Alphabet({"1", "2"}), {{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}});
    CHECK_THROWS_AS(alpha_strip(diag), Error);
}

TEST_CASE("opposite arrows") {
    const Frame prod = product(chain(2, true), cluster(2, "2"));
    CHECK(check_opposite_arrows(prod).holds);

    const Frame f1(2, Alphabet({"1", "2"}),
                   {{{0, 0}, {0, 1}, {1, 1}}, {{0, 0}, {1, 0}, {1, 1}}});
    const CheckResult res = check_opposite_arrows(f1);
    CHECK_FALSE(res.holds);
    CHECK(res.witness == "(0,1)");

    const Frame diag(2, Alphabet({"1", "2"}), {{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}});
    CHECK(check_opposite_arrows(diag).holds);
}

TEST_CASE("opposite arrows on random products of preorders") {
    std::mt19937_64 rng(419);
    for (int trial = 0; trial < 60; ++trial) {
        const Frame f = oracles::random_preorder_frame(rng, 1 + static_cast<int>(rng() % 5), "1");
        const Frame g = oracles::random_preorder_frame(rng, 1 + static_cast<int>(rng() % 5), "2");
        CHECK(check_opposite_arrows(product(f, g)).holds);
    }
}

TEST_CASE("rectangle_quotient_check") {
    CHECK(rectangle_quotient_check(rectangle(1, 1)).holds);
    CHECK(rectangle_quotient_check(rectangle(2, 3)).holds);
    CHECK(rectangle_quotient_check(rectangle(3, 2)).holds);

    const CheckResult not_pg = rectangle_quotient_check(disjoint_union(
        rectangle(1, 1), rectangle(1, 1)));
    CHECK_FALSE(not_pg.holds);
    CHECK(not_pg.witness.find("point-generated") != std::string::npos);

    const CheckResult not_equiv = rectangle_quotient_check(tack2(2, 2));
    CHECK_FALSE(not_equiv.holds);
    CHECK(not_equiv.witness.find("equivalences") != std::string::npos);
}

TEST_CASE("alpha transfer on tack instances") {
    for (const Frame& f : {tack2(2, 2), tack2(3, 2)}) {
        const Frame stripped = alpha_strip(f);
        int m0 = -1;
        for (int m = 0; m <= 8; ++m)
            if (check_rp_semantic_poly(stripped, m, 1, 1, {"1"}, {"2"}).holds) {
                m0 = m;
                break;
            }
        REQUIRE(m0 >= 0);
        CHECK(check_rp_semantic_poly(f, m0 + 2, 1, 1, {"1"}, {"2"}).holds);
    }
}
