#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kripkit/constructions.hpp"
#include "kripkit/frame_ops.hpp"
#include "kripkit/morphisms.hpp"
#include "kripkit/tuning.hpp"
#include "oracles.hpp"

using namespace kripkit;

namespace {

// Independent route: enumerate all |G|^|F| maps.
std::optional<WorldMap> brute_force_onto_p_morphism(const Frame& from, const Frame& to) {
    const int n = from.worlds();
    const int k = to.worlds();
    std::vector<int> img(static_cast<std::size_t>(n), 0);
    while (true) {
        const WorldMap f(n, k, img);
        if (is_surjective(f) && is_p_morphism(f, from, to).ok) return f;
        int i = 0;
        while (i < n && img[static_cast<std::size_t>(i)] == k - 1) {
            img[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) return std::nullopt;
        ++img[static_cast<std::size_t>(i)];
    }
}

}  // namespace

TEST_CASE("is_p_morphism basics") {
    const Frame f = rectangle(2, 2);
    CHECK(is_p_morphism(WorldMap::identity(4), f, f).ok);

    // collapsing the second coordinate of rect(3,3) onto rect(3,1)
    const Frame big = rectangle(3, 3);
    const Frame small = rectangle(3, 1);
    std::vector<int> img(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) img[static_cast<std::size_t>(a * 3 + b)] = a;
    CHECK(is_onto_p_morphism(WorldMap(9, 3, img), big, small));

    // a reflexive 2-chain cannot map onto a 2-cluster via the identity
    const PMorphismVerdict v =
        is_p_morphism(WorldMap::identity(2), chain(2, true), cluster(2));
    CHECK_FALSE(v.ok);
    CHECK(v.clause == PMorphismVerdict::Clause::Back);
    CHECK(v.world_a == 1);

    CHECK_THROWS_AS(is_p_morphism(WorldMap::identity(2), chain(2, true), cluster(2, "x")), Error);
}

TEST_CASE("canonical productivization map is a p-morphism") {
    for (const Frame& f : {rectangle(2, 3), tack1(3), chain(3, true)}) {
        const QuotientResult q = productivize(f);
        CHECK(is_p_morphism(q.map, f, q.frame).ok);
        CHECK(is_surjective(q.map));
    }
}

TEST_CASE("surjectivity") {
    CHECK(is_surjective(WorldMap::identity(3)));
    CHECK_FALSE(is_surjective(WorldMap(2, 2, {0, 0})));
    const QuotientResult q = quotient(cluster(4), Equivalence({0, 0, 1, 1}));
    CHECK(is_surjective(q.map));
}

TEST_CASE("find_p_morphism") {
    const Frame f = rectangle(2, 2);
    const MorphismSearchResult self = find_p_morphism(f, f);
    REQUIRE(self.found());
    CHECK(is_onto_p_morphism(*self.map, f, f));

    CHECK(find_p_morphism(chain(2, true), cluster(2)).status ==
          MorphismSearchResult::Status::None);

    const MorphismSearchResult big = find_p_morphism(rectangle(4, 4), rectangle(2, 2));
    REQUIRE(big.found());
    CHECK(is_onto_p_morphism(*big.map, rectangle(4, 4), rectangle(2, 2)));

    // a tight budget reports exhaustion, not nonexistence
    const MorphismSearchResult starved = find_p_morphism(rectangle(3, 3), rectangle(3, 2), 5);
    CHECK(starved.status == MorphismSearchResult::Status::BudgetExhausted);
}

TEST_CASE("find_p_morphism agrees with brute force on small frames") {
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int k = 1 + static_cast<int>(rng() % 3);
        const Frame from = oracles::random_frame(rng, n, {"1", "2"}, 0.4);
        const Frame to = oracles::random_frame(rng, k, {"1", "2"}, 0.4);
        const MorphismSearchResult searched = find_p_morphism(from, to);
        const std::optional<WorldMap> brute = brute_force_onto_p_morphism(from, to);
        REQUIRE(searched.found() == brute.has_value());
        if (searched.found()) CHECK(is_onto_p_morphism(*searched.map, from, to));
    }
}

TEST_CASE("verified p-morphisms compose") {
    std::mt19937_64 rng(223);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const Frame f = oracles::random_frame(rng, n, {"1"}, 0.45);
        const RefinementResult first = coarsest_tuned_refinement(f, Partition::trivial(n));
        const QuotientResult q1 = quotient(f, Equivalence::from_partition(first.partition));
        const RefinementResult second =
            coarsest_tuned_refinement(q1.frame, Partition::trivial(q1.frame.worlds()));
        const QuotientResult q2 = quotient(q1.frame, Equivalence::from_partition(second.partition));
        REQUIRE(is_p_morphism(q1.map, f, q1.frame).ok);
        REQUIRE(is_p_morphism(q2.map, q1.frame, q2.frame).ok);
        const WorldMap composed = compose(q2.map, q1.map);
        CHECK(is_p_morphism(composed, f, q2.frame).ok);
        CHECK(is_surjective(composed));
    }
}

TEST_CASE("is_isomorphic") {
    const Frame f = tack2(2, 3);
    CHECK(is_isomorphic(f, f).has_value());

    // labeled frames: the relation roles differ
    CHECK_FALSE(is_isomorphic(rectangle(2, 3), rectangle(3, 2)).has_value());
    CHECK_FALSE(is_isomorphic(chain(2, true), cluster(2)).has_value());

    // isomorphism found under a permuted world order
    const Frame shuffled(3, Alphabet({"1"}), {{{2, 1}, {1, 0}, {2, 0}, {0, 0}, {1, 1}, {2, 2}}});
    CHECK(is_isomorphic(shuffled, chain(3, true)).has_value());

    const std::optional<WorldMap> iso = is_isomorphic(rectangle(2, 2), rectangle(2, 2));
    REQUIRE(iso.has_value());
    CHECK(is_onto_p_morphism(*iso, rectangle(2, 2), rectangle(2, 2)));
}
