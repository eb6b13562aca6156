#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "formula_internal.hpp"
#include "kripkit/checkers.hpp"
#include "kripkit/kernels/bitspan.hpp"
#include "kripkit/constructions.hpp"
#include "kripkit/frame_ops.hpp"
#include "kripkit/parser.hpp"
#include "kripkit/schemes.hpp"
#include "oracles.hpp"

using namespace kripkit;

namespace {

Frame star_frame(const Frame& f) {
    return Frame(f.worlds(), Alphabet({"1"}), {star(f).edges()});
}

Formula iff(Formula a, Formula b) { return and_(implies(a, b), implies(b, a)); }

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& labels, int depth) {
    const int pick = static_cast<int>(rng() % (depth == 0 ? 2 : 4));
    switch (pick) {
        case 0: return var(static_cast<int>(rng() % 3));
        case 1: return bottom();
        case 2:
            return implies(random_formula(rng, labels, depth - 1),
                           random_formula(rng, labels, depth - 1));
        default:
            return dia(labels[rng() % labels.size()], random_formula(rng, labels, depth - 1));
    }
}

}  // namespace

TEST_CASE("parser core cases") {
    CHECK(equal(parse_formula("p0 -> <1>p0"), implies(var(0), dia("1", var(0)))));
    CHECK(equal(parse_formula("false"), bottom()));
    CHECK(equal(parse_formula("[1][2](p0 | ~p0)"),
                box("1", box("2", or_(var(0), not_(var(0)))))));
    CHECK(equal(parse_formula("true"), top()));
    // right-associative implication, precedence of & over |
    CHECK(equal(parse_formula("p0 -> p1 -> p2"), implies(var(0), implies(var(1), var(2)))));
    CHECK(equal(parse_formula("p0 | p1 & p2"), or_(var(0), and_(var(1), var(2)))));
    CHECK(equal(parse_formula("  p12 "), var(12)));
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(parse_formula("p0 ->"), ParseError);
    CHECK_THROWS_AS(parse_formula("(p0"), ParseError);
    CHECK_THROWS_AS(parse_formula("p0 p1"), ParseError);
    CHECK_THROWS_AS(parse_formula("<>p0"), ParseError);
    try {
        parse_formula("p0 -> <q>p0", nullptr);
    } catch (const ParseError&) {
        FAIL("labels are free-form without an alphabet");
    }
    const Alphabet ab({"1", "2"});
    try {
        parse_formula("p0 -> <q>p0", &ab);
        FAIL("expected rejection of a foreign label");
    } catch (const ParseError& e) {
        CHECK(e.position == 7);
    }
}

TEST_CASE("print/parse round trips") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 1000; ++i) {
        const Formula f = random_formula(rng, {"1", "a_b2"}, 4);
        CHECK(equal(parse_formula(print_formula(f)), f));
    }
    for (const char* text : {"p0 -> <1>p0", "false", "<l>(p0 -> p1) -> false"}) {
        const std::string printed = print_formula(parse_formula(text));
        CHECK(printed == text);
    }
}

TEST_CASE("eval basics") {
    const Frame f = cluster(3);
    CHECK(eval(f, {}, bottom()).empty());
    CHECK(eval(f, {}, top()) == WorldSet(3, true));

    Valuation v;
    v.set(0, WorldSet::of(3, {1}));
    CHECK(eval(f, v, dia("1", var(0))) == WorldSet(3, true));
    CHECK_THROWS_AS(eval(f, v, dia("zz", var(0))), Error);
}

TEST_CASE("eval homomorphism laws") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Frame f = oracles::random_frame(rng, n, {"1", "2"}, 0.4);
        Valuation v;
        for (int p = 0; p < 3; ++p) {
            WorldSet s(n);
            for (int w = 0; w < n; ++w)
                if (rng() % 2) s.add(w);
            v.set(p, std::move(s));
        }
        const Formula a = random_formula(rng, {"1", "2"}, 3);
        const Formula b = random_formula(rng, {"1", "2"}, 3);
        CHECK(eval(f, v, not_(a)) == eval(f, v, a).complement());
        WorldSet meet = eval(f, v, a);
        meet.intersect(eval(f, v, b));
        CHECK(eval(f, v, and_(a, b)) == meet);
    }
}

TEST_CASE("falsification of the tack product formula at the origin") {
    // tack1(3) × cluster(2), p true only at (top, 1)
    const Frame h = product(tack1(3), cluster(2, "2"));
    Valuation v;
    v.set(0, WorldSet::of(8, {3 * 2 + 1}));
    const Formula phi = parse_formula("<2><1>[1]p0 -> [1]<1>p0");
    const WorldSet truth = eval(h, v, phi);
    CHECK_FALSE(truth.contains(0));  // (0,0)
}

TEST_CASE("saw product satisfies the saw formula at (u,0)") {
    const Frame h = product(saw(3), cluster(3, "s"));
    // θ(p) = {(w_i, j) : j < i}; w_i is world 1+3+i of saw(3)
    WorldSet p(h.worlds());
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (j < i) p.add((1 + 3 + i) * 3 + j);
    Valuation v;
    v.set(0, std::move(p));
    const WorldSet truth = eval(h, v, gen_saw_phi("s"));
    CHECK(truth.contains(0));  // (u, 0)
}

TEST_CASE("cluster counterexample: the formulas phi_k pick out single worlds") {
    // C_8: m R n iff m != n+1
    EdgeList edges;
    for (int m = 0; m < 8; ++m)
        for (int n = 0; n < 8; ++n)
            if (m != n + 1) edges.emplace_back(m, n);
    const Frame c8(8, Alphabet({"1"}), {edges});
    Valuation v;
    v.set(0, WorldSet::of(8, {0}));
    Formula phi = var(0);
    for (int k = 0; k <= 6; ++k) {
        CHECK(eval(c8, v, phi) == WorldSet::of(8, {k}));
        phi = not_(dia("1", phi));
    }
}

TEST_CASE("valid_on_frame basics") {
    CHECK(valid_on_frame(cluster(2), parse_formula("p0 -> <1>p0")).valid());

    // finite-height formulas on the reflexive 2-chain
    const Frame c2 = chain(2, true);
    CHECK(valid_on_frame(c2, gen_B(2)).valid());
    const ValidityResult b1 = valid_on_frame(c2, gen_B(1));
    CHECK(b1.status == ValidityResult::Status::Falsified);

    // saw(2) refutes the sixth axiom with a witness at u
    const ValidityResult r = valid_on_frame(saw(2), gen_saw_axioms()[5]);
    CHECK(r.status == ValidityResult::Status::Falsified);
    CHECK(r.world == 0);
}

TEST_CASE("valid_on_frame refuses over budget") {
    // 13 worlds x 2 variables = 26 bits > default 24
    const Frame big = cluster(13);
    const ValidityResult r = valid_on_frame(big, and_(var(0), var(1)));
    CHECK(r.refused());
    CHECK(r.needed_bits == 26);
    CHECK_FALSE(valid_on_frame(big, and_(var(0), var(1)), 26).refused());
    CHECK_THROWS_AS(valid_on_frame(big, var(0), 64), Error);
}

TEST_CASE("sweep agrees with naive enumeration, witness included") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Frame f = oracles::random_frame(rng, n, {"1", "2"}, 0.4);
        const Formula phi = random_formula(rng, {"1", "2"}, 4);
        const ValidityResult sweep = valid_on_frame(f, phi, 30);
        const oracles::NaiveValidity naive = oracles::valid_naive(f, phi);
        REQUIRE(sweep.valid() == naive.valid);
        if (!naive.valid) {
            CHECK(sweep.world == naive.world);
            for (int p : vars_of(phi)) {
                const WorldSet* a = sweep.countervaluation.find(p);
                const WorldSet* b = naive.counter.find(p);
                REQUIRE(a != nullptr);
                REQUIRE(b != nullptr);
                CHECK(*a == *b);
            }
            // and the witness genuinely falsifies
            CHECK_FALSE(eval(f, sweep.countervaluation, phi).contains(sweep.world));
        }
    }
}

TEST_CASE("scalar and avx2 sweeps are bit-identical") {
    if (detail::sweep_validity_w4() == nullptr || !kern::avx2_available()) {
        MESSAGE("avx2 sweep unavailable");
        return;
    }
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Frame f = oracles::random_frame(rng, n, {"1", "2"}, 0.4);
        const Formula phi = random_formula(rng, {"1", "2"}, 5);
        const detail::SweepPlan plan = detail::build_sweep_plan(f, phi);
        const ValidityResult a = detail::sweep_validity_w1(plan);
        const ValidityResult b = detail::sweep_validity_w4()(plan);
        REQUIRE(a.status == b.status);
        if (a.status == ValidityResult::Status::Falsified) {
            CHECK(a.world == b.world);
            for (int p : vars_of(phi)) {
                const WorldSet* x = a.countervaluation.find(p);
                const WorldSet* y = b.countervaluation.find(p);
                REQUIRE(x != nullptr);
                REQUIRE(y != nullptr);
                CHECK(*x == *y);
            }
        }
    }
}

TEST_CASE("gen_B shape") {
    CHECK(equal(gen_B(0), bottom()));
    CHECK(equal(gen_B(1), parse_formula("p1 -> [1](<1>p1 | false)")));
    CHECK(vars_of(gen_B(3)) == std::vector<int>{1, 2, 3});
}

TEST_CASE("gen_rp_uni shape") {
    CHECK(equal(gen_rp_uni(0), parse_formula("p0 & <1>p1 -> p0 & p1")));
    for (int m = 0; m <= 3; ++m) {
        std::vector<int> expected;
        for (int i = 0; i <= m + 1; ++i) expected.push_back(i);
        CHECK(vars_of(gen_rp_uni(m)) == expected);
    }
}

TEST_CASE("preorders validate gen_rp_uni(1)") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Frame f = oracles::random_preorder_frame(rng, n, "1");
        CHECK(valid_on_frame(f, gen_rp_uni(1), 30).valid());
        CHECK(check_RP(union_relation(f), 1).holds);
    }
}

TEST_CASE("translate_pretrans") {
    CHECK(equal(translate_pretrans(var(0), 2, {"a"}), var(0)));
    CHECK(equal(translate_pretrans(dia("1", bottom()), 1, {"a", "b"}),
                or_(bottom(), or_(dia("a", bottom()), dia("b", bottom())))));
}

TEST_CASE("pretransitive translation contract: F |= [phi] iff F* |= phi") {
    std::mt19937_64 rng(127);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Frame f = oracles::random_frame(rng, n, {"a", "b"}, 0.35);
        const int m = pretransitivity_index(f);
        for (const Formula& phi : {gen_B(2), gen_rp_uni(1)}) {
            const Formula translated = translate_pretrans(phi, m, {"a", "b"});
            const ValidityResult lhs = valid_on_frame(f, translated, 30);
            const ValidityResult rhs = valid_on_frame(star_frame(f), phi, 30);
            REQUIRE_FALSE(lhs.refused());
            REQUIRE_FALSE(rhs.refused());
            CHECK(lhs.valid() == rhs.valid());
            ++checked;
        }
    }
    CHECK(checked >= 25);
}

TEST_CASE("pretransitive translation holds at any valid transitivity bound") {
    // an m-transitive frame is also (m+1)-transitive; the contract must not
    // depend on m being minimal
    std::mt19937_64 rng(129);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Frame f = oracles::random_frame(rng, n, {"1"}, 0.4);
        const int m = pretransitivity_index(f) + 1;
        const ValidityResult lhs = valid_on_frame(f, translate_pretrans(gen_B(2), m, {"1"}), 30);
        const ValidityResult rhs = valid_on_frame(star_frame(f), gen_B(2), 30);
        CHECK(lhs.valid() == rhs.valid());
    }
}

TEST_CASE("parser survives fuzzing with typed errors only") {
    std::mt19937_64 rng(997);
    const std::string chars = "p0123<>[]()&|~-> aZ_";
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text;
        const int len = static_cast<int>(rng() % 24);
        for (int i = 0; i < len; ++i) text += chars[rng() % chars.size()];
        try {
            const Formula f = parse_formula(text);
            CHECK(equal(parse_formula(print_formula(f)), f));
        } catch (const ParseError&) {
            // fine: malformed input
        }
    }
}

TEST_CASE("height via translated finite-height formulas") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Frame f = oracles::random_frame(rng, n, {"1"}, 0.35);
        const int m = pretransitivity_index(f);
        for (int h = 1; h <= 3; ++h) {
            const ValidityResult r = valid_on_frame(f, translate_pretrans(gen_B(h), m, {"1"}), 30);
            REQUIRE_FALSE(r.refused());
            CHECK(r.valid() == (height(f) <= h));
        }
    }
}

TEST_CASE("translate_product") {
    CHECK(equal(translate_product(var(1), 1, 1, {"a"}, {"b"}), var(1)));
    CHECK(equal(translate_product(dia("1", var(0)), 1, 1, {"a"}, {"b"}),
                or_(var(0), dia("a", var(0)))));

    // contract on chain(2) × cluster(2) with the commutation formula
    const Frame f = chain(2, true, "a");
    const Frame g = cluster(2, "b");
    const Frame prod = product(f, g);
    const int m = pretransitivity_index(f);
    const int n = pretransitivity_index(g);
    const Formula phi = parse_formula("<1><2>p0 -> <2><1>p0");
    const Formula translated = translate_product(phi, m, n, {"a"}, {"b"});
    const Frame star_prod = product(star_frame(f), Frame(2, Alphabet({"2"}), {star(g).edges()}));
    CHECK(valid_on_frame(prod, translated, 30).valid() ==
          valid_on_frame(star_prod, phi, 30).valid());
}

TEST_CASE("decolor") {
    CHECK(equal(decolor(var(0)), var(0)));
    // t(□p) agrees with □1p ∧ □2p on frames
    std::mt19937_64 rng(137);
    const Formula lhs = decolor(box("1", var(0)));
    const Formula rhs = and_(box("1", var(0)), box("2", var(0)));
    for (int trial = 0; trial < 20; ++trial) {
        const Frame f = oracles::random_frame(rng, 1 + static_cast<int>(rng() % 4), {"1", "2"}, 0.4);
        CHECK(valid_on_frame(f, iff(lhs, rhs)).valid());
    }
}

TEST_CASE("decolored rp scheme is the product rp scheme at (1,1)") {
    for (int m = 0; m <= 3; ++m)
        CHECK(equal(decolor(gen_rp_uni(m)), gen_rp_prod(m, 1, 1, {"1"}, {"2"})));
}

TEST_CASE("scheme/semantics agreement on random frames") {
    std::mt19937_64 rng(139);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Frame uni = oracles::random_frame(rng, n, {"1"}, 0.4);
        for (int m = 0; m <= 2; ++m) {
            CHECK(valid_on_frame(uni, gen_rp_uni(m), 30).valid() ==
                  check_RP(union_relation(uni), m).holds);
            CHECK(valid_on_frame(uni, gen_pretrans_axiom(m, {"1"}), 30).valid() ==
                  (pretransitivity_index(uni) <= m));
        }
        const Frame bi = oracles::random_frame(rng, n, {"1", "2"}, 0.4);
        for (int m = 0; m <= 2; ++m)
            CHECK(valid_on_frame(bi, gen_rp_prod(m, 1, 1, {"1"}, {"2"}), 30).valid() ==
                  check_rp_semantic_poly(bi, m, 1, 1, {"1"}, {"2"}).holds);
    }
}

TEST_CASE("saw formulas") {
    const std::vector<Formula> axioms = gen_saw_axioms();
    REQUIRE(axioms.size() == 6);
    CHECK(equal(axioms[3], parse_formula("<l>p0 -> [l]p0")));
    // phi_1 is the d-diamond on top
    CHECK(equal(gen_saw_phi("s"),
                and_(and_(dia("d", top()),
                          box("d", dia("s", and_(dia("l", not_(var(0))), dia("r", var(0)))))),
                     box("d", box("s", implies(dia("l", var(0)), dia("r", var(0))))))));
    const Frame s3 = saw(3);
    for (int i = 0; i < 5; ++i) CHECK(valid_on_frame(s3, axioms[static_cast<std::size_t>(i)]).valid());
    CHECK_FALSE(valid_on_frame(s3, axioms[5]).valid());
}

TEST_CASE("tack and commutator formulas") {
    CHECK(equal(gen_com("1", "2"), parse_formula("<1><2>p0 -> <2><1>p0")));
    CHECK(equal(gen_chr("1", "2"), parse_formula("<1>[2]p0 -> [2]<1>p0")));

    const Frame t22 = tack2(2, 2);
    for (const Formula& axiom : gen_tack2_axioms()) CHECK(valid_on_frame(t22, axiom).valid());

    const Frame r22 = rectangle(2, 2);
    CHECK(valid_on_frame(r22, gen_com("1", "2")).valid());
    CHECK(valid_on_frame(r22, gen_com("2", "1")).valid());
    CHECK(valid_on_frame(r22, gen_chr("1", "2")).valid());
}
