#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>
#include <fstream>
#include <sstream>

#include "kripkit/cli.hpp"
#include "kripkit/constructions.hpp"
#include "kripkit/expr.hpp"
#include "kripkit/frame_io.hpp"
#include "kripkit/morphisms.hpp"

using namespace kripkit;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("frame document round trip") {
    FrameDocument doc("example", tack2(2, 2));
    doc.valuations[0] = {1, 4};
    const std::string text = save_frame_document(doc);
    const FrameDocument loaded = load_frame_document(text);
    CHECK(loaded.frame == doc.frame);
    CHECK(loaded.name == "example");
    CHECK(loaded.valuations == doc.valuations);
    // byte-stable resave
    CHECK(save_frame_document(loaded) == text);
}

TEST_CASE("named worlds resolve in relations and valuations") {
    const std::string text = R"({
      "alphabet": ["1"],
      "worlds": ["a", "b"],
      "relations": {"1": [["a", "b"], ["b", "b"]]},
      "valuations": {"p0": ["b"]}
    })";
    const FrameDocument doc = load_frame_document(text);
    CHECK(doc.frame.edges(0) == EdgeList{{0, 1}, {1, 1}});
    CHECK(doc.valuations.at(0) == std::vector<int>{1});
    CHECK(doc.resolve_world("a") == 0);
    CHECK_THROWS_AS(doc.resolve_world("zz"), Error);
}

TEST_CASE("load rejects malformed documents") {
    CHECK_THROWS_AS(load_frame_document("not json"), Error);
    CHECK_THROWS_AS(load_frame_document(R"({"alphabet": ["1"], "worlds": 2})"), Error);
    CHECK_THROWS_AS(load_frame_document(
                        R"({"alphabet": ["1"], "worlds": 2, "relations": {"1": [[0, 5]]}})"),
                    Error);
    CHECK_THROWS_AS(load_frame_document(
                        R"({"alphabet": ["1"], "worlds": 1, "relations": {"zz": []}})"),
                    Error);
}

TEST_CASE("loader survives mutated documents with typed errors only") {
    const std::string base = save_frame_document(build_expression("tack2(2,2)"));
    std::mt19937_64 rng(991);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string text = base;
        const int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits; ++e) {
            const std::size_t pos = rng() % text.size();
            switch (rng() % 3) {
                case 0: text[pos] = static_cast<char>('!' + rng() % 90); break;
                case 1: text.erase(pos, 1); break;
                default: text.insert(pos, 1, static_cast<char>('!' + rng() % 90)); break;
            }
        }
        try {
            const FrameDocument doc = load_frame_document(text);
            CHECK(doc.frame.worlds() >= 1);
        } catch (const Error&) {
            // fine: mutation broke the document
        }
    }
}

TEST_CASE("expression grammar") {
    CHECK(is_isomorphic(build_expression("rect(2,3)").frame, rectangle(2, 3)).has_value());
    CHECK(build_expression("rect(2,3)").frame.worlds() == 6);

    // the spec's tack-equivalence example
    const FrameDocument semisum = build_expression("semisum(rect(2,2), cluster(1,1)#bimodal)");
    CHECK(is_isomorphic(semisum.frame, tack2(2, 2)).has_value());

    // product relabels the colliding second factor
    const FrameDocument prod = build_expression("product(chain(2), cluster(2))");
    CHECK(prod.frame.alphabet().labels() == std::vector<std::string>{"1", "2"});

    CHECK(build_expression("union(cluster(2), cluster(3))").frame.worlds() == 5);
    CHECK(is_isomorphic(build_expression("tilde(rect(2,2))").frame, rectangle(2, 2)).has_value());
    CHECK(build_expression("quotient(cluster(4), {0,1}{2,3})").frame.worlds() == 2);
    CHECK(is_isomorphic(
              build_expression("sum(strictchain(2), cluster(3), cluster(1))").frame,
              tack1(3))
              .has_value());
    CHECK(build_expression("saw(2)").world_names ==
          std::vector<std::string>{"u", "v0", "v1", "w0", "w1", "w2"});
    CHECK(is_isomorphic(build_expression("alpha(tack2(2,2))").frame, rectangle(2, 2)).has_value());

    CHECK_THROWS_AS(build_expression("rect(2"), Error);
    CHECK_THROWS_AS(build_expression("nonsense(2)"), Error);
    CHECK_THROWS_AS(build_expression("rect(2,2)#trimodal"), Error);
}

TEST_CASE("cli build/check round trip and determinism") {
    const std::string path = temp_path("kripkit_rect22.frame");
    const CliRun build1 = run({"build", "rect(2,2)", "-o", path});
    REQUIRE(build1.exit_code == 0);
    const CliRun build2 = run({"build", "rect(2,2)"});
    const CliRun build3 = run({"build", "rect(2,2)"});
    CHECK(build2.out == build3.out);

    CHECK(run({"check", path, "height"}).out == "1\n");
    CHECK(run({"check", path, "pretrans-index"}).out == "2\n");
    CHECK(run({"check", path, "max-cluster"}).out == "4\n");

    const CliRun rp = run({"check", path, "rp", "--m", "2"});
    CHECK(rp.exit_code == 0);
    const CliRun rp1 = run({"check", path, "rp", "--m", "1"});
    CHECK(rp1.exit_code == 1);
    CHECK(rp1.out.find("FAIL") != std::string::npos);
    CHECK(rp1.out.find("irreducible path") != std::string::npos);

    CHECK(run({"check", path, "rp-prod", "--m", "2", "--k", "1", "--n", "1"}).exit_code == 0);
    CHECK(run({"check", path, "rp-prod", "--m", "1", "--k", "1", "--n", "1"}).exit_code == 1);
    CHECK(run({"check", path, "commute", "--a", "1", "--b", "2"}).exit_code == 0);
    CHECK(run({"check", path, "church-rosser"}).exit_code == 0);
    CHECK(run({"check", path, "opposite-arrows"}).exit_code == 0);
}

TEST_CASE("cli mc and valid") {
    const std::string path = temp_path("kripkit_tackprod.frame");
    REQUIRE(run({"build", "product(tack1(3), cluster(2,2))", "-o", path}).exit_code == 0);
    const CliRun mc =
        run({"mc", path, "<2><1>[1]p0 -> [1]<1>p0", "--val", "p0=(top,1)"});
    REQUIRE(mc.exit_code == 0);
    CHECK(mc.out.find("(0,0)") == std::string::npos);
    CHECK(mc.out.find("(top,1)") != std::string::npos);

    const std::string c2 = temp_path("kripkit_c2.frame");
    REQUIRE(run({"build", "cluster(2)", "-o", c2}).exit_code == 0);
    CHECK(run({"valid", c2, "p0 -> <1>p0"}).out == "VALID\n");

    const std::string s2 = temp_path("kripkit_saw2.frame");
    REQUIRE(run({"build", "saw(2)", "-o", s2}).exit_code == 0);
    const CliRun saw_valid = run({"valid", s2, "<d><l>p0 -> <d><r>p0"});
    CHECK(saw_valid.exit_code == 1);
    CHECK(saw_valid.out.find("INVALID at u") != std::string::npos);

    // budget refusal is exit 3
    const std::string big = temp_path("kripkit_c13.frame");
    REQUIRE(run({"build", "cluster(13)", "-o", big}).exit_code == 0);
    CHECK(run({"valid", big, "p0 & p1"}).exit_code == 3);
}

TEST_CASE("cli tune, pmorph, dot, verify") {
    const std::string chain3 = temp_path("kripkit_chain3.frame");
    REQUIRE(run({"build", "strictchain(3)", "-o", chain3}).exit_code == 0);
    const CliRun tuned = run({"tune", chain3, "--partition", "{0,1,2}"});
    CHECK(tuned.exit_code == 0);
    CHECK(tuned.out.find("{0}\n{1}\n{2}\n") != std::string::npos);

    const std::string r44 = temp_path("kripkit_r44.frame");
    const std::string r22 = temp_path("kripkit_r22.frame");
    REQUIRE(run({"build", "rect(4,4)", "-o", r44}).exit_code == 0);
    REQUIRE(run({"build", "rect(2,2)", "-o", r22}).exit_code == 0);
    const CliRun pm = run({"pmorph", r44, r22});
    CHECK(pm.exit_code == 0);
    CHECK(pm.out.find("MAP") == 0);
    CHECK(pm.out.find("verified") != std::string::npos);

    const std::string chain2 = temp_path("kripkit_chain2.frame");
    const std::string clus2 = temp_path("kripkit_clus2.frame");
    REQUIRE(run({"build", "chain(2)", "-o", chain2}).exit_code == 0);
    REQUIRE(run({"build", "cluster(2)", "-o", clus2}).exit_code == 0);
    const CliRun no_pm = run({"pmorph", chain2, clus2});
    CHECK(no_pm.exit_code == 1);
    CHECK(no_pm.out == "NONE\n");

    const CliRun dot = run({"dot", r22});
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("digraph") == 0);
    CHECK(dot.out.find("style=dashed") != std::string::npos);

    // usage errors are exit 2
    CHECK(run({"check", r22, "no-such-condition"}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"mc", temp_path("missing.frame"), "p0"}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("verify output is byte-stable") {
    const CliRun a = run({"verify", "--scale", "small"});
    const CliRun b = run({"verify", "--scale", "small"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("prop.height-additivity\tPASS") == 0);
}

TEST_CASE("golden frame document") {
    const FrameDocument doc = build_expression("saw(1)");
    const std::string expected = R"json({
  "alphabet": [
    "d",
    "l",
    "r"
  ],
  "name": "saw(1)",
  "relations": {
    "d": [
      [
        "u",
        "v0"
      ]
    ],
    "l": [
      [
        "v0",
        "w0"
      ]
    ],
    "r": [
      [
        "v0",
        "w1"
      ]
    ]
  },
  "worlds": [
    "u",
    "v0",
    "w0",
    "w1"
  ]
}
)json";
    CHECK(save_frame_document(doc) == expected);
}
