#include "kripkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>

#include "kripkit/checkers.hpp"
#include "kripkit/constructions.hpp"
#include "kripkit/expr.hpp"
#include "kripkit/frame_io.hpp"
#include "kripkit/frame_ops.hpp"
#include "kripkit/morphisms.hpp"
#include "kripkit/parser.hpp"
#include "kripkit/tuning.hpp"

namespace kripkit {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string world_set_names(const FrameDocument& doc, const WorldSet& s) {
    std::string out = "{";
    bool first = true;
    for (int w : s.to_vector()) {
        if (!first) out += ", ";
        out += doc.world_name(w);
        first = false;
    }
    return out + "}";
}

// --val "p0=3,5" or named worlds; commas inside (..) belong to the name.
void parse_valuation_flag(const FrameDocument& doc, const std::string& flag,
                          std::map<int, std::vector<int>>& into) {
    const std::size_t eq = flag.find('=');
    if (eq == std::string::npos || eq < 2 || flag[0] != 'p' ||
        flag.find_first_not_of("0123456789", 1) < eq)
        throw Error("valuation flag looks like p0=w1,w2: got '" + flag + "'");
    const int var = std::stoi(flag.substr(1, eq - 1));
    std::vector<int>& worlds = into[var];
    worlds.clear();
    std::string token;
    int depth = 0;
    auto flush = [&] {
        if (!token.empty()) worlds.push_back(doc.resolve_world(token));
        token.clear();
    };
    for (std::size_t i = eq + 1; i < flag.size(); ++i) {
        const char c = flag[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) token += c;
    }
    flush();
    std::sort(worlds.begin(), worlds.end());
    worlds.erase(std::unique(worlds.begin(), worlds.end()), worlds.end());
}

Valuation to_valuation(const FrameDocument& doc, const std::map<int, std::vector<int>>& lists) {
    Valuation v;
    for (const auto& [var, worlds] : lists)
        v.set(var, WorldSet::from_vector(doc.frame.worlds(), worlds));
    return v;
}

// "{0,1}{2}" with unlisted worlds becoming singletons.
Partition parse_partition(const FrameDocument& doc, const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size() && text[pos] == '{') {
        ++pos;
        std::vector<int> block;
        std::string token;
        int depth = 0;
        for (; pos < text.size(); ++pos) {
            const char c = text[pos];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == ',' || c == '}')) {
                if (!token.empty()) block.push_back(doc.resolve_world(token));
                token.clear();
                if (c == '}') {
                    ++pos;
                    break;
                }
                continue;
            }
            if (!std::isspace(static_cast<unsigned char>(c))) token += c;
        }
        if (block.empty()) throw Error("empty partition block");
        blocks.push_back(std::move(block));
        skip_ws();
    }
    if (pos != text.size() || blocks.empty())
        throw Error("partition looks like {0,1}{2}: got '" + text + "'");
    std::vector<int> ids(static_cast<std::size_t>(doc.frame.worlds()), -1);
    int next = 0;
    for (const auto& block : blocks) {
        for (int w : block) {
            if (ids[static_cast<std::size_t>(w)] != -1)
                throw Error("world " + doc.world_name(w) + " listed twice");
            ids[static_cast<std::size_t>(w)] = next;
        }
        ++next;
    }
    for (auto& id : ids)
        if (id == -1) id = next++;
    return Partition::from_block_ids(ids);
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw Error("cannot write: " + path);
    file << text;
}


int cmd_check(const FrameDocument& doc, const std::string& condition, int m, int k, int n,
              std::string label_a, std::string label_b, std::string label,
              std::ostream& out) {
    const Frame& f = doc.frame;
    if (label_a.empty() && f.modalities() >= 1) label_a = f.alphabet().label(0);
    if (label_b.empty() && f.modalities() >= 2) label_b = f.alphabet().label(1);
    if (label.empty()) label = f.alphabet().label(0);

    if (condition == "pretrans-index") {
        out << pretransitivity_index(f) << "\n";
        return kExitOk;
    }
    if (condition == "height") {
        out << height(f) << "\n";
        return kExitOk;
    }
    if (condition == "clusters") {
        const Partition cl = clusters(f);
        for (const auto& block : cl.blocks())
            out << world_set_names(doc, WorldSet::from_vector(f.worlds(), block)) << "\n";
        return kExitOk;
    }
    if (condition == "max-cluster") {
        out << max_cluster_size(f) << "\n";
        return kExitOk;
    }
    if (condition == "terminal") {
        out << world_set_names(doc, terminal_points(f, label)) << "\n";
        return kExitOk;
    }

    CheckResult result;
    if (condition == "rp") {
        result = check_RP(union_relation(f), m);
    } else if (condition == "rp-prod") {
        std::vector<std::string> a_labels = {label_a};
        std::vector<std::string> b_labels;
        for (int i = 0; i < f.modalities(); ++i)
            if (f.alphabet().label(i) != label_a) b_labels.push_back(f.alphabet().label(i));
        if (b_labels.empty()) throw Error("rp-prod needs at least two modalities");
        result = check_rp_semantic_poly(f, m, k, n, a_labels, b_labels);
    } else if (condition == "commute") {
        result = check_commutativity(f, label_a, label_b);
    } else if (condition == "church-rosser") {
        result = check_church_rosser(f, label_a, label_b);
    } else if (condition == "mckinsey") {
        result = check_mckinsey(f, label);
    } else if (condition == "opposite-arrows") {
        result = check_opposite_arrows(f);
    } else {
        throw CLI::ValidationError("unknown condition '" + condition + "'");
    }
    out << result.name << "\t" << (result.holds ? "PASS" : "FAIL");
    if (!result.witness.empty()) out << "\t" << result.witness;
    out << "\n";
    return result.holds ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"kripkit: finite Kripke-frame workbench"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Build a frame from a construction expression");
    build->footer(
        "Expressions:\n"
        "  cluster(n[,label])   chain(n[,label])   strictchain(n[,label])\n"
        "  antichain(n[,label]) rect(k,m)  saw(k)  tack1(k)  tack2(k,m)\n"
        "  product(E,F)  union(E,F)  semisum(E,F)  sum(I,F0,..,Fk)\n"
        "  quotient(E,{a,b}{c})  tilde(E)  alpha(E[,label])\n"
        "Any expression may end in #bimodal (adds a diagonal second relation).\n"
        "product() relabels a colliding second factor to fresh numeric labels.");
    std::string build_expr, build_out, build_name;
    build->add_option("expr", build_expr, "e.g. product(chain(2), cluster(2))")->required();
    build->add_option("-o,--output", build_out, "output file (default: stdout)");
    build->add_option("--name", build_name, "document name (default: the expression)");

    // check
    auto* check = app.add_subcommand("check", "Evaluate a frame condition");
    std::string check_frame, check_cond, check_a, check_b, check_label;
    int check_m = 0, check_k = 1, check_n = 1;
    check->add_option("frame", check_frame, "frame file")->required();
    check
        ->add_option("condition", check_cond,
                     "pretrans-index|height|clusters|max-cluster|rp|rp-prod|commute|"
                     "church-rosser|mckinsey|terminal|opposite-arrows")
        ->required();
    check->add_option("--m", check_m, "path length parameter for rp/rp-prod");
    check->add_option("--k", check_k, "first step bound for rp-prod");
    check->add_option("--n", check_n, "second step bound for rp-prod");
    check->add_option("--a", check_a, "first modality label");
    check->add_option("--b", check_b, "second modality label");
    check->add_option("--label", check_label, "modality label for mckinsey/terminal");

    // mc
    auto* mc = app.add_subcommand("mc", "Model check: print the truth set of a formula");
    std::string mc_frame, mc_formula;
    std::vector<std::string> mc_vals;
    mc->add_option("frame", mc_frame)->required();
    mc->add_option("formula", mc_formula)->required();
    mc->add_option("--val", mc_vals, "valuation, e.g. p0=0,2 or p0=(top,1)");

    // valid
    auto* valid = app.add_subcommand("valid", "Check frame validity of a formula");
    std::string valid_frame, valid_formula;
    int valid_budget = kDefaultValidityBudget;
    valid->add_option("frame", valid_frame)->required();
    valid->add_option("formula", valid_formula)->required();
    valid->add_option("--budget", valid_budget, "max worlds x variables bits");

    // tune
    auto* tune = app.add_subcommand("tune", "Coarsest tuned refinement of a partition");
    std::string tune_frame, tune_partition;
    tune->add_option("frame", tune_frame)->required();
    tune->add_option("--partition", tune_partition, "blocks, e.g. {0,1}{2}; rest stay singletons")
        ->required();

    // pmorph
    auto* pmorph = app.add_subcommand("pmorph", "Search for a surjective p-morphism");
    std::string pmorph_src, pmorph_dst;
    std::uint64_t pmorph_budget = kDefaultMorphismBudget;
    pmorph->add_option("source", pmorph_src)->required();
    pmorph->add_option("target", pmorph_dst)->required();
    pmorph->add_option("--budget", pmorph_budget, "search node budget");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the lemma verification suite");
    std::string verify_scale = "default", verify_json;
    verify->add_option("--scale", verify_scale)->check(CLI::IsMember({"small", "default"}));
    verify->add_option("--json", verify_json, "also write a JSON report to this file");

    // dot
    auto* dot = app.add_subcommand("dot", "Emit a DOT digraph");
    std::string dot_frame, dot_out;
    dot->add_option("frame", dot_frame)->required();
    dot->add_option("-o,--output", dot_out, "output file (default: stdout)");

    std::vector<const char*> argv = {"kripkit"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);  // prints help or the usage error
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) {
            FrameDocument doc = build_expression(build_expr);
            if (!build_name.empty()) doc.name = build_name;
            write_output(save_frame_document(doc), build_out, out);
            return kExitOk;
        }
        if (check->parsed()) {
            const FrameDocument doc = load_frame_file(check_frame);
            return cmd_check(doc, check_cond, check_m, check_k, check_n, check_a, check_b,
                             check_label, out);
        }
        if (mc->parsed()) {
            const FrameDocument doc = load_frame_file(mc_frame);
            const Alphabet& alphabet = doc.frame.alphabet();
            const Formula phi = parse_formula(mc_formula, &alphabet);
            std::map<int, std::vector<int>> lists = doc.valuations;
            for (const std::string& flag : mc_vals) parse_valuation_flag(doc, flag, lists);
            const WorldSet truth = eval(doc.frame, to_valuation(doc, lists), phi);
            out << world_set_names(doc, truth) << "\n";
            return kExitOk;
        }
        if (valid->parsed()) {
            const FrameDocument doc = load_frame_file(valid_frame);
            const Alphabet& alphabet = doc.frame.alphabet();
            const Formula phi = parse_formula(valid_formula, &alphabet);
            const ValidityResult r = valid_on_frame(doc.frame, phi, valid_budget);
            if (r.refused()) {
                err << "refused: needs " << r.needed_bits << " bits, budget " << valid_budget
                    << "\n";
                return kExitBudget;
            }
            if (r.valid()) {
                out << "VALID\n";
                return kExitOk;
            }
            out << "INVALID at " << doc.world_name(r.world) << " under "
                << format_valuation(r.countervaluation, vars_of(phi)) << "\n";
            return kExitFail;
        }
        if (tune->parsed()) {
            const FrameDocument doc = load_frame_file(tune_frame);
            const Partition input = parse_partition(doc, tune_partition);
            const RefinementResult r = coarsest_tuned_refinement(doc.frame, input);
            for (const auto& block : r.partition.blocks())
                out << world_set_names(doc, WorldSet::from_vector(doc.frame.worlds(), block))
                    << "\n";
            out << "blocks: " << r.report.input_size << " -> " << r.report.output_size
                << ", splits: " << r.report.splits << ", rounds: " << r.report.rounds << "\n";
            return kExitOk;
        }
        if (pmorph->parsed()) {
            const FrameDocument src = load_frame_file(pmorph_src);
            const FrameDocument dst = load_frame_file(pmorph_dst);
            const MorphismSearchResult r = find_p_morphism(src.frame, dst.frame, pmorph_budget);
            if (r.exhausted_budget()) {
                err << "BUDGET EXHAUSTED after " << pmorph_budget << " nodes\n";
                return kExitBudget;
            }
            if (!r.found()) {
                out << "NONE\n";
                return kExitFail;
            }
            out << "MAP";
            for (int a = 0; a < r.map->source_worlds; ++a)
                out << " " << src.world_name(a) << "->" << dst.world_name((*r.map)(a));
            out << "\nverified: p-morphism, surjective\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            const SuiteReport report = verify_paper_suite(
                verify_scale == "small" ? SuiteScale::Small : SuiteScale::Default);
            out << report.to_text();
            if (!verify_json.empty()) write_output(report.to_json(), verify_json, out);
            return report.all_pass() ? kExitOk : kExitFail;
        }
        if (dot->parsed()) {
            const FrameDocument doc = load_frame_file(dot_frame);
            write_output(to_dot(doc), dot_out, out);
            return kExitOk;
        }
    } catch (const BudgetError& e) {
        err << "refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace kripkit
