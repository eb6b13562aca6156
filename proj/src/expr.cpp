#include "kripkit/expr.hpp"

#include <cctype>
#include <set>

#include "kripkit/checkers.hpp"
#include "kripkit/constructions.hpp"
#include "kripkit/frame_ops.hpp"

namespace kripkit {

namespace {

struct Named {
    Frame frame;
    std::vector<std::string> names;
};

struct ExprError : Error {
    ExprError(std::size_t pos, const std::string& msg)
        : Error("expression error at " + std::to_string(pos) + ": " + msg) {}
};

std::vector<std::string> index_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
}

Named lift_bimodal(Named in) {
    if (in.frame.modalities() != 1)
        throw Error("#bimodal lifts unimodal frames only");
    EdgeList diagonal;
    for (int w = 0; w < in.frame.worlds(); ++w) diagonal.emplace_back(w, w);
    Frame lifted(in.frame.worlds(), Alphabet({"1", "2"}), {in.frame.edges(0), diagonal});
    return Named{std::move(lifted), std::move(in.names)};
}

// Relabels g's labels away from f's: colliding labels become the smallest
// unused positive integers.
Frame relabel_disjoint(const Frame& f, const Frame& g) {
    std::set<std::string> used(f.alphabet().labels().begin(), f.alphabet().labels().end());
    std::vector<std::string> labels;
    int next = 1;
    for (const std::string& l : g.alphabet().labels()) {
        if (!used.contains(l)) {
            labels.push_back(l);
            used.insert(l);
            continue;
        }
        while (used.contains(std::to_string(next))) ++next;
        labels.push_back(std::to_string(next));
        used.insert(labels.back());
    }
    std::vector<EdgeList> edges;
    for (int m = 0; m < g.modalities(); ++m) edges.push_back(g.edges(m));
    return Frame(g.worlds(), Alphabet(labels), std::move(edges));
}

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    Named run() {
        Named out = expression();
        skip_ws();
        if (pos_ != text_.size()) throw ExprError(pos_, "unexpected trailing input");
        return out;
    }

private:
    Named expression() {
        skip_ws();
        const std::string name = identifier();
        expect('(');
        Named out = dispatch(name);
        skip_ws();
        if (match('#')) {
            const std::string suffix = identifier();
            if (suffix != "bimodal") throw ExprError(pos_, "unknown suffix #" + suffix);
            out = lift_bimodal(std::move(out));
        }
        return out;
    }

    Named dispatch(const std::string& name) {
        if (name == "cluster" || name == "chain" || name == "strictchain" || name == "antichain") {
            const int n = integer();
            std::string label = "1";
            if (match(',')) label = identifier();
            expect(')');
            Frame f = name == "cluster"       ? cluster(n, label)
                      : name == "chain"       ? chain(n, true, label)
                      : name == "strictchain" ? chain(n, false, label)
                                              : antichain(n, label);
            return Named{std::move(f), index_names(n)};
        }
        if (name == "rect") {
            const int k = integer();
            expect(',');
            const int m = integer();
            expect(')');
            return product_named(Named{cluster(k, "1"), index_names(k)},
                                 Named{cluster(m, "2"), index_names(m)});
        }
        if (name == "saw") {
            const int k = integer();
            expect(')');
            std::vector<std::string> names = {"u"};
            for (int i = 0; i < k; ++i) names.push_back("v" + std::to_string(i));
            for (int j = 0; j <= k; ++j) names.push_back("w" + std::to_string(j));
            return Named{saw(k), std::move(names)};
        }
        if (name == "tack1") {
            const int k = integer();
            expect(')');
            std::vector<std::string> names = index_names(k);
            names.push_back("top");
            return Named{tack1(k), std::move(names)};
        }
        if (name == "tack2") {
            const int k = integer();
            expect(',');
            const int m = integer();
            expect(')');
            std::vector<std::string> names;
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < m; ++b)
                    names.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
            names.push_back("top");
            return Named{tack2(k, m), std::move(names)};
        }
        if (name == "product") {
            Named lhs = expression();
            expect(',');
            Named rhs = expression();
            expect(')');
            return product_named(std::move(lhs), std::move(rhs));
        }
        if (name == "union" || name == "semisum") {
            Named lhs = expression();
            expect(',');
            Named rhs = expression();
            expect(')');
            Frame combined = name == "union" ? disjoint_union(lhs.frame, rhs.frame)
                                             : semi_ordered_sum(lhs.frame, rhs.frame);
            return Named{std::move(combined), sum_names({lhs.names, rhs.names})};
        }
        if (name == "sum") {
            Named index = expression();
            FrameFamily family{index.frame, {}};
            std::vector<std::vector<std::string>> names;
            while (match(',')) {
                Named summand = expression();
                family.summands.push_back(std::move(summand.frame));
                names.push_back(std::move(summand.names));
            }
            expect(')');
            return Named{sum_over(family), sum_names(names)};
        }
        if (name == "quotient") {
            Named base = expression();
            expect(',');
            const std::vector<std::vector<int>> blocks = partition_literal(base.frame.worlds());
            expect(')');
            std::vector<int> ids(static_cast<std::size_t>(base.frame.worlds()), -1);
            int next = 0;
            for (const auto& block : blocks) {
                for (int w : block) {
                    if (w < 0 || w >= base.frame.worlds())
                        throw ExprError(pos_, "world " + std::to_string(w) + " out of range");
                    if (ids[static_cast<std::size_t>(w)] != -1)
                        throw ExprError(pos_, "world " + std::to_string(w) + " listed twice");
                    ids[static_cast<std::size_t>(w)] = next;
                }
                ++next;
            }
            for (auto& id : ids)
                if (id == -1) id = next++;
            const QuotientResult q = quotient(base.frame, Equivalence(ids));
            return Named{q.frame, quotient_names(base.names, q.map)};
        }
        if (name == "tilde") {
            Named base = expression();
            expect(')');
            const QuotientResult q = productivize(base.frame);
            return Named{q.frame, quotient_names(base.names, q.map)};
        }
        if (name == "alpha") {
            Named base = expression();
            std::string label;
            if (match(',')) label = identifier();
            expect(')');
            const WorldSet removed = alpha_strip_removed(base.frame, label);
            const WorldSet kept = removed.complement();
            std::vector<std::string> names;
            for (int w : kept.to_vector())
                names.push_back(base.names[static_cast<std::size_t>(w)]);
            return Named{restrict(base.frame, kept), std::move(names)};
        }
        throw ExprError(pos_, "unknown construction '" + name + "'");
    }

    Named product_named(Named lhs, Named rhs) {
        const Frame right = relabel_disjoint(lhs.frame, rhs.frame);
        Frame prod = product(lhs.frame, right);
        std::vector<std::string> names;
        for (const std::string& a : lhs.names)
            for (const std::string& b : rhs.names) names.push_back("(" + a + "," + b + ")");
        return Named{std::move(prod), std::move(names)};
    }

    static std::vector<std::string> sum_names(const std::vector<std::vector<std::string>>& parts) {
        // Qualify with the summand index only when names would collide.
        std::set<std::string> seen;
        bool collision = false;
        for (const auto& part : parts)
            for (const auto& n : part)
                if (!seen.insert(n).second) collision = true;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (const auto& n : parts[i])
                names.push_back(collision ? std::to_string(i) + ":" + n : n);
        return names;
    }

    static std::vector<std::string> quotient_names(const std::vector<std::string>& base,
                                                   const WorldMap& map) {
        std::vector<std::vector<std::string>> classes(
            static_cast<std::size_t>(map.target_worlds));
        for (int w = 0; w < map.source_worlds; ++w)
            classes[static_cast<std::size_t>(map(w))].push_back(
                base[static_cast<std::size_t>(w)]);
        std::vector<std::string> names;
        for (const auto& members : classes) {
            if (members.size() == 1) {
                names.push_back(members.front());
                continue;
            }
            std::string joined = "{";
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (i != 0) joined += ",";
                joined += members[i];
            }
            names.push_back(joined + "}");
        }
        return names;
    }

    std::vector<std::vector<int>> partition_literal(int n) {
        (void)n;
        std::vector<std::vector<int>> blocks;
        skip_ws();
        while (match('{')) {
            std::vector<int> block;
            skip_ws();
            if (!match('}')) {
                block.push_back(integer());
                while (match(',')) block.push_back(integer());
                expect('}');
            }
            if (block.empty()) throw ExprError(pos_, "empty partition block");
            blocks.push_back(std::move(block));
            skip_ws();
        }
        if (blocks.empty()) throw ExprError(pos_, "expected a partition literal like {0,1}{2}");
        return blocks;
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) throw ExprError(pos_, "expected a name");
        return text_.substr(start, pos_ - start);
    }

    int integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ExprError(pos_, "expected a number");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    bool match(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!match(c)) throw ExprError(pos_, std::string("expected '") + c + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

FrameDocument build_expression(const std::string& text) {
    Named built = ExprParser(text).run();
    FrameDocument doc(text, std::move(built.frame));
    doc.world_names = std::move(built.names);
    return doc;
}

}  // namespace kripkit
