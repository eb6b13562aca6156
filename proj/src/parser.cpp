#include "kripkit/parser.hpp"

#include <cctype>

namespace kripkit {

namespace {

class Parser {
public:
    Parser(const std::string& text, const Alphabet* alphabet)
        : text_(text), alphabet_(alphabet) {}

    Formula run() {
        Formula f = impl();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    Formula impl() {
        Formula lhs = or_chain();
        skip_ws();
        if (match("->")) return implies(lhs, impl());
        return lhs;
    }

    Formula or_chain() {
        Formula acc = and_chain();
        skip_ws();
        while (peek() == '|') {
            ++pos_;
            acc = or_(acc, and_chain());
            skip_ws();
        }
        return acc;
    }

    Formula and_chain() {
        Formula acc = unary();
        skip_ws();
        while (peek() == '&') {
            ++pos_;
            acc = and_(acc, unary());
            skip_ws();
        }
        return acc;
    }

    Formula unary() {
        skip_ws();
        const char c = peek();
        if (c == '~') {
            ++pos_;
            return not_(unary());
        }
        if (c == '<') {
            ++pos_;
            const std::string l = label();
            expect('>');
            return dia(l, unary());
        }
        if (c == '[') {
            ++pos_;
            const std::string l = label();
            expect(']');
            return box(l, unary());
        }
        return atom();
    }

    Formula atom() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Formula f = impl();
            skip_ws();
            expect(')');
            return f;
        }
        if (c == 'p' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            int v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return var(v);
        }
        if (match_word("false")) return bottom();
        if (match_word("true")) return top();
        fail("expected a variable, constant, or '('");
        return nullptr;  // unreachable
    }

    std::string label() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a modality label");
        const std::string l = text_.substr(start, pos_ - start);
        if (alphabet_ != nullptr && !alphabet_->contains(l))
            throw ParseError(start, "unknown modality label '" + l + "'");
        return l;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool match(const char* token) {
        skip_ws();
        std::size_t i = 0;
        while (token[i] != '\0') {
            if (pos_ + i >= text_.size() || text_[pos_ + i] != token[i]) return false;
            ++i;
        }
        pos_ += i;
        return true;
    }

    bool match_word(const char* word) {
        skip_ws();
        std::size_t i = 0;
        while (word[i] != '\0') {
            if (pos_ + i >= text_.size() || text_[pos_ + i] != word[i]) return false;
            ++i;
        }
        // no identifier character may follow
        if (pos_ + i < text_.size() &&
            (std::isalnum(static_cast<unsigned char>(text_[pos_ + i])) || text_[pos_ + i] == '_'))
            return false;
        pos_ += i;
        return true;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

    const std::string& text_;
    const Alphabet* alphabet_;
    std::size_t pos_ = 0;
};

enum Precedence { kImpl = 0, kUnary = 1 };

void print(const Formula& f, int parent, std::string& out) {
    switch (f->kind) {
        case NodeKind::Var:
            out += "p" + std::to_string(f->var);
            break;
        case NodeKind::Bottom:
            out += "false";
            break;
        case NodeKind::Implies: {
            const bool parens = parent > kImpl;
            if (parens) out += "(";
            print(f->left, kUnary, out);
            out += " -> ";
            print(f->right, kImpl, out);  // right-associative
            if (parens) out += ")";
            break;
        }
        case NodeKind::Diamond:
            out += "<" + f->label + ">";
            print(f->left, kUnary, out);
            break;
    }
}

}  // namespace

Formula parse_formula(const std::string& text, const Alphabet* alphabet) {
    return Parser(text, alphabet).run();
}

std::string print_formula(const Formula& f) {
    std::string out;
    print(f, kImpl, out);
    return out;
}

}  // namespace kripkit
