#include <cctype>
#include <charconv>
#include <string>

#include "ban/error.hpp"
#include "ban/expr.hpp"

namespace ban {
namespace {

int precedence(Op op) {
    switch (op) {
        case Op::Or: return 1;
        case Op::Xor: return 2;
        case Op::And: return 3;
        case Op::Not: return 4;
        default: return 5;
    }
}

void print(const Expr& e, const NameTable* names, std::string& out) {
    switch (e.op()) {
        case Op::Constant:
            out += e.value() ? '1' : '0';
            return;
        case Op::Var:
            if (names) {
                if (auto n = names->name_of(e.id())) {
                    out += *n;
                    return;
                }
            }
            out += 'x';
            out += std::to_string(e.id());
            return;
        case Op::Not: {
            const Expr& child = e.children()[0];
            out += '!';
            const bool paren = precedence(child.op()) < precedence(Op::Not);
            if (paren) out += '(';
            print(child, names, out);
            if (paren) out += ')';
            return;
        }
        default:
            break;
    }
    const std::string_view sep = e.op() == Op::And ? " & " : e.op() == Op::Or ? " | " : " ^ ";
    bool first = true;
    for (const auto& child : e.children()) {
        if (!first) out += sep;
        first = false;
        const bool paren = precedence(child.op()) <= precedence(e.op());
        if (paren) out += '(';
        print(child, names, out);
        if (paren) out += ')';
    }
}

class Parser {
public:
    Parser(std::string_view text, const NameTable* names) : text_(text), names_(names) {}

    Expr parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty expression");
        Expr e = parse_chain(Op::Or);
        skip_space();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, 0, pos_ + 1);
    }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static char symbol(Op op) {
        switch (op) {
            case Op::Or: return '|';
            case Op::Xor: return '^';
            default: return '&';
        }
    }

    static Op tighter(Op op) {
        switch (op) {
            case Op::Or: return Op::Xor;
            case Op::Xor: return Op::And;
            default: return Op::Not;
        }
    }

    Expr parse_operand(Op level) {
        return level == Op::Not ? parse_unary() : parse_chain(level);
    }

    // A run of operands joined by one binary operator becomes a single n-ary
    // node, which is equivalent to the left-associative reading.
    Expr parse_chain(Op level) {
        std::vector<Expr> operands;
        operands.push_back(parse_operand(tighter(level)));
        while (accept(symbol(level))) operands.push_back(parse_operand(tighter(level)));
        if (operands.size() == 1) return operands.front();
        switch (level) {
            case Op::Or: return Expr::disjunction(std::move(operands));
            case Op::Xor: return Expr::exclusive_or(std::move(operands));
            default: return Expr::conjunction(std::move(operands));
        }
    }

    Expr parse_unary() {
        if (accept('!')) return Expr::negate(parse_unary());
        return parse_primary();
    }

    Expr parse_primary() {
        skip_space();
        if (pos_ == text_.size()) fail("expected operand");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr inner = parse_chain(Op::Or);
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view digits = text_.substr(start, pos_ - start);
            if (digits == "0" || digits == "1") return Expr::constant(digits == "1");
            pos_ = start;
            fail("constants are 0 or 1");
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view word = text_.substr(start, pos_ - start);
            if (names_) {
                if (auto id = names_->find(word)) return Expr::var(*id);
            }
            if (word.size() > 1 && word[0] == 'x' &&
                word.find_first_not_of("0123456789", 1) == std::string_view::npos) {
                AutomatonId id = 0;
                auto [ptr, ec] = std::from_chars(word.data() + 1, word.data() + word.size(), id);
                if (ec != std::errc() || id == 0) {
                    pos_ = start;
                    fail("invalid automaton id in '" + std::string(word) + "'");
                }
                return Expr::var(id);
            }
            pos_ = start;
            fail("unknown name '" + std::string(word) + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const NameTable* names_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Expr& expr) {
    std::string out;
    print(expr, nullptr, out);
    return out;
}

std::string to_string(const Expr& expr, const NameTable& names) {
    std::string out;
    print(expr, &names, out);
    return out;
}

Expr parse_expr(std::string_view text, const NameTable* names) {
    return Parser(text, names).parse();
}

}  // namespace ban
