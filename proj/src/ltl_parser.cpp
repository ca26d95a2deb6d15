// ============================================================================
// ltl_parser.cpp — recursive-descent parser for the neutral LTL syntax
// ============================================================================

#include "reqlint/ltl_parser.hpp"

#include <cctype>

#include "reqlint/errors.hpp"

namespace reqlint {

FormulaId make_comparison(FormulaFactory& f, const std::string& var, std::string_view op,
                          const Rational& constant) {
    const FormulaId lt = f.cmp(var, CmpRel::Lt, constant);
    const FormulaId eq = f.cmp(var, CmpRel::Eq, constant);
    if (op == "<") return lt;
    if (op == "=") return eq;
    if (op == "<=") return f.disj(lt, eq);
    if (op == ">") return f.negation(f.disj(lt, eq));
    if (op == ">=") return f.negation(lt);
    if (op == "!=") return f.negation(eq);
    throw Error("unknown comparison operator '" + std::string(op) + "'");
}

namespace {

enum class Tok : std::uint8_t { Ident, Number, LParen, RParen, Bang, Amp, Pipe, Arrow, Cmp, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_trivia();
        const std::size_t line = line_, col = col_;
        if (pos_ >= src_.size()) return {Tok::End, "", line, col};
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ident += advance();
            return {Tok::Ident, std::move(ident), line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            std::string num;
            if (c == '-') num += advance();
            while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '.'))
                num += advance();
            return {Tok::Number, std::move(num), line, col};
        }
        switch (c) {
            case '(': advance(); return {Tok::LParen, "(", line, col};
            case ')': advance(); return {Tok::RParen, ")", line, col};
            case '&': advance(); return {Tok::Amp, "&", line, col};
            case '|': advance(); return {Tok::Pipe, "|", line, col};
            case '!':
                advance();
                if (peek() == '=') {
                    advance();
                    return {Tok::Cmp, "!=", line, col};
                }
                return {Tok::Bang, "!", line, col};
            case '-':
                advance();
                if (peek() == '>') {
                    advance();
                    return {Tok::Arrow, "->", line, col};
                }
                throw ParseError(line, col, "'-'", {"'->'"});
            case '<':
                advance();
                if (peek() == '=') {
                    advance();
                    return {Tok::Cmp, "<=", line, col};
                }
                return {Tok::Cmp, "<", line, col};
            case '>':
                advance();
                if (peek() == '=') {
                    advance();
                    return {Tok::Cmp, ">=", line, col};
                }
                return {Tok::Cmp, ">", line, col};
            case '=': advance(); return {Tok::Cmp, "=", line, col};
            default:
                throw ParseError(line, col, "'" + std::string(1, c) + "'", {"a formula"});
        }
    }

private:
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    Parser(FormulaFactory& f, std::string_view src) : f_(f), lexer_(src) { shift(); }

    FormulaId parse() {
        const FormulaId result = parse_expr();
        if (tok_.kind != Tok::End) fail({"end of input", "an operator"});
        return result;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::string found = tok_.kind == Tok::End ? "end of input" : "'" + tok_.text + "'";
        throw ParseError(tok_.line, tok_.column, found, std::move(expected));
    }

    void shift() { tok_ = lexer_.next(); }

    bool is_unary_op() const {
        return tok_.kind == Tok::Ident &&
               (tok_.text == "X" || tok_.text == "F" || tok_.text == "G");
    }

    FormulaId parse_expr() {
        const FormulaId lhs = parse_or();
        if (tok_.kind == Tok::Arrow) {
            shift();
            return f_.implies(lhs, parse_expr());
        }
        return lhs;
    }

    FormulaId parse_or() {
        FormulaId acc = parse_and();
        while (tok_.kind == Tok::Pipe) {
            shift();
            acc = f_.disj(acc, parse_and());
        }
        return acc;
    }

    FormulaId parse_and() {
        FormulaId acc = parse_until();
        while (tok_.kind == Tok::Amp) {
            shift();
            acc = f_.conj(acc, parse_until());
        }
        return acc;
    }

    FormulaId parse_until() {
        const FormulaId lhs = parse_unary();
        if (tok_.kind == Tok::Ident &&
            (tok_.text == "U" || tok_.text == "R" || tok_.text == "W")) {
            const char op = tok_.text[0];
            shift();
            const FormulaId rhs = parse_until();
            if (op == 'U') return f_.until(lhs, rhs);
            if (op == 'R') return f_.release(lhs, rhs);
            return f_.weak_until(lhs, rhs);
        }
        return lhs;
    }

    FormulaId parse_unary() {
        if (tok_.kind == Tok::Bang) {
            shift();
            return f_.negation(parse_unary());
        }
        if (is_unary_op()) {
            const char op = tok_.text[0];
            shift();
            const FormulaId arg = parse_unary();
            switch (op) {
                case 'X': return f_.next(arg);
                case 'F': return f_.eventually(arg);
                default: return f_.globally(arg);
            }
        }
        return parse_primary();
    }

    FormulaId parse_primary() {
        switch (tok_.kind) {
            case Tok::LParen: {
                shift();
                const FormulaId inner = parse_expr();
                if (tok_.kind != Tok::RParen) fail({"')'"});
                shift();
                return inner;
            }
            case Tok::Ident: {
                const std::string name = tok_.text;
                if (name == "U" || name == "R") fail({"a formula"});
                shift();
                if (name == "true" || name == "TRUE") return f_.truth();
                if (name == "false" || name == "FALSE") return f_.falsity();
                if (tok_.kind == Tok::Cmp) {
                    const std::string op = tok_.text;
                    shift();
                    if (tok_.kind != Tok::Number) fail({"a number"});
                    Rational constant;
                    try {
                        constant = Rational::parse_decimal(tok_.text);
                    } catch (const Error&) {
                        fail({"a number"});
                    }
                    shift();
                    return make_comparison(f_, name, op, constant);
                }
                return f_.prop(name);
            }
            default: fail({"a formula"});
        }
    }

    FormulaFactory& f_;
    Lexer lexer_;
    Token tok_{Tok::End, "", 1, 1};
};

} // namespace

FormulaId parse_ltl(FormulaFactory& f, std::string_view text) {
    return Parser(f, text).parse();
}

} // namespace reqlint
