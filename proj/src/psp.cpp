// ============================================================================
// psp.cpp — requirements file and structured-English sentence parsing
// ============================================================================

#include "reqlint/psp.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "reqlint/errors.hpp"
#include "reqlint/ltl_parser.hpp"

namespace reqlint {

bool pattern_has_trigger(PatternKind kind) {
    switch (kind) {
        case PatternKind::Response:
        case PatternKind::Precedence:
        case PatternKind::ResponseChain:
        case PatternKind::PrecedenceChain: return true;
        default: return false;
    }
}

namespace {

// ── sentence lexer ─────────────────────────────────────────────────────────

enum class Tok : std::uint8_t { Word, Number, Comma, LParen, RParen, Cmp, Period, End };

struct Token {
    Tok kind;
    std::string text;  // Word: original spelling; Cmp: operator
    std::string lower; // Word only
    std::size_t column;
};

const std::set<std::string>& keyword_set() {
    static const std::set<std::string> kw = {
        "globally", "before",   "after",       "between", "until", "and",   "or",
        "not",      "true",     "false",       "it",      "is",    "always", "never",
        "the",      "case",     "that",        "if",      "then",  "holds", "eventually",
        "previously", "held",   "was",         "preceded", "succeeded", "by",
        "transitions", "to",    "states",      "in",      "which", "occur", "at",
        "most",     "times"};
    return kw;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Tokenizes one sentence. `column_base` is the 1-based column of the
// sentence's first character within its source line, so errors point into
// the original file.
std::vector<Token> lex_sentence(std::string_view src, std::size_t line,
                                std::size_t column_base) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto column = [&](std::size_t at) { return column_base + at; };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                word += src[i++];
            Token t{Tok::Word, word, to_lower(word), column(start)};
            out.push_back(std::move(t));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i + 1 < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            std::string num;
            if (c == '-') num += src[i++];
            while (i < src.size() &&
                   (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.'))
                num += src[i++];
            out.push_back({Tok::Number, std::move(num), "", column(start)});
            continue;
        }
        switch (c) {
            case ',': out.push_back({Tok::Comma, ",", "", column(start)}); ++i; break;
            case '(': out.push_back({Tok::LParen, "(", "", column(start)}); ++i; break;
            case ')': out.push_back({Tok::RParen, ")", "", column(start)}); ++i; break;
            case '.': out.push_back({Tok::Period, ".", "", column(start)}); ++i; break;
            case '<':
                ++i;
                if (i < src.size() && src[i] == '=') {
                    ++i;
                    out.push_back({Tok::Cmp, "<=", "", column(start)});
                } else {
                    out.push_back({Tok::Cmp, "<", "", column(start)});
                }
                break;
            case '>':
                ++i;
                if (i < src.size() && src[i] == '=') {
                    ++i;
                    out.push_back({Tok::Cmp, ">=", "", column(start)});
                } else {
                    out.push_back({Tok::Cmp, ">", "", column(start)});
                }
                break;
            case '=': out.push_back({Tok::Cmp, "=", "", column(start)}); ++i; break;
            case '!':
                ++i;
                if (i < src.size() && src[i] == '=') {
                    ++i;
                    out.push_back({Tok::Cmp, "!=", "", column(start)});
                    break;
                }
                throw ParseError(line, column(start), "'!'", {"'!='"});
            default:
                throw ParseError(line, column(start), "'" + std::string(1, c) + "'",
                                 {"a word", "a comparison", "','", "'('", "')'"});
        }
    }
    out.push_back({Tok::End, "", "", column(src.size())});
    return out;
}

// ── sentence parser ────────────────────────────────────────────────────────

class SentenceParser {
public:
    SentenceParser(FormulaFactory& f, std::string_view src, std::size_t line,
                   std::size_t column_base)
        : f_(f), line_(line), tokens_(lex_sentence(src, line, column_base)) {}

    PspInstance parse() {
        PspInstance psp;
        psp.scope = parse_scope();
        expect(Tok::Comma, "','");
        psp.pattern = parse_pattern();
        if (cur().kind == Tok::Period) shift();
        if (cur().kind != Tok::End) fail({"end of sentence"});
        return psp;
    }

private:
    const Token& cur() const { return tokens_[pos_]; }
    void shift() {
        if (cur().kind != Tok::End) ++pos_;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = cur();
        const std::string found =
            t.kind == Tok::End ? "end of sentence" : "'" + t.text + "'";
        throw ParseError(line_, t.column, found, std::move(expected));
    }

    bool peek_word(std::string_view w) const {
        return cur().kind == Tok::Word && cur().lower == w;
    }

    bool accept_word(std::string_view w) {
        if (!peek_word(w)) return false;
        shift();
        return true;
    }

    void expect_word(std::string_view w) {
        if (!accept_word(w)) fail({"'" + std::string(w) + "'"});
    }

    void expect(Tok kind, const std::string& what) {
        if (cur().kind != kind) fail({what});
        shift();
    }

    // ── scopes ─────────────────────────────────────────────────────────────

    Scope parse_scope() {
        Scope scope;
        if (accept_word("globally")) {
            scope.kind = ScopeKind::Globally;
        } else if (accept_word("before")) {
            scope.kind = ScopeKind::Before;
            scope.q = parse_delimiter();
        } else if (accept_word("after")) {
            scope.q = parse_delimiter();
            if (accept_word("until")) {
                scope.kind = ScopeKind::AfterUntil;
                scope.r = parse_delimiter();
            } else {
                scope.kind = ScopeKind::After;
            }
        } else if (accept_word("between")) {
            scope.kind = ScopeKind::Between;
            scope.q = parse_delimiter();
            expect_word("and");
            scope.r = parse_delimiter();
        } else {
            fail({"'Globally'", "'Before'", "'After'", "'Between'"});
        }
        return scope;
    }

    // ── atom expressions ───────────────────────────────────────────────────

    // Scope delimiters are single atoms, `not` atoms, or parenthesized
    // expressions; a parenthesis is required to put `and`/`or` inside one.
    FormulaId parse_delimiter() {
        if (accept_word("not")) return f_.negation(parse_delimiter());
        return parse_atom();
    }

    FormulaId parse_expr() { return parse_or(); }

    FormulaId parse_or() {
        FormulaId acc = parse_and();
        while (accept_word("or")) acc = f_.disj(acc, parse_and());
        return acc;
    }

    FormulaId parse_and() {
        FormulaId acc = parse_not();
        while (accept_word("and")) acc = f_.conj(acc, parse_not());
        return acc;
    }

    FormulaId parse_not() {
        if (accept_word("not")) return f_.negation(parse_not());
        return parse_atom();
    }

    FormulaId parse_atom() {
        if (cur().kind == Tok::LParen) {
            shift();
            const FormulaId inner = parse_expr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (accept_word("true")) return f_.truth();
        if (accept_word("false")) return f_.falsity();
        if (cur().kind != Tok::Word) fail({"an atom"});
        const Token ident = cur();
        if (keyword_set().count(ident.lower))
            fail({"an identifier ('" + ident.text + "' is a keyword)"});
        if (ident.text.rfind("__", 0) == 0)
            fail({"an identifier (names starting with '__' are reserved)"});
        shift();
        if (cur().kind == Tok::Cmp) {
            const std::string op = cur().text;
            shift();
            if (cur().kind != Tok::Number) fail({"a number"});
            Rational constant;
            try {
                constant = Rational::parse_decimal(cur().text);
            } catch (const Error&) {
                fail({"a number"});
            }
            shift();
            return make_comparison(f_, ident.text, op, constant);
        }
        return f_.prop(ident.text);
    }

    // ── patterns ───────────────────────────────────────────────────────────

    Pattern parse_pattern() {
        Pattern pat;
        if (peek_word("it")) {
            shift();
            expect_word("is");
            const bool always = accept_word("always");
            if (!always) expect_word("never");
            expect_word("the");
            expect_word("case");
            expect_word("that");
            if (!always) {
                pat.kind = PatternKind::Absence;
                pat.p = parse_expr();
                expect_word("holds");
                return pat;
            }
            if (accept_word("if")) return parse_conditional();
            pat.kind = PatternKind::Universality;
            pat.p = parse_expr();
            expect_word("holds");
            return pat;
        }
        if (peek_word("transitions")) {
            shift();
            expect_word("to");
            expect_word("states");
            expect_word("in");
            expect_word("which");
            pat.kind = PatternKind::BoundedExistence;
            pat.p = parse_expr();
            expect_word("holds");
            expect_word("occur");
            expect_word("at");
            expect_word("most");
            pat.bound = parse_bound();
            expect_word("times");
            return pat;
        }
        pat.kind = PatternKind::Existence;
        pat.p = parse_expr();
        expect_word("eventually");
        expect_word("holds");
        return pat;
    }

    // "if P holds, then ..." — Response, Precedence, and the two chains.
    Pattern parse_conditional() {
        Pattern pat;
        pat.p = parse_expr();
        expect_word("holds");
        if (cur().kind == Tok::Comma) shift();
        expect_word("then");
        const FormulaId first = parse_expr();
        if (accept_word("eventually")) {
            expect_word("holds");
            pat.kind = PatternKind::Response;
            pat.s = first;
            if (accept_word("and")) {
                expect_word("is");
                expect_word("succeeded");
                expect_word("by");
                pat.kind = PatternKind::ResponseChain;
                pat.t = parse_expr();
            }
            return pat;
        }
        expect_word("previously");
        expect_word("held");
        pat.kind = PatternKind::Precedence;
        pat.s = first;
        if (accept_word("and")) {
            expect_word("was");
            expect_word("preceded");
            expect_word("by");
            // Chain order in time is s, then t, then the trigger p: the
            // sentence names the later chain element first.
            pat.kind = PatternKind::PrecedenceChain;
            pat.t = first;
            pat.s = parse_expr();
        }
        return pat;
    }

    int parse_bound() {
        if (cur().kind != Tok::Number) fail({"a positive integer"});
        const std::string text = cur().text;
        if (text.find('.') != std::string::npos || text[0] == '-')
            fail({"a positive integer"});
        shift();
        long value = 0;
        try {
            value = std::stol(text);
        } catch (const std::exception&) {
            value = -1;
        }
        if (value < 1 || value > 1000000)
            throw ParseError(line_, tokens_[pos_ - 1].column, "'" + text + "'",
                             {"an integer between 1 and 1000000"});
        return static_cast<int>(value);
    }

    FormulaFactory& f_;
    std::size_t line_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// ── requirements file ──────────────────────────────────────────────────────

bool valid_id(std::string_view id) {
    if (id.empty()) return false;
    for (char c : id) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-'))
            return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

struct RawLine {
    std::string id;
    std::string sentence;
    std::size_t line;
    std::size_t sentence_column; // 1-based column of the sentence start
};

// Splits the file into "ID : SENTENCE" lines, stripping comments and blanks.
// Throws ParseError for lines that are not of that shape.
std::vector<RawLine> split_lines(std::string_view text) {
    std::vector<RawLine> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;

        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        if (trim(raw).empty()) {
            if (end == text.size()) break;
            continue;
        }
        const std::size_t colon = raw.find(':');
        if (colon == std::string_view::npos)
            throw ParseError(line_no, raw.size() + 1, "end of line", {"':' after requirement id"});
        const std::string_view id = trim(raw.substr(0, colon));
        if (!valid_id(id))
            throw ParseError(line_no, 1, "'" + std::string(trim(raw.substr(0, colon))) + "'",
                             {"a requirement id ([A-Za-z0-9_.-]+)"});
        std::string_view sentence = raw.substr(colon + 1);
        const std::size_t lead = sentence.size() - trim(sentence).size() +
                                 0; // leading blanks only matter for the column
        std::size_t first_nonblank = colon + 1;
        while (first_nonblank < raw.size() &&
               std::isspace(static_cast<unsigned char>(raw[first_nonblank])))
            ++first_nonblank;
        (void)lead;
        if (trim(sentence).empty())
            throw ParseError(line_no, raw.size() + 1, "end of line", {"a requirement sentence"});
        out.push_back({std::string(id), std::string(trim(sentence)), line_no,
                       first_nonblank + 1});
        if (end == text.size()) break;
    }
    return out;
}

} // namespace

PspInstance parse_sentence(FormulaFactory& f, std::string_view sentence, std::size_t line_no) {
    return SentenceParser(f, sentence, line_no, 1).parse();
}

RequirementSet parse_requirements(FormulaFactory& f, std::string_view text) {
    RequirementSet set;
    std::map<std::string, std::size_t> seen;
    for (const RawLine& raw : split_lines(text)) {
        const auto [it, fresh] = seen.emplace(raw.id, raw.line);
        if (!fresh) throw DuplicateIdError(raw.id, raw.line);
        Requirement req;
        req.id = raw.id;
        req.source_text = raw.sentence;
        req.line = raw.line;
        req.psp = SentenceParser(f, raw.sentence, raw.line, raw.sentence_column).parse();
        set.requirements.push_back(std::move(req));
    }
    return set;
}

ParsedFile parse_requirements_lenient(FormulaFactory& f, std::string_view text) {
    ParsedFile file;
    std::vector<RawLine> raws;
    try {
        raws = split_lines(text);
    } catch (const ParseError& e) {
        // A malformed line shape aborts the whole split; report it as one
        // entry so the CLI still has something structured to show.
        ParsedLine bad;
        bad.line = e.line();
        bad.error = e.what();
        file.lines.push_back(std::move(bad));
        return file;
    }
    std::map<std::string, std::size_t> seen;
    for (const RawLine& raw : raws) {
        ParsedLine entry;
        entry.id = raw.id;
        entry.source_text = raw.sentence;
        entry.line = raw.line;
        const auto [it, fresh] = seen.emplace(raw.id, raw.line);
        if (!fresh) {
            entry.error = DuplicateIdError(raw.id, raw.line).what();
            file.lines.push_back(std::move(entry));
            continue;
        }
        try {
            Requirement req;
            req.id = raw.id;
            req.source_text = raw.sentence;
            req.line = raw.line;
            req.psp = SentenceParser(f, raw.sentence, raw.line, raw.sentence_column).parse();
            entry.requirement = std::move(req);
        } catch (const Error& e) {
            entry.error = e.what();
        }
        file.lines.push_back(std::move(entry));
    }
    return file;
}

// ── pretty printing ────────────────────────────────────────────────────────

namespace {

// Sentence-syntax expression rendering: or (1) < and (2) < not (3) < atoms.
void expr_text(const FormulaFactory& f, FormulaId id, int min_prec, std::string& out) {
    const FormulaNode& n = f.node(id);
    int prec = 4;
    switch (n.kind) {
        case NodeKind::Or: prec = 1; break;
        case NodeKind::And: prec = 2; break;
        case NodeKind::Not: prec = 3; break;
        default: break;
    }
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (n.kind) {
        case NodeKind::True: out += "true"; break;
        case NodeKind::False: out += "false"; break;
        case NodeKind::Prop: out += n.name; break;
        case NodeKind::Cmp:
            out += n.name;
            out += (n.rel == CmpRel::Lt) ? " < " : " = ";
            out += n.constant.to_decimal_string();
            break;
        case NodeKind::Not:
            out += "not ";
            expr_text(f, n.child[0], 3, out);
            break;
        case NodeKind::And:
            expr_text(f, n.child[0], 2, out);
            out += " and ";
            expr_text(f, n.child[1], 3, out);
            break;
        case NodeKind::Or:
            expr_text(f, n.child[0], 1, out);
            out += " or ";
            expr_text(f, n.child[1], 2, out);
            break;
        default:
            throw std::logic_error("pretty_sentence: payload is not an atom expression");
    }
    if (parens) out += ')';
}

std::string expr_text(const FormulaFactory& f, FormulaId id) {
    std::string out;
    expr_text(f, id, 0, out);
    return out;
}

// Delimiters re-parse at atom level, so compound expressions get parentheses.
std::string delim_text(const FormulaFactory& f, FormulaId id) {
    const FormulaNode& n = f.node(id);
    switch (n.kind) {
        case NodeKind::True:
        case NodeKind::False:
        case NodeKind::Prop:
        case NodeKind::Cmp: return expr_text(f, id);
        case NodeKind::Not: return "not " + delim_text(f, n.child[0]);
        default: return "(" + expr_text(f, id) + ")";
    }
}

} // namespace

std::string pretty_sentence(const FormulaFactory& f, const PspInstance& psp) {
    std::string out;
    switch (psp.scope.kind) {
        case ScopeKind::Globally: out = "Globally"; break;
        case ScopeKind::Before: out = "Before " + delim_text(f, psp.scope.q); break;
        case ScopeKind::After: out = "After " + delim_text(f, psp.scope.q); break;
        case ScopeKind::Between:
            out = "Between " + delim_text(f, psp.scope.q) + " and " + delim_text(f, psp.scope.r);
            break;
        case ScopeKind::AfterUntil:
            out = "After " + delim_text(f, psp.scope.q) + " until " + delim_text(f, psp.scope.r);
            break;
    }
    out += ", ";
    const Pattern& pat = psp.pattern;
    switch (pat.kind) {
        case PatternKind::Universality:
            out += "it is always the case that " + expr_text(f, pat.p) + " holds";
            break;
        case PatternKind::Absence:
            out += "it is never the case that " + expr_text(f, pat.p) + " holds";
            break;
        case PatternKind::Existence:
            out += expr_text(f, pat.p) + " eventually holds";
            break;
        case PatternKind::BoundedExistence:
            out += "transitions to states in which " + expr_text(f, pat.p) +
                   " holds occur at most " + std::to_string(pat.bound) + " times";
            break;
        case PatternKind::Response:
            out += "it is always the case that if " + expr_text(f, pat.p) + " holds, then " +
                   expr_text(f, pat.s) + " eventually holds";
            break;
        case PatternKind::Precedence:
            out += "it is always the case that if " + expr_text(f, pat.p) + " holds, then " +
                   expr_text(f, pat.s) + " previously held";
            break;
        case PatternKind::ResponseChain:
            out += "it is always the case that if " + expr_text(f, pat.p) + " holds, then " +
                   expr_text(f, pat.s) + " eventually holds and is succeeded by " +
                   expr_text(f, pat.t);
            break;
        case PatternKind::PrecedenceChain:
            out += "it is always the case that if " + expr_text(f, pat.p) + " holds, then " +
                   expr_text(f, pat.t) + " previously held and was preceded by " +
                   expr_text(f, pat.s);
            break;
    }
    out += ".";
    return out;
}

} // namespace reqlint
