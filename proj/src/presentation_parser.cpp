#include <cctype>
#include <set>

#include "genring/presentations.hpp"

namespace genring {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum class Kind { ident, number, punct, end };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&]() {
        if (src[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
            while (i < src.size() && src[i] != '\n') advance();
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        const std::size_t l = line, cc = col, start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' || src[i] == '\''))
                advance();
            out.push_back({Token::Kind::ident, std::string(src.substr(start, i - start)), l, cc});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance();
            out.push_back({Token::Kind::number, std::string(src.substr(start, i - start)), l, cc});
        } else if (c == '(' || c == ')' || c == ',' || c == ';' || c == '=' || c == '/') {
            advance();
            out.push_back({Token::Kind::punct, std::string(1, c), l, cc});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
        }
    }
    out.push_back({Token::Kind::end, "", line, col});
    return out;
}

struct RawTerm {
    std::string name;
    bool parens = false;
    std::vector<RawTerm> args;
    std::size_t line = 0, col = 0;
};

struct RawRelation {
    RawTerm lhs, rhs;
};

bool is_variable_name(const std::string& s) {
    if (s.size() < 2 || s[0] != 'x') return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return s[1] != '0';
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool at_end() const { return peek().kind == Token::Kind::end; }

    [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.col); }

    void expect(const std::string& punct) {
        const Token& t = next();
        if (t.kind != Token::Kind::punct || t.text != punct)
            fail("expected '" + punct + "' but found '" + (t.kind == Token::Kind::end ? "end of input" : t.text) + "'",
                 t);
    }

    RawTerm term() {
        const Token& t = next();
        RawTerm r;
        r.line = t.line;
        r.col = t.col;
        if (t.kind == Token::Kind::number) {
            if (t.text != "0") fail("numbers other than 0 are not terms", t);
            r.name = "0";
            return r;
        }
        if (t.kind != Token::Kind::ident) fail("expected a term", t);
        r.name = t.text;
        if (peek().kind == Token::Kind::punct && peek().text == "(") {
            next();
            r.parens = true;
            if (!(peek().kind == Token::Kind::punct && peek().text == ")")) {
                r.args.push_back(term());
                while (peek().kind == Token::Kind::punct && peek().text == ",") {
                    next();
                    r.args.push_back(term());
                }
            }
            expect(")");
        }
        return r;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

Term resolve(const Presentation& p, const RawTerm& r) {
    if (is_variable_name(r.name)) {
        if (r.parens) throw ParseError("variable '" + r.name + "' cannot take arguments", r.line, r.col);
        return Term::var(std::stoul(r.name.substr(1)));
    }
    auto sym = p.find(r.name);
    if (!sym) throw ParseError("unknown symbol '" + r.name + "'", r.line, r.col);
    const std::size_t ar = p.symbols[*sym].arity;
    if (r.args.size() != ar)
        throw ParseError("arity mismatch: '" + r.name + "' takes " + std::to_string(ar) + " argument(s), given " +
                             std::to_string(r.args.size()),
                         r.line, r.col);
    std::vector<Term> args;
    for (const auto& a : r.args) args.push_back(resolve(p, a));
    return Term::app(*sym, std::move(args));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
    Parser ps(text);
    std::optional<Base> base;
    bool commutative = false;
    std::vector<std::pair<OpSymbol, Token>> gens;
    std::vector<RawRelation> rels;
    while (!ps.at_end()) {
        const Token kw = ps.next();
        if (kw.kind != Token::Kind::ident) ps.fail("expected 'base', 'gen', 'rel' or 'commutative'", kw);
        if (kw.text == "base") {
            const Token b = ps.next();
            if (base) ps.fail("base declared twice", kw);
            if (b.kind == Token::Kind::ident && (b.text == "F_empty" || b.text == "Fempty"))
                base = Base::Fempty;
            else if (b.kind == Token::Kind::ident && b.text == "F1")
                base = Base::F1;
            else
                ps.fail("base must be F_empty or F1", b);
            ps.expect(";");
        } else if (kw.text == "commutative") {
            commutative = true;
            ps.expect(";");
        } else if (kw.text == "gen") {
            while (true) {
                const Token name = ps.next();
                if (name.kind != Token::Kind::ident) ps.fail("expected a generator name", name);
                if (is_variable_name(name.text)) ps.fail("'" + name.text + "' is reserved for variables", name);
                ps.expect("/");
                const Token ar = ps.next();
                if (ar.kind != Token::Kind::number) ps.fail("expected an arity", ar);
                gens.push_back({OpSymbol{name.text, std::stoul(ar.text)}, name});
                const Token sep = ps.next();
                if (sep.kind == Token::Kind::punct && sep.text == ";") break;
                if (!(sep.kind == Token::Kind::punct && sep.text == ",")) ps.fail("expected ',' or ';'", sep);
            }
        } else if (kw.text == "rel") {
            RawRelation r;
            r.lhs = ps.term();
            ps.expect("=");
            r.rhs = ps.term();
            ps.expect(";");
            rels.push_back(std::move(r));
        } else {
            ps.fail("unknown statement '" + kw.text + "'", kw);
        }
    }
    Presentation p;
    p.base = base.value_or(Base::Fempty);
    p.commutative = commutative;
    if (p.base == Base::F1) p.symbols.push_back(OpSymbol{"0", 0});
    for (const auto& [sym, tok] : gens) {
        if (p.find(sym.name)) throw ParseError("duplicate generator '" + sym.name + "'", tok.line, tok.col);
        p.symbols.push_back(sym);
    }
    for (const auto& r : rels) p.relations.push_back(make_relation(resolve(p, r.lhs), resolve(p, r.rhs)));
    return p;
}

Term parse_term(const Presentation& p, std::string_view text) {
    Parser ps(text);
    RawTerm r = ps.term();
    if (!ps.at_end()) ps.fail("trailing input after term", ps.peek());
    return resolve(p, r);
}

std::string print_term(const Presentation& p, const Term& t) { return print_term(t, p.symbols); }

std::string print_presentation(const Presentation& p) {
    std::string out = p.base == Base::F1 ? "base F1;\n" : "base F_empty;\n";
    if (p.commutative) out += "commutative;\n";
    const auto gens = p.generators();
    if (!gens.empty()) {
        out += "gen ";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) out += ", ";
            out += gens[i].name + "/" + std::to_string(gens[i].arity);
        }
        out += ";\n";
    }
    for (const auto& r : p.relations) out += "rel " + print_term(p, r.lhs) + " = " + print_term(p, r.rhs) + ";\n";
    return out;
}

}  // namespace genring
