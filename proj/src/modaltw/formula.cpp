#include "modaltw/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace modaltw {

ModalFormula ModalFormula::mk_var(std::string name) {
    ModalFormula f;
    f.kind = FormulaKind::Var;
    f.var = std::move(name);
    return f;
}

ModalFormula ModalFormula::bottom() {
    return ModalFormula{};
}

static ModalFormula unary(FormulaKind k, ModalFormula f) {
    ModalFormula r;
    r.kind = k;
    r.kids.push_back(std::move(f));
    return r;
}

static ModalFormula binary(FormulaKind k, ModalFormula a, ModalFormula b) {
    ModalFormula r;
    r.kind = k;
    r.kids.push_back(std::move(a));
    r.kids.push_back(std::move(b));
    return r;
}

ModalFormula ModalFormula::mk_not(ModalFormula f) { return unary(FormulaKind::Not, std::move(f)); }
ModalFormula ModalFormula::mk_dia(ModalFormula f) { return unary(FormulaKind::Dia, std::move(f)); }
ModalFormula ModalFormula::mk_box(ModalFormula f) { return unary(FormulaKind::Box, std::move(f)); }
ModalFormula ModalFormula::mk_or(ModalFormula a, ModalFormula b) {
    return binary(FormulaKind::Or, std::move(a), std::move(b));
}
ModalFormula ModalFormula::mk_and(ModalFormula a, ModalFormula b) {
    return binary(FormulaKind::And, std::move(a), std::move(b));
}

bool ModalFormula::operator==(ModalFormula const& o) const {
    return kind == o.kind && var == o.var && kids == o.kids;
}

namespace {

enum class Tok { Ident, False, Not, Box, Dia, AndOp, OrOp, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

struct Lexer {
    std::string const& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(std::string const& s) : s(s) {}

    void advance(size_t n) {
        for (size_t i = 0; i < n; ++i) {
            if (pos < s.size() && s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    Token next() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            advance(1);
        int l = line, c = col;
        if (pos >= s.size()) return {Tok::End, "", l, c};
        char ch = s[pos];
        if (ch == '~') { advance(1); return {Tok::Not, "~", l, c}; }
        if (ch == '&') { advance(1); return {Tok::AndOp, "&", l, c}; }
        if (ch == '|') { advance(1); return {Tok::OrOp, "|", l, c}; }
        if (ch == '(') { advance(1); return {Tok::LParen, "(", l, c}; }
        if (ch == ')') { advance(1); return {Tok::RParen, ")", l, c}; }
        if (ch == '[') {
            if (pos + 1 < s.size() && s[pos + 1] == ']') { advance(2); return {Tok::Box, "[]", l, c}; }
            throw ParseError("expected \"[]\"", l, c);
        }
        if (ch == '<') {
            if (pos + 1 < s.size() && s[pos + 1] == '>') { advance(2); return {Tok::Dia, "<>", l, c}; }
            throw ParseError("expected \"<>\"", l, c);
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                advance(1);
            std::string text = s.substr(start, pos - start);
            if (text == "false") return {Tok::False, text, l, c};
            return {Tok::Ident, text, l, c};
        }
        throw ParseError(std::string("unknown token '") + ch + "'", l, c);
    }
};

struct Parser {
    Lexer lex;
    Token cur;

    explicit Parser(std::string const& s) : lex(s) { cur = lex.next(); }

    void bump() { cur = lex.next(); }

    ModalFormula parse_or() {
        ModalFormula f = parse_and();
        while (cur.kind == Tok::OrOp) {
            bump();
            f = ModalFormula::mk_or(std::move(f), parse_and());
        }
        return f;
    }

    ModalFormula parse_and() {
        ModalFormula f = parse_unary();
        while (cur.kind == Tok::AndOp) {
            bump();
            f = ModalFormula::mk_and(std::move(f), parse_unary());
        }
        return f;
    }

    ModalFormula parse_unary() {
        switch (cur.kind) {
        case Tok::Not: bump(); return ModalFormula::mk_not(parse_unary());
        case Tok::Box: bump(); return ModalFormula::mk_box(parse_unary());
        case Tok::Dia: bump(); return ModalFormula::mk_dia(parse_unary());
        default: return parse_atom();
        }
    }

    ModalFormula parse_atom() {
        if (cur.kind == Tok::False) { bump(); return ModalFormula::bottom(); }
        if (cur.kind == Tok::Ident) {
            std::string name = cur.text;
            bump();
            return ModalFormula::mk_var(std::move(name));
        }
        if (cur.kind == Tok::LParen) {
            bump();
            ModalFormula f = parse_or();
            if (cur.kind != Tok::RParen) throw ParseError("expected ')'", cur.line, cur.col);
            bump();
            return f;
        }
        throw ParseError("expected formula", cur.line, cur.col);
    }
};

int prec(FormulaKind k) {
    switch (k) {
    case FormulaKind::Or: return 0;
    case FormulaKind::And: return 1;
    case FormulaKind::Not:
    case FormulaKind::Box:
    case FormulaKind::Dia: return 2;
    default: return 3;
    }
}

void render_rec(ModalFormula const& f, std::string& out) {
    switch (f.kind) {
    case FormulaKind::Var: out += f.var; return;
    case FormulaKind::Bottom: out += "false"; return;
    case FormulaKind::Not:
    case FormulaKind::Box:
    case FormulaKind::Dia: {
        out += f.kind == FormulaKind::Not ? "~" : f.kind == FormulaKind::Box ? "[]" : "<>";
        bool paren = prec(f.kids[0].kind) < 2;
        if (paren) out += "(";
        render_rec(f.kids[0], out);
        if (paren) out += ")";
        return;
    }
    case FormulaKind::Or:
    case FormulaKind::And: {
        int p = prec(f.kind);
        char const* op = f.kind == FormulaKind::Or ? " | " : " & ";
        bool lp = prec(f.kids[0].kind) < p;
        bool rp = prec(f.kids[1].kind) <= p;
        if (lp) out += "(";
        render_rec(f.kids[0], out);
        if (lp) out += ")";
        out += op;
        if (rp) out += "(";
        render_rec(f.kids[1], out);
        if (rp) out += ")";
        return;
    }
    }
}

} // namespace

ModalFormula parse_formula(std::string const& text) {
    Parser p(text);
    ModalFormula f = p.parse_or();
    if (p.cur.kind != Tok::End)
        throw ParseError("trailing input", p.cur.line, p.cur.col);
    return f;
}

std::string render(ModalFormula const& f) {
    std::string out;
    render_rec(f, out);
    return out;
}

int modal_depth(ModalFormula const& f) {
    switch (f.kind) {
    case FormulaKind::Var:
    case FormulaKind::Bottom: return 0;
    case FormulaKind::Not: return modal_depth(f.kids[0]);
    case FormulaKind::Or:
    case FormulaKind::And:
        return std::max(modal_depth(f.kids[0]), modal_depth(f.kids[1]));
    case FormulaKind::Dia:
    case FormulaKind::Box: return modal_depth(f.kids[0]) + 1;
    }
    return 0;
}

static void collect_vars(ModalFormula const& f, std::vector<std::string>& out,
                         std::set<std::string>& seen) {
    if (f.kind == FormulaKind::Var) {
        if (seen.insert(f.var).second) out.push_back(f.var);
        return;
    }
    for (auto const& k : f.kids) collect_vars(k, out, seen);
}

std::vector<std::string> variables_of(ModalFormula const& f) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect_vars(f, out, seen);
    return out;
}

} // namespace modaltw
