// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "dnsk/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace dnsk {

namespace {

constexpr std::array<std::string_view, 18> kSymbols = {
    "->", "=>", ":=", "/\\", "\\/", "=", "~", "(", ")", "[", "]", ",", ":", ";", ".", "*", "@", "|"};

constexpr std::array<std::string_view, 22> kReserved = {
    "nat", "unit", "fun", "tfun", "star", "S", "rec", "bot", "forall", "exists", "fst",
    "snd", "inl", "inr", "case", "of", "dest", "as", "in", "efq", "reset", "shift"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        Token t{Token::Kind::Symbol, {}, line, col};
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_cont(text[j])) ++j;
            t.kind = Token::Kind::Ident;
            t.text = std::string(text.substr(i, j - i));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = Token::Kind::Number;
            t.text = std::string(text.substr(i, j - i));
        } else {
            for (auto sym : kSymbols) {
                if (text.substr(i, sym.size()) == sym) {
                    t.text = std::string(sym);
                    break;
                }
            }
            if (t.text.empty()) throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        advance(t.text.size());
        out.push_back(std::move(t));
    }
    out.push_back(Token{Token::Kind::End, {}, line, col});
    return out;
}

Parser::Parser(std::string_view text) : toks_(tokenize(text)) {}

bool Parser::is_reserved(std::string_view w) {
    return std::find(kReserved.begin(), kReserved.end(), w) != kReserved.end();
}

const Token& Parser::peek(std::size_t k) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }

Token Parser::next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
}

bool Parser::is_symbol(std::string_view s, std::size_t k) const {
    const Token& t = peek(k);
    return t.kind == Token::Kind::Symbol && t.text == s;
}

bool Parser::is_word(std::string_view w, std::size_t k) const {
    const Token& t = peek(k);
    return t.kind == Token::Kind::Ident && t.text == w;
}

bool Parser::accept(std::string_view sym) {
    if (!is_symbol(sym)) return false;
    next();
    return true;
}

void Parser::fail(const std::string& msg) const {
    const Token& t = peek();
    std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + found, t.line, t.column);
}

void Parser::expect(std::string_view sym) {
    if (!accept(sym)) fail("expected '" + std::string(sym) + "'");
}

void Parser::expect_word(std::string_view w) {
    if (!is_word(w)) fail("expected '" + std::string(w) + "'");
    next();
}

Name Parser::ident() {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident || is_reserved(t.text)) fail("expected identifier");
    return next().text;
}

unsigned Parser::number() {
    if (peek().kind != Token::Kind::Number) fail("expected number");
    return static_cast<unsigned>(std::stoul(next().text));
}

void Parser::expect_end() {
    if (!at_end()) fail("expected end of input");
}

// --- types ------------------------------------------------------------------

Type Parser::type() {
    Type left = type_prod();
    if (accept("->")) return Type::arrow(left, type());
    return left;
}

Type Parser::type_prod() {
    Type t = type_atom();
    while (accept("*")) t = Type::prod(t, type_atom());
    return t;
}

Type Parser::type_atom() {
    if (is_word("nat")) {
        next();
        return Type::nat();
    }
    if (is_word("unit")) {
        next();
        return Type::unit();
    }
    if (accept("(")) {
        Type t = type();
        expect(")");
        return t;
    }
    fail("expected a type");
}

// --- terms ------------------------------------------------------------------

Term Parser::term() {
    if (is_word("fun")) {
        next();
        expect("(");
        Name x = ident();
        expect(":");
        Type ty = type();
        expect(")");
        expect("=>");
        return lam(x, ty, term());
    }
    Term head = term_app_item();
    while (starts_term_atom()) head = app(head, term_postfix());
    return head;
}

Term Parser::term_app_item() {
    if (is_word("S")) {
        next();
        return succ(term_postfix());
    }
    return term_postfix();
}

Term Parser::term_postfix() {
    Term t = term_atom();
    while (is_symbol(".") && peek(1).kind == Token::Kind::Number && (peek(1).text == "1" || peek(1).text == "2")) {
        next();
        t = next().text == "1" ? proj1(t) : proj2(t);
    }
    return t;
}

bool Parser::starts_term_atom() const {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) return true;
    if (t.kind == Token::Kind::Ident) return !is_reserved(t.text) || t.text == "star" || t.text == "rec";
    return is_symbol("(");
}

Term Parser::term_atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) return numeral(number());
    if (is_word("star")) {
        next();
        return star();
    }
    if (is_word("rec")) {
        next();
        expect("[");
        Type ty = type();
        expect("]");
        expect("(");
        Term n = term();
        expect(";");
        Term b = term();
        expect(";");
        Term s = term();
        expect(")");
        return rec(ty, n, b, s);
    }
    if (accept("(")) {
        Term a = term();
        if (accept(",")) {
            Term b = term();
            expect(")");
            return pair(a, b);
        }
        expect(")");
        return a;
    }
    return var(ident());
}

// --- formulas ---------------------------------------------------------------

Formula Parser::formula() {
    if (is_word("forall") || is_word("exists")) return quantifier();
    return imp_level();
}

Formula Parser::quantifier() {
    bool all = next().text == "forall";
    Name x = ident();
    expect(":");
    Type ty = type();
    expect(".");
    Formula body = formula();
    return all ? forall(x, ty, body) : exists(x, ty, body);
}

Formula Parser::imp_level() {
    Formula l = disj_level();
    if (accept("->")) return imp(l, formula());
    return l;
}

Formula Parser::disj_level() {
    Formula l = conj_level();
    if (accept("\\/")) {
        Formula r = (is_word("forall") || is_word("exists")) ? quantifier() : disj_level();
        return disj(l, r);
    }
    return l;
}

Formula Parser::conj_level() {
    Formula l = unary_level();
    if (accept("/\\")) {
        Formula r = (is_word("forall") || is_word("exists")) ? quantifier() : conj_level();
        return conj(l, r);
    }
    return l;
}

Formula Parser::unary_level() {
    if (accept("~")) {
        Formula operand = (is_word("forall") || is_word("exists")) ? quantifier() : unary_level();
        return neg(operand);
    }
    return atom_formula();
}

Formula Parser::atom_formula() {
    if (is_word("bot")) {
        next();
        return bot();
    }
    // An equation starts with a term; predicate applications and
    // parenthesized formulas are tried after backtracking.
    std::size_t save = pos_;
    std::optional<ParseError> eq_error;
    try {
        Term lhs = term();
        if (accept("=")) {
            Term rhs = term();
            for (const Term* side : {&lhs, &rhs}) {
                if (side->is(Term::Kind::Lam) || side->is(Term::Kind::Pair) || side->is(Term::Kind::Star))
                    throw ParseError("'=' relates terms of sort nat only", peek().line, peek().column);
            }
            return eq(lhs, rhs);
        }
    } catch (const ParseError& e) {
        eq_error = e;
    }
    std::size_t eq_reached = pos_;
    pos_ = save;
    if (accept("(")) {
        try {
            Formula f = formula();
            expect(")");
            return f;
        } catch (const ParseError& e) {
            if (eq_error && eq_reached > pos_) throw *eq_error;
            throw;
        }
    }
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident && !is_reserved(t.text)) {
        Name p = next().text;
        if (accept("(")) {
            std::vector<Term> args;
            if (!accept(")")) {
                args.push_back(term());
                while (accept(",")) args.push_back(term());
                expect(")");
            }
            return pred(p, std::move(args));
        }
        if (macros_) {
            auto it = macros_->find(p);
            if (it != macros_->end()) return it->second;
        }
        return pred(p);
    }
    if (eq_error) throw *eq_error;
    fail("expected a formula");
}

// --- proofs -----------------------------------------------------------------

Proof Parser::proof() {
    if (is_word("fun") || is_word("tfun") || is_word("shift")) {
        std::string kw = next().text;
        Name a = ident();
        expect("=>");
        Proof body = proof();
        if (kw == "fun") return plam(a, body);
        if (kw == "tfun") return tlam(a, body);
        return shift(a, body);
    }
    if (is_word("case")) {
        next();
        Proof scrut = proof();
        expect_word("of");
        Name a1 = ident();
        expect("=>");
        Proof q1 = proof();
        expect("|");
        Name a2 = ident();
        expect("=>");
        Proof q2 = proof();
        return case_of(scrut, a1, q1, a2, q2);
    }
    if (is_word("dest")) {
        next();
        Proof scrut = proof();
        expect_word("as");
        expect("[");
        Name x = ident();
        expect(",");
        Name a = ident();
        expect("]");
        expect_word("in");
        return dest(scrut, x, a, proof());
    }
    Proof head = proof_item();
    for (;;) {
        if (accept("@")) {
            head = tapp(head, term_postfix());
        } else if (starts_proof_atom()) {
            head = papp(head, proof_atom());
        } else {
            return head;
        }
    }
}

Proof Parser::proof_item() {
    static constexpr std::array<std::string_view, 6> prefix = {"fst", "snd", "inl", "inr", "efq", "reset"};
    for (auto kw : prefix) {
        if (is_word(kw)) {
            next();
            Proof p = proof_atom();
            if (kw == "fst") return pfst(p);
            if (kw == "snd") return psnd(p);
            if (kw == "inl") return inl(p);
            if (kw == "inr") return inr(p);
            if (kw == "efq") return efq(p);
            return reset(p);
        }
    }
    return proof_atom();
}

bool Parser::starts_proof_atom() const {
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident) return !is_reserved(t.text);
    return is_symbol("(") || is_symbol("[");
}

Proof Parser::proof_atom() {
    if (accept("(")) {
        Proof p = proof();
        if (accept(",")) {
            Proof q = proof();
            expect(")");
            return ppair(p, q);
        }
        if (accept(":")) {
            Formula a = formula();
            expect(")");
            return ascribe(p, a);
        }
        expect(")");
        return p;
    }
    if (accept("[")) {
        Term t = term();
        expect(",");
        Proof p = proof();
        expect("]");
        return ex_pair(t, p);
    }
    return hyp(ident());
}

// --- entry points -----------------------------------------------------------

Type parse_type(std::string_view text) {
    Parser p(text);
    Type t = p.type();
    p.expect_end();
    return t;
}

Term parse_term(std::string_view text) {
    Parser p(text);
    Term t = p.term();
    p.expect_end();
    return t;
}

Formula parse_formula(std::string_view text) {
    Parser p(text);
    Formula a = p.formula();
    p.expect_end();
    return a;
}

Proof parse_proof(std::string_view text) {
    Parser p(text);
    Proof q = p.proof();
    p.expect_end();
    return q;
}

Syntax parse(std::string_view text, Category what) {
    switch (what) {
    case Category::Type:
        return parse_type(text);
    case Category::Term:
        return parse_term(text);
    case Category::Formula:
        return parse_formula(text);
    case Category::Proof:
        return parse_proof(text);
    }
    throw std::logic_error("unknown syntactic category");
}

} // namespace dnsk
