// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dnsk/syntax.hpp"

namespace dnsk {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct Token {
    enum class Kind { Ident, Number, Symbol, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view text);

/// Recursive-descent parser over the concrete grammar. Exposes its token
/// cursor so the .dnsk source-file reader can drive it statement by statement.
class Parser {
public:
    explicit Parser(std::string_view text);

    Type type();
    Term term();
    /// Term atom with trailing projections: what may follow `@`.
    Term term_postfix();
    Formula formula();
    Proof proof();

    /// Bare identifiers in formula position that name an entry here expand
    /// to that formula.
    void set_formula_macros(const std::map<Name, Formula>* macros) { macros_ = macros; }

    const Token& peek(std::size_t k = 0) const;
    Token next();
    bool at_end() const { return peek().kind == Token::Kind::End; }
    bool is_symbol(std::string_view s, std::size_t k = 0) const;
    bool is_word(std::string_view w, std::size_t k = 0) const;
    bool accept(std::string_view sym);
    void expect(std::string_view sym);
    void expect_word(std::string_view w);
    /// A non-reserved identifier.
    Name ident();
    unsigned number();
    void expect_end();
    [[noreturn]] void fail(const std::string& msg) const;

    static bool is_reserved(std::string_view w);

private:
    Type type_prod();
    Type type_atom();
    Term term_app_item();
    Term term_atom();
    bool starts_term_atom() const;
    Formula quantifier();
    Formula imp_level();
    Formula disj_level();
    Formula conj_level();
    Formula unary_level();
    Formula atom_formula();
    Proof proof_item();
    Proof proof_atom();
    bool starts_proof_atom() const;

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const std::map<Name, Formula>* macros_ = nullptr;
};

Type parse_type(std::string_view text);
Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);
Proof parse_proof(std::string_view text);

enum class Category { Type, Term, Formula, Proof };
using Syntax = std::variant<Type, Term, Formula, Proof>;
Syntax parse(std::string_view text, Category what);

} // namespace dnsk
