// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dnsk {

using Name = std::string;

// ---------------------------------------------------------------------------
// Sorts: 0, arrow, product, unit.
// ---------------------------------------------------------------------------
class Type {
public:
    enum class Kind { Nat, Unit, Arrow, Prod };

    static Type nat();
    static Type unit();
    static Type arrow(Type domain, Type codomain);
    static Type prod(Type left, Type right);

    Kind kind() const;
    bool is_nat() const { return kind() == Kind::Nat; }
    bool is_unit() const { return kind() == Kind::Unit; }
    bool is_arrow() const { return kind() == Kind::Arrow; }
    bool is_prod() const { return kind() == Kind::Prod; }

    /// Domain of an arrow, left factor of a product.
    const Type& left() const;
    /// Codomain of an arrow, right factor of a product.
    const Type& right() const;

    friend bool operator==(const Type& a, const Type& b);
    friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

private:
    struct Node;
    explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Type::Node {
    Kind kind;
    std::optional<Type> left;
    std::optional<Type> right;
};

inline Type::Kind Type::kind() const { return node_->kind; }

// ---------------------------------------------------------------------------
// Terms: individuals of the quantification domain (System T with pairs).
// ---------------------------------------------------------------------------
class Term {
public:
    enum class Kind { Var, Lam, App, Pair, Proj1, Proj2, Star, Zero, Succ, Rec };

    Kind kind() const;
    bool is(Kind k) const { return kind() == k; }

    /// Variable name, or the bound name of a Lam.
    const Name& name() const;
    /// Lam domain sort, or the result sort of Rec.
    const Type& type() const;
    const Term& child(std::size_t i) const;
    std::size_t arity() const;

    const Term& body() const { return child(0); }      // Lam
    const Term& fn() const { return child(0); }        // App
    const Term& arg() const { return child(1); }       // App
    const Term& first() const { return child(0); }     // Pair
    const Term& second() const { return child(1); }    // Pair
    const Term& operand() const { return child(0); }   // Proj1, Proj2, Succ
    const Term& scrutinee() const { return child(0); } // Rec
    const Term& base() const { return child(1); }      // Rec
    const Term& step() const { return child(2); }      // Rec

    /// Syntactic identity (names included). Use alpha_equal for binders.
    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

    struct Node;
    static Term make(Kind k, Name name, std::optional<Type> type, std::vector<Term> children);

private:
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Term::Node {
    Kind kind;
    Name name;
    std::optional<Type> type;
    std::vector<Term> children;
};

inline Term::Kind Term::kind() const { return node_->kind; }
inline const Name& Term::name() const { return node_->name; }
inline const Type& Term::type() const { return *node_->type; }
inline const Term& Term::child(std::size_t i) const { return node_->children.at(i); }
inline std::size_t Term::arity() const { return node_->children.size(); }

Term var(Name x);
Term lam(Name x, Type domain, Term body);
Term app(Term f, Term a);
Term app(Term f, std::initializer_list<Term> args);
Term pair(Term a, Term b);
Term proj1(Term t);
Term proj2(Term t);
Term star();
Term zero();
Term succ(Term t);
Term rec(Type result, Term scrutinee, Term base, Term step);
Term numeral(unsigned n);
/// Returns n when t is S^n 0.
std::optional<unsigned> numeral_value(const Term& t);

// ---------------------------------------------------------------------------
// Formulas. ~A is Imp(A, Bot); there is no separate negation node.
// ---------------------------------------------------------------------------
class Formula {
public:
    enum class Kind { Bot, Eq, Pred, And, Or, Imp, Forall, Exists };

    Kind kind() const;
    bool is(Kind k) const { return kind() == k; }
    bool is_prime() const { return is(Kind::Bot) || is(Kind::Eq) || is(Kind::Pred); }
    bool is_quantifier() const { return is(Kind::Forall) || is(Kind::Exists); }
    bool is_negation() const { return is(Kind::Imp) && rhs().is(Kind::Bot); }

    /// Predicate symbol, or quantifier-bound variable.
    const Name& name() const;
    /// Quantifier sort.
    const Type& sort() const;
    /// Eq: lhs, rhs. Pred: argument list.
    const std::vector<Term>& terms() const;

    const Formula& lhs() const;
    const Formula& rhs() const;
    const Formula& body() const;
    const Formula& sub(std::size_t i) const;
    std::size_t arity() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    struct Node;
    static Formula make(Kind k, Name name, std::optional<Type> sort, std::vector<Term> terms,
                        std::vector<Formula> children);

private:
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    Kind kind;
    Name name;
    std::optional<Type> sort;
    std::vector<Term> terms;
    std::vector<Formula> children;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline const Name& Formula::name() const { return node_->name; }
inline const Type& Formula::sort() const { return *node_->sort; }
inline const std::vector<Term>& Formula::terms() const { return node_->terms; }
inline const Formula& Formula::lhs() const { return node_->children.at(0); }
inline const Formula& Formula::rhs() const { return node_->children.at(1); }
inline const Formula& Formula::body() const { return node_->children.at(0); }
inline const Formula& Formula::sub(std::size_t i) const { return node_->children.at(i); }
inline std::size_t Formula::arity() const { return node_->children.size(); }

Formula bot();
Formula eq(Term lhs, Term rhs);
Formula pred(Name symbol, std::vector<Term> args = {});
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula neg(Formula a);
Formula forall(Name x, Type sort, Formula body);
Formula exists(Name x, Type sort, Formula body);

/// Every quantifier binds sort 0.
bool is_arithmetical(const Formula& a);
bool is_quantifier_free(const Formula& a);

// ---------------------------------------------------------------------------
// Proof terms of the natural deduction system, plus Ascribe.
// ---------------------------------------------------------------------------
class Proof {
public:
    enum class Kind {
        Hyp, Pair, Fst, Snd, Inl, Inr, Case, Lam, App,
        TLam, TApp, ExPair, Dest, Efq, Reset, Shift, Ascribe
    };

    Kind kind() const;
    bool is(Kind k) const { return kind() == k; }

    /// Hyp name; binder of Lam, TLam, Shift; first binder of Case; bound
    /// individual variable of Dest.
    const Name& name() const;
    /// Second binder of Case; bound hypothesis of Dest.
    const Name& name2() const;
    /// TApp argument, ExPair witness.
    const Term& term() const;
    /// Ascribed formula.
    const Formula& formula() const;

    const Proof& child(std::size_t i) const;
    std::size_t arity() const;

    friend bool operator==(const Proof& a, const Proof& b);
    friend bool operator!=(const Proof& a, const Proof& b) { return !(a == b); }

    struct Node;
    static Proof make(Kind k, std::vector<Name> names, std::optional<Term> term,
                      std::optional<Formula> formula, std::vector<Proof> children);
    const Node& node() const;

private:
    explicit Proof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Proof::Node {
    Kind kind;
    std::vector<Name> names;
    std::optional<Term> term;
    std::optional<Formula> formula;
    std::vector<Proof> children;
};

inline Proof::Kind Proof::kind() const { return node_->kind; }
inline const Name& Proof::name() const { return node_->names.at(0); }
inline const Name& Proof::name2() const { return node_->names.at(1); }
inline const Term& Proof::term() const { return *node_->term; }
inline const Formula& Proof::formula() const { return *node_->formula; }
inline const Proof& Proof::child(std::size_t i) const { return node_->children.at(i); }
inline std::size_t Proof::arity() const { return node_->children.size(); }
inline const Proof::Node& Proof::node() const { return *node_; }

Proof hyp(Name a);
Proof ppair(Proof p, Proof q);
Proof pfst(Proof p);
Proof psnd(Proof p);
Proof inl(Proof p);
Proof inr(Proof p);
Proof case_of(Proof scrut, Name a1, Proof q1, Name a2, Proof q2);
Proof plam(Name a, Proof body);
Proof papp(Proof p, Proof q);
Proof papp(Proof p, std::initializer_list<Proof> args);
Proof tlam(Name x, Proof body);
Proof tapp(Proof p, Term t);
Proof ex_pair(Term witness, Proof p);
Proof dest(Proof scrut, Name x, Name a, Proof body);
Proof efq(Proof p);
Proof reset(Proof p);
Proof shift(Name k, Proof body);
Proof ascribe(Proof p, Formula a);

// ---------------------------------------------------------------------------
// Signature of uninterpreted predicate symbols.
// ---------------------------------------------------------------------------
struct Signature {
    std::map<Name, std::vector<Type>> predicates;

    Signature& declare(Name symbol, std::vector<Type> sorts) {
        predicates[std::move(symbol)] = std::move(sorts);
        return *this;
    }
    const std::vector<Type>* find(const Name& symbol) const {
        auto it = predicates.find(symbol);
        return it == predicates.end() ? nullptr : &it->second;
    }
};

} // namespace dnsk
