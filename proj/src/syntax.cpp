// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "dnsk/syntax.hpp"

#include <stdexcept>

namespace dnsk {

// --- Type -------------------------------------------------------------------

Type Type::nat() {
    static const Type t(std::make_shared<const Node>(Node{Kind::Nat, std::nullopt, std::nullopt}));
    return t;
}

Type Type::unit() {
    static const Type t(std::make_shared<const Node>(Node{Kind::Unit, std::nullopt, std::nullopt}));
    return t;
}

Type Type::arrow(Type domain, Type codomain) {
    return Type(std::make_shared<const Node>(Node{Kind::Arrow, std::move(domain), std::move(codomain)}));
}

Type Type::prod(Type left, Type right) {
    return Type(std::make_shared<const Node>(Node{Kind::Prod, std::move(left), std::move(right)}));
}

const Type& Type::left() const {
    if (!node_->left) throw std::logic_error("Type::left on a base sort");
    return *node_->left;
}

const Type& Type::right() const {
    if (!node_->right) throw std::logic_error("Type::right on a base sort");
    return *node_->right;
}

bool operator==(const Type& a, const Type& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.is_nat() || a.is_unit()) return true;
    return a.left() == b.left() && a.right() == b.right();
}

// --- Term -------------------------------------------------------------------

Term Term::make(Kind k, Name name, std::optional<Type> type, std::vector<Term> children) {
    return Term(std::make_shared<const Node>(Node{k, std::move(name), std::move(type), std::move(children)}));
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.name() != b.name() || a.node_->type != b.node_->type) return false;
    return a.node_->children == b.node_->children;
}

Term var(Name x) { return Term::make(Term::Kind::Var, std::move(x), std::nullopt, {}); }
Term lam(Name x, Type domain, Term body) {
    return Term::make(Term::Kind::Lam, std::move(x), std::move(domain), {std::move(body)});
}
Term app(Term f, Term a) { return Term::make(Term::Kind::App, {}, std::nullopt, {std::move(f), std::move(a)}); }
Term app(Term f, std::initializer_list<Term> args) {
    for (const auto& a : args) f = app(f, a);
    return f;
}
Term pair(Term a, Term b) { return Term::make(Term::Kind::Pair, {}, std::nullopt, {std::move(a), std::move(b)}); }
Term proj1(Term t) { return Term::make(Term::Kind::Proj1, {}, std::nullopt, {std::move(t)}); }
Term proj2(Term t) { return Term::make(Term::Kind::Proj2, {}, std::nullopt, {std::move(t)}); }
Term star() {
    static const Term t = Term::make(Term::Kind::Star, {}, std::nullopt, {});
    return t;
}
Term zero() {
    static const Term t = Term::make(Term::Kind::Zero, {}, std::nullopt, {});
    return t;
}
Term succ(Term t) { return Term::make(Term::Kind::Succ, {}, std::nullopt, {std::move(t)}); }
Term rec(Type result, Term scrutinee, Term base, Term step) {
    return Term::make(Term::Kind::Rec, {}, std::move(result),
                      {std::move(scrutinee), std::move(base), std::move(step)});
}

Term numeral(unsigned n) {
    Term t = zero();
    for (unsigned i = 0; i < n; ++i) t = succ(t);
    return t;
}

std::optional<unsigned> numeral_value(const Term& t) {
    unsigned n = 0;
    const Term* cur = &t;
    while (cur->is(Term::Kind::Succ)) {
        ++n;
        cur = &cur->operand();
    }
    if (!cur->is(Term::Kind::Zero)) return std::nullopt;
    return n;
}

// --- Formula ----------------------------------------------------------------

Formula Formula::make(Kind k, Name name, std::optional<Type> sort, std::vector<Term> terms,
                      std::vector<Formula> children) {
    return Formula(std::make_shared<const Node>(
        Node{k, std::move(name), std::move(sort), std::move(terms), std::move(children)}));
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.name() != b.name() || a.node_->sort != b.node_->sort) return false;
    return a.terms() == b.terms() && a.node_->children == b.node_->children;
}

Formula bot() {
    static const Formula f = Formula::make(Formula::Kind::Bot, {}, std::nullopt, {}, {});
    return f;
}
Formula eq(Term lhs, Term rhs) {
    return Formula::make(Formula::Kind::Eq, {}, std::nullopt, {std::move(lhs), std::move(rhs)}, {});
}
Formula pred(Name symbol, std::vector<Term> args) {
    return Formula::make(Formula::Kind::Pred, std::move(symbol), std::nullopt, std::move(args), {});
}
Formula conj(Formula a, Formula b) {
    return Formula::make(Formula::Kind::And, {}, std::nullopt, {}, {std::move(a), std::move(b)});
}
Formula disj(Formula a, Formula b) {
    return Formula::make(Formula::Kind::Or, {}, std::nullopt, {}, {std::move(a), std::move(b)});
}
Formula imp(Formula a, Formula b) {
    return Formula::make(Formula::Kind::Imp, {}, std::nullopt, {}, {std::move(a), std::move(b)});
}
Formula neg(Formula a) { return imp(std::move(a), bot()); }
Formula forall(Name x, Type sort, Formula body) {
    return Formula::make(Formula::Kind::Forall, std::move(x), std::move(sort), {}, {std::move(body)});
}
Formula exists(Name x, Type sort, Formula body) {
    return Formula::make(Formula::Kind::Exists, std::move(x), std::move(sort), {}, {std::move(body)});
}

bool is_arithmetical(const Formula& a) {
    if (a.is_quantifier() && !a.sort().is_nat()) return false;
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (!is_arithmetical(a.sub(i))) return false;
    return true;
}

bool is_quantifier_free(const Formula& a) {
    if (a.is_quantifier()) return false;
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (!is_quantifier_free(a.sub(i))) return false;
    return true;
}

// --- Proof ------------------------------------------------------------------

Proof Proof::make(Kind k, std::vector<Name> names, std::optional<Term> term,
                  std::optional<Formula> formula, std::vector<Proof> children) {
    return Proof(std::make_shared<const Node>(
        Node{k, std::move(names), std::move(term), std::move(formula), std::move(children)}));
}

bool operator==(const Proof& a, const Proof& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.names == y.names && x.term == y.term && x.formula == y.formula &&
           x.children == y.children;
}

using PK = Proof::Kind;

Proof hyp(Name a) { return Proof::make(PK::Hyp, {std::move(a)}, std::nullopt, std::nullopt, {}); }
Proof ppair(Proof p, Proof q) {
    return Proof::make(PK::Pair, {}, std::nullopt, std::nullopt, {std::move(p), std::move(q)});
}
Proof pfst(Proof p) { return Proof::make(PK::Fst, {}, std::nullopt, std::nullopt, {std::move(p)}); }
Proof psnd(Proof p) { return Proof::make(PK::Snd, {}, std::nullopt, std::nullopt, {std::move(p)}); }
Proof inl(Proof p) { return Proof::make(PK::Inl, {}, std::nullopt, std::nullopt, {std::move(p)}); }
Proof inr(Proof p) { return Proof::make(PK::Inr, {}, std::nullopt, std::nullopt, {std::move(p)}); }
Proof case_of(Proof scrut, Name a1, Proof q1, Name a2, Proof q2) {
    return Proof::make(PK::Case, {std::move(a1), std::move(a2)}, std::nullopt, std::nullopt,
                       {std::move(scrut), std::move(q1), std::move(q2)});
}
Proof plam(Name a, Proof body) {
    return Proof::make(PK::Lam, {std::move(a)}, std::nullopt, std::nullopt, {std::move(body)});
}
Proof papp(Proof p, Proof q) {
    return Proof::make(PK::App, {}, std::nullopt, std::nullopt, {std::move(p), std::move(q)});
}
Proof papp(Proof p, std::initializer_list<Proof> args) {
    for (const auto& q : args) p = papp(p, q);
    return p;
}
Proof tlam(Name x, Proof body) {
    return Proof::make(PK::TLam, {std::move(x)}, std::nullopt, std::nullopt, {std::move(body)});
}
Proof tapp(Proof p, Term t) { return Proof::make(PK::TApp, {}, std::move(t), std::nullopt, {std::move(p)}); }
Proof ex_pair(Term witness, Proof p) {
    return Proof::make(PK::ExPair, {}, std::move(witness), std::nullopt, {std::move(p)});
}
Proof dest(Proof scrut, Name x, Name a, Proof body) {
    return Proof::make(PK::Dest, {std::move(x), std::move(a)}, std::nullopt, std::nullopt,
                       {std::move(scrut), std::move(body)});
}
Proof efq(Proof p) { return Proof::make(PK::Efq, {}, std::nullopt, std::nullopt, {std::move(p)}); }
Proof reset(Proof p) { return Proof::make(PK::Reset, {}, std::nullopt, std::nullopt, {std::move(p)}); }
Proof shift(Name k, Proof body) {
    return Proof::make(PK::Shift, {std::move(k)}, std::nullopt, std::nullopt, {std::move(body)});
}
Proof ascribe(Proof p, Formula a) {
    return Proof::make(PK::Ascribe, {}, std::nullopt, std::move(a), {std::move(p)});
}

} // namespace dnsk
