// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "dnsk/printer.hpp"

namespace dnsk {

using TK = Term::Kind;
using FK = Formula::Kind;
using PK = Proof::Kind;

namespace {

std::string paren(const std::string& s, bool wrap) { return wrap ? "(" + s + ")" : s; }

// Types: 0 arrow, 1 product, 2 atom.
std::string print_type(const Type& t, int level) {
    switch (t.kind()) {
    case Type::Kind::Nat:
        return "nat";
    case Type::Kind::Unit:
        return "unit";
    case Type::Kind::Arrow:
        return paren(print_type(t.left(), 1) + " -> " + print_type(t.right(), 0), level > 0);
    case Type::Kind::Prod:
        return paren(print_type(t.left(), 1) + " * " + print_type(t.right(), 2), level > 1);
    }
    return "?";
}

// Terms: 0 open (fun), 1 application, 2 atom.
std::string print_term(const Term& t, int level) {
    switch (t.kind()) {
    case TK::Var:
        return t.name();
    case TK::Star:
        return "star";
    case TK::Zero:
        return "0";
    case TK::Lam:
        return paren("fun (" + t.name() + ":" + print_type(t.type(), 0) + ") => " + print_term(t.body(), 0),
                     level > 0);
    case TK::App:
        return paren(print_term(t.fn(), 1) + " " + print_term(t.arg(), 2), level > 1);
    case TK::Succ:
        return paren("S " + print_term(t.operand(), 2), level > 1);
    case TK::Proj1:
        return print_term(t.operand(), 2) + ".1";
    case TK::Proj2:
        return print_term(t.operand(), 2) + ".2";
    case TK::Pair:
        return "(" + print_term(t.first(), 0) + ", " + print_term(t.second(), 0) + ")";
    case TK::Rec:
        return "rec[" + print_type(t.type(), 0) + "](" + print_term(t.scrutinee(), 0) + "; " +
               print_term(t.base(), 0) + "; " + print_term(t.step(), 0) + ")";
    }
    return "?";
}

// Formulas: 0 quantifier, 1 implication, 2 disjunction, 3 conjunction,
// 4 negation, 5 atom. A quantifier reads as far right as possible, so it
// needs parentheses exactly when something follows it.
std::string print_formula(const Formula& a, int level, bool rightmost) {
    auto wrapped = [&](int own, const auto& body) {
        bool wrap = level > own;
        return paren(body(wrap ? true : rightmost), wrap);
    };
    switch (a.kind()) {
    case FK::Bot:
        return "bot";
    case FK::Eq:
        return print_term(a.terms()[0], 0) + " = " + print_term(a.terms()[1], 0);
    case FK::Pred: {
        if (a.terms().empty()) return a.name();
        std::string s = a.name() + "(";
        for (std::size_t i = 0; i < a.terms().size(); ++i) {
            if (i) s += ", ";
            s += print_term(a.terms()[i], 0);
        }
        return s + ")";
    }
    case FK::Forall:
    case FK::Exists: {
        std::string s = std::string(a.is(FK::Forall) ? "forall " : "exists ") + a.name() + ":" +
                        print_type(a.sort(), 0) + ". " + print_formula(a.body(), 0, true);
        return paren(s, !rightmost);
    }
    case FK::Imp:
        if (a.is_negation()) return "~" + print_formula(a.lhs(), 4, rightmost);
        return wrapped(1, [&](bool rm) {
            return print_formula(a.lhs(), 2, false) + " -> " + print_formula(a.rhs(), 1, rm);
        });
    case FK::Or:
        return wrapped(2, [&](bool rm) {
            return print_formula(a.lhs(), 3, false) + " \\/ " + print_formula(a.rhs(), 2, rm);
        });
    case FK::And:
        return wrapped(3, [&](bool rm) {
            return print_formula(a.lhs(), 4, false) + " /\\ " + print_formula(a.rhs(), 3, rm);
        });
    }
    return "?";
}

bool is_open(const Proof& p) {
    switch (p.kind()) {
    case PK::Lam:
    case PK::TLam:
    case PK::Shift:
    case PK::Case:
    case PK::Dest:
        return true;
    default:
        return false;
    }
}

// Proofs: 0 open (binders, case, dest), 1 application, 2 atom.
std::string print_proof(const Proof& p, int level, bool rightmost) {
    if (is_open(p)) {
        bool wrap = level > 0 || !rightmost;
        std::string s;
        switch (p.kind()) {
        case PK::Lam:
            s = "fun " + p.name() + " => " + print_proof(p.child(0), 0, true);
            break;
        case PK::TLam:
            s = "tfun " + p.name() + " => " + print_proof(p.child(0), 0, true);
            break;
        case PK::Shift:
            s = "shift " + p.name() + " => " + print_proof(p.child(0), 0, true);
            break;
        case PK::Case:
            s = "case " + print_proof(p.child(0), 0, false) + " of " + p.name() + " => " +
                print_proof(p.child(1), 0, false) + " | " + p.name2() + " => " + print_proof(p.child(2), 0, true);
            break;
        case PK::Dest:
            s = "dest " + print_proof(p.child(0), 0, false) + " as [" + p.name() + ", " + p.name2() + "] in " +
                print_proof(p.child(1), 0, true);
            break;
        default:
            break;
        }
        return paren(s, wrap);
    }
    auto prefix = [&](const char* kw) { return paren(std::string(kw) + " " + print_proof(p.child(0), 2, true), level > 1); };
    switch (p.kind()) {
    case PK::Hyp:
        return p.name();
    case PK::Pair:
        return "(" + print_proof(p.child(0), 0, true) + ", " + print_proof(p.child(1), 0, true) + ")";
    case PK::ExPair:
        return "[" + print_term(p.term(), 0) + ", " + print_proof(p.child(0), 0, true) + "]";
    case PK::Ascribe:
        return "(" + print_proof(p.child(0), 0, true) + " : " + print_formula(p.formula(), 0, true) + ")";
    case PK::App:
        return paren(print_proof(p.child(0), 1, false) + " " + print_proof(p.child(1), 2, true), level > 1);
    case PK::TApp:
        return paren(print_proof(p.child(0), 1, false) + " @ " + print_term(p.term(), 2), level > 1);
    case PK::Fst:
        return prefix("fst");
    case PK::Snd:
        return prefix("snd");
    case PK::Inl:
        return prefix("inl");
    case PK::Inr:
        return prefix("inr");
    case PK::Efq:
        return prefix("efq");
    case PK::Reset:
        return prefix("reset");
    default:
        return "?";
    }
}

} // namespace

std::string to_string(const Type& t) { return print_type(t, 0); }
std::string to_string(const Term& t) { return print_term(t, 0); }
std::string to_string(const Formula& a) { return print_formula(a, 0, true); }
std::string to_string(const Proof& p) { return print_proof(p, 0, true); }

} // namespace dnsk
