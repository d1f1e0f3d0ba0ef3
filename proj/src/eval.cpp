// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "dnsk/eval.hpp"

#include "dnsk/printer.hpp"
#include "dnsk/subst.hpp"

namespace dnsk {

using TK = Term::Kind;
using FK = Formula::Kind;
using PK = Proof::Kind;

EvalError::EvalError(Kind kind, const std::string& detail)
    : std::runtime_error(std::string(dnsk::to_string(kind)) + ": " + detail), kind_(kind) {}

std::string_view to_string(EvalError::Kind k) {
    switch (k) {
    case EvalError::Kind::IllSorted:
        return "IllSorted";
    case EvalError::Kind::HigherSortQuantifier:
        return "HigherSortQuantifier";
    case EvalError::Kind::MissingPredTable:
        return "MissingPredTable";
    }
    return "?";
}

// --- System T -------------------------------------------------------------------

namespace {

Term rebuild(const Term& t, std::vector<Term> children) {
    bool typed = t.is(TK::Lam) || t.is(TK::Rec);
    return Term::make(t.kind(), t.name(), typed ? std::optional<Type>(t.type()) : std::nullopt,
                      std::move(children));
}

std::vector<Term> children_of(const Term& t) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < t.arity(); ++i) out.push_back(t.child(i));
    return out;
}

bool is_redex(const Term& t) {
    switch (t.kind()) {
    case TK::App:
        return t.fn().is(TK::Lam);
    case TK::Proj1:
    case TK::Proj2:
        return t.operand().is(TK::Pair);
    case TK::Rec:
        return t.scrutinee().is(TK::Zero) || t.scrutinee().is(TK::Succ);
    default:
        return false;
    }
}

/// One contraction at the root; t must satisfy is_redex.
Term contract(const Term& t) {
    switch (t.kind()) {
    case TK::App:
        return subst_term(t.fn().body(), t.fn().name(), t.arg());
    case TK::Proj1:
        return t.operand().first();
    case TK::Proj2:
        return t.operand().second();
    case TK::Rec: {
        if (t.scrutinee().is(TK::Zero)) return t.base();
        const Term& m = t.scrutinee().operand();
        return app(app(t.step(), m), rec(t.type(), m, t.base(), t.step()));
    }
    default:
        throw std::logic_error("not a redex");
    }
}

Term nf(const Term& t) {
    switch (t.kind()) {
    case TK::Var:
    case TK::Star:
    case TK::Zero:
        return t;
    case TK::Lam:
        return lam(t.name(), t.type(), nf(t.body()));
    case TK::App: {
        Term f = nf(t.fn());
        Term a = nf(t.arg());
        if (f.is(TK::Lam)) return nf(subst_term(f.body(), f.name(), a));
        return app(f, a);
    }
    case TK::Pair:
        return pair(nf(t.first()), nf(t.second()));
    case TK::Proj1:
    case TK::Proj2: {
        Term p = nf(t.operand());
        if (p.is(TK::Pair)) return t.is(TK::Proj1) ? p.first() : p.second();
        return t.is(TK::Proj1) ? proj1(p) : proj2(p);
    }
    case TK::Succ:
        return succ(nf(t.operand()));
    case TK::Rec: {
        Term n = nf(t.scrutinee());
        // Unfold iteratively on numerals to keep recursion depth flat.
        if (n.is(TK::Zero) || n.is(TK::Succ)) {
            std::vector<Term> preds;
            while (n.is(TK::Succ)) {
                n = n.operand();
                preds.push_back(n);
            }
            if (n.is(TK::Zero)) {
                Term step = nf(t.step());
                Term acc = nf(t.base());
                for (auto it = preds.rbegin(); it != preds.rend(); ++it) acc = nf(app(app(step, *it), acc));
                return acc;
            }
            Term acc = rec(t.type(), n, nf(t.base()), nf(t.step()));
            Term step = nf(t.step());
            for (auto it = preds.rbegin(); it != preds.rend(); ++it) acc = nf(app(app(step, *it), acc));
            return acc;
        }
        return rec(t.type(), n, nf(t.base()), nf(t.step()));
    }
    }
    throw std::logic_error("unhandled term kind");
}

void collect_redexes(const Term& t, TermPath& here, std::vector<TermPath>& out) {
    if (is_redex(t)) out.push_back(here);
    for (std::size_t i = 0; i < t.arity(); ++i) {
        here.push_back(i);
        collect_redexes(t.child(i), here, out);
        here.pop_back();
    }
}

Term contract_at(const Term& t, const TermPath& path, std::size_t depth) {
    if (depth == path.size()) return contract(t);
    std::vector<Term> kids = children_of(t);
    kids.at(path[depth]) = contract_at(kids[path[depth]], path, depth + 1);
    return rebuild(t, std::move(kids));
}

} // namespace

Term normalize_term(const Context& ctx, const Term& t) {
    try {
        infer_term_type(ctx, t);
    } catch (const SortError& e) {
        throw EvalError(EvalError::Kind::IllSorted, e.what());
    }
    return nf(t);
}

std::vector<TermPath> term_redexes(const Term& t) {
    std::vector<TermPath> out;
    TermPath here;
    collect_redexes(t, here, out);
    return out;
}

Term contract_term_at(const Term& t, const TermPath& path) { return contract_at(t, path, 0); }

// --- proof machine ----------------------------------------------------------------

namespace {

Proof with_child(const Proof& p, std::size_t i, Proof c) {
    const auto& n = p.node();
    std::vector<Proof> kids = n.children;
    kids.at(i) = std::move(c);
    return Proof::make(n.kind, n.names, n.term, n.formula, std::move(kids));
}

/// No Shift occurs outside a nested Reset (binders included).
bool pure(const Proof& p) {
    if (p.is(PK::Shift)) return false;
    if (p.is(PK::Reset)) return true;
    for (std::size_t i = 0; i < p.arity(); ++i)
        if (!pure(p.child(i))) return false;
    return true;
}

bool neutral(const Proof& p) {
    switch (p.kind()) {
    case PK::Hyp:
        return true;
    case PK::App:
        return neutral(p.child(0)) && is_value(p.child(1));
    case PK::TApp:
    case PK::Fst:
    case PK::Snd:
    case PK::Case:
    case PK::Dest:
    case PK::Ascribe:
        return neutral(p.child(0));
    case PK::Efq:
        return is_value(p.child(0));
    case PK::Reset:
        return is_value(p.child(0)) && !pure(p.child(0));
    default:
        return false;
    }
}

/// Splits a value into its outermost ascribed formula (if any) and the
/// first non-ascription node.
struct Peeled {
    std::optional<Formula> ascribed;
    Proof core;
};

Peeled peel(const Proof& v) {
    Peeled out{std::nullopt, v};
    while (out.core.is(PK::Ascribe)) {
        if (!out.ascribed) out.ascribed = out.core.formula();
        out.core = out.core.child(0);
    }
    return out;
}

Proof maybe_ascribe(Proof p, const std::optional<Formula>& a) { return a ? ascribe(std::move(p), *a) : p; }

struct Contracted {
    std::optional<Proof> result;
    std::string note;
};

Contracted stuck(std::string why) { return {std::nullopt, std::move(why)}; }

Contracted contract_elim(const Proof& p) {
    Peeled h = peel(p.child(0));
    const auto& asc = h.ascribed;
    switch (p.kind()) {
    case PK::App: {
        if (!h.core.is(PK::Lam)) return stuck("application of a non-function");
        if (asc && !asc->is(FK::Imp)) return stuck("function ascribed a non-implication");
        Proof arg = asc ? ascribe(p.child(1), asc->lhs()) : p.child(1);
        Proof body = subst_hyp(h.core.child(0), h.core.name(), arg);
        return {asc ? ascribe(body, asc->rhs()) : body, "beta"};
    }
    case PK::TApp: {
        if (!h.core.is(PK::TLam)) return stuck("instantiation of a non-tfun");
        if (asc && !asc->is(FK::Forall)) return stuck("tfun ascribed a non-universal");
        Proof body = subst_term_in_proof(h.core.child(0), h.core.name(), p.term());
        if (!asc) return {body, "beta-forall"};
        return {ascribe(body, subst_formula(asc->body(), asc->name(), p.term())), "beta-forall"};
    }
    case PK::Fst:
    case PK::Snd: {
        if (!h.core.is(PK::Pair)) return stuck("projection of a non-pair");
        if (asc && !asc->is(FK::And)) return stuck("pair ascribed a non-conjunction");
        bool first = p.is(PK::Fst);
        Proof part = h.core.child(first ? 0 : 1);
        std::optional<Formula> f;
        if (asc) f = first ? asc->lhs() : asc->rhs();
        return {maybe_ascribe(part, f), first ? "fst" : "snd"};
    }
    case PK::Case: {
        bool left = h.core.is(PK::Inl);
        if (!left && !h.core.is(PK::Inr)) return stuck("case on a non-injection");
        if (asc && !asc->is(FK::Or)) return stuck("injection ascribed a non-disjunction");
        std::optional<Formula> f;
        if (asc) f = left ? asc->lhs() : asc->rhs();
        Proof payload = maybe_ascribe(h.core.child(0), f);
        Proof branch = left ? subst_hyp(p.child(1), p.name(), payload) : subst_hyp(p.child(2), p.name2(), payload);
        return {branch, left ? "case-inl" : "case-inr"};
    }
    case PK::Dest: {
        if (!h.core.is(PK::ExPair)) return stuck("dest on a non-witness-pair");
        if (asc && !asc->is(FK::Exists)) return stuck("witness pair ascribed a non-existential");
        const Term& w = h.core.term();
        std::optional<Formula> f;
        if (asc) f = subst_formula(asc->body(), asc->name(), w);
        Proof body = subst_term_in_proof(p.child(1), p.name(), w);
        return {subst_hyp(body, p.name2(), maybe_ascribe(h.core.child(0), f)), "dest"};
    }
    default:
        return stuck("no rule applies");
    }
}

/// Descends to the leftmost-innermost non-value position. Returns false if
/// p is already a value.
bool decompose(const Proof& p, MachineConfig& cfg) {
    if (is_value(p)) return false;
    cfg.focus = p;
    switch (p.kind()) {
    case PK::Shift:
        return true;
    case PK::Case:
    case PK::Dest:
        if (!is_value(p.child(0))) {
            cfg.frames.push_back({p, 0});
            return decompose(p.child(0), cfg);
        }
        return true;
    default:
        for (std::size_t i = 0; i < p.arity(); ++i) {
            if (!is_value(p.child(i))) {
                cfg.frames.push_back({p, i});
                return decompose(p.child(i), cfg);
            }
        }
        return true;
    }
}

} // namespace

bool is_value(const Proof& p) {
    switch (p.kind()) {
    case PK::Hyp:
    case PK::Lam:
    case PK::TLam:
        return true;
    case PK::Pair:
        return is_value(p.child(0)) && is_value(p.child(1));
    case PK::Inl:
    case PK::Inr:
    case PK::ExPair:
        return is_value(p.child(0));
    case PK::Ascribe:
        return is_value(p.child(0));
    default:
        return neutral(p);
    }
}

MachineConfig load(const Proof& p) { return MachineConfig{p, {}}; }

Proof plug(const MachineConfig& cfg) {
    Proof p = cfg.focus;
    for (auto it = cfg.frames.rbegin(); it != cfg.frames.rend(); ++it) p = with_child(it->node, it->hole, p);
    return p;
}

namespace {

// The formula of the innermost hole when a frame ascribes it: (□ : A), or
// (f : A -> B) □.
std::optional<Formula> hole_formula(const std::vector<Frame>& frames) {
    if (frames.empty()) return std::nullopt;
    const Frame& f = frames.back();
    if (f.node.is(PK::Ascribe)) return f.node.formula();
    if (f.node.is(PK::App) && f.hole == 1 && f.node.child(0).is(PK::Ascribe) &&
        f.node.child(0).formula().is(Formula::Kind::Imp))
        return f.node.child(0).formula().lhs();
    return std::nullopt;
}

} // namespace

StepResult step_proof(const MachineConfig& in) {
    Proof whole = plug(in);
    MachineConfig cfg{whole, {}};
    if (!decompose(whole, cfg)) return {StepResult::Status::Done, MachineConfig{whole, {}}, "value"};
    const Proof& focus = cfg.focus;

    if (focus.is(PK::Shift)) {
        std::size_t r = cfg.frames.size();
        for (std::size_t i = cfg.frames.size(); i-- > 0;) {
            if (cfg.frames[i].node.is(PK::Reset)) {
                r = i;
                break;
            }
        }
        if (r == cfg.frames.size()) return {StepResult::Status::Stuck, cfg, "shift without an enclosing reset"};
        NameSet used;
        collect_names(whole, used);
        Name z = prime_fresh("z", used);
        MachineConfig inner{hyp(z), std::vector<Frame>(cfg.frames.begin() + static_cast<long>(r) + 1, cfg.frames.end())};
        Proof k = plam(z, reset(plug(inner)));
        if (auto a = hole_formula(inner.frames)) k = ascribe(k, neg(*a));
        cfg.frames.erase(cfg.frames.begin() + static_cast<long>(r) + 1, cfg.frames.end());
        cfg.focus = subst_hyp(focus.child(0), focus.name(), k);
        return {StepResult::Status::Stepped, cfg, "capture"};
    }
    if (focus.is(PK::Reset)) {
        // Only a pure value remains here; impure ones are values.
        cfg.focus = focus.child(0);
        return {StepResult::Status::Stepped, cfg, "reset-value"};
    }
    Contracted c = contract_elim(focus);
    if (!c.result) return {StepResult::Status::Stuck, cfg, c.note};
    cfg.focus = *c.result;
    return {StepResult::Status::Stepped, cfg, c.note};
}

std::string_view to_string(NormalizeResult::Status s) {
    switch (s) {
    case NormalizeResult::Status::Done:
        return "Done";
    case NormalizeResult::Status::FuelExhausted:
        return "FuelExhausted";
    case NormalizeResult::Status::Stuck:
        return "Stuck";
    }
    return "?";
}

NormalizeResult normalize_proof(const Proof& p, std::size_t fuel, bool record_trace) {
    NormalizeResult out{NormalizeResult::Status::FuelExhausted, p, 0, {}, {}};
    MachineConfig cfg = load(p);
    for (;;) {
        if (out.steps == fuel) {
            // Out of fuel unless already normal.
            if (!is_value(out.result)) return out;
            out.status = NormalizeResult::Status::Done;
            return out;
        }
        StepResult r = step_proof(cfg);
        if (r.status == StepResult::Status::Done) {
            out.status = NormalizeResult::Status::Done;
            return out;
        }
        if (r.status == StepResult::Status::Stuck) {
            out.status = NormalizeResult::Status::Stuck;
            out.reason = r.note;
            return out;
        }
        cfg = r.next;
        out.result = plug(cfg);
        ++out.steps;
        if (record_trace) out.trace.push_back(out.result);
    }
}

// --- bounded classical formulas -----------------------------------------------------

namespace {

void precheck(const Formula& a, const PredTables& tables) {
    switch (a.kind()) {
    case FK::Pred:
        if (!tables.count(a.name())) throw EvalError(EvalError::Kind::MissingPredTable, a.name());
        return;
    case FK::Forall:
    case FK::Exists:
        if (!a.sort().is_nat()) throw EvalError(EvalError::Kind::HigherSortQuantifier, to_string(a));
        precheck(a.body(), tables);
        return;
    default:
        for (std::size_t i = 0; i < a.arity(); ++i) precheck(a.sub(i), tables);
    }
}

/// Numeral value of a closed nat term, or nullopt when out of range.
std::optional<unsigned> value_in_range(const Term& t, unsigned bound) {
    auto v = numeral_value(nf(t));
    if (!v) throw EvalError(EvalError::Kind::IllSorted, "not a closed nat term: " + to_string(t));
    if (*v >= bound) return std::nullopt;
    return v;
}

bool truth(const Formula& a, unsigned bound, const PredTables& tables) {
    switch (a.kind()) {
    case FK::Bot:
        return false;
    case FK::Eq: {
        auto l = value_in_range(a.terms()[0], bound);
        auto r = value_in_range(a.terms()[1], bound);
        return l && r && *l == *r;
    }
    case FK::Pred: {
        std::vector<unsigned> args;
        for (const auto& t : a.terms()) {
            auto v = value_in_range(t, bound);
            if (!v) return false;
            args.push_back(*v);
        }
        return tables.at(a.name()).count(args) > 0;
    }
    case FK::And:
        return truth(a.lhs(), bound, tables) && truth(a.rhs(), bound, tables);
    case FK::Or:
        return truth(a.lhs(), bound, tables) || truth(a.rhs(), bound, tables);
    case FK::Imp:
        return !truth(a.lhs(), bound, tables) || truth(a.rhs(), bound, tables);
    case FK::Forall:
    case FK::Exists: {
        bool all = a.is(FK::Forall);
        for (unsigned v = 0; v < bound; ++v) {
            bool b = truth(subst_formula(a.body(), a.name(), numeral(v)), bound, tables);
            if (all && !b) return false;
            if (!all && b) return true;
        }
        return all;
    }
    }
    throw std::logic_error("unhandled formula kind");
}

} // namespace

bool eval_formula_bounded(const Signature& sig, const Formula& a, unsigned bound, const PredTables& tables) {
    precheck(a, tables);
    try {
        check_formula(sig, {}, a);
    } catch (const SortError& e) {
        throw EvalError(EvalError::Kind::IllSorted, e.what());
    }
    return truth(a, bound, tables);
}

} // namespace dnsk
