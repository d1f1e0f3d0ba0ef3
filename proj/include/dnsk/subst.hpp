// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <set>

#include "dnsk/syntax.hpp"

namespace dnsk {

using NameSet = std::set<Name>;

NameSet free_vars(const Term& t);
NameSet free_vars(const Formula& a);
/// Free individual variables of a proof term (witnesses, TApp arguments,
/// ascribed formulas), minus those bound by tfun and dest.
NameSet free_term_vars(const Proof& p);
/// Free hypothesis names of a proof term.
NameSet free_hyps(const Proof& p);

/// Every variable name occurring in the value, bound or free.
void collect_names(const Term& t, NameSet& out);
void collect_names(const Formula& a, NameSet& out);
void collect_names(const Proof& p, NameSet& out);

/// base, base', base'', ... : the first not in `avoid`.
Name prime_fresh(const Name& base, const NameSet& avoid);

/// Deterministic generator of fresh names `<prefix><n>`, skipping anything
/// already used. Each translation call seeds its own instance.
class FreshNames {
public:
    explicit FreshNames(NameSet used = {}) : used_(std::move(used)) {}
    void reserve(const Name& n) { used_.insert(n); }
    void reserve(const NameSet& ns) { used_.insert(ns.begin(), ns.end()); }
    Name next(const Name& prefix);

private:
    NameSet used_;
    std::map<Name, unsigned> counters_;
};

/// Capture-avoiding substitution body[x := r]; a bound variable that would
/// capture a free variable of r is renamed with primes.
Term subst_term(const Term& body, const Name& x, const Term& r);
Formula subst_formula(const Formula& body, const Name& x, const Term& r);
/// Substitutes an individual variable inside a proof term.
Proof subst_term_in_proof(const Proof& p, const Name& x, const Term& r);
/// Substitutes a hypothesis by a proof term.
Proof subst_hyp(const Proof& p, const Name& a, const Proof& q);

bool alpha_equal(const Term& a, const Term& b);
bool alpha_equal(const Formula& a, const Formula& b);
bool alpha_equal(const Proof& a, const Proof& b);

} // namespace dnsk
