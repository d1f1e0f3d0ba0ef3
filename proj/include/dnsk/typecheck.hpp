// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnsk/subst.hpp"
#include "dnsk/syntax.hpp"

namespace dnsk {

/// The judgment marker: Plain is the empty annotation, Bot the subscript
/// that licenses shift.
enum class Annotation { Plain, Bot };

std::string_view to_string(Annotation a);

/// Γ: sorted individual variables and named hypotheses. Hypothesis names
/// are unique; assuming a name again replaces the earlier entry.
struct Context {
    std::map<Name, Type> term_vars;
    std::vector<std::pair<Name, Formula>> hyps;

    Context& declare(const Name& x, Type sort);
    Context& assume(const Name& a, Formula f);

    const Type* find_var(const Name& x) const;
    const Formula* find_hyp(const Name& a) const;
    /// Free individual variables of every hypothesis.
    NameSet hyp_free_vars() const;
};

class SortError : public std::runtime_error {
public:
    enum class Kind { UnboundVar, SortMismatch, UnknownPredicate, ArityMismatch };

    SortError(Kind kind, std::string expected, std::string got, std::string location);

    Kind kind() const { return kind_; }
    const std::string& expected() const { return expected_; }
    const std::string& got() const { return got_; }
    const std::string& location() const { return location_; }

private:
    Kind kind_;
    std::string expected_;
    std::string got_;
    std::string location_;
};

std::string_view to_string(SortError::Kind k);

/// Simple-type synthesis for terms.
Type infer_term_type(const Context& ctx, const Term& t);

/// Well-sortedness of a formula: =₀ at nat, predicate arities and sorts
/// per the signature. Throws SortError.
void check_formula(const Signature& sig, const Context& ctx, const Formula& a);

enum class CheckErrorKind {
    AnnotationViolation,
    NotSynthesizable,
    FreshnessViolation,
    FormulaMismatch,
    ScrutineeNotSum,
    ScrutineeNotExists,
    ResetGoalNotBot,
    UnboundHypothesis,
    UnboundVar,
    SortMismatch,
    UnknownPredicate,
    ArityMismatch,
};

std::string_view to_string(CheckErrorKind k);

struct CheckError {
    CheckErrorKind kind;
    /// Rule names from the root to the failing node, '/'-separated.
    std::string path;
    std::string expected;
    std::string got;
};

/// One rule application. `formula` is the conclusion; premises are in the
/// order the rule lists them.
struct Derivation {
    std::string rule;
    Annotation annotation;
    Proof proof;
    Formula formula;
    std::vector<Derivation> premises;
};

struct CheckReport {
    bool accepted = false;
    std::optional<Derivation> derivation;
    std::optional<CheckError> error;
};

/// Bidirectional checking of Γ ⊢_ann p : goal.
///
/// Introduction forms, case, dest, efq, reset and shift are checked against
/// the goal; hypotheses, projections, applications, instantiations and
/// ascriptions synthesize. A lambda applied directly to a synthesizing
/// argument is also checked (the argument's formula types the binder).
CheckReport check_proof(const Signature& sig, const Context& ctx, Annotation ann, const Proof& p,
                        const Formula& goal);

/// True iff every Shift in the derivation sits strictly inside the premise
/// subtree of some Reset.
bool shifts_guarded_by_reset(const Derivation& d);

} // namespace dnsk
