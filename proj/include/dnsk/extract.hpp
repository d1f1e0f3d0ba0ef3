// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dnsk/syntax.hpp"
#include "dnsk/typecheck.hpp"

namespace dnsk {

class ExtractError : public std::runtime_error {
public:
    enum class Kind { ControlNodePresent, UnmappedHypothesis, UnrealizableAxiom };

    ExtractError(Kind kind, const std::string& detail);
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

std::string_view to_string(ExtractError::Kind k);

/// Realizers for the free hypotheses of a derivation. An axiom realizer
/// takes precedence over a hypothesis variable; names in `unrealizable`
/// (DNS instances) have no System T realizer unless one is supplied.
struct ExtractionEnv {
    std::map<Name, Term> hyp_realizers;
    std::map<Name, Term> axiom_realizers;
    std::set<Name> unrealizable;

    /// Maps a hypothesis to a fresh-named realizer variable of sort τ(f),
    /// declaring it in `ctx`.
    void bind(const Name& hyp, const Name& var, const Formula& f, Context& ctx);
};

/// Canonical closed inhabitant: 0, star, constant functions, pairs.
Term dummy(const Type& t);

/// Realizer of the derivation's conclusion, of sort τ(conclusion).
///   ∨E compiles to rec[τ](flag; left; fun _ => fun _ => right);
///   ∃I (t, p) to (e(p), t), realizer first.
Term extract_mr(const Derivation& d, const ExtractionEnv& env);

/// fun a => (fun x => (a x).1, fun x => (a x).2), realizing
/// (∀x:ρ ∃y:σ A) → ∃f:ρ→σ ∀x A(x, f x).
Term ac_realizer(const Type& rho, const Type& sigma, const Formula& a);

/// fun b => fun s => fun n => rec[τ(A)](n; b; s), realizing
/// A(0) → (∀n. A(n) → A(S n)) → ∀n A(n), where A has free variable n.
Term induction_realizer(const Formula& a, const Name& n);

} // namespace dnsk
