// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dnsk/syntax.hpp"
#include "dnsk/typecheck.hpp"

namespace dnsk {

class TranslateError : public std::runtime_error {
public:
    enum class Kind { RealizerTypeMismatch, WitnessTypeMismatch, ChallengeTypeMismatch };

    TranslateError(Kind kind, std::string expected, std::string got);

    Kind kind() const { return kind_; }
    const std::string& expected() const { return expected_; }
    const std::string& got() const { return got_; }

private:
    Kind kind_;
    std::string expected_;
    std::string got_;
};

std::string_view to_string(TranslateError::Kind k);

// --- Kuroda ---------------------------------------------------------------------

/// A_⊥: primes fixed; ∧, ∨, ∃ homomorphic; (A→B)_⊥ = A_⊥ → B^⊥;
/// (∀x A)_⊥ = ∀x A^⊥.
Formula kuroda_inner(const Formula& a);
/// A^⊥ = ¬¬A_⊥.
Formula kuroda(const Formula& a);

// --- modified realizability -------------------------------------------------------

/// τ(A), the realizer sort.
Type mr_type(const Formula& a);

/// "t mr A". Requires t : τ(A) under ctx and A well-sorted; bound variables
/// introduced by the → clause are named x0, x1, ... avoiding every name in
/// scope.
Formula mr_formula(const Signature& sig, const Context& ctx, const Term& t, const Formula& a);
/// As mr_formula, with the implication clause conjoined with A → B.
Formula mrt_formula(const Signature& sig, const Context& ctx, const Term& t, const Formula& a);

/// Intuitionistically sound clean-up of an unfolded realizability formula,
/// bottom-up: a quantifier whose variable does not occur is dropped (every
/// sort is inhabited), and ¬∀x¬X becomes ¬¬∃x X.
Formula mr_simplify(const Formula& a);

// --- Dialectica ---------------------------------------------------------------------

struct DiaTypes {
    Type witness;
    Type challenge;
};

/// W(A), C(A).
DiaTypes dia_types(const Formula& a);

/// |A|^t_s. Requires t : W(A), s : C(A) under ctx.
Formula dia_formula(const Signature& sig, const Context& ctx, const Term& t, const Term& s, const Formula& a);

/// |A|^{(t.2 s.1 s.2).1}_{s.1.2 (t.2 s.1 s.2).1 (t.2 s.1 s.2).2}, the
/// simplified form of |¬¬A|^t_s. Requires t : W(¬¬A), s : C(¬¬A).
Formula dia_nn_simplify(const Signature& sig, const Context& ctx, const Formula& a, const Term& t,
                        const Term& s);

/// ∀y:C(¬¬A). dia_nn_simplify(A, t, y) with y fresh; t is free at W(¬¬A).
Formula spector_target(const Formula& a, const Name& t);

} // namespace dnsk
