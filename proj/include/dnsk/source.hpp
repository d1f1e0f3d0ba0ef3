// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

// .dnsk source files: `;`-terminated statements, `//` comments.
//
//   pred P : nat;                 predicate symbol (`pred CT;` for arity 0)
//   var f : nat -> nat;           individual variable in scope
//   formula HP := forall x:nat. ...;
//   hyp r : CT -> ~HP;            named hypothesis
//   axiom d : DNS [x : nat] P(x); axiom instance bound as a hypothesis;
//                                 also AC [x : ρ, y : σ, f] A, IND [n] A,
//                                 REFL t, SYM t, s, TRANS t, s, r,
//                                 SUCC_INJ t, s, ZERO_NE_SUCC t
//   term two := S (S 0);          System T term
//   proof name : GOAL := p;       `proof bot name ...` checks at ⊥;
//                                 the goal may be omitted for eval-only use
//   check name; translate name; extract name; eval name;
//
// Formula names expand in later formulas. Names are unique per file and must
// be declared before use.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dnsk/syntax.hpp"
#include "dnsk/theorems.hpp"
#include "dnsk/typecheck.hpp"

namespace dnsk {

class SourceError : public std::runtime_error {
public:
    SourceError(const std::string& msg, int line)
        : std::runtime_error(std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct SourceFile {
    struct NamedFormula {
        Name name;
        Formula formula;
        Context context;
    };
    struct NamedTerm {
        Name name;
        Term term;
        Context context;
    };
    struct NamedProof {
        Name name;
        Annotation annotation = Annotation::Plain;
        std::optional<Formula> goal;
        Proof proof;
        Context context;
    };
    struct Directive {
        std::string verb;
        Name target;
    };

    Signature signature;
    Context context;
    std::vector<AxiomUse> axioms;
    std::vector<NamedFormula> formulas;
    std::vector<NamedTerm> terms;
    std::vector<NamedProof> proofs;
    std::vector<Directive> directives;

    /// Directive targets for `verb`, or every candidate if there are none.
    std::vector<Name> targets(std::string_view verb, const std::vector<Name>& all) const;
};

/// Throws ParseError (syntax) or SourceError (scoping, sorts, schemas).
SourceFile parse_source(std::string_view text);

} // namespace dnsk
