// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dnsk/extract.hpp"
#include "dnsk/syntax.hpp"
#include "dnsk/typecheck.hpp"

namespace dnsk {

// --- axiom schemas ------------------------------------------------------------------

enum class Schema { DNS, AC, IND, REFL, SYM, TRANS, SUCC_INJ, ZERO_NE_SUCC };

std::string_view to_string(Schema s);
std::optional<Schema> schema_from_string(std::string_view s);

/// Parameters of a schema instance. Which fields are read depends on the
/// schema:
///   DNS          sorts {ρ}, body A, vars {x}
///   AC           sorts {ρ, σ}, body A, vars {x, y, f}
///   IND          body A, vars {n}
///   REFL         terms {t}
///   SYM          terms {t, s}
///   TRANS        terms {t, s, r}
///   SUCC_INJ     terms {t, s}
///   ZERO_NE_SUCC terms {t}
struct SchemaArgs {
    std::vector<Type> sorts;
    std::optional<Formula> body;
    std::vector<Name> vars;
    std::vector<Term> terms;
};

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The schema formula at the given parameters. Throws SchemaError on a
/// parameter-count mismatch and SortError if the instance is ill-sorted
/// under (sig, ctx).
///   DNS  (∀x:ρ ¬¬A) → ¬¬∀x:ρ A
///   AC   (∀x:ρ ∃y:σ A) → ∃f:ρ→σ ∀x:ρ A[y := f x]
///   IND  A[n:=0] → (∀n (A → A[n:=S n])) → ∀n A
Formula axiom_instance(const Signature& sig, const Context& ctx, Schema s, const SchemaArgs& args);

/// A realizer of the instance, or nullopt for DNS.
std::optional<Term> axiom_realizer(Schema s, const SchemaArgs& args);

// --- library ---------------------------------------------------------------------------

struct AxiomUse {
    Name hyp;
    Schema schema;
    SchemaArgs args;
};

struct TheoremEntry {
    std::string name;
    std::string description;
    Context context;
    std::vector<AxiomUse> axioms; // instances bound in `context`
    Annotation annotation = Annotation::Plain;
    Proof proof;
    Formula goal;
};

/// P:(nat), Q:(nat,nat), T:(nat,nat,nat), CT:().
Signature library_signature();

std::vector<TheoremEntry> build_library();
const TheoremEntry* find_entry(const std::vector<TheoremEntry>& lib, std::string_view name);

CheckReport check_entry(const TheoremEntry& e);

/// Extraction environment for an entry: axiom instances realized per schema
/// (DNS left unrealizable), other hypotheses bound to fresh variables
/// declared in `realizer_ctx`.
ExtractionEnv extraction_env(const TheoremEntry& e, Context& realizer_ctx);

/// Same, but with every hypothesis (DNS included) bound to a variable, so
/// the realizer sort can be checked without realizing DNS.
ExtractionEnv opaque_env(const TheoremEntry& e, Context& realizer_ctx);

/// The entry's proof applied to inert arguments until the goal is neither
/// an implication nor a universal: fresh hypotheses for antecedents, fresh
/// variables for quantifiers.
struct Saturated {
    Context context;
    Proof proof;
    Formula goal;
};
Saturated saturate(const TheoremEntry& e);

// --- mutants -------------------------------------------------------------------------

struct Mutant {
    std::string name;
    std::string base;
    std::string change;
    Proof proof;
    CheckErrorKind expected;
};

std::vector<Mutant> build_mutants();

} // namespace dnsk
