// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dnsk/syntax.hpp"
#include "dnsk/typecheck.hpp"

namespace dnsk {

class EvalError : public std::runtime_error {
public:
    enum class Kind { IllSorted, HigherSortQuantifier, MissingPredTable };

    EvalError(Kind kind, const std::string& detail);
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

std::string_view to_string(EvalError::Kind k);

// --- System T -------------------------------------------------------------------

/// Full normal form under β, projection and recursor rules. Throws
/// EvalError(IllSorted) unless t is well-sorted under ctx.
Term normalize_term(const Context& ctx, const Term& t);

/// Child-index path from the root to a subterm.
using TermPath = std::vector<std::size_t>;

/// Every redex position, in pre-order.
std::vector<TermPath> term_redexes(const Term& t);
/// Contracts the redex at `path` (which must be one of term_redexes(t)).
Term contract_term_at(const Term& t, const TermPath& path);

// --- proof machine ----------------------------------------------------------------

/// One evaluation-context layer: `node` with its child `hole` removed.
struct Frame {
    Proof node;
    std::size_t hole;
};

/// A proof term split into a focus and its surrounding frames, outermost
/// first. Reset frames delimit captured continuations.
struct MachineConfig {
    Proof focus;
    std::vector<Frame> frames;
};

MachineConfig load(const Proof& p);
Proof plug(const MachineConfig& cfg);

/// Call-by-value values. Free hypotheses are inert; eliminations stuck on
/// an inert head are values too, as is a reset whose body is a value
/// still containing an undelimited shift.
bool is_value(const Proof& p);

struct StepResult {
    enum class Status { Stepped, Done, Stuck };
    Status status;
    /// The configuration after the step, focused on the contractum.
    MachineConfig next;
    /// Name of the rule that fired, or the reason for Stuck.
    std::string note;
};

/// One CBV step, left-to-right:
///   (fun a => p) v  ->  p[a := v]          tfun, fst, snd, case, dest alike
///   reset v         ->  v                  v free of undelimited shifts
///   reset F[shift k => p]  ->  reset p[k := fun z => reset F[z]]
/// Eliminations look through ascriptions and keep them on the result.
StepResult step_proof(const MachineConfig& cfg);

struct NormalizeResult {
    enum class Status { Done, FuelExhausted, Stuck };
    Status status;
    Proof result;
    std::size_t steps = 0;
    /// Plugged configurations after each step (when requested).
    std::vector<Proof> trace;
    std::string reason;
};

NormalizeResult normalize_proof(const Proof& p, std::size_t fuel, bool record_trace = false);

std::string_view to_string(NormalizeResult::Status s);

// --- bounded classical formulas -----------------------------------------------------

/// For each predicate symbol, the argument tuples on which it holds.
using PredTables = std::map<Name, std::set<std::vector<unsigned>>>;

/// Classical truth with every quantifier ranging over {0..bound-1}. Prime
/// arguments are normalized to numerals; a value ≥ bound makes its prime
/// false. Free variables must already be instantiated.
bool eval_formula_bounded(const Signature& sig, const Formula& a, unsigned bound, const PredTables& tables);

} // namespace dnsk
