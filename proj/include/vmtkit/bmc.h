/* bmc.h -- bounded model checking by unrolling: finite counterexamples for
 * invariant properties, lasso-shaped ones for live properties, discharged
 * through a Solver backend in one-shot sessions. */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vmtkit/model.h"
#include "vmtkit/solver.h"

namespace vmtkit {

// `<base>@<frame>`; `@` inside the base is escaped as `@@` first, so distinct
// (base, frame) pairs always render distinct names.
std::string timed_name(const std::string& base, unsigned frame);

// I(X@0) ∧ T(Y@0, X@0, X@1) ∧ ... ∧ T(Y@k-1, X@k-1, X@k): a fresh constant
// per state variable for frames 0..k and per input for frames 0..k-1.
// Uninterpreted functions of arity >= 1 stay rigid (one symbol, all frames).
struct Unrolling {
  unsigned k = 0;

  // init copy, then one trans copy per step; copies that are literally
  // `true` are dropped
  std::vector<Term> assertions;

  std::vector<std::map<std::string, Term>> state_at;  // frame -> current name -> timed var
  std::vector<std::map<std::string, Term>> input_at;  // frame -> input name -> timed var

  // every timed constant in frame-major order
  std::vector<std::pair<std::string, Sort>> consts;

  Term formula() const { return Term::mk_and(assertions); }
};

// Throws Error(QuantifiedSystem) if init or trans contains a quantifier and
// Error(UsageError) if either strays outside its variable scope.
Unrolling unroll(const VmtDocument& doc, unsigned k);

// Query skeleton for this document: logic from its set-logic command when
// present, sort declarations and rigid function declarations carried over
// verbatim.
SmtQuery base_query(const VmtDocument& doc);

// A finite path read back from a solver model, keyed by the untimed variable
// names. Variables whose sort has no parseable model representation (arrays,
// uninterpreted sorts) are absent from the assignments.
struct Trace {
  unsigned k = 0;
  std::vector<std::map<std::string, Term>> states;  // frames 0..k
  std::vector<std::map<std::string, Term>> inputs;  // frames 0..k-1
};

// A Trace whose final frame repeats frame loop_start value for value, so the
// segment [loop_start, k) repeats forever.
struct LassoTrace {
  Trace trace;
  unsigned loop_start = 0;
};

// For k = 0..k_max, checks unroll(doc, k) ∧ ¬p@k and returns the
// minimal-bound counterexample path; nullopt means "no counterexample up to
// k_max", never a proof. Throws: UsageError (not an invariant property, or
// scope violations), QuantifiedSystem, UnknownResult (solver gave up at some
// bound; never silently treated as unsat), SolverNotFound / SolverError /
// ParseModelError from the backend.
std::optional<Trace> bmc_invariant(const VmtDocument& doc, const PropertySpec& p,
                                   unsigned k_max, Solver& solver);

// For k = 1..k_max, searches for a lasso violating FG p: unroll(doc, k)
// conjoined with ⋁_{l<k} (sel_l ∧ X@k = X@l ∧ ⋁_{l<=j<k} ¬p@j) under an
// exactly-one selector encoding. The returned loop contains a ¬p frame, so
// its infinite unfolding violates the property. nullopt means no lasso up to
// k_max; systems can falsify FG p along non-lasso paths, so this is sound
// for finding counterexamples and incomplete for proving. Additionally
// throws EqualityUnsupported when a state variable's sort has no usable
// value-level equality (uninterpreted sorts).
std::optional<LassoTrace> bmc_lasso_live(const VmtDocument& doc, const PropertySpec& p,
                                         unsigned k_max, Solver& solver);

}  // namespace vmtkit
