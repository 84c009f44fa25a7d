/* model.h -- symbolic transition systems: extraction from annotated scripts,
 * well-formedness validation, current/next substitution, printing. */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vmtkit/commands.h"
#include "vmtkit/symtab.h"
#include "vmtkit/term.h"

namespace vmtkit {

// A state variable is a pair of declared constants of equal sort, linked by
// a (! <current> :next <next>) annotation.
struct StateVariable {
  std::string current;
  std::string next;
  Sort sort;
};

// The system <X, I(X), T(X, Y, X')>. Declared constants that are on neither
// side of a :next pairing are inputs (Y); they may change freely each step.
struct TransitionSystem {
  std::vector<StateVariable> states;
  std::vector<std::pair<std::string, Sort>> inputs;
  Term init;   // Bool, over current-state variables only
  Term trans;  // Bool, over current, next, and input variables

  const StateVariable* by_current(const std::string& name) const;
  const StateVariable* by_next(const std::string& name) const;
  bool is_input(const std::string& name) const;
};

enum class PropertyKind { Invariant, Live };

// :invar-property idx -- every reachable state must satisfy the formula.
// :live-property idx -- the system must satisfy FG formula.
struct PropertySpec {
  PropertyKind kind = PropertyKind::Invariant;
  unsigned index = 0;
  Term formula;  // Bool, over current-state variables only
};

struct VmtDocument {
  TransitionSystem system;
  std::vector<PropertySpec> properties;

  // declared uninterpreted functions of arity >= 1 (rigid across states)
  std::vector<std::string> rigid;

  // declaration-section commands in original order (set-logic, set-option,
  // declare-sort, define-sort, declare-fun), for stable printing
  std::vector<Command> decls;

  SymbolTable symbols;

  // define-fun names never reachable from any annotated term
  std::vector<std::string> unused_defines;

  const PropertySpec* property(unsigned index) const;
  const PropertySpec* first_property(PropertyKind kind) const;
};

// Builds the document from an elaborated script. All :init terms are
// conjoined (default true), likewise :trans; macro applications inside
// annotated terms are fully inlined. Two-pass, so a :next value may name a
// variable declared later in the file.
// Throws Error: NextTargetUndeclared, NextNotInjective, NextSortMismatch,
// NextOnNonVariable, MalformedAnnotation, DuplicatePropertyIndex,
// NonBooleanAnnotation.
VmtDocument extract(const std::vector<Command>& cmds, const SymbolTable& st);

// parse + elaborate + extract
VmtDocument load_vmt(std::string_view text);

// Re-checks every well-formedness rule on an arbitrary document and returns
// the violations (empty <=> well-formed). Warnings: property-free document,
// unused defines.
std::vector<Diagnostic> validate(const VmtDocument& doc);

// Substitutes every current-state variable by its next-state counterpart.
// Inputs and rigid symbols are untouched. Throws Error(MixedStateVersions)
// if a next-state variable already occurs free in `t`.
Term prime(const Term& t, const VmtDocument& doc);

// The inverse direction; rejects terms with free current-state variables.
Term unprime(const Term& t, const VmtDocument& doc);

// Prints the document as a script: declarations in original order, then a
// define-fun per state variable carrying :next, then init, trans, and the
// properties, then (assert true). The output reparses and re-extracts to a
// structurally equal document.
std::string print_vmt(const VmtDocument& doc);

// Structural equality of the semantic content (states, inputs, sorts, init,
// trans, properties); define names and declaration order are not compared.
bool same_document(const VmtDocument& a, const VmtDocument& b);

}  // namespace vmtkit
