/* symtab.h -- top-level declarations and macro table; term elaboration. */

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vmtkit/commands.h"
#include "vmtkit/sexpr.h"
#include "vmtkit/sort.h"
#include "vmtkit/term.h"

namespace vmtkit {

// Top-level script symbols: declared sorts and sort aliases, declared
// (uninterpreted) functions, and define-fun macros. Populated by elaborate().
class SymbolTable {
 public:
  struct Fun {
    std::vector<Sort> args;
    Sort result;
    Pos pos;
  };
  // Macro bodies are stored with their parameters as *free* variables, so
  // inlining is a plain capture-avoiding substitute() of params by arguments.
  struct Def {
    std::vector<std::pair<std::string, Sort>> params;
    Sort result;
    Term body;  // null until the body has been elaborated
    Pos pos;
  };
  struct SortDecl {
    unsigned arity = 0;
    Pos pos;
  };
  struct SortAlias {
    std::vector<std::string> params;
    SExpr body;
    Pos pos;
  };

  const std::string& logic() const { return logic_; }
  void set_logic(std::string l) { logic_ = std::move(l); }

  // All throw Error(DuplicateDeclaration) on a name already taken in the
  // same namespace (functions and macros share one; sorts another).
  void declare_sort(const std::string& name, unsigned arity, Pos pos);
  void define_sort(const std::string& name, std::vector<std::string> params,
                   SExpr body, Pos pos);
  void declare_fun(const std::string& name, std::vector<Sort> args, Sort result,
                   Pos pos);
  void define_fun(const std::string& name,
                  std::vector<std::pair<std::string, Sort>> params, Sort result,
                  Term body, Pos pos);
  // Fills the body of an already-registered macro (the signature is
  // registered before the body is elaborated, so it is visible inside).
  void set_def_body(const std::string& name, Term body);

  const Fun* fun(const std::string& name) const;
  const Def* def(const std::string& name) const;
  bool has_symbol(const std::string& name) const
  {
    return fun(name) || def(name);
  }

  // Resolves a sort s-expression against builtins (Bool, Int, Real,
  // (_ BitVec n), (Array s t)) and the declared sorts / aliases.
  // Throws Error(UnknownSort / MalformedCommand). A use of a parametric
  // alias appends a Warning diagnostic.
  Sort resolve_sort(const SExpr& e) const;

  std::vector<Diagnostic>& warnings() { return warnings_; }
  const std::vector<Diagnostic>& warnings() const { return warnings_; }

 private:
  std::string logic_;
  std::map<std::string, Fun> funs_;
  std::map<std::string, Def> defs_;
  std::map<std::string, SortDecl> sort_decls_;
  std::map<std::string, SortAlias> sort_aliases_;
  mutable std::vector<Diagnostic> warnings_;

  Sort resolve_sort_rec(const SExpr& e,
                        const std::map<std::string, Sort>& bound) const;
};

// Registers every declaration, resolves all sorts, and sort-checks every
// define-fun body against its declared result sort, filling the resolved
// fields of the commands in place. A define-fun's own signature is visible
// inside its body (the cycle is reported later, by expand_defines).
// Throws Error: UnknownSort, UnknownSymbol, SortMismatch,
// DuplicateDeclaration, MalformedCommand.
SymbolTable elaborate(std::vector<Command>& cmds);

// A name visible while elaborating a term. `binder` distinguishes let/quant
// bindings (occurrences marked bound) from define-fun parameters
// (occurrences left free, see SymbolTable::Def).
struct ScopeVar {
  std::string name;
  Sort sort;
  bool binder = true;
};

// Elaborates one term s-expression to a sorted Term. `scope` lists visible
// local variables (innermost last). Symbols resolve to: scope variable,
// declared function (Var when 0-ary, UApp otherwise), or macro application
// (UApp carrying the macro's result sort, inlined later by expand_defines).
Term elaborate_term(const SExpr& e, const SymbolTable& st,
                    std::vector<ScopeVar> scope = {});

// Inlines every macro application, substituting parameters. Annotations
// inside inlined macro bodies are dropped; annotations already present in
// `t` itself are kept. A let/quant binder that shadows a top-level symbol
// is renamed when expansion could pull free occurrences of that symbol
// under it; terms without macro applications come back untouched.
// Throws Error(RecursiveDefinition) on self- or mutually-recursive macros.
Term expand_defines(const Term& t, const SymbolTable& st);

}  // namespace vmtkit
