/* term.h -- sort-annotated expression trees over the background signature. */

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vmtkit/sort.h"

namespace vmtkit {

// Interpreted operators. Extract/ZeroExtend/SignExtend carry indices.
enum class Op {
  // core
  And, Or, Not, Implies, Xor, Eq, Distinct, Ite,
  // arithmetic (Int/Real)
  Add, Sub, Neg, Mul, IntDiv, Mod, Abs, RealDiv,
  Le, Lt, Ge, Gt,
  // bit-vectors
  BvNot, BvAnd, BvOr, BvXor, BvNand, BvNor, BvXnor,
  BvNeg, BvAdd, BvSub, BvMul, BvUdiv, BvUrem, BvSdiv, BvSrem,
  BvShl, BvLshr, BvAshr,
  BvUlt, BvUle, BvUgt, BvUge, BvSlt, BvSle, BvSgt, BvSge,
  Concat, Extract, ZeroExtend, SignExtend,
  // arrays
  Select, Store,
};

const char* op_name(Op op);
std::optional<Op> op_by_name(const std::string& name);

struct Attr {
  std::string keyword;  // without leading ':'
  std::string value;    // canonical concrete syntax of the value, "" if none
  bool has_value = false;

  bool operator==(const Attr& o) const
  {
    return keyword == o.keyword && has_value == o.has_value && value == o.value;
  }
};

class Term {
 public:
  enum class Kind { Var, Const, App, UApp, Let, Quant, Annot };

  Term() = default;

  // -- constructors ---------------------------------------------------------

  static Term var(std::string name, Sort sort, bool bound = false);
  // `text` is the canonical lexical value: "true"/"false" for Bool, decimal
  // digit string for Int and for BitVec values, decimal notation for Real.
  static Term constant(Sort sort, std::string text);
  static Term true_();
  static Term false_();
  static Term bool_const(bool b) { return b ? true_() : false_(); }
  static Term int_const(long long v);
  static Term bv_const(unsigned long long value, unsigned width);

  // Throws Error(SortMismatch) when argument sorts do not fit `op`.
  static Term app(Op op, std::vector<Term> args, std::vector<unsigned> indices = {});
  static Term uapp(std::string fun, std::vector<Term> args, Sort result);
  static Term let(std::vector<std::pair<std::string, Term>> bindings, Term body);
  static Term quant(bool is_forall, std::vector<std::pair<std::string, Sort>> binders, Term body);
  static Term annot(Term inner, std::vector<Attr> attrs);

  // convenience builders (n-ary helpers collapse trivial cases)
  static Term mk_and(std::vector<Term> args);  // true when empty
  static Term mk_or(std::vector<Term> args);   // false when empty
  static Term mk_not(Term t);
  static Term mk_eq(Term a, Term b);
  static Term mk_implies(Term a, Term b);
  static Term mk_ite(Term c, Term t, Term e);

  // -- observers ------------------------------------------------------------

  bool null() const { return n_ == nullptr; }
  Kind kind() const { return n_->kind; }
  const Sort& sort() const { return n_->sort; }

  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_app(Op op) const { return kind() == Kind::App && n_->op == op; }
  bool is_true() const;
  bool is_false() const;

  const std::string& name() const { return n_->name; }  // Var, Const, UApp
  bool bound() const { return n_->bound; }              // Var
  Op op() const { return n_->op; }                      // App
  const std::vector<Term>& args() const { return n_->args; }
  const std::vector<unsigned>& indices() const { return n_->indices; }
  const std::vector<std::pair<std::string, Term>>& bindings() const { return n_->lets; }
  bool is_forall() const { return n_->is_forall; }
  const std::vector<std::pair<std::string, Sort>>& binders() const { return n_->binders; }
  const Term& body() const { return n_->args[0]; }   // Let, Quant
  const Term& inner() const { return n_->args[0]; }  // Annot
  const std::vector<Attr>& attrs() const { return n_->attrs; }

  // numeric value of a Const (Int/BitVec); throws on overflow
  long long int_value() const;
  unsigned long long bv_value() const;

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

  // identity of the underlying node, for memo tables
  const void* id() const { return n_.get(); }

  std::string str() const;  // SMT-LIB concrete syntax

 private:
  struct Node {
    Kind kind;
    Sort sort;
    std::string name;
    bool bound = false;
    Op op = Op::And;
    std::vector<Term> args;
    std::vector<unsigned> indices;
    std::vector<std::pair<std::string, Term>> lets;
    bool is_forall = false;
    std::vector<std::pair<std::string, Sort>> binders;
    std::vector<Attr> attrs;
  };
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// Result sort of `op` applied to `args`; throws Error(SortMismatch).
Sort infer_sort(Op op, const std::vector<Term>& args, const std::vector<unsigned>& indices);

// Names of free (unbound) variable occurrences.
std::set<std::string> free_vars(const Term& t);
// Names of uninterpreted function symbols applied with arity >= 1.
std::set<std::string> applied_functions(const Term& t);

// Capture-avoiding parallel substitution of free variables by terms.
// Binders that would capture a substituted name are renamed.
Term substitute(const Term& t, const std::map<std::string, Term>& map);

bool contains_quantifier(const Term& t);

// Splits nested conjunctions into their conjuncts (drops `true`).
std::vector<Term> conjuncts(const Term& t);

}  // namespace vmtkit
