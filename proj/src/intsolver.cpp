/* intsolver.cpp -- the bundled fallback decision procedure: equality
 * propagation and constant folding over anything, then Tseitin bit-blasting
 * and DPLL for what remains when it is pure Bool/BitVec structure. */

#include <algorithm>
#include <map>
#include <sstream>

#include "vmtkit/diag.h"
#include "vmtkit/oracle.h"
#include "vmtkit/solver.h"

namespace vmtkit {

namespace {

// negative integers live in the tree as (- <numeral>), so "literal" is wider
// than Kind::Const
bool is_literal(const Term& t)
{
  if (t.is_const()) return true;
  return t.is_app(Op::Neg) && t.args()[0].is_const() &&
         t.args()[0].sort().is_int();
}

bool term_value(const Term& t, Value* out)
{
  if (t.is_app(Op::Neg) && t.args()[0].is_const() && t.args()[0].sort().is_int()) {
    try {
      *out = Value::integer(-t.args()[0].int_value());
    } catch (const Error&) {
      return false;  // magnitude out of range
    }
    return true;
  }
  if (!t.is_const()) return false;
  switch (t.sort().kind()) {
    case Sort::Kind::Bool: *out = Value::boolean(t.is_true()); return true;
    case Sort::Kind::Int: *out = Value::integer(t.int_value()); return true;
    case Sort::Kind::BitVec:
      *out = Value::bitvec(t.bv_value(), t.sort().width());
      return true;
    default: return false;  // Real literals stay symbolic
  }
}

Term value_to_term(const Value& v)
{
  switch (v.kind) {
    case Value::Kind::Bool: return Term::bool_const(v.b);
    case Value::Kind::Int: return Term::int_const(v.i);
    case Value::Kind::BitVec: return Term::bv_const(v.bv, v.width);
  }
  return Term::true_();
}

bool contains_bound_var(const Term& t)
{
  switch (t.kind()) {
    case Term::Kind::Var: return t.bound();
    case Term::Kind::Const: return false;
    case Term::Kind::Annot: return contains_bound_var(t.inner());
    case Term::Kind::Let:
      for (const auto& [_, v] : t.bindings())
        if (contains_bound_var(v)) return true;
      return contains_bound_var(t.body());
    case Term::Kind::Quant: return true;  // its body occurrences are bound
    default: break;
  }
  for (const Term& u : t.args())
    if (contains_bound_var(u)) return true;
  return false;
}

// Replaces bound occurrences of let binders by their values; an inner let
// rebinding a name shadows it. The values must themselves be free of bound
// variables, which is what makes plain name matching capture-safe.
Term inline_let(const Term& t, const std::map<std::string, Term>& vals)
{
  if (vals.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::Var: {
      if (!t.bound()) return t;
      auto it = vals.find(t.name());
      return it != vals.end() ? it->second : t;
    }
    case Term::Kind::Const: return t;
    case Term::Kind::Annot:
      return Term::annot(inline_let(t.inner(), vals), t.attrs());
    case Term::Kind::App: {
      std::vector<Term> as;
      for (const Term& u : t.args()) as.push_back(inline_let(u, vals));
      return Term::app(t.op(), std::move(as), t.indices());
    }
    case Term::Kind::UApp: {
      std::vector<Term> as;
      for (const Term& u : t.args()) as.push_back(inline_let(u, vals));
      return Term::uapp(t.name(), std::move(as), t.sort());
    }
    case Term::Kind::Let: {
      std::vector<std::pair<std::string, Term>> bs;
      std::map<std::string, Term> narrowed = vals;
      for (const auto& [name, value] : t.bindings()) {
        bs.emplace_back(name, inline_let(value, vals));
        narrowed.erase(name);
      }
      return Term::let(std::move(bs), inline_let(t.body(), narrowed));
    }
    case Term::Kind::Quant: {
      std::map<std::string, Term> narrowed = vals;
      for (const auto& [name, _] : t.binders()) narrowed.erase(name);
      return Term::quant(t.is_forall(), t.binders(),
                         inline_let(t.body(), narrowed));
    }
  }
  return t;
}

struct Folder {
  // keyed by node address; the stored key Term pins the node so a freed
  // address can never be reused while its entry is live
  std::map<const void*, std::pair<Term, Term>> memo;

  Term fold(const Term& t)
  {
    auto it = memo.find(t.id());
    if (it != memo.end()) return it->second.second;
    Term r = fold_raw(t);
    memo.emplace(t.id(), std::make_pair(t, r));
    return r;
  }

  Term fold_raw(const Term& t)
  {
    switch (t.kind()) {
      case Term::Kind::Var:
      case Term::Kind::Const: return t;
      case Term::Kind::Annot: return fold(t.inner());
      case Term::Kind::Let: {
        std::map<std::string, Term> vals;
        std::vector<std::pair<std::string, Term>> folded;
        bool dirty = false;
        for (const auto& [name, value] : t.bindings()) {
          Term fv = fold(value);
          dirty = dirty || contains_bound_var(fv);
          vals[name] = fv;
          folded.emplace_back(name, std::move(fv));
        }
        // a value still referencing an enclosing binder, or a quantifier in
        // the body, could capture under plain name matching; such terms are
        // outside the decidable fragment anyway, so keep the let and let the
        // fragment check reject it
        if (dirty || contains_quantifier(t.body()))
          return Term::let(std::move(folded), fold(t.body()));
        return fold(inline_let(t.body(), vals));
      }
      case Term::Kind::Quant:
        return Term::quant(t.is_forall(), t.binders(), fold(t.body()));
      case Term::Kind::UApp: {
        std::vector<Term> as;
        for (const Term& u : t.args()) as.push_back(fold(u));
        return Term::uapp(t.name(), std::move(as), t.sort());
      }
      case Term::Kind::App: break;
    }

    std::vector<Term> as;
    as.reserve(t.args().size());
    bool all_const = true, changed = false;
    for (const Term& u : t.args()) {
      Term fu = fold(u);
      changed = changed || fu.id() != u.id();
      all_const = all_const && is_literal(fu);
      as.push_back(std::move(fu));
    }

    if (all_const) {
      std::vector<Value> vals(as.size());
      bool ok = true;
      for (size_t i = 0; i < as.size(); ++i)
        ok = ok && term_value(as[i], &vals[i]);
      if (ok) {
        try {
          return value_to_term(apply_op_values(t.op(), vals, t.indices()));
        } catch (const Error&) {
          // division by zero, overflow: keep the term symbolic
        }
      }
    }

    switch (t.op()) {
      case Op::Not: {
        if (as[0].is_true()) return Term::false_();
        if (as[0].is_false()) return Term::true_();
        if (as[0].is_app(Op::Not)) return as[0].args()[0];
        break;
      }
      case Op::And: {
        std::vector<Term> parts;
        for (const Term& a : as) {
          if (a.is_false()) return Term::false_();
          if (a.is_true()) continue;
          if (a.is_app(Op::And))
            parts.insert(parts.end(), a.args().begin(), a.args().end());
          else
            parts.push_back(a);
        }
        return Term::mk_and(std::move(parts));
      }
      case Op::Or: {
        std::vector<Term> parts;
        for (const Term& a : as) {
          if (a.is_true()) return Term::true_();
          if (a.is_false()) continue;
          if (a.is_app(Op::Or))
            parts.insert(parts.end(), a.args().begin(), a.args().end());
          else
            parts.push_back(a);
        }
        return Term::mk_or(std::move(parts));
      }
      case Op::Eq: {
        bool all_same = true;
        for (size_t i = 1; i < as.size(); ++i) all_same = all_same && as[i] == as[0];
        if (all_same) return Term::true_();
        if (as.size() == 2 && as[0].sort().is_bool()) {
          if (as[0].is_true()) return as[1];
          if (as[1].is_true()) return as[0];
          if (as[0].is_false()) return fold(Term::mk_not(as[1]));
          if (as[1].is_false()) return fold(Term::mk_not(as[0]));
        }
        break;
      }
      case Op::Distinct: {
        for (size_t i = 0; i < as.size(); ++i)
          for (size_t j = i + 1; j < as.size(); ++j)
            if (as[i] == as[j]) return Term::false_();
        break;
      }
      case Op::Ite: {
        if (as[0].is_true()) return as[1];
        if (as[0].is_false()) return as[2];
        if (as[1] == as[2]) return as[1];
        if (as[1].sort().is_bool()) {
          if (as[1].is_true() && as[2].is_false()) return as[0];
          if (as[1].is_false() && as[2].is_true()) return fold(Term::mk_not(as[0]));
        }
        break;
      }
      case Op::Implies: {
        // any false antecedent discharges the chain; true ones drop out
        for (size_t i = 0; i + 1 < as.size(); ++i)
          if (as[i].is_false()) return Term::true_();
        if (as.back().is_true()) return Term::true_();
        std::vector<Term> keep;
        for (size_t i = 0; i + 1 < as.size(); ++i)
          if (!as[i].is_true()) keep.push_back(as[i]);
        if (keep.size() != as.size() - 1) {
          if (keep.empty()) return as.back();
          keep.push_back(as.back());
          return fold(Term::app(Op::Implies, std::move(keep)));
        }
        break;
      }
      default: break;
    }

    // relational/arithmetic operator over one ite and otherwise constants:
    // hoist the ite so both branches can fold (enables case splits like
    // (= 1 (ite b 2 1)) -> (not b))
    bool structural = t.op() == Op::And || t.op() == Op::Or ||
                      t.op() == Op::Not || t.op() == Op::Ite ||
                      t.op() == Op::Implies || t.op() == Op::Xor;
    if (!structural) {
      size_t pos = as.size();
      bool rest_const = true;
      for (size_t i = 0; i < as.size(); ++i) {
        if (as[i].is_app(Op::Ite) && pos == as.size())
          pos = i;
        else
          rest_const = rest_const && is_literal(as[i]);
      }
      if (pos != as.size() && rest_const) {
        const Term& ite = as[pos];
        auto with = [&](const Term& branch) {
          std::vector<Term> bs = as;
          bs[pos] = branch;
          return fold(Term::app(t.op(), std::move(bs), t.indices()));
        };
        return fold(Term::app(
            Op::Ite, {ite.args()[0], with(ite.args()[1]), with(ite.args()[2])}));
      }
    }

    if (!changed) return t;
    return Term::app(t.op(), std::move(as), t.indices());
  }
};

// ---- Tseitin bit-blasting ---------------------------------------------------

struct Cnf {
  int nvars = 1;  // variable 1 is the constant true
  std::vector<std::vector<int>> clauses{{1}};
  int fresh() { return ++nvars; }
  void add(std::vector<int> c) { clauses.push_back(std::move(c)); }
};

using Bits = std::vector<int>;  // LSB first; Bool terms use one literal

class Blaster {
 public:
  Cnf cnf;
  std::map<std::string, Bits> var_bits;

  void assert_true(const Term& t) { cnf.add({enc1(t)}); }

  int enc1(const Term& t) { return enc(t)[0]; }

 private:
  std::map<const void*, Bits> memo;

  int land(int a, int b)
  {
    if (a == -1 || b == -1) return -1;
    if (a == 1) return b;
    if (b == 1) return a;
    if (a == b) return a;
    if (a == -b) return -1;
    int f = cnf.fresh();
    cnf.add({-f, a});
    cnf.add({-f, b});
    cnf.add({f, -a, -b});
    return f;
  }
  int lor(int a, int b) { return -land(-a, -b); }
  int lxor(int a, int b)
  {
    if (a == 1) return -b;
    if (a == -1) return b;
    if (b == 1) return -a;
    if (b == -1) return a;
    if (a == b) return -1;
    if (a == -b) return 1;
    int f = cnf.fresh();
    cnf.add({-f, a, b});
    cnf.add({-f, -a, -b});
    cnf.add({f, -a, b});
    cnf.add({f, a, -b});
    return f;
  }
  int liff(int a, int b) { return -lxor(a, b); }
  int lmux(int c, int a, int b)  // c ? a : b
  {
    if (c == 1) return a;
    if (c == -1) return b;
    if (a == b) return a;
    if (a == 1 && b == -1) return c;
    if (a == -1 && b == 1) return -c;
    int f = cnf.fresh();
    cnf.add({-f, -c, a});
    cnf.add({-f, c, b});
    cnf.add({f, -c, -a});
    cnf.add({f, c, -b});
    return f;
  }
  int big_and(const std::vector<int>& xs)
  {
    std::vector<int> ys;
    for (int x : xs) {
      if (x == -1) return -1;
      if (x != 1) ys.push_back(x);
    }
    if (ys.empty()) return 1;
    if (ys.size() == 1) return ys[0];
    int f = cnf.fresh();
    std::vector<int> rev{f};
    for (int y : ys) {
      cnf.add({-f, y});
      rev.push_back(-y);
    }
    cnf.add(std::move(rev));
    return f;
  }
  int big_or(std::vector<int> xs)
  {
    for (int& x : xs) x = -x;
    return -big_and(xs);
  }

  Bits bnot(Bits a)
  {
    for (int& x : a) x = -x;
    return a;
  }
  Bits adder(const Bits& a, const Bits& b, int carry)
  {
    Bits s(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      int axb = lxor(a[i], b[i]);
      s[i] = lxor(axb, carry);
      carry = lor(land(a[i], b[i]), land(carry, axb));
    }
    return s;
  }
  Bits bneg(const Bits& a) { return adder(bnot(a), Bits(a.size(), -1), 1); }
  Bits bmul(const Bits& a, const Bits& b)
  {
    size_t w = a.size();
    Bits acc(w, -1);
    for (size_t i = 0; i < w; ++i) {  // shift-and-add rows
      Bits row(w, -1);
      for (size_t j = i; j < w; ++j) row[j] = land(a[j - i], b[i]);
      acc = adder(acc, row, -1);
    }
    return acc;
  }
  int ult(const Bits& a, const Bits& b)
  {
    int lt = -1;  // higher bits processed later take priority
    for (size_t i = 0; i < a.size(); ++i)
      lt = lor(land(-a[i], b[i]), land(liff(a[i], b[i]), lt));
    return lt;
  }
  int slt(Bits a, Bits b)
  {
    a.back() = -a.back();  // signed order = unsigned order with sign flipped
    b.back() = -b.back();
    return ult(a, b);
  }
  int bits_eq(const Bits& a, const Bits& b)
  {
    std::vector<int> ps(a.size());
    for (size_t i = 0; i < a.size(); ++i) ps[i] = liff(a[i], b[i]);
    return big_and(ps);
  }
  Bits bmux(int c, const Bits& a, const Bits& b)
  {
    Bits r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = lmux(c, a[i], b[i]);
    return r;
  }
  Bits const_bits(unsigned long long v, size_t w)
  {
    Bits r(w);
    for (size_t i = 0; i < w; ++i) r[i] = (v >> i) & 1 ? 1 : -1;
    return r;
  }
  Bits shifter(const Bits& a, const Bits& k, char kind)  // 'l' shl, 'r' lshr, 'a' ashr
  {
    size_t w = a.size();
    int fill = kind == 'a' ? a.back() : -1;
    Bits cur = a;
    for (size_t s = 0; (1ull << s) < w; ++s) {
      size_t sh = 1ull << s;
      Bits nxt(w);
      for (size_t i = 0; i < w; ++i) {
        int shifted;
        if (kind == 'l')
          shifted = i >= sh ? cur[i - sh] : -1;
        else
          shifted = i + sh < w ? cur[i + sh] : fill;
        nxt[i] = lmux(k[s], shifted, cur[i]);
      }
      cur = std::move(nxt);
    }
    int in_range = ult(k, const_bits(w, w));  // amount >= width floods
    Bits r(w);
    for (size_t i = 0; i < w; ++i) r[i] = lmux(in_range, cur[i], fill);
    return r;
  }

  Bits enc(const Term& t)
  {
    auto it = memo.find(t.id());
    if (it != memo.end()) return it->second;
    Bits r = enc_raw(t);
    memo.emplace(t.id(), r);
    return r;
  }

  Bits enc_raw(const Term& t)
  {
    switch (t.kind()) {
      case Term::Kind::Var: {
        Bits& slot = var_bits[t.name()];
        if (slot.empty()) {
          size_t w = t.sort().is_bool() ? 1 : t.sort().width();
          for (size_t i = 0; i < w; ++i) slot.push_back(cnf.fresh());
        }
        return slot;
      }
      case Term::Kind::Const:
        if (t.sort().is_bool()) return {t.is_true() ? 1 : -1};
        return const_bits(t.bv_value(), t.sort().width());
      case Term::Kind::Annot: return enc(t.inner());
      default:
        throw Error(ErrCode::SolverError, "blasting a non-blastable term");
      case Term::Kind::App: break;
    }

    const auto& args = t.args();
    switch (t.op()) {
      case Op::And: {
        std::vector<int> xs;
        for (const Term& u : args) xs.push_back(enc1(u));
        return {big_and(xs)};
      }
      case Op::Or: {
        std::vector<int> xs;
        for (const Term& u : args) xs.push_back(enc1(u));
        return {big_or(xs)};
      }
      case Op::Not: return {-enc1(args[0])};
      case Op::Implies: {
        int r = enc1(args.back());
        for (size_t i = args.size() - 1; i-- > 0;) r = lor(-enc1(args[i]), r);
        return {r};
      }
      case Op::Xor: {
        int r = enc1(args[0]);
        for (size_t i = 1; i < args.size(); ++i) r = lxor(r, enc1(args[i]));
        return {r};
      }
      case Op::Eq: {
        std::vector<int> ps;
        Bits first = enc(args[0]);
        for (size_t i = 1; i < args.size(); ++i) ps.push_back(bits_eq(first, enc(args[i])));
        return {big_and(ps)};
      }
      case Op::Distinct: {
        std::vector<int> ps;
        for (size_t i = 0; i < args.size(); ++i)
          for (size_t j = i + 1; j < args.size(); ++j)
            ps.push_back(-bits_eq(enc(args[i]), enc(args[j])));
        return {big_and(ps)};
      }
      case Op::Ite: return bmux(enc1(args[0]), enc(args[1]), enc(args[2]));

      case Op::BvNot: return bnot(enc(args[0]));
      case Op::BvAnd:
      case Op::BvOr:
      case Op::BvXor: {
        Bits r = enc(args[0]);
        for (size_t i = 1; i < args.size(); ++i) {
          Bits u = enc(args[i]);
          for (size_t j = 0; j < r.size(); ++j)
            r[j] = t.op() == Op::BvAnd  ? land(r[j], u[j])
                   : t.op() == Op::BvOr ? lor(r[j], u[j])
                                        : lxor(r[j], u[j]);
        }
        return r;
      }
      case Op::BvNand: {
        Bits a = enc(args[0]), b = enc(args[1]), r(a.size());
        for (size_t j = 0; j < a.size(); ++j) r[j] = -land(a[j], b[j]);
        return r;
      }
      case Op::BvNor: {
        Bits a = enc(args[0]), b = enc(args[1]), r(a.size());
        for (size_t j = 0; j < a.size(); ++j) r[j] = -lor(a[j], b[j]);
        return r;
      }
      case Op::BvXnor: {
        Bits a = enc(args[0]), b = enc(args[1]), r(a.size());
        for (size_t j = 0; j < a.size(); ++j) r[j] = liff(a[j], b[j]);
        return r;
      }
      case Op::BvNeg: return bneg(enc(args[0]));
      case Op::BvAdd: {
        Bits r = enc(args[0]);
        for (size_t i = 1; i < args.size(); ++i) r = adder(r, enc(args[i]), -1);
        return r;
      }
      case Op::BvSub: return adder(enc(args[0]), bnot(enc(args[1])), 1);
      case Op::BvMul: {
        Bits r = enc(args[0]);
        for (size_t i = 1; i < args.size(); ++i) r = bmul(r, enc(args[i]));
        return r;
      }
      case Op::BvShl: return shifter(enc(args[0]), enc(args[1]), 'l');
      case Op::BvLshr: return shifter(enc(args[0]), enc(args[1]), 'r');
      case Op::BvAshr: return shifter(enc(args[0]), enc(args[1]), 'a');
      case Op::BvUlt: return {ult(enc(args[0]), enc(args[1]))};
      case Op::BvUle: return {-ult(enc(args[1]), enc(args[0]))};
      case Op::BvUgt: return {ult(enc(args[1]), enc(args[0]))};
      case Op::BvUge: return {-ult(enc(args[0]), enc(args[1]))};
      case Op::BvSlt: return {slt(enc(args[0]), enc(args[1]))};
      case Op::BvSle: return {-slt(enc(args[1]), enc(args[0]))};
      case Op::BvSgt: return {slt(enc(args[1]), enc(args[0]))};
      case Op::BvSge: return {-slt(enc(args[0]), enc(args[1]))};
      case Op::Concat: {
        Bits r;  // (concat hi .. lo): last operand holds the low bits
        for (size_t i = args.size(); i-- > 0;) {
          Bits u = enc(args[i]);
          r.insert(r.end(), u.begin(), u.end());
        }
        return r;
      }
      case Op::Extract: {
        Bits u = enc(args[0]);
        unsigned hi = t.indices()[0], lo = t.indices()[1];
        return Bits(u.begin() + lo, u.begin() + hi + 1);
      }
      case Op::ZeroExtend: {
        Bits u = enc(args[0]);
        u.resize(u.size() + t.indices()[0], -1);
        return u;
      }
      case Op::SignExtend: {
        Bits u = enc(args[0]);
        int sign = u.back();
        u.resize(u.size() + t.indices()[0], sign);
        return u;
      }
      default:
        throw Error(ErrCode::SolverError,
                    std::string("blasting unsupported operator ") + op_name(t.op()));
    }
  }
};

// ---- DPLL -------------------------------------------------------------------

// Plain DPLL with unit propagation; instances here are small. `val` gets the
// full assignment on sat (unconstrained variables default to false).
bool dpll(const Cnf& cnf, std::vector<int8_t>& val)
{
  val.assign(cnf.nvars + 1, -1);
  std::vector<int> trail;
  struct Dec {
    int var;
    bool flipped;
    size_t mark;
  };
  std::vector<Dec> decs;

  auto assign = [&](int lit) {
    val[std::abs(lit)] = lit > 0;
    trail.push_back(std::abs(lit));
  };
  auto undo_to = [&](size_t mark) {
    while (trail.size() > mark) {
      val[trail.back()] = -1;
      trail.pop_back();
    }
  };
  auto propagate = [&]() -> bool {
    bool again = true;
    while (again) {
      again = false;
      for (const auto& clause : cnf.clauses) {
        int unassigned = 0, last = 0;
        bool satisfied = false;
        for (int lit : clause) {
          int8_t v = val[std::abs(lit)];
          if (v == -1) {
            ++unassigned;
            last = lit;
          } else if ((v == 1) == (lit > 0)) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign(last);
          again = true;
        }
      }
    }
    return true;
  };

  for (;;) {
    if (!propagate()) {
      while (!decs.empty() && decs.back().flipped) {
        undo_to(decs.back().mark);
        decs.pop_back();
      }
      if (decs.empty()) return false;
      Dec& d = decs.back();
      undo_to(d.mark);
      d.flipped = true;
      assign(-d.var);
      continue;
    }
    int v = 0;
    for (int i = 1; i <= cnf.nvars; ++i)
      if (val[i] == -1) {
        v = i;
        break;
      }
    if (v == 0) return true;
    decs.push_back({v, false, trail.size()});
    assign(v);
  }
}

// ---- fragment check ----------------------------------------------------------

bool blastable_sort(const Sort& s)
{
  return s.is_bool() || (s.is_bitvec() && s.width() <= 64);
}

// `offender` receives a human-readable reason for the first unsupported part
bool blastable(const Term& t, std::string* offender)
{
  if (!blastable_sort(t.sort())) {
    *offender = t.sort().str();
    return false;
  }
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const: return true;
    case Term::Kind::Annot: return blastable(t.inner(), offender);
    case Term::Kind::Let:
    case Term::Kind::Quant:
    case Term::Kind::UApp:
      *offender = t.kind() == Term::Kind::UApp ? "uninterpreted function " + t.name()
                  : t.kind() == Term::Kind::Let ? "let"
                                                : "quantifier";
      return false;
    case Term::Kind::App: break;
  }
  switch (t.op()) {
    case Op::BvUdiv:
    case Op::BvUrem:
    case Op::BvSdiv:
    case Op::BvSrem:
    case Op::Select:
    case Op::Store:
      *offender = std::string("operator ") + op_name(t.op());
      return false;
    default: break;
  }
  for (const Term& u : t.args())
    if (!blastable(u, offender)) return false;
  return true;
}

}  // namespace

Term simplify_term(const Term& t)
{
  return Folder{}.fold(t);
}

SolveResult InternalSolver::solve(const SmtQuery& q)
{
  std::map<std::string, Sort> sort_of;
  for (const auto& [name, sort] : q.consts) sort_of[name] = sort;

  // 1. split into conjuncts and run equality propagation to a fixpoint
  std::vector<Term> work;
  for (const Term& a : q.assertions)
    for (const Term& c : conjuncts(simplify_term(a))) work.push_back(c);

  std::map<std::string, Term> binds;
  bool contradiction = false;
  bool changed = true;
  while (changed && !contradiction) {
    changed = false;
    std::vector<Term> next;
    for (Term t : work) {
      if (!binds.empty()) t = simplify_term(substitute(t, binds));
      for (const Term& c : conjuncts(t)) {
        if (c.is_true()) continue;
        if (c.is_false()) {
          contradiction = true;
          break;
        }
        if (c.is_var() && c.sort().is_bool() && !binds.count(c.name())) {
          binds[c.name()] = Term::true_();
          changed = true;
          continue;
        }
        if (c.is_app(Op::Not) && c.args()[0].is_var() &&
            !binds.count(c.args()[0].name())) {
          binds[c.args()[0].name()] = Term::false_();
          changed = true;
          continue;
        }
        if (c.is_app(Op::Eq) && c.args().size() == 2) {
          const Term &a = c.args()[0], &b = c.args()[1];
          if (a.is_var() && is_literal(b) && !binds.count(a.name())) {
            binds[a.name()] = b;
            changed = true;
            continue;
          }
          if (b.is_var() && is_literal(a) && !binds.count(b.name())) {
            binds[b.name()] = a;
            changed = true;
            continue;
          }
        }
        next.push_back(c);
      }
      if (contradiction) break;
    }
    work = std::move(next);
  }

  SolveResult r;
  std::ostringstream log;
  log << "internal: " << binds.size() << " propagated bindings, "
      << work.size() << " residual assertions";

  if (contradiction) {
    r.status = SolveStatus::Unsat;
    r.transcript = log.str() + ", contradiction by propagation";
    return r;
  }

  auto model_default = [&](const std::string& name) -> Term {
    auto it = sort_of.find(name);
    if (it == sort_of.end()) return Term();
    switch (it->second.kind()) {
      case Sort::Kind::Bool: return Term::false_();
      case Sort::Kind::Int: return Term::int_const(0);
      case Sort::Kind::BitVec: return Term::bv_const(0, it->second.width());
      case Sort::Kind::Real: return Term::constant(Sort::real(), "0.0");
      default: return Term();
    }
  };

  if (work.empty()) {
    r.status = SolveStatus::Sat;
    r.transcript = log.str() + ", satisfied by propagation";
    for (const std::string& name : q.value_queries) {
      auto it = binds.find(name);
      Term v = it != binds.end() ? it->second : model_default(name);
      if (!v.null()) r.model[name] = v;
    }
    return r;
  }

  // 2. residuals must be pure Bool/BitVec structure
  std::string offender;
  for (const Term& t : work) {
    if (!blastable(t, &offender)) {
      r.status = SolveStatus::Unknown;
      r.transcript = log.str() + ", not decidable by the fallback: " + offender;
      return r;
    }
  }

  // 3. bit-blast and decide
  Blaster bl;
  for (const Term& t : work) bl.assert_true(t);
  log << ", " << bl.cnf.nvars << " sat variables, " << bl.cnf.clauses.size()
      << " clauses";

  std::vector<int8_t> val;
  if (!dpll(bl.cnf, val)) {
    r.status = SolveStatus::Unsat;
    r.transcript = log.str() + ", unsat by search";
    return r;
  }

  r.status = SolveStatus::Sat;
  r.transcript = log.str() + ", sat by search";
  for (const std::string& name : q.value_queries) {
    auto bit = binds.find(name);
    if (bit != binds.end()) {
      r.model[name] = bit->second;
      continue;
    }
    auto vit = bl.var_bits.find(name);
    if (vit != bl.var_bits.end()) {
      const Bits& bits = vit->second;
      auto lit_val = [&](int lit) {
        if (lit == 1) return true;
        if (lit == -1) return false;
        int8_t v = val[std::abs(lit)];
        bool b = v == 1;
        return lit > 0 ? b : !b;
      };
      auto sit = sort_of.find(name);
      bool is_bool = sit != sort_of.end() ? sit->second.is_bool() : bits.size() == 1;
      if (is_bool) {
        r.model[name] = Term::bool_const(lit_val(bits[0]));
      } else {
        unsigned long long v = 0;
        for (size_t i = 0; i < bits.size(); ++i)
          if (lit_val(bits[i])) v |= 1ull << i;
        r.model[name] = Term::bv_const(v, (unsigned)bits.size());
      }
      continue;
    }
    Term v = model_default(name);
    if (!v.null()) r.model[name] = v;
  }
  return r;
}

}  // namespace vmtkit
