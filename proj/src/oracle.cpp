/* oracle.cpp -- explicit-state reference interpreter over finite domains. */

#include "vmtkit/oracle.h"

#include <algorithm>
#include <climits>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "vmtkit/diag.h"

namespace vmtkit {

namespace {

[[noreturn]] void unsupported(const std::string& what)
{
  throw Error(ErrCode::UnsupportedForOracle, what);
}

[[noreturn]] void overflow(const std::string& what)
{
  throw Error(ErrCode::DomainOverflow, what);
}

long long checked_add(long long a, long long b)
{
  long long r;
  if (__builtin_add_overflow(a, b, &r)) overflow("integer overflow in +");
  return r;
}

long long checked_sub(long long a, long long b)
{
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("integer overflow in -");
  return r;
}

long long checked_mul(long long a, long long b)
{
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("integer overflow in *");
  return r;
}

long long checked_neg(long long a)
{
  if (a == LLONG_MIN) overflow("integer overflow in negation");
  return -a;
}

// SMT-LIB div/mod are Euclidean: mod always yields 0 <= r < |b|.
long long euclid_div(long long a, long long b)
{
  if (b == 0) unsupported("division by zero");
  if (a == LLONG_MIN && b == -1) overflow("integer overflow in div");
  long long q = a / b;
  if (a % b < 0) q += b > 0 ? -1 : 1;
  return q;
}

long long euclid_mod(long long a, long long b)
{
  if (b == 0) unsupported("modulo by zero");
  if (a == LLONG_MIN && b == -1) return 0;
  long long r = a % b;
  if (r < 0) r += b > 0 ? b : -b;
  return r;
}

unsigned long long bv_mask(unsigned w)
{
  return w >= 64 ? ~0ull : (1ull << w) - 1;
}

unsigned long long bv_negate(unsigned long long v, unsigned w)
{
  return (~v + 1) & bv_mask(w);
}

bool bv_sign(unsigned long long v, unsigned w)
{
  return (v >> (w - 1)) & 1;
}

long long bv_signed(unsigned long long v, unsigned w)
{
  // C++20 guarantees arithmetic right shift on signed operands
  return (long long)(v << (64 - w)) >> (64 - w);
}

// (bvudiv s 0) is all ones, (bvurem s 0) is s; the signed variants follow
// the standard abbreviations in terms of these.
unsigned long long bv_udiv(unsigned long long a, unsigned long long b, unsigned w)
{
  return b == 0 ? bv_mask(w) : a / b;
}

unsigned long long bv_urem(unsigned long long a, unsigned long long b)
{
  return b == 0 ? a : a % b;
}

unsigned long long bv_sdiv(unsigned long long a, unsigned long long b, unsigned w)
{
  bool an = bv_sign(a, w), bn = bv_sign(b, w);
  unsigned long long u = an ? bv_negate(a, w) : a;
  unsigned long long v = bn ? bv_negate(b, w) : b;
  unsigned long long q = bv_udiv(u, v, w);
  return an != bn ? bv_negate(q, w) : q;
}

unsigned long long bv_srem(unsigned long long a, unsigned long long b, unsigned w)
{
  bool an = bv_sign(a, w);
  unsigned long long u = an ? bv_negate(a, w) : a;
  unsigned long long v = bv_sign(b, w) ? bv_negate(b, w) : b;
  unsigned long long r = bv_urem(u, v);
  return an ? bv_negate(r, w) : r;
}

bool want_bool(const Value& v)
{
  if (v.kind != Value::Kind::Bool) unsupported("boolean operator on non-boolean value");
  return v.b;
}

long long want_int(const Value& v)
{
  if (v.kind != Value::Kind::Int) unsupported("arithmetic on non-integer value");
  return v.i;
}

unsigned long long want_bv(const Value& v, unsigned* w)
{
  if (v.kind != Value::Kind::BitVec) unsupported("bit-vector operator on non-bit-vector value");
  if (*w == 0) *w = v.width;
  if (v.width != *w) unsupported("bit-vector width mismatch");
  return v.bv;
}

}  // namespace

// -- Value -------------------------------------------------------------------

Value Value::boolean(bool v)
{
  Value r;
  r.kind = Kind::Bool;
  r.b = v;
  return r;
}

Value Value::integer(long long v)
{
  Value r;
  r.kind = Kind::Int;
  r.i = v;
  return r;
}

Value Value::bitvec(unsigned long long v, unsigned w)
{
  if (w == 0 || w > 64) unsupported("bit-vector width outside 1..64");
  Value r;
  r.kind = Kind::BitVec;
  r.bv = v & bv_mask(w);
  r.width = w;
  return r;
}

bool Value::operator==(const Value& o) const
{
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Bool: return b == o.b;
    case Kind::Int: return i == o.i;
    case Kind::BitVec: return width == o.width && bv == o.bv;
  }
  return false;
}

bool Value::operator<(const Value& o) const
{
  if (kind != o.kind) return kind < o.kind;
  switch (kind) {
    case Kind::Bool: return b < o.b;
    case Kind::Int: return i < o.i;
    case Kind::BitVec: return width != o.width ? width < o.width : bv < o.bv;
  }
  return false;
}

std::string Value::str() const
{
  switch (kind) {
    case Kind::Bool: return b ? "true" : "false";
    case Kind::Int: {
      if (i >= 0) return std::to_string(i);
      unsigned long long mag = (unsigned long long)(-(i + 1)) + 1;  // LLONG_MIN safe
      return "(- " + std::to_string(mag) + ")";
    }
    case Kind::BitVec: {
      std::string s = "#b";
      for (unsigned k = width; k-- > 0;) s += (bv >> k) & 1 ? '1' : '0';
      return s;
    }
  }
  return "?";
}

// -- operator kernel ----------------------------------------------------------

Value apply_op_values(Op op, const std::vector<Value>& a,
                      const std::vector<unsigned>& idx)
{
  switch (op) {
    case Op::And: {
      for (const Value& v : a)
        if (!want_bool(v)) return Value::boolean(false);
      return Value::boolean(true);
    }
    case Op::Or: {
      for (const Value& v : a)
        if (want_bool(v)) return Value::boolean(true);
      return Value::boolean(false);
    }
    case Op::Not: return Value::boolean(!want_bool(a[0]));
    case Op::Implies: {
      // right-associative chain: a1 => (a2 => ... => an)
      bool r = want_bool(a.back());
      for (size_t k = a.size() - 1; k-- > 0;) r = !want_bool(a[k]) || r;
      return Value::boolean(r);
    }
    case Op::Xor: {
      bool r = false;
      for (const Value& v : a) r ^= want_bool(v);
      return Value::boolean(r);
    }
    case Op::Eq: {
      for (size_t k = 1; k < a.size(); ++k)
        if (a[k] != a[0]) return Value::boolean(false);
      return Value::boolean(true);
    }
    case Op::Distinct: {
      for (size_t k = 0; k < a.size(); ++k)
        for (size_t j = k + 1; j < a.size(); ++j)
          if (a[k] == a[j]) return Value::boolean(false);
      return Value::boolean(true);
    }
    case Op::Ite: return want_bool(a[0]) ? a[1] : a[2];

    case Op::Add: {
      long long r = want_int(a[0]);
      for (size_t k = 1; k < a.size(); ++k) r = checked_add(r, want_int(a[k]));
      return Value::integer(r);
    }
    case Op::Sub: {
      long long r = want_int(a[0]);
      for (size_t k = 1; k < a.size(); ++k) r = checked_sub(r, want_int(a[k]));
      return Value::integer(r);
    }
    case Op::Neg: return Value::integer(checked_neg(want_int(a[0])));
    case Op::Mul: {
      long long r = want_int(a[0]);
      for (size_t k = 1; k < a.size(); ++k) r = checked_mul(r, want_int(a[k]));
      return Value::integer(r);
    }
    case Op::IntDiv: {
      long long r = want_int(a[0]);
      for (size_t k = 1; k < a.size(); ++k) r = euclid_div(r, want_int(a[k]));
      return Value::integer(r);
    }
    case Op::Mod: return Value::integer(euclid_mod(want_int(a[0]), want_int(a[1])));
    case Op::Abs: {
      long long v = want_int(a[0]);
      return Value::integer(v < 0 ? checked_neg(v) : v);
    }
    case Op::RealDiv: unsupported("real arithmetic");

    case Op::Le:
    case Op::Lt:
    case Op::Ge:
    case Op::Gt: {
      for (size_t k = 0; k + 1 < a.size(); ++k) {
        long long x = want_int(a[k]), y = want_int(a[k + 1]);
        bool ok = op == Op::Le   ? x <= y
                  : op == Op::Lt ? x < y
                  : op == Op::Ge ? x >= y
                                 : x > y;
        if (!ok) return Value::boolean(false);
      }
      return Value::boolean(true);
    }

    case Op::BvNot: {
      unsigned w = 0;
      unsigned long long v = want_bv(a[0], &w);
      return Value::bitvec(~v, w);
    }
    case Op::BvAnd:
    case Op::BvOr:
    case Op::BvXor:
    case Op::BvAdd:
    case Op::BvMul: {
      unsigned w = 0;
      unsigned long long r = want_bv(a[0], &w);
      for (size_t k = 1; k < a.size(); ++k) {
        unsigned long long v = want_bv(a[k], &w);
        switch (op) {
          case Op::BvAnd: r &= v; break;
          case Op::BvOr: r |= v; break;
          case Op::BvXor: r ^= v; break;
          case Op::BvAdd: r += v; break;
          default: r *= v; break;
        }
      }
      return Value::bitvec(r, w);
    }
    case Op::BvNand:
    case Op::BvNor:
    case Op::BvXnor: {
      unsigned w = 0;
      unsigned long long x = want_bv(a[0], &w), y = want_bv(a[1], &w);
      unsigned long long r = op == Op::BvNand ? ~(x & y)
                             : op == Op::BvNor ? ~(x | y)
                                               : ~(x ^ y);
      return Value::bitvec(r, w);
    }
    case Op::BvNeg: {
      unsigned w = 0;
      unsigned long long v = want_bv(a[0], &w);
      return Value::bitvec(bv_negate(v, w), w);
    }
    case Op::BvSub: {
      unsigned w = 0;
      unsigned long long x = want_bv(a[0], &w), y = want_bv(a[1], &w);
      return Value::bitvec(x - y, w);
    }
    case Op::BvUdiv: {
      unsigned w = 0;
      unsigned long long x = want_bv(a[0], &w), y = want_bv(a[1], &w);
      return Value::bitvec(bv_udiv(x, y, w), w);
    }
    case Op::BvUrem: {
      unsigned w = 0;
      unsigned long long x = want_bv(a[0], &w), y = want_bv(a[1], &w);
      return Value::bitvec(bv_urem(x, y), w);
    }
    case Op::BvSdiv: {
      unsigned w = 0;
      unsigned long long x = want_bv(a[0], &w), y = want_bv(a[1], &w);
      return Value::bitvec(bv_sdiv(x, y, w), w);
    }
    case Op::BvSrem: {
      unsigned w = 0;
      unsigned long long x = want_bv(a[0], &w), y = want_bv(a[1], &w);
      return Value::bitvec(bv_srem(x, y, w), w);
    }
    case Op::BvShl:
    case Op::BvLshr:
    case Op::BvAshr: {
      unsigned w = 0;
      unsigned long long x = want_bv(a[0], &w), k = want_bv(a[1], &w);
      if (k >= w) {
        if (op == Op::BvAshr && bv_sign(x, w)) return Value::bitvec(bv_mask(w), w);
        return Value::bitvec(0, w);
      }
      unsigned long long r = op == Op::BvShl    ? x << k
                             : op == Op::BvLshr ? x >> k
                                                : (unsigned long long)(bv_signed(x, w) >> k);
      return Value::bitvec(r, w);
    }
    case Op::BvUlt:
    case Op::BvUle:
    case Op::BvUgt:
    case Op::BvUge: {
      unsigned w = 0;
      unsigned long long x = want_bv(a[0], &w), y = want_bv(a[1], &w);
      bool r = op == Op::BvUlt   ? x < y
               : op == Op::BvUle ? x <= y
               : op == Op::BvUgt ? x > y
                                 : x >= y;
      return Value::boolean(r);
    }
    case Op::BvSlt:
    case Op::BvSle:
    case Op::BvSgt:
    case Op::BvSge: {
      unsigned w = 0;
      unsigned long long xr = want_bv(a[0], &w), yr = want_bv(a[1], &w);
      long long x = bv_signed(xr, w);
      long long y = bv_signed(yr, w);
      bool r = op == Op::BvSlt   ? x < y
               : op == Op::BvSle ? x <= y
               : op == Op::BvSgt ? x > y
                                 : x >= y;
      return Value::boolean(r);
    }
    case Op::Concat: {
      unsigned long long r = 0;
      unsigned total = 0;
      for (const Value& v : a) {
        if (v.kind != Value::Kind::BitVec) unsupported("concat on non-bit-vector value");
        total += v.width;
        if (total > 64) unsupported("bit-vector wider than 64");
        r = (r << v.width) | v.bv;
      }
      return Value::bitvec(r, total);
    }
    case Op::Extract: {
      unsigned w = 0;
      unsigned long long v = want_bv(a[0], &w);
      unsigned hi = idx.at(0), lo = idx.at(1);
      if (hi >= w || lo > hi) unsupported("extract indices outside operand width");
      return Value::bitvec(v >> lo, hi - lo + 1);
    }
    case Op::ZeroExtend: {
      unsigned w = 0;
      unsigned long long v = want_bv(a[0], &w);
      if (w + idx.at(0) > 64) unsupported("bit-vector wider than 64");
      return Value::bitvec(v, w + idx.at(0));
    }
    case Op::SignExtend: {
      unsigned w = 0;
      unsigned long long v = want_bv(a[0], &w);
      if (w + idx.at(0) > 64) unsupported("bit-vector wider than 64");
      return Value::bitvec((unsigned long long)bv_signed(v, w), w + idx.at(0));
    }
    case Op::Select:
    case Op::Store: unsupported("array operations");
  }
  unsupported(std::string("operator ") + op_name(op));
}

// -- evaluation ----------------------------------------------------------------

namespace {

struct Evaluator {
  const std::map<std::string, std::pair<char, size_t>>& index;
  const State& s;
  const InputVals* in;
  const State* next;
  std::vector<std::pair<std::string, Value>> lets;

  Value eval(const Term& t)
  {
    switch (t.kind()) {
      case Term::Kind::Var: {
        for (auto it = lets.rbegin(); it != lets.rend(); ++it)
          if (it->first == t.name()) return it->second;
        auto f = index.find(t.name());
        if (f == index.end()) unsupported("no value for symbol " + t.name());
        switch (f->second.first) {
          case 's': return s.at(f->second.second);
          case 'i':
            if (!in) unsupported("input variable " + t.name() + " has no assignment here");
            return in->at(f->second.second);
          default:
            if (!next) unsupported("next-state variable " + t.name() + " has no assignment here");
            return next->at(f->second.second);
        }
      }
      case Term::Kind::Const:
        switch (t.sort().kind()) {
          case Sort::Kind::Bool: return Value::boolean(t.is_true());
          case Sort::Kind::Int: return Value::integer(t.int_value());
          case Sort::Kind::BitVec: return Value::bitvec(t.bv_value(), t.sort().width());
          default: unsupported("literal of sort " + t.sort().str());
        }
      case Term::Kind::App: {
        const auto& args = t.args();
        // short-circuit so guarded divisions etc. never evaluate the
        // untaken operand
        if (t.op() == Op::And) {
          for (const Term& u : args)
            if (!want_bool(eval(u))) return Value::boolean(false);
          return Value::boolean(true);
        }
        if (t.op() == Op::Or) {
          for (const Term& u : args)
            if (want_bool(eval(u))) return Value::boolean(true);
          return Value::boolean(false);
        }
        if (t.op() == Op::Implies) {
          for (size_t k = 0; k + 1 < args.size(); ++k)
            if (!want_bool(eval(args[k]))) return Value::boolean(true);
          return Value::boolean(want_bool(eval(args.back())));
        }
        if (t.op() == Op::Ite)
          return eval(want_bool(eval(args[0])) ? args[1] : args[2]);
        std::vector<Value> vals;
        vals.reserve(args.size());
        for (const Term& u : args) vals.push_back(eval(u));
        return apply_op_values(t.op(), vals, t.indices());
      }
      case Term::Kind::UApp:
        unsupported("uninterpreted function " + t.name());
      case Term::Kind::Let: {
        std::vector<std::pair<std::string, Value>> vals;
        for (const auto& [name, value] : t.bindings())
          vals.emplace_back(name, eval(value));  // parallel let
        size_t mark = lets.size();
        for (auto& nv : vals) lets.push_back(std::move(nv));
        Value r = eval(t.body());
        lets.resize(mark);
        return r;
      }
      case Term::Kind::Quant:
        unsupported("quantified formula");
      case Term::Kind::Annot:
        return eval(t.inner());
    }
    unsupported("malformed term");
  }
};

}  // namespace

// -- Oracle --------------------------------------------------------------------

Oracle::Oracle(const VmtDocument& doc, DomainBounds bounds)
    : doc_(&doc), bounds_(std::move(bounds))
{
  const TransitionSystem& ts = doc.system;
  for (size_t i = 0; i < ts.states.size(); ++i) {
    index_[ts.states[i].current] = {'s', i};
    index_[ts.states[i].next] = {'n', i};
  }
  for (size_t i = 0; i < ts.inputs.size(); ++i)
    index_[ts.inputs[i].first] = {'i', i};
  // fail construction, not some later query, on a non-enumerable variable
  state_domains();
  input_domains();
}

std::vector<Value> Oracle::domain(const std::string& var, const Sort& sort) const
{
  std::vector<Value> d;
  switch (sort.kind()) {
    case Sort::Kind::Bool:
      d = {Value::boolean(false), Value::boolean(true)};
      break;
    case Sort::Kind::Int: {
      auto [lo, hi] = bounds_.interval(var);
      if (lo > hi)
        throw Error(ErrCode::UsageError,
                    "empty interval for " + var + ": [" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "]");
      if ((unsigned long long)hi - (unsigned long long)lo >= (1u << 20))
        unsupported("interval for " + var + " too large to enumerate");
      for (long long v = lo;; ++v) {  // hi may be LLONG_MAX; v <= hi would spin
        d.push_back(Value::integer(v));
        if (v == hi) break;
      }
      break;
    }
    case Sort::Kind::BitVec: {
      unsigned w = sort.width();
      if (w > 8)
        unsupported("(_ BitVec " + std::to_string(w) +
                    ") variable " + var + " too wide to enumerate (8-bit limit)");
      for (unsigned long long v = 0; v < (1ull << w); ++v)
        d.push_back(Value::bitvec(v, w));
      break;
    }
    default:
      unsupported("variable " + var + " of sort " + sort.str() +
                  " is not enumerable");
  }
  return d;
}

std::vector<std::vector<Value>> Oracle::state_domains() const
{
  std::vector<std::vector<Value>> d;
  for (const StateVariable& sv : doc_->system.states)
    d.push_back(domain(sv.current, sv.sort));
  return d;
}

std::vector<std::vector<Value>> Oracle::input_domains() const
{
  std::vector<std::vector<Value>> d;
  for (const auto& [name, sort] : doc_->system.inputs)
    d.push_back(domain(name, sort));
  return d;
}

void Oracle::check_state_bounds(const State& s) const
{
  const auto& sts = doc_->system.states;
  if (s.size() != sts.size())
    throw Error(ErrCode::UsageError, "state vector arity mismatch");
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i].kind == Value::Kind::Int && sts[i].sort.kind() == Sort::Kind::Int) {
      auto [lo, hi] = bounds_.interval(sts[i].current);
      if (s[i].i < lo || s[i].i > hi)
        overflow(sts[i].current + " = " + s[i].str() + " outside [" +
                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }
}

void Oracle::check_input_bounds(const InputVals& in) const
{
  const auto& ins = doc_->system.inputs;
  if (in.size() != ins.size())
    throw Error(ErrCode::UsageError, "input vector arity mismatch");
  for (size_t i = 0; i < in.size(); ++i) {
    if (in[i].kind == Value::Kind::Int && ins[i].second.kind() == Sort::Kind::Int) {
      auto [lo, hi] = bounds_.interval(ins[i].first);
      if (in[i].i < lo || in[i].i > hi)
        overflow(ins[i].first + " = " + in[i].str() + " outside [" +
                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }
}

Value Oracle::eval(const Term& t, const State& s, const InputVals* inputs,
                   const State* next) const
{
  check_state_bounds(s);
  if (inputs) check_input_bounds(*inputs);
  if (next) check_state_bounds(*next);
  if (t.null()) return Value::boolean(true);
  Evaluator ev{index_, s, inputs, next, {}};
  return ev.eval(t);
}

bool Oracle::holds(const Term& t, const State& s, const InputVals* inputs,
                   const State* next) const
{
  Value v = eval(t, s, inputs, next);
  if (v.kind != Value::Kind::Bool)
    throw Error(ErrCode::UsageError, "holds() on a non-boolean term");
  return v.b;
}

namespace {

// odometer over the cartesian product of the domains
template <typename F>
void for_each_tuple(const std::vector<std::vector<Value>>& doms, F f)
{
  for (const auto& d : doms)
    if (d.empty()) return;
  std::vector<size_t> at(doms.size(), 0);
  std::vector<Value> tuple;
  for (;;) {
    tuple.clear();
    for (size_t i = 0; i < doms.size(); ++i) tuple.push_back(doms[i][at[i]]);
    f(tuple);
    size_t i = doms.size();
    while (i > 0) {
      --i;
      if (++at[i] < doms[i].size()) break;
      at[i] = 0;
      if (i == 0) return;
    }
    if (doms.empty()) return;  // single empty tuple already visited
  }
}

}  // namespace

std::vector<State> Oracle::initial_states() const
{
  Term init = doc_->system.init.null() ? Term::true_() : doc_->system.init;
  std::vector<State> out;
  for_each_tuple(state_domains(), [&](const State& s) {
    if (holds(init, s)) out.push_back(s);
  });
  return out;
}

std::vector<std::pair<InputVals, State>> Oracle::successors(const State& s) const
{
  Term trans = doc_->system.trans.null() ? Term::true_() : doc_->system.trans;
  std::vector<std::pair<InputVals, State>> out;
  auto sd = state_domains();
  for_each_tuple(input_domains(), [&](const InputVals& in) {
    for_each_tuple(sd, [&](const State& nxt) {
      if (holds(trans, s, &in, &nxt)) out.emplace_back(in, nxt);
    });
  });
  return out;
}

InvariantResult Oracle::check_invariant(const PropertySpec& p, int max_depth) const
{
  std::map<State, std::pair<State, InputVals>> parent;
  auto reconstruct = [&](State last) {
    FinitePath path;
    path.states.push_back(last);
    for (auto it = parent.find(last); it != parent.end();
         it = parent.find(path.states.back())) {
      path.inputs.push_back(it->second.second);
      path.states.push_back(it->second.first);
    }
    std::reverse(path.states.begin(), path.states.end());
    std::reverse(path.inputs.begin(), path.inputs.end());
    return path;
  };

  std::set<State> visited;
  std::vector<State> layer;
  for (State& st : initial_states())
    if (visited.insert(st).second) layer.push_back(st);
  for (const State& st : layer)
    if (!holds(p.formula, st)) return {reconstruct(st), false};

  for (int d = 0; d < max_depth && !layer.empty(); ++d) {
    std::vector<State> frontier;
    for (const State& st : layer) {
      for (auto& [in, nxt] : successors(st)) {
        if (!visited.insert(nxt).second) continue;
        parent.emplace(nxt, std::make_pair(st, in));
        if (!holds(p.formula, nxt)) return {reconstruct(nxt), false};
        frontier.push_back(nxt);
      }
    }
    layer = std::move(frontier);
  }
  InvariantResult r;
  r.exhausted = layer.empty();
  return r;
}

Oracle::ReachGraph Oracle::explore() const
{
  ReachGraph g;
  std::deque<size_t> work;
  auto intern = [&](const State& st) {
    auto it = g.id.find(st);
    if (it != g.id.end()) return std::make_pair(it->second, false);
    size_t v = g.order.size();
    g.id.emplace(st, v);
    g.order.push_back(st);
    work.push_back(v);
    return std::make_pair(v, true);
  };
  for (const State& st : initial_states()) {
    auto [v, fresh] = intern(st);
    if (fresh) g.initial.push_back(v);
  }
  while (!work.empty()) {
    size_t v = work.front();
    work.pop_front();
    State cur = g.order[v];
    auto succ = successors(cur);
    auto& ev = g.edges[v];
    for (auto& [in, nxt] : succ) {
      auto [w, fresh] = intern(nxt);
      if (fresh) g.parent.emplace(w, std::make_pair(v, in));
      ev.emplace_back(in, w);
    }
  }
  return g;
}

size_t Oracle::reachable_count() const
{
  return explore().order.size();
}

std::optional<Lasso> Oracle::check_live(const PropertySpec& p) const
{
  ReachGraph g = explore();
  for (size_t u = 0; u < g.order.size(); ++u) {
    if (holds(p.formula, g.order[u])) continue;

    // shortest cycle through u
    std::map<size_t, std::pair<size_t, InputVals>> par;
    std::set<size_t> seen;
    std::deque<size_t> q{u};
    size_t closer = g.order.size();
    InputVals closing;
    while (!q.empty() && closer == g.order.size()) {
      size_t v = q.front();
      q.pop_front();
      for (auto& [in, w] : g.edges[v]) {
        if (w == u) {
          closer = v;
          closing = in;
          break;
        }
        if (seen.insert(w).second) {
          par.emplace(w, std::make_pair(v, in));
          q.push_back(w);
        }
      }
    }
    if (closer == g.order.size()) continue;  // u is on no cycle

    // cycle interior, read back from u's BFS tree: u -> ... -> closer
    std::vector<std::pair<InputVals, size_t>> interior;
    for (size_t v = closer; v != u;) {
      auto& [pred, in] = par.at(v);
      interior.emplace_back(in, v);
      v = pred;
    }
    std::reverse(interior.begin(), interior.end());

    // stem from an initial state to u, read back from the reachability tree
    std::vector<size_t> stem{u};
    std::vector<InputVals> stem_in;
    for (auto it = g.parent.find(u); it != g.parent.end();
         it = g.parent.find(stem.back())) {
      stem_in.push_back(it->second.second);
      stem.push_back(it->second.first);
    }
    std::reverse(stem.begin(), stem.end());
    std::reverse(stem_in.begin(), stem_in.end());

    Lasso lasso;
    for (size_t v : stem) lasso.path.states.push_back(g.order[v]);
    lasso.path.inputs = std::move(stem_in);
    lasso.loop_start = lasso.path.states.size() - 1;
    for (auto& [in, v] : interior) {
      lasso.path.inputs.push_back(in);
      lasso.path.states.push_back(g.order[v]);
    }
    lasso.closing_input = std::move(closing);
    return lasso;
  }
  return std::nullopt;
}

FinitePath Oracle::simulate(int steps, uint64_t seed) const
{
  std::mt19937_64 rng(seed);
  auto pick = [&rng](size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
  };
  FinitePath path;
  std::vector<State> inits = initial_states();
  if (inits.empty()) return path;
  path.states.push_back(inits[pick(inits.size())]);
  for (int k = 0; k < steps; ++k) {
    auto succ = successors(path.states.back());
    if (succ.empty()) break;  // deadlock
    auto& [in, nxt] = succ[pick(succ.size())];
    path.inputs.push_back(in);
    path.states.push_back(nxt);
  }
  return path;
}

bool Oracle::valid_path(const FinitePath& path) const
{
  if (path.states.empty()) return false;
  if (path.inputs.size() + 1 != path.states.size()) return false;
  Term init = doc_->system.init.null() ? Term::true_() : doc_->system.init;
  Term trans = doc_->system.trans.null() ? Term::true_() : doc_->system.trans;
  try {
    if (!holds(init, path.states[0])) return false;
    for (size_t k = 0; k + 1 < path.states.size(); ++k)
      if (!holds(trans, path.states[k], &path.inputs[k], &path.states[k + 1]))
        return false;
  } catch (const Error&) {
    return false;
  }
  return true;
}

bool Oracle::valid_lasso(const Lasso& lasso, const Term& property) const
{
  if (!valid_path(lasso.path)) return false;
  if (lasso.loop_start >= lasso.path.states.size()) return false;
  Term trans = doc_->system.trans.null() ? Term::true_() : doc_->system.trans;
  try {
    if (!holds(trans, lasso.path.states.back(), &lasso.closing_input,
               &lasso.path.states[lasso.loop_start]))
      return false;
    for (size_t k = lasso.loop_start; k < lasso.path.states.size(); ++k)
      if (!holds(property, lasso.path.states[k])) return true;
  } catch (const Error&) {
    return false;
  }
  return false;  // every loop state satisfies the property: not a counterexample
}

// -- free functions --------------------------------------------------------------

InvariantResult check_invariant_explicit(const VmtDocument& doc,
                                         const PropertySpec& p,
                                         const DomainBounds& bounds,
                                         int max_depth)
{
  return Oracle(doc, bounds).check_invariant(p, max_depth);
}

std::optional<Lasso> check_live_explicit(const VmtDocument& doc,
                                         const PropertySpec& p,
                                         const DomainBounds& bounds)
{
  return Oracle(doc, bounds).check_live(p);
}

}  // namespace vmtkit
