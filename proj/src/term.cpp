#include "vmtkit/term.h"

#include <algorithm>
#include <unordered_map>

#include "vmtkit/sexpr.h"

namespace vmtkit {

namespace {

struct OpInfo {
  Op op;
  const char* name;
};

const OpInfo kOps[] = {
    {Op::And, "and"}, {Op::Or, "or"}, {Op::Not, "not"}, {Op::Implies, "=>"},
    {Op::Xor, "xor"}, {Op::Eq, "="}, {Op::Distinct, "distinct"}, {Op::Ite, "ite"},
    {Op::Add, "+"}, {Op::Sub, "-"}, {Op::Neg, "-"}, {Op::Mul, "*"},
    {Op::IntDiv, "div"}, {Op::Mod, "mod"}, {Op::Abs, "abs"}, {Op::RealDiv, "/"},
    {Op::Le, "<="}, {Op::Lt, "<"}, {Op::Ge, ">="}, {Op::Gt, ">"},
    {Op::BvNot, "bvnot"}, {Op::BvAnd, "bvand"}, {Op::BvOr, "bvor"},
    {Op::BvXor, "bvxor"}, {Op::BvNand, "bvnand"}, {Op::BvNor, "bvnor"},
    {Op::BvXnor, "bvxnor"}, {Op::BvNeg, "bvneg"}, {Op::BvAdd, "bvadd"},
    {Op::BvSub, "bvsub"}, {Op::BvMul, "bvmul"}, {Op::BvUdiv, "bvudiv"},
    {Op::BvUrem, "bvurem"}, {Op::BvSdiv, "bvsdiv"}, {Op::BvSrem, "bvsrem"},
    {Op::BvShl, "bvshl"}, {Op::BvLshr, "bvlshr"}, {Op::BvAshr, "bvashr"},
    {Op::BvUlt, "bvult"}, {Op::BvUle, "bvule"}, {Op::BvUgt, "bvugt"},
    {Op::BvUge, "bvuge"}, {Op::BvSlt, "bvslt"}, {Op::BvSle, "bvsle"},
    {Op::BvSgt, "bvsgt"}, {Op::BvSge, "bvsge"},
    {Op::Concat, "concat"}, {Op::Extract, "extract"},
    {Op::ZeroExtend, "zero_extend"}, {Op::SignExtend, "sign_extend"},
    {Op::Select, "select"}, {Op::Store, "store"},
};

Error sort_err(const std::string& msg)
{
  return Error(ErrCode::SortMismatch, msg);
}

bool all_same_sort(const std::vector<Term>& args)
{
  for (size_t i = 1; i < args.size(); i++)
    if (args[i].sort() != args[0].sort()) return false;
  return true;
}

}  // namespace

const char* op_name(Op op)
{
  for (const auto& oi : kOps)
    if (oi.op == op) return oi.name;
  return "?";
}

std::optional<Op> op_by_name(const std::string& name)
{
  // "-" resolves to Sub; the elaborator picks Neg for a single argument.
  for (const auto& oi : kOps)
    if (oi.op != Op::Neg && name == oi.name) return oi.op;
  return std::nullopt;
}

Sort infer_sort(Op op, const std::vector<Term>& args,
                const std::vector<unsigned>& indices)
{
  auto arity = [&](size_t n) {
    if (args.size() != n)
      throw sort_err(std::string(op_name(op)) + " expects " + std::to_string(n) +
                     " arguments, got " + std::to_string(args.size()));
  };
  auto at_least = [&](size_t n) {
    if (args.size() < n)
      throw sort_err(std::string(op_name(op)) + " expects at least " +
                     std::to_string(n) + " arguments");
  };
  auto all_bool = [&]() {
    for (const auto& a : args)
      if (!a.sort().is_bool())
        throw sort_err(std::string(op_name(op)) + " expects Bool arguments, got " +
                       a.sort().str());
  };
  auto all_arith = [&]() -> Sort {
    for (const auto& a : args)
      if (!a.sort().is_arith())
        throw sort_err(std::string(op_name(op)) + " expects Int/Real arguments, got " +
                       a.sort().str());
    if (!all_same_sort(args))
      throw sort_err(std::string(op_name(op)) + " arguments mix Int and Real");
    return args[0].sort();
  };
  auto all_bv_same = [&]() -> Sort {
    for (const auto& a : args)
      if (!a.sort().is_bitvec())
        throw sort_err(std::string(op_name(op)) + " expects BitVec arguments, got " +
                       a.sort().str());
    if (!all_same_sort(args))
      throw sort_err(std::string(op_name(op)) + " arguments have unequal widths");
    return args[0].sort();
  };

  switch (op) {
    case Op::And:
    case Op::Or:
    case Op::Xor:
      at_least(1);
      all_bool();
      return Sort::boolean();
    case Op::Not:
      arity(1);
      all_bool();
      return Sort::boolean();
    case Op::Implies:
      at_least(2);
      all_bool();
      return Sort::boolean();
    case Op::Eq:
    case Op::Distinct:
      at_least(2);
      if (!all_same_sort(args))
        throw sort_err(std::string(op_name(op)) + " arguments have different sorts: " +
                       args[0].sort().str());
      return Sort::boolean();
    case Op::Ite:
      arity(3);
      if (!args[0].sort().is_bool()) throw sort_err("ite condition must be Bool");
      if (args[1].sort() != args[2].sort())
        throw sort_err("ite branches have different sorts");
      return args[1].sort();
    case Op::Add:
    case Op::Mul:
      at_least(2);
      return all_arith();
    case Op::Sub:
      at_least(2);
      return all_arith();
    case Op::Neg:
    case Op::Abs:
      arity(1);
      return all_arith();
    case Op::IntDiv:
    case Op::Mod: {
      if (op == Op::IntDiv) at_least(2); else arity(2);
      for (const auto& a : args)
        if (!a.sort().is_int())
          throw sort_err(std::string(op_name(op)) + " expects Int arguments");
      return Sort::integer();
    }
    case Op::RealDiv:
      at_least(2);
      for (const auto& a : args)
        if (!a.sort().is_real())
          throw sort_err("/ expects Real arguments");
      return Sort::real();
    case Op::Le:
    case Op::Lt:
    case Op::Ge:
    case Op::Gt:
      at_least(2);
      all_arith();
      return Sort::boolean();
    case Op::BvNot:
    case Op::BvNeg:
      arity(1);
      return all_bv_same();
    case Op::BvAnd: case Op::BvOr: case Op::BvXor:
    case Op::BvNand: case Op::BvNor: case Op::BvXnor:
    case Op::BvAdd: case Op::BvSub: case Op::BvMul:
    case Op::BvUdiv: case Op::BvUrem: case Op::BvSdiv: case Op::BvSrem:
    case Op::BvShl: case Op::BvLshr: case Op::BvAshr:
      arity(2);
      return all_bv_same();
    case Op::BvUlt: case Op::BvUle: case Op::BvUgt: case Op::BvUge:
    case Op::BvSlt: case Op::BvSle: case Op::BvSgt: case Op::BvSge:
      arity(2);
      all_bv_same();
      return Sort::boolean();
    case Op::Concat: {
      at_least(2);
      unsigned w = 0;
      for (const auto& a : args) {
        if (!a.sort().is_bitvec()) throw sort_err("concat expects BitVec arguments");
        w += a.sort().width();
      }
      return Sort::bitvec(w);
    }
    case Op::Extract: {
      arity(1);
      if (indices.size() != 2) throw sort_err("extract expects two indices");
      if (!args[0].sort().is_bitvec()) throw sort_err("extract expects a BitVec argument");
      unsigned hi = indices[0], lo = indices[1];
      if (hi < lo || hi >= args[0].sort().width())
        throw sort_err("extract indices out of range");
      return Sort::bitvec(hi - lo + 1);
    }
    case Op::ZeroExtend:
    case Op::SignExtend: {
      arity(1);
      if (indices.size() != 1) throw sort_err("extend expects one index");
      if (!args[0].sort().is_bitvec()) throw sort_err("extend expects a BitVec argument");
      return Sort::bitvec(args[0].sort().width() + indices[0]);
    }
    case Op::Select: {
      arity(2);
      if (!args[0].sort().is_array()) throw sort_err("select expects an Array");
      if (args[1].sort() != args[0].sort().index())
        throw sort_err("select index sort mismatch");
      return args[0].sort().element();
    }
    case Op::Store: {
      arity(3);
      if (!args[0].sort().is_array()) throw sort_err("store expects an Array");
      if (args[1].sort() != args[0].sort().index())
        throw sort_err("store index sort mismatch");
      if (args[2].sort() != args[0].sort().element())
        throw sort_err("store element sort mismatch");
      return args[0].sort();
    }
  }
  throw sort_err("unknown operator");
}

// -- constructors -----------------------------------------------------------

Term Term::var(std::string name, Sort sort, bool bound)
{
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->sort = std::move(sort);
  n->name = std::move(name);
  n->bound = bound;
  return Term(std::move(n));
}

Term Term::constant(Sort sort, std::string text)
{
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->sort = std::move(sort);
  n->name = std::move(text);
  return Term(std::move(n));
}

Term Term::true_()
{
  static const Term t = constant(Sort::boolean(), "true");
  return t;
}

Term Term::false_()
{
  static const Term t = constant(Sort::boolean(), "false");
  return t;
}

Term Term::int_const(long long v)
{
  if (v < 0) {
    unsigned long long mag = ~static_cast<unsigned long long>(v) + 1ull;
    return app(Op::Neg, {constant(Sort::integer(), std::to_string(mag))});
  }
  return constant(Sort::integer(), std::to_string(v));
}

Term Term::bv_const(unsigned long long value, unsigned width)
{
  if (width < 64) value &= (1ull << width) - 1;
  return constant(Sort::bitvec(width), std::to_string(value));
}

Term Term::app(Op op, std::vector<Term> args, std::vector<unsigned> indices)
{
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->sort = infer_sort(op, args, indices);
  n->op = op;
  n->args = std::move(args);
  n->indices = std::move(indices);
  return Term(std::move(n));
}

Term Term::uapp(std::string fun, std::vector<Term> args, Sort result)
{
  auto n = std::make_shared<Node>();
  n->kind = Kind::UApp;
  n->sort = std::move(result);
  n->name = std::move(fun);
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::let(std::vector<std::pair<std::string, Term>> bindings, Term body)
{
  auto n = std::make_shared<Node>();
  n->kind = Kind::Let;
  n->sort = body.sort();
  n->lets = std::move(bindings);
  n->args = {std::move(body)};
  return Term(std::move(n));
}

Term Term::quant(bool is_forall, std::vector<std::pair<std::string, Sort>> binders, Term body)
{
  if (!body.sort().is_bool())
    throw sort_err("quantified body must be Bool");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Quant;
  n->sort = Sort::boolean();
  n->is_forall = is_forall;
  n->binders = std::move(binders);
  n->args = {std::move(body)};
  return Term(std::move(n));
}

Term Term::annot(Term inner, std::vector<Attr> attrs)
{
  auto n = std::make_shared<Node>();
  n->kind = Kind::Annot;
  n->sort = inner.sort();
  n->args = {std::move(inner)};
  n->attrs = std::move(attrs);
  return Term(std::move(n));
}

Term Term::mk_and(std::vector<Term> args)
{
  std::vector<Term> keep;
  for (auto& a : args) {
    if (a.is_true()) continue;
    keep.push_back(std::move(a));
  }
  if (keep.empty()) return true_();
  if (keep.size() == 1) return keep[0];
  return app(Op::And, std::move(keep));
}

Term Term::mk_or(std::vector<Term> args)
{
  std::vector<Term> keep;
  for (auto& a : args) {
    if (a.is_false()) continue;
    keep.push_back(std::move(a));
  }
  if (keep.empty()) return false_();
  if (keep.size() == 1) return keep[0];
  return app(Op::Or, std::move(keep));
}

Term Term::mk_not(Term t)
{
  if (t.is_true()) return false_();
  if (t.is_false()) return true_();
  return app(Op::Not, {std::move(t)});
}

Term Term::mk_eq(Term a, Term b) { return app(Op::Eq, {std::move(a), std::move(b)}); }
Term Term::mk_implies(Term a, Term b) { return app(Op::Implies, {std::move(a), std::move(b)}); }
Term Term::mk_ite(Term c, Term t, Term e)
{
  return app(Op::Ite, {std::move(c), std::move(t), std::move(e)});
}

// -- observers ----------------------------------------------------------------

bool Term::is_true() const
{
  return kind() == Kind::Const && sort().is_bool() && name() == "true";
}

bool Term::is_false() const
{
  return kind() == Kind::Const && sort().is_bool() && name() == "false";
}

long long Term::int_value() const
{
  if (kind() != Kind::Const || !sort().is_int())
    throw Error(ErrCode::SortMismatch, "not an Int constant: " + str());
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(name().c_str(), &end, 10);
  if (errno != 0 || end == name().c_str() || *end != '\0')
    throw Error(ErrCode::DomainOverflow, "integer constant out of range: " + name());
  return v;
}

unsigned long long Term::bv_value() const
{
  if (kind() != Kind::Const || !sort().is_bitvec())
    throw Error(ErrCode::SortMismatch, "not a BitVec constant: " + str());
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(name().c_str(), &end, 10);
  if (errno != 0 || end == name().c_str() || *end != '\0')
    throw Error(ErrCode::DomainOverflow, "bitvector constant out of range: " + name());
  return v;
}

bool Term::operator==(const Term& o) const
{
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->kind != o.n_->kind || n_->sort != o.n_->sort) return false;
  switch (n_->kind) {
    case Kind::Var:
      return n_->name == o.n_->name && n_->bound == o.n_->bound;
    case Kind::Const:
      return n_->name == o.n_->name;
    case Kind::App:
      if (n_->op != o.n_->op || n_->indices != o.n_->indices) return false;
      break;
    case Kind::UApp:
      if (n_->name != o.n_->name) return false;
      break;
    case Kind::Let: {
      if (n_->lets.size() != o.n_->lets.size()) return false;
      for (size_t i = 0; i < n_->lets.size(); i++) {
        if (n_->lets[i].first != o.n_->lets[i].first) return false;
        if (!(n_->lets[i].second == o.n_->lets[i].second)) return false;
      }
      break;
    }
    case Kind::Quant: {
      if (n_->is_forall != o.n_->is_forall) return false;
      if (n_->binders.size() != o.n_->binders.size()) return false;
      for (size_t i = 0; i < n_->binders.size(); i++) {
        if (n_->binders[i].first != o.n_->binders[i].first) return false;
        if (n_->binders[i].second != o.n_->binders[i].second) return false;
      }
      break;
    }
    case Kind::Annot: {
      if (n_->attrs.size() != o.n_->attrs.size()) return false;
      for (size_t i = 0; i < n_->attrs.size(); i++)
        if (!(n_->attrs[i] == o.n_->attrs[i])) return false;
      break;
    }
  }
  if (n_->args.size() != o.n_->args.size()) return false;
  for (size_t i = 0; i < n_->args.size(); i++)
    if (!(n_->args[i] == o.n_->args[i])) return false;
  return true;
}

// -- printing ---------------------------------------------------------------

namespace {

void print_term(const Term& t, std::string& out)
{
  switch (t.kind()) {
    case Term::Kind::Var:
      out += print_symbol(t.name());
      return;
    case Term::Kind::Const: {
      if (t.sort().is_bitvec()) {
        out += "(_ bv" + t.name() + " " + std::to_string(t.sort().width()) + ")";
      } else {
        out += t.name();
      }
      return;
    }
    case Term::Kind::App: {
      out += '(';
      switch (t.op()) {
        case Op::Extract:
          out += "(_ extract " + std::to_string(t.indices()[0]) + " " +
                 std::to_string(t.indices()[1]) + ")";
          break;
        case Op::ZeroExtend:
          out += "(_ zero_extend " + std::to_string(t.indices()[0]) + ")";
          break;
        case Op::SignExtend:
          out += "(_ sign_extend " + std::to_string(t.indices()[0]) + ")";
          break;
        default:
          out += op_name(t.op());
      }
      for (const auto& a : t.args()) {
        out += ' ';
        print_term(a, out);
      }
      out += ')';
      return;
    }
    case Term::Kind::UApp: {
      if (t.args().empty()) {  // should not occur; vars cover 0-ary
        out += print_symbol(t.name());
        return;
      }
      out += '(';
      out += print_symbol(t.name());
      for (const auto& a : t.args()) {
        out += ' ';
        print_term(a, out);
      }
      out += ')';
      return;
    }
    case Term::Kind::Let: {
      out += "(let (";
      bool first = true;
      for (const auto& [name, value] : t.bindings()) {
        if (!first) out += ' ';
        first = false;
        out += '(';
        out += print_symbol(name);
        out += ' ';
        print_term(value, out);
        out += ')';
      }
      out += ") ";
      print_term(t.body(), out);
      out += ')';
      return;
    }
    case Term::Kind::Quant: {
      out += t.is_forall() ? "(forall (" : "(exists (";
      bool first = true;
      for (const auto& [name, sort] : t.binders()) {
        if (!first) out += ' ';
        first = false;
        out += '(';
        out += print_symbol(name);
        out += ' ';
        out += sort.str();
        out += ')';
      }
      out += ") ";
      print_term(t.body(), out);
      out += ')';
      return;
    }
    case Term::Kind::Annot: {
      out += "(! ";
      print_term(t.inner(), out);
      for (const auto& a : t.attrs()) {
        out += " :";
        out += a.keyword;
        if (a.has_value) {
          out += ' ';
          out += a.value;
        }
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string Term::str() const
{
  std::string out;
  print_term(*this, out);
  return out;
}

// -- traversals ---------------------------------------------------------------

namespace {

template <typename F>
void visit(const Term& t, F&& f)
{
  f(t);
  switch (t.kind()) {
    case Term::Kind::Let:
      for (const auto& [_, v] : t.bindings()) visit(v, f);
      break;
    default:
      break;
  }
  for (const auto& a : t.args()) visit(a, f);
}

}  // namespace

std::set<std::string> free_vars(const Term& t)
{
  std::set<std::string> out;
  visit(t, [&](const Term& u) {
    if (u.is_var() && !u.bound()) out.insert(u.name());
  });
  return out;
}

std::set<std::string> applied_functions(const Term& t)
{
  std::set<std::string> out;
  visit(t, [&](const Term& u) {
    if (u.kind() == Term::Kind::UApp) out.insert(u.name());
  });
  return out;
}

bool contains_quantifier(const Term& t)
{
  bool found = false;
  visit(t, [&](const Term& u) {
    if (u.kind() == Term::Kind::Quant) found = true;
  });
  return found;
}

std::vector<Term> conjuncts(const Term& t)
{
  std::vector<Term> out;
  if (t.is_true()) return out;
  if (t.kind() == Term::Kind::App && t.op() == Op::And) {
    for (const auto& a : t.args()) {
      auto sub = conjuncts(a);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  out.push_back(t);
  return out;
}

// -- substitution -------------------------------------------------------------

namespace {

struct Subst {
  const std::map<std::string, Term>& free_map;
  std::map<std::string, std::string> bound_renames;
  std::set<std::string> shadowed;   // free_map keys hidden by a binder
  std::set<std::string> avoid;      // names free in substituted values
  int fresh_counter = 0;

  std::string fresh_name(const std::string& base, const std::set<std::string>& extra)
  {
    std::string cand;
    do {
      cand = base + "!" + std::to_string(fresh_counter++);
    } while (avoid.count(cand) || extra.count(cand) || free_map.count(cand));
    return cand;
  }

  Term apply(const Term& t)
  {
    switch (t.kind()) {
      case Term::Kind::Var: {
        if (t.bound()) {
          auto it = bound_renames.find(t.name());
          if (it != bound_renames.end()) return Term::var(it->second, t.sort(), true);
          return t;
        }
        if (shadowed.count(t.name())) return t;
        auto it = free_map.find(t.name());
        if (it != free_map.end()) return it->second;
        return t;
      }
      case Term::Kind::Const:
        return t;
      case Term::Kind::App: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const auto& a : t.args()) args.push_back(apply(a));
        return Term::app(t.op(), std::move(args), t.indices());
      }
      case Term::Kind::UApp: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const auto& a : t.args()) args.push_back(apply(a));
        return Term::uapp(t.name(), std::move(args), t.sort());
      }
      case Term::Kind::Let: {
        std::vector<std::pair<std::string, Term>> bindings;
        bindings.reserve(t.bindings().size());
        // values are in the outer scope
        for (const auto& [name, value] : t.bindings())
          bindings.emplace_back(name, apply(value));
        auto taboo = free_vars(t.body());
        for (const auto& [name, _] : bindings) taboo.insert(name);
        std::vector<std::pair<std::string, std::string>> saved_renames;
        std::vector<std::string> saved_shadows;
        for (auto& [name, value] : bindings) {
          std::string final_name = name;
          if (avoid.count(name)) {
            final_name = fresh_name(name, taboo);
            saved_renames.emplace_back(name, final_name);
          } else if (!shadowed.count(name) && free_map.count(name)) {
            saved_shadows.push_back(name);
          }
          name = final_name;
        }
        for (auto& [from, to] : saved_renames) bound_renames[from] = to;
        for (auto& s : saved_shadows) shadowed.insert(s);
        Term body = apply(t.body());
        for (auto& [from, _] : saved_renames) bound_renames.erase(from);
        for (auto& s : saved_shadows) shadowed.erase(s);
        return Term::let(std::move(bindings), std::move(body));
      }
      case Term::Kind::Quant: {
        auto binders = t.binders();
        auto taboo = free_vars(t.body());
        for (const auto& [name, _] : binders) taboo.insert(name);
        std::vector<std::pair<std::string, std::string>> saved_renames;
        std::vector<std::string> saved_shadows;
        for (auto& [name, sort] : binders) {
          std::string final_name = name;
          if (avoid.count(name)) {
            final_name = fresh_name(name, taboo);
            saved_renames.emplace_back(name, final_name);
          } else if (!shadowed.count(name) && free_map.count(name)) {
            saved_shadows.push_back(name);
          }
          name = final_name;
        }
        for (auto& [from, to] : saved_renames) bound_renames[from] = to;
        for (auto& s : saved_shadows) shadowed.insert(s);
        Term body = apply(t.body());
        for (auto& [from, _] : saved_renames) bound_renames.erase(from);
        for (auto& s : saved_shadows) shadowed.erase(s);
        return Term::quant(t.is_forall(), std::move(binders), std::move(body));
      }
      case Term::Kind::Annot: {
        return Term::annot(apply(t.inner()), t.attrs());
      }
    }
    return t;
  }
};

}  // namespace

Term substitute(const Term& t, const std::map<std::string, Term>& map)
{
  if (map.empty()) return t;
  Subst s{map};
  for (const auto& [_, v] : map) {
    auto fv = free_vars(v);
    s.avoid.insert(fv.begin(), fv.end());
  }
  return s.apply(t);
}

}  // namespace vmtkit
