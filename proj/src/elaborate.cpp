/* elaborate.cpp -- symbol table, sort resolution, term elaboration,
 * macro expansion. */

#include <map>
#include <set>

#include "vmtkit/symtab.h"

namespace vmtkit {

namespace {

[[noreturn]] void bad_term(const SExpr& e, const std::string& what)
{
  throw Error(ErrCode::MalformedCommand, what, e.pos);
}

unsigned small_numeral(const SExpr& e, const char* what)
{
  if (e.kind != SExpr::Kind::Numeral || e.text.size() > 9)
    bad_term(e, std::string("expected a numeral (") + what + ")");
  return static_cast<unsigned>(std::stoul(e.text));
}

// Term::app throws SortMismatch without a source position; attach one.
Term apply_op(Op op, std::vector<Term> args, std::vector<unsigned> indices,
              Pos pos)
{
  try {
    return Term::app(op, std::move(args), std::move(indices));
  } catch (const Error& err) {
    if (err.code() == ErrCode::SortMismatch && !err.pos().known())
      throw Error(ErrCode::SortMismatch, err.detail(), pos);
    throw;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SymbolTable

void SymbolTable::declare_sort(const std::string& name, unsigned arity, Pos pos)
{
  if (sort_decls_.count(name) || sort_aliases_.count(name))
    throw Error(ErrCode::DuplicateDeclaration, "sort " + name, pos);
  sort_decls_[name] = SortDecl{arity, pos};
}

void SymbolTable::define_sort(const std::string& name,
                              std::vector<std::string> params, SExpr body,
                              Pos pos)
{
  if (sort_decls_.count(name) || sort_aliases_.count(name))
    throw Error(ErrCode::DuplicateDeclaration, "sort " + name, pos);
  // check the body now, with parameters bound to placeholders, so aliases
  // can only reference sorts that already exist (no cycles later)
  std::map<std::string, Sort> bound;
  for (const auto& p : params)
    bound[p] = Sort::uninterpreted("!param!" + p);
  resolve_sort_rec(body, bound);
  sort_aliases_[name] = SortAlias{std::move(params), std::move(body), pos};
}

void SymbolTable::declare_fun(const std::string& name, std::vector<Sort> args,
                              Sort result, Pos pos)
{
  if (funs_.count(name) || defs_.count(name))
    throw Error(ErrCode::DuplicateDeclaration, name, pos);
  funs_[name] = Fun{std::move(args), std::move(result), pos};
}

void SymbolTable::define_fun(const std::string& name,
                             std::vector<std::pair<std::string, Sort>> params,
                             Sort result, Term body, Pos pos)
{
  if (funs_.count(name) || defs_.count(name))
    throw Error(ErrCode::DuplicateDeclaration, name, pos);
  defs_[name] = Def{std::move(params), std::move(result), std::move(body), pos};
}

void SymbolTable::set_def_body(const std::string& name, Term body)
{
  defs_.at(name).body = std::move(body);
}

const SymbolTable::Fun* SymbolTable::fun(const std::string& name) const
{
  auto it = funs_.find(name);
  return it == funs_.end() ? nullptr : &it->second;
}

const SymbolTable::Def* SymbolTable::def(const std::string& name) const
{
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

Sort SymbolTable::resolve_sort(const SExpr& e) const
{
  return resolve_sort_rec(e, {});
}

Sort SymbolTable::resolve_sort_rec(const SExpr& e,
                                   const std::map<std::string, Sort>& bound) const
{
  if (e.kind == SExpr::Kind::Symbol) {
    auto b = bound.find(e.text);
    if (b != bound.end()) return b->second;
    if (e.text == "Bool") return Sort::boolean();
    if (e.text == "Int") return Sort::integer();
    if (e.text == "Real") return Sort::real();
    auto d = sort_decls_.find(e.text);
    if (d != sort_decls_.end()) {
      if (d->second.arity != 0)
        throw Error(ErrCode::UnknownSort,
                    e.text + " expects " + std::to_string(d->second.arity) +
                        " sort arguments",
                    e.pos);
      return Sort::uninterpreted(e.text);
    }
    auto a = sort_aliases_.find(e.text);
    if (a != sort_aliases_.end()) {
      if (!a->second.params.empty())
        throw Error(ErrCode::UnknownSort,
                    e.text + " expects " +
                        std::to_string(a->second.params.size()) +
                        " sort arguments",
                    e.pos);
      return resolve_sort_rec(a->second.body, {});
    }
    throw Error(ErrCode::UnknownSort, e.text, e.pos);
  }

  if (!e.is_list() || e.size() == 0)
    throw Error(ErrCode::UnknownSort, "malformed sort " + e.str(), e.pos);

  // (_ BitVec n)
  if (e[0].is_symbol("_")) {
    if (e.size() == 3 && e[1].is_symbol("BitVec")) {
      unsigned w = small_numeral(e[2], "bit-vector width");
      if (w == 0)
        throw Error(ErrCode::UnknownSort, "(_ BitVec 0) is not a sort", e.pos);
      return Sort::bitvec(w);
    }
    throw Error(ErrCode::UnknownSort, "malformed sort " + e.str(), e.pos);
  }

  if (e[0].kind != SExpr::Kind::Symbol)
    throw Error(ErrCode::UnknownSort, "malformed sort " + e.str(), e.pos);
  const std::string& head = e[0].text;

  if (head == "Array") {
    if (e.size() != 3)
      throw Error(ErrCode::UnknownSort, "Array expects two sort arguments",
                  e.pos);
    Sort idx = resolve_sort_rec(e[1], bound);
    Sort elem = resolve_sort_rec(e[2], bound);
    return Sort::array(idx, elem);
  }

  std::vector<Sort> args;
  for (size_t i = 1; i < e.size(); ++i)
    args.push_back(resolve_sort_rec(e[i], bound));

  auto d = sort_decls_.find(head);
  if (d != sort_decls_.end()) {
    if (d->second.arity != args.size())
      throw Error(ErrCode::UnknownSort,
                  head + " expects " + std::to_string(d->second.arity) +
                      " sort arguments, got " + std::to_string(args.size()),
                  e.pos);
    return Sort::uninterpreted(head, std::move(args));
  }
  auto a = sort_aliases_.find(head);
  if (a != sort_aliases_.end()) {
    if (a->second.params.size() != args.size())
      throw Error(ErrCode::UnknownSort,
                  head + " expects " + std::to_string(a->second.params.size()) +
                      " sort arguments, got " + std::to_string(args.size()),
                  e.pos);
    warnings_.push_back(Diagnostic{
        ErrCode::UnknownSort, Severity::Warning,
        "parametric sort alias " + head + " used; support is best-effort",
        head});
    std::map<std::string, Sort> inner;
    for (size_t i = 0; i < args.size(); ++i)
      inner[a->second.params[i]] = args[i];
    return resolve_sort_rec(a->second.body, inner);
  }
  throw Error(ErrCode::UnknownSort, head, e.pos);
}

// ---------------------------------------------------------------------------
// Term elaboration

namespace {

struct TermElaborator {
  const SymbolTable& st;
  std::vector<ScopeVar>& scope;

  const ScopeVar* lookup(const std::string& name) const
  {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->name == name) return &*it;
    return nullptr;
  }

  Term atom(const SExpr& e)
  {
    switch (e.kind) {
      case SExpr::Kind::Symbol: {
        if (e.text == "true") return Term::true_();
        if (e.text == "false") return Term::false_();
        if (const ScopeVar* sv = lookup(e.text))
          return Term::var(e.text, sv->sort, sv->binder);
        if (const auto* f = st.fun(e.text)) {
          if (!f->args.empty())
            throw Error(ErrCode::SortMismatch,
                        e.text + " expects " + std::to_string(f->args.size()) +
                            " arguments",
                        e.pos);
          return Term::var(e.text, f->result);
        }
        if (const auto* d = st.def(e.text)) {
          if (!d->params.empty())
            throw Error(ErrCode::SortMismatch,
                        e.text + " expects " + std::to_string(d->params.size()) +
                            " arguments",
                        e.pos);
          return Term::uapp(e.text, {}, d->result);
        }
        throw Error(ErrCode::UnknownSymbol, e.text, e.pos);
      }
      case SExpr::Kind::Numeral:
        return Term::constant(Sort::integer(), e.text);
      case SExpr::Kind::Decimal:
        return Term::constant(Sort::real(), e.text);
      case SExpr::Kind::Hexadecimal: {
        std::string digits = e.text.substr(2);  // after "#x"
        if (digits.size() > 16)
          bad_term(e, "bit-vector literal wider than 64 bits");
        unsigned long long v = std::stoull(digits, nullptr, 16);
        return Term::bv_const(v, 4 * static_cast<unsigned>(digits.size()));
      }
      case SExpr::Kind::Binary: {
        std::string digits = e.text.substr(2);  // after "#b"
        if (digits.size() > 64)
          bad_term(e, "bit-vector literal wider than 64 bits");
        unsigned long long v = std::stoull(digits, nullptr, 2);
        return Term::bv_const(v, static_cast<unsigned>(digits.size()));
      }
      case SExpr::Kind::String:
        bad_term(e, "string literals are not part of this signature");
      case SExpr::Kind::Keyword:
        throw Error(ErrCode::MalformedAnnotation,
                    ":" + e.text + " outside an annotation", e.pos);
      case SExpr::Kind::List:
        break;
    }
    bad_term(e, "malformed term");
  }

  Term let_form(const SExpr& e)
  {
    if (e.size() != 3 || !e[1].is_list() || e[1].size() == 0)
      bad_term(e, "expected (let ((<symbol> <term>)+) <term>)");
    std::vector<std::pair<std::string, Term>> bindings;
    std::set<std::string> seen;
    for (const auto& b : e[1].items) {
      if (!b.is_list() || b.size() != 2 || b[0].kind != SExpr::Kind::Symbol)
        bad_term(b, "let binding must be (<symbol> <term>)");
      if (!seen.insert(b[0].text).second)
        bad_term(b, "duplicate let binding " + b[0].text);
      bindings.emplace_back(b[0].text, term(b[1]));  // value in outer scope
    }
    size_t mark = scope.size();
    for (const auto& [name, value] : bindings)
      scope.push_back(ScopeVar{name, value.sort(), true});
    Term body = term(e[2]);
    scope.resize(mark);
    return Term::let(std::move(bindings), std::move(body));
  }

  Term quant_form(const SExpr& e, bool is_forall)
  {
    if (e.size() != 3 || !e[1].is_list() || e[1].size() == 0)
      bad_term(e, "expected (forall/exists ((<symbol> <sort>)+) <term>)");
    std::vector<std::pair<std::string, Sort>> binders;
    std::set<std::string> seen;
    for (const auto& b : e[1].items) {
      if (!b.is_list() || b.size() != 2 || b[0].kind != SExpr::Kind::Symbol)
        bad_term(b, "quantifier binder must be (<symbol> <sort>)");
      if (!seen.insert(b[0].text).second)
        bad_term(b, "duplicate binder " + b[0].text);
      binders.emplace_back(b[0].text, st.resolve_sort(b[1]));
    }
    size_t mark = scope.size();
    for (const auto& [name, sort] : binders)
      scope.push_back(ScopeVar{name, sort, true});
    Term body = term(e[2]);
    scope.resize(mark);
    if (!body.sort().is_bool())
      throw Error(ErrCode::SortMismatch,
                  "quantifier body must be Bool, got " + body.sort().str(),
                  e.pos);
    return Term::quant(is_forall, std::move(binders), std::move(body));
  }

  Term annot_form(const SExpr& e)
  {
    if (e.size() < 3) bad_term(e, "expected (! <term> <attribute>+)");
    Term inner = term(e[1]);
    std::vector<Attr> attrs;
    size_t i = 2;
    while (i < e.size()) {
      if (e[i].kind != SExpr::Kind::Keyword)
        bad_term(e[i], "expected a :keyword attribute");
      Attr a;
      a.keyword = e[i].text;
      ++i;
      if (i < e.size() && e[i].kind != SExpr::Kind::Keyword) {
        a.value = e[i].str();
        a.has_value = true;
        ++i;
      }
      attrs.push_back(std::move(a));
    }
    return Term::annot(std::move(inner), std::move(attrs));
  }

  // (_ bvN w) and friends, in term position
  Term indexed_term(const SExpr& e)
  {
    if (e.size() == 3 && e[1].kind == SExpr::Kind::Symbol &&
        e[1].text.size() > 2 && e[1].text.compare(0, 2, "bv") == 0 &&
        e[1].text.find_first_not_of("0123456789", 2) == std::string::npos) {
      std::string digits = e[1].text.substr(2);
      if (digits.size() > 19) bad_term(e, "bit-vector literal out of range");
      unsigned long long v = std::stoull(digits);
      unsigned w = small_numeral(e[2], "bit-vector width");
      if (w == 0 || w > 64)
        bad_term(e, "bit-vector width must be between 1 and 64");
      if (w < 64 && (v >> w) != 0)
        bad_term(e, "bit-vector literal does not fit its width");
      return Term::bv_const(v, w);
    }
    throw Error(ErrCode::UnknownSymbol, "indexed identifier " + e.str(), e.pos);
  }

  // ((_ extract hi lo) t) and the extension operators
  Term indexed_app(const SExpr& e)
  {
    const SExpr& head = e[0];
    if (head.size() < 2 || head[1].kind != SExpr::Kind::Symbol)
      throw Error(ErrCode::UnknownSymbol, "indexed identifier " + head.str(),
                  head.pos);
    const std::string& name = head[1].text;
    std::vector<Term> args;
    for (size_t i = 1; i < e.size(); ++i) args.push_back(term(e[i]));
    if (name == "extract") {
      if (head.size() != 4) bad_term(head, "expected (_ extract hi lo)");
      unsigned hi = small_numeral(head[2], "extract index");
      unsigned lo = small_numeral(head[3], "extract index");
      return apply_op(Op::Extract, std::move(args), {hi, lo}, e.pos);
    }
    if (name == "zero_extend" || name == "sign_extend") {
      if (head.size() != 3) bad_term(head, "expected (_ " + name + " k)");
      unsigned k = small_numeral(head[2], "extension width");
      return apply_op(name == "zero_extend" ? Op::ZeroExtend : Op::SignExtend,
                      std::move(args), {k}, e.pos);
    }
    throw Error(ErrCode::UnknownSymbol, "indexed identifier " + head.str(),
                head.pos);
  }

  Term application(const SExpr& e)
  {
    const std::string& head = e[0].text;
    std::vector<Term> args;
    for (size_t i = 1; i < e.size(); ++i) args.push_back(term(e[i]));

    if (lookup(head))
      throw Error(ErrCode::SortMismatch,
                  head + " is a variable and cannot be applied", e.pos);

    // interpreted operators; unary "-" is negation
    if (head == "-" && args.size() == 1)
      return apply_op(Op::Neg, std::move(args), {}, e.pos);
    if (auto op = op_by_name(head))
      return apply_op(*op, std::move(args), {}, e.pos);

    if (const auto* f = st.fun(head)) {
      if (f->args.size() != args.size())
        throw Error(ErrCode::SortMismatch,
                    head + " expects " + std::to_string(f->args.size()) +
                        " arguments, got " + std::to_string(args.size()),
                    e.pos);
      for (size_t i = 0; i < args.size(); ++i)
        if (args[i].sort() != f->args[i])
          throw Error(ErrCode::SortMismatch,
                      head + " argument " + std::to_string(i + 1) +
                          ": expected " + f->args[i].str() + ", got " +
                          args[i].sort().str(),
                      e.pos);
      return Term::uapp(head, std::move(args), f->result);
    }
    if (const auto* d = st.def(head)) {
      if (d->params.size() != args.size())
        throw Error(ErrCode::SortMismatch,
                    head + " expects " + std::to_string(d->params.size()) +
                        " arguments, got " + std::to_string(args.size()),
                    e.pos);
      for (size_t i = 0; i < args.size(); ++i)
        if (args[i].sort() != d->params[i].second)
          throw Error(ErrCode::SortMismatch,
                      head + " argument " + std::to_string(i + 1) +
                          ": expected " + d->params[i].second.str() + ", got " +
                          args[i].sort().str(),
                      e.pos);
      return Term::uapp(head, std::move(args), d->result);
    }
    throw Error(ErrCode::UnknownSymbol, head, e.pos);
  }

  Term term(const SExpr& e)
  {
    if (e.is_atom()) return atom(e);
    if (e.size() == 0) bad_term(e, "empty application");
    if (e[0].is_list()) {
      if (e[0].size() > 0 && e[0][0].is_symbol("_")) return indexed_app(e);
      bad_term(e, "expected an identifier at the head of an application");
    }
    if (e[0].kind != SExpr::Kind::Symbol)
      bad_term(e, "expected an identifier at the head of an application");
    const std::string& head = e[0].text;
    if (head == "let") return let_form(e);
    if (head == "forall") return quant_form(e, true);
    if (head == "exists") return quant_form(e, false);
    if (head == "!") return annot_form(e);
    if (head == "_") return indexed_term(e);
    return application(e);
  }
};

}  // namespace

Term elaborate_term(const SExpr& e, const SymbolTable& st,
                    std::vector<ScopeVar> scope)
{
  TermElaborator el{st, scope};
  return el.term(e);
}

SymbolTable elaborate(std::vector<Command>& cmds)
{
  SymbolTable st;
  for (auto& c : cmds) {
    switch (c.kind) {
      case Command::Kind::SetLogic:
        st.set_logic(c.name);
        break;
      case Command::Kind::SetOption:
      case Command::Kind::TrailingAssertTrue:
        break;
      case Command::Kind::DeclareSort:
        st.declare_sort(c.name, c.sort_arity, c.pos);
        break;
      case Command::Kind::DefineSort:
        st.define_sort(c.name, c.sort_params, c.sort_body, c.pos);
        break;
      case Command::Kind::DeclareFun: {
        c.arg_sorts.clear();
        for (const auto& s : c.arg_sorts_raw)
          c.arg_sorts.push_back(st.resolve_sort(s));
        c.result_sort = st.resolve_sort(c.result_sort_raw);
        st.declare_fun(c.name, c.arg_sorts, c.result_sort, c.pos);
        break;
      }
      case Command::Kind::DefineFun: {
        c.params.clear();
        for (const auto& [pname, praw] : c.params_raw)
          c.params.emplace_back(pname, st.resolve_sort(praw));
        c.result_sort = st.resolve_sort(c.result_sort_raw);
        // signature first, so the name is visible inside its own body;
        // the (illegal) cycle is reported by expand_defines
        st.define_fun(c.name, c.params, c.result_sort, Term(), c.pos);
        std::vector<ScopeVar> scope;
        for (const auto& [pname, psort] : c.params)
          scope.push_back(ScopeVar{pname, psort, /*binder=*/false});
        c.body = elaborate_term(c.body_raw, st, std::move(scope));
        Sort found = c.body.sort();
        if (found != c.result_sort)
          throw Error(ErrCode::SortMismatch,
                      c.name + ": declared " + c.result_sort.str() +
                          ", body has " + found.str(),
                      c.pos);
        st.set_def_body(c.name, c.body);
        break;
      }
    }
  }
  return st;
}

// ---------------------------------------------------------------------------
// Macro expansion

namespace {

struct Expander {
  const SymbolTable& st;
  std::set<std::string> in_progress;
  std::map<const void*, Term> memo_keep, memo_strip;

  bool mentions_macro(const Term& t)
  {
    switch (t.kind()) {
      case Term::Kind::Var:
      case Term::Kind::Const:
        return false;
      case Term::Kind::UApp:
        if (st.def(t.name())) return true;
        break;
      default:
        break;
    }
    for (const auto& a : t.args())
      if (mentions_macro(a)) return true;
    if (t.kind() == Term::Kind::Let)
      for (const auto& [_, v] : t.bindings())
        if (mentions_macro(v)) return true;
    return false;
  }

  // renames occurrences of binder-bound `from` (stops at rebinding)
  Term rename_bound(const Term& t, const std::string& from,
                    const std::string& to)
  {
    switch (t.kind()) {
      case Term::Kind::Var:
        if (t.bound() && t.name() == from) return Term::var(to, t.sort(), true);
        return t;
      case Term::Kind::Const:
        return t;
      case Term::Kind::App: {
        std::vector<Term> args;
        for (const auto& a : t.args()) args.push_back(rename_bound(a, from, to));
        return Term::app(t.op(), std::move(args), t.indices());
      }
      case Term::Kind::UApp: {
        std::vector<Term> args;
        for (const auto& a : t.args()) args.push_back(rename_bound(a, from, to));
        return Term::uapp(t.name(), std::move(args), t.sort());
      }
      case Term::Kind::Let: {
        std::vector<std::pair<std::string, Term>> bindings;
        bool rebinds = false;
        for (const auto& [name, value] : t.bindings()) {
          bindings.emplace_back(name, rename_bound(value, from, to));
          if (name == from) rebinds = true;
        }
        Term body = rebinds ? t.body() : rename_bound(t.body(), from, to);
        return Term::let(std::move(bindings), std::move(body));
      }
      case Term::Kind::Quant: {
        for (const auto& [name, _] : t.binders())
          if (name == from) return t;
        return Term::quant(t.is_forall(), t.binders(),
                           rename_bound(t.body(), from, to));
      }
      case Term::Kind::Annot:
        return Term::annot(rename_bound(t.inner(), from, to), t.attrs());
    }
    return t;
  }

  std::string fresh_binder(const std::string& base,
                           const std::set<std::string>& taken)
  {
    for (int i = 1;; ++i) {
      std::string cand = base + "!" + std::to_string(i);
      if (!taken.count(cand) && !st.has_symbol(cand)) return cand;
    }
  }

  Term expand(const Term& t, bool strip)
  {
    auto& memo = strip ? memo_strip : memo_keep;
    auto hit = memo.find(t.id());
    if (hit != memo.end()) return hit->second;
    Term out = expand_uncached(t, strip);
    memo.emplace(t.id(), out);
    return out;
  }

  Term expand_uncached(const Term& t, bool strip)
  {
    switch (t.kind()) {
      case Term::Kind::Var:
      case Term::Kind::Const:
        return t;
      case Term::Kind::Annot: {
        if (strip) return expand(t.inner(), strip);
        return Term::annot(expand(t.inner(), strip), t.attrs());
      }
      case Term::Kind::App: {
        std::vector<Term> args;
        for (const auto& a : t.args()) args.push_back(expand(a, strip));
        return Term::app(t.op(), std::move(args), t.indices());
      }
      case Term::Kind::UApp: {
        std::vector<Term> args;
        for (const auto& a : t.args()) args.push_back(expand(a, strip));
        const auto* d = st.def(t.name());
        if (!d) return Term::uapp(t.name(), std::move(args), t.sort());
        if (in_progress.count(t.name()))
          throw Error(ErrCode::RecursiveDefinition, t.name());
        if (args.size() != d->params.size())
          throw Error(ErrCode::SortMismatch,
                      t.name() + " applied to " + std::to_string(args.size()) +
                          " arguments, expects " +
                          std::to_string(d->params.size()));
        std::map<std::string, Term> param_map;
        for (size_t i = 0; i < d->params.size(); ++i)
          param_map[d->params[i].first] = args[i];
        Term inlined = substitute(d->body, param_map);
        in_progress.insert(t.name());
        // no memo inside: the expansion context (in_progress) differs
        Term out = expand_uncached(inlined, /*strip=*/true);
        in_progress.erase(t.name());
        return out;
      }
      case Term::Kind::Let: {
        std::vector<std::pair<std::string, Term>> bindings;
        for (const auto& [name, value] : t.bindings())
          bindings.emplace_back(name, expand(value, strip));
        Term body = expand(t.body(), strip);
        // a binder shadowing a top-level symbol may now capture free
        // occurrences pulled in by expansion; rename it apart
        std::set<std::string> taken = free_vars(body);
        for (const auto& [name, _] : bindings) taken.insert(name);
        for (auto& [name, value] : bindings) {
          if (st.has_symbol(name) && free_vars(body).count(name)) {
            std::string fresh = fresh_binder(name, taken);
            taken.insert(fresh);
            body = rename_bound(body, name, fresh);
            name = fresh;
          }
        }
        return Term::let(std::move(bindings), std::move(body));
      }
      case Term::Kind::Quant: {
        Term body = expand(t.body(), strip);
        auto binders = t.binders();
        std::set<std::string> taken = free_vars(body);
        for (const auto& [name, _] : binders) taken.insert(name);
        for (auto& [name, sort] : binders) {
          if (st.has_symbol(name) && free_vars(body).count(name)) {
            std::string fresh = fresh_binder(name, taken);
            taken.insert(fresh);
            body = rename_bound(body, name, fresh);
            name = fresh;
          }
        }
        return Term::quant(t.is_forall(), std::move(binders), std::move(body));
      }
    }
    return t;
  }
};

}  // namespace

Term expand_defines(const Term& t, const SymbolTable& st)
{
  Expander ex{st};
  return ex.expand(t, /*strip=*/false);
}

}  // namespace vmtkit
