/* model.cpp -- transition-system extraction, validation, printing. */

#include "vmtkit/model.h"

#include <algorithm>
#include <map>
#include <set>

namespace vmtkit {

namespace {

// nested (! t :attr) wrappers are transparent for semantic checks
const Term& skip_annots(const Term& t)
{
  const Term* p = &t;
  while (p->kind() == Term::Kind::Annot) p = &p->inner();
  return *p;
}

// attribute values arrive as concrete-syntax text; read them back
SExpr read_attr_value(const Attr& a, Pos pos)
{
  if (!a.has_value)
    throw Error(ErrCode::MalformedAnnotation, ":" + a.keyword + " needs a value",
                pos);
  auto es = read_sexprs(a.value);
  if (es.size() != 1)
    throw Error(ErrCode::MalformedAnnotation,
                ":" + a.keyword + " has a malformed value " + a.value, pos);
  return es[0];
}

unsigned property_index(const Attr& a, Pos pos)
{
  SExpr v = read_attr_value(a, pos);
  if (v.kind != SExpr::Kind::Numeral || v.text.size() > 9)
    throw Error(ErrCode::MalformedAnnotation,
                ":" + a.keyword + " index must be a numeral, got " + a.value,
                pos);
  return static_cast<unsigned>(std::stoul(v.text));
}

void check_bool(const Term& t, const std::string& attr, Pos pos)
{
  if (!t.sort().is_bool())
    throw Error(ErrCode::NonBooleanAnnotation,
                ":" + attr + " on a term of sort " + t.sort().str(), pos);
}

// only the dummy value `true` is allowed on :init / :trans
void check_dummy_value(const Attr& a, Pos pos)
{
  if (a.has_value && a.value != "true")
    throw Error(ErrCode::MalformedAnnotation,
                ":" + a.keyword + " only takes the dummy value true, got " +
                    a.value,
                pos);
}

}  // namespace

const StateVariable* TransitionSystem::by_current(const std::string& name) const
{
  for (const auto& sv : states)
    if (sv.current == name) return &sv;
  return nullptr;
}

const StateVariable* TransitionSystem::by_next(const std::string& name) const
{
  for (const auto& sv : states)
    if (sv.next == name) return &sv;
  return nullptr;
}

bool TransitionSystem::is_input(const std::string& name) const
{
  for (const auto& [n, _] : inputs)
    if (n == name) return true;
  return false;
}

const PropertySpec* VmtDocument::property(unsigned index) const
{
  for (const auto& p : properties)
    if (p.index == index) return &p;
  return nullptr;
}

const PropertySpec* VmtDocument::first_property(PropertyKind kind) const
{
  const PropertySpec* best = nullptr;
  for (const auto& p : properties)
    if (p.kind == kind && (!best || p.index < best->index)) best = &p;
  return best;
}

// ---------------------------------------------------------------------------
// extract

namespace {

// define names reachable (as macro applications) from t
void collect_macro_refs(const Term& t, const SymbolTable& st,
                        std::set<std::string>& out)
{
  if (t.kind() == Term::Kind::UApp && st.def(t.name()) &&
      out.insert(t.name()).second)
    collect_macro_refs(st.def(t.name())->body, st, out);
  for (const auto& a : t.args()) collect_macro_refs(a, st, out);
  if (t.kind() == Term::Kind::Let)
    for (const auto& [_, v] : t.bindings()) collect_macro_refs(v, st, out);
}

}  // namespace

VmtDocument extract(const std::vector<Command>& cmds, const SymbolTable& st)
{
  VmtDocument doc;
  doc.symbols = st;

  std::vector<Term> inits, transs;
  std::map<std::string, std::string> next_of;  // current -> next
  std::map<std::string, std::string> prev_of;  // next -> current
  std::set<unsigned> indices;
  std::set<std::string> annotated;

  for (const auto& c : cmds) {
    switch (c.kind) {
      case Command::Kind::SetLogic:
      case Command::Kind::SetOption:
      case Command::Kind::DeclareSort:
      case Command::Kind::DefineSort:
      case Command::Kind::DeclareFun:
        doc.decls.push_back(c);
        if (c.kind == Command::Kind::DeclareFun && !c.arg_sorts.empty())
          doc.rigid.push_back(c.name);
        continue;
      case Command::Kind::TrailingAssertTrue:
        continue;
      case Command::Kind::DefineFun:
        break;
    }

    Term body = expand_defines(c.body, st);
    if (body.kind() != Term::Kind::Annot) continue;
    Term inner = body.inner();

    for (const Attr& a : body.attrs()) {
      if (a.keyword == "next") {
        SExpr v = read_attr_value(a, c.pos);
        if (v.kind != SExpr::Kind::Symbol)
          throw Error(ErrCode::MalformedAnnotation,
                      ":next value must be a symbol, got " + a.value, c.pos);
        const Term& core = skip_annots(inner);
        if (core.kind() != Term::Kind::Var || core.bound())
          throw Error(ErrCode::NextOnNonVariable,
                      ":next on non-variable term " + core.str(), c.pos);
        const std::string& cur = core.name();
        const std::string& nxt = v.text;
        const auto* target = st.fun(nxt);
        if (!target || !target->args.empty())
          throw Error(ErrCode::NextTargetUndeclared, nxt, c.pos);
        if (cur == nxt)
          throw Error(ErrCode::MalformedAnnotation,
                      cur + " paired with itself by :next", c.pos);
        if (target->result != core.sort())
          throw Error(ErrCode::NextSortMismatch,
                      cur + " : " + core.sort().str() + " vs " + nxt + " : " +
                          target->result.str(),
                      c.pos);
        auto dup_cur = next_of.find(cur);
        if (dup_cur != next_of.end())
          throw Error(ErrCode::MalformedAnnotation,
                      cur + " paired with both " + dup_cur->second + " and " +
                          nxt,
                      c.pos);
        auto dup_nxt = prev_of.find(nxt);
        if (dup_nxt != prev_of.end())
          throw Error(ErrCode::NextNotInjective,
                      dup_nxt->second + " and " + cur +
                          " share the :next value " + nxt,
                      c.pos);
        next_of[cur] = nxt;
        prev_of[nxt] = cur;
        doc.system.states.push_back(StateVariable{cur, nxt, core.sort()});
        annotated.insert(c.name);
      } else if (a.keyword == "init") {
        check_dummy_value(a, c.pos);
        check_bool(inner, a.keyword, c.pos);
        inits.push_back(inner);
        annotated.insert(c.name);
      } else if (a.keyword == "trans") {
        check_dummy_value(a, c.pos);
        check_bool(inner, a.keyword, c.pos);
        transs.push_back(inner);
        annotated.insert(c.name);
      } else if (a.keyword == "invar-property" || a.keyword == "live-property") {
        unsigned idx = property_index(a, c.pos);
        check_bool(inner, a.keyword, c.pos);
        if (!indices.insert(idx).second)
          throw Error(ErrCode::DuplicatePropertyIndex, std::to_string(idx),
                      c.pos);
        PropertySpec p;
        p.kind = a.keyword[0] == 'i' ? PropertyKind::Invariant
                                     : PropertyKind::Live;
        p.index = idx;
        p.formula = inner;
        doc.properties.push_back(std::move(p));
        annotated.insert(c.name);
      }
      // any other keyword is ignored
    }
  }

  doc.system.init = Term::mk_and(std::move(inits));
  doc.system.trans = Term::mk_and(std::move(transs));

  // declared constants not linked by :next are inputs
  for (const auto& c : doc.decls) {
    if (c.kind != Command::Kind::DeclareFun || !c.arg_sorts.empty()) continue;
    if (next_of.count(c.name) || prev_of.count(c.name)) continue;
    doc.system.inputs.emplace_back(c.name, c.result_sort);
  }

  // defines never reachable from an annotated one
  std::set<std::string> reachable = annotated;
  for (const auto& c : cmds)
    if (c.kind == Command::Kind::DefineFun && annotated.count(c.name))
      collect_macro_refs(c.body, st, reachable);
  for (const auto& c : cmds)
    if (c.kind == Command::Kind::DefineFun && !reachable.count(c.name))
      doc.unused_defines.push_back(c.name);

  return doc;
}

VmtDocument load_vmt(std::string_view text)
{
  auto cmds = parse_script(text);
  auto st = elaborate(cmds);
  return extract(cmds, st);
}

// ---------------------------------------------------------------------------
// validate

namespace {

enum class SymbolClass { Current, Next, Input, Foreign };

SymbolClass classify(const std::string& name, const TransitionSystem& ts)
{
  if (ts.by_current(name)) return SymbolClass::Current;
  if (ts.by_next(name)) return SymbolClass::Next;
  if (ts.is_input(name)) return SymbolClass::Input;
  return SymbolClass::Foreign;
}

}  // namespace

std::vector<Diagnostic> validate(const VmtDocument& doc)
{
  std::vector<Diagnostic> ds;
  const TransitionSystem& ts = doc.system;
  auto error = [&](ErrCode code, std::string msg, std::string sym = "") {
    ds.push_back(Diagnostic{code, Severity::Error, std::move(msg),
                            std::move(sym)});
  };
  auto warn = [&](ErrCode code, std::string msg, std::string sym = "") {
    ds.push_back(Diagnostic{code, Severity::Warning, std::move(msg),
                            std::move(sym)});
  };

  // the current->next pairing: total on states, injective, sort-consistent
  std::set<std::string> currents, nexts;
  for (const auto& sv : ts.states) {
    if (!currents.insert(sv.current).second)
      error(ErrCode::MalformedAnnotation,
            sv.current + " appears twice as a current-state variable",
            sv.current);
    if (!nexts.insert(sv.next).second)
      error(ErrCode::NextNotInjective,
            "two state variables share the next-state name " + sv.next,
            sv.next);
    if (sv.current == sv.next)
      error(ErrCode::MalformedAnnotation, sv.current + " paired with itself",
            sv.current);
    const auto* cur = doc.symbols.fun(sv.current);
    const auto* nxt = doc.symbols.fun(sv.next);
    if (cur && nxt && cur->result != nxt->result)
      error(ErrCode::NextSortMismatch,
            sv.current + " : " + cur->result.str() + " vs " + sv.next + " : " +
                nxt->result.str(),
            sv.current);
  }
  for (const auto& [name, _] : ts.inputs) {
    if (currents.count(name) || nexts.count(name))
      error(ErrCode::MalformedAnnotation,
            name + " is both a state variable and an input", name);
  }

  if (!ts.init.null() && !ts.init.sort().is_bool())
    error(ErrCode::NonBooleanAnnotation,
          "init has sort " + ts.init.sort().str());
  if (!ts.trans.null() && !ts.trans.sort().is_bool())
    error(ErrCode::NonBooleanAnnotation,
          "trans has sort " + ts.trans.sort().str());

  for (const auto& name : ts.init.null() ? std::set<std::string>{}
                                         : free_vars(ts.init)) {
    switch (classify(name, ts)) {
      case SymbolClass::Current:
        break;
      case SymbolClass::Next:
        error(ErrCode::InitUsesNextVar,
              "init mentions next-state variable " + name, name);
        break;
      case SymbolClass::Input:
        error(ErrCode::InitUsesInput, "init mentions input " + name, name);
        break;
      case SymbolClass::Foreign:
        error(ErrCode::UnknownSymbol, "init mentions unknown symbol " + name,
              name);
        break;
    }
  }
  for (const auto& name : ts.trans.null() ? std::set<std::string>{}
                                          : free_vars(ts.trans)) {
    if (classify(name, ts) == SymbolClass::Foreign)
      error(ErrCode::TransUsesForeignSymbol,
            "trans mentions unknown symbol " + name, name);
  }

  std::set<unsigned> indices;
  for (const auto& p : doc.properties) {
    std::string label = "property " + std::to_string(p.index);
    if (!indices.insert(p.index).second)
      error(ErrCode::DuplicatePropertyIndex, label + " declared twice");
    if (!p.formula.null() && !p.formula.sort().is_bool())
      error(ErrCode::NonBooleanAnnotation,
            label + " has sort " + p.formula.sort().str());
    for (const auto& name : p.formula.null() ? std::set<std::string>{}
                                             : free_vars(p.formula)) {
      switch (classify(name, ts)) {
        case SymbolClass::Current:
          break;
        case SymbolClass::Next:
          error(ErrCode::PropertyUsesNextVar,
                label + " mentions next-state variable " + name, name);
          break;
        case SymbolClass::Input:
          error(ErrCode::PropertyUsesInput, label + " mentions input " + name,
                name);
          break;
        case SymbolClass::Foreign:
          error(ErrCode::UnknownSymbol, label + " mentions unknown symbol " +
                                            name,
                name);
          break;
      }
    }
  }

  if (doc.properties.empty())
    warn(ErrCode::NoProperties, "document declares no properties");
  for (const auto& name : doc.unused_defines)
    warn(ErrCode::UnusedDefine,
         name + " is not reachable from any annotated term", name);

  return ds;
}

// ---------------------------------------------------------------------------
// prime / unprime

namespace {

Term swap_state_version(const Term& t, const VmtDocument& doc, bool to_next)
{
  std::map<std::string, Term> map;
  auto fv = free_vars(t);
  for (const auto& sv : doc.system.states) {
    const std::string& from = to_next ? sv.current : sv.next;
    const std::string& to = to_next ? sv.next : sv.current;
    const std::string& forbidden = to_next ? sv.next : sv.current;
    if (fv.count(forbidden))
      throw Error(ErrCode::MixedStateVersions,
                  (to_next ? std::string("prime") : std::string("unprime")) +
                      " on a term already mentioning " + forbidden);
    if (fv.count(from)) map[from] = Term::var(to, sv.sort);
  }
  return substitute(t, map);
}

}  // namespace

Term prime(const Term& t, const VmtDocument& doc)
{
  return swap_state_version(t, doc, /*to_next=*/true);
}

Term unprime(const Term& t, const VmtDocument& doc)
{
  return swap_state_version(t, doc, /*to_next=*/false);
}

// ---------------------------------------------------------------------------
// print

namespace {

// dodge declared symbols only: macro names never appear in printed output
std::string fresh_define_name(std::string base, const VmtDocument& doc,
                              std::set<std::string>& used)
{
  while (doc.symbols.fun(base) || used.count(base)) base += "~";
  used.insert(base);
  return base;
}

}  // namespace

std::string print_vmt(const VmtDocument& doc)
{
  std::string out;
  std::set<std::string> used;

  for (const auto& c : doc.decls) {
    out += c.str();
    out += '\n';
  }
  for (const auto& sv : doc.system.states) {
    out += "(define-fun " +
           print_symbol(fresh_define_name(".sv." + sv.current, doc, used)) +
           " () " + sv.sort.str() + " (! " + print_symbol(sv.current) +
           " :next " + print_symbol(sv.next) + "))\n";
  }
  out += "(define-fun " + print_symbol(fresh_define_name(".init", doc, used)) +
         " () Bool (! " + doc.system.init.str() + " :init true))\n";
  out += "(define-fun " + print_symbol(fresh_define_name(".trans", doc, used)) +
         " () Bool (! " + doc.system.trans.str() + " :trans true))\n";
  for (const auto& p : doc.properties) {
    const char* attr =
        p.kind == PropertyKind::Invariant ? ":invar-property" : ":live-property";
    out += "(define-fun " +
           print_symbol(
               fresh_define_name(".p" + std::to_string(p.index), doc, used)) +
           " () Bool (! " + p.formula.str() + " " + attr + " " +
           std::to_string(p.index) + "))\n";
  }
  out += "(assert true)\n";
  return out;
}

bool same_document(const VmtDocument& a, const VmtDocument& b)
{
  const TransitionSystem &x = a.system, &y = b.system;
  if (x.states.size() != y.states.size()) return false;
  for (size_t i = 0; i < x.states.size(); ++i) {
    if (x.states[i].current != y.states[i].current ||
        x.states[i].next != y.states[i].next ||
        x.states[i].sort != y.states[i].sort)
      return false;
  }
  if (x.inputs != y.inputs) return false;
  if (!(x.init == y.init) || !(x.trans == y.trans)) return false;
  if (a.properties.size() != b.properties.size()) return false;
  for (size_t i = 0; i < a.properties.size(); ++i) {
    const PropertySpec &p = a.properties[i], &q = b.properties[i];
    if (p.kind != q.kind || p.index != q.index || !(p.formula == q.formula))
      return false;
  }
  return a.rigid == b.rigid;
}

}  // namespace vmtkit
