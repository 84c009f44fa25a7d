/* model_tests.cpp -- extraction, validation, prime/unprime, printing. */

#include <functional>
#include <random>
#include <set>
#include <string>

#include "counter_system.h"
#include "doctest.h"
#include "vmtkit/model.h"

using namespace vmtkit;

namespace {

ErrCode code_of(const std::function<void()>& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error to be thrown");
  throw std::logic_error("unreachable");
}

bool has_code(const std::vector<Diagnostic>& ds, ErrCode c)
{
  for (const auto& d : ds)
    if (d.code == c) return true;
  return false;
}

}  // namespace

TEST_CASE("extract: the counter system")
{
  VmtDocument doc = load_vmt(testdata::kCounterVmt);
  REQUIRE(doc.system.states.size() == 1);
  CHECK(doc.system.states[0].current == "x");
  CHECK(doc.system.states[0].next == "x.next");
  CHECK(doc.system.states[0].sort == Sort::integer());
  REQUIRE(doc.system.inputs.size() == 1);
  CHECK(doc.system.inputs[0].first == "b");
  CHECK(doc.system.inputs[0].second == Sort::boolean());
  CHECK(doc.system.init.str() == "(= x 1)");
  CHECK(doc.system.trans.str() == "(= x.next (ite b (+ x 1) x))");
  REQUIRE(doc.properties.size() == 2);
  CHECK(doc.properties[0].kind == PropertyKind::Invariant);
  CHECK(doc.properties[0].index == 1);
  CHECK(doc.properties[0].formula.str() == "(> x 0)");
  CHECK(doc.properties[1].kind == PropertyKind::Live);
  CHECK(doc.properties[1].index == 2);
  CHECK(doc.properties[1].formula.str() == "(> x 10)");
  CHECK(doc.rigid.empty());
  CHECK(doc.unused_defines.empty());
  CHECK(validate(doc).empty());
}

TEST_CASE("extract: defaults and dummy values")
{
  VmtDocument doc = load_vmt(
      "(declare-const v Bool)(declare-const v2 Bool)"
      "(define-fun s () Bool (! v :next v2))");
  CHECK(doc.system.init.is_true());
  CHECK(doc.system.trans.is_true());
  CHECK(doc.properties.empty());
  REQUIRE(doc.system.states.size() == 1);
  CHECK(doc.system.inputs.empty());
  auto ds = validate(doc);
  CHECK(has_code(ds, ErrCode::NoProperties));
  CHECK(!has_errors(ds));

  // explicit dummy values parse the same way
  VmtDocument d2 = load_vmt(
      "(declare-const v Bool)(declare-const v2 Bool)"
      "(define-fun s () Bool (! v :next v2))"
      "(define-fun i () Bool (! (not v) :init true))"
      "(define-fun t () Bool (! v2 :trans true))");
  CHECK(d2.system.init.str() == "(not v)");
  CHECK(d2.system.trans.str() == "v2");
}

TEST_CASE("extract: multiple init and trans terms are conjoined")
{
  VmtDocument doc = load_vmt(
      "(declare-const a Bool)(declare-const a2 Bool)"
      "(declare-const b Bool)(declare-const b2 Bool)"
      "(define-fun sa () Bool (! a :next a2))"
      "(define-fun sb () Bool (! b :next b2))"
      "(define-fun i1 () Bool (! a :init))"
      "(define-fun i2 () Bool (! (not b) :init))"
      "(define-fun t1 () Bool (! (= a2 a) :trans))"
      "(define-fun t2 () Bool (! (= b2 b) :trans))");
  CHECK(doc.system.init.str() == "(and a (not b))");
  CHECK(doc.system.trans.str() == "(and (= a2 a) (= b2 b))");
}

TEST_CASE("extract: next errors")
{
  // undeclared target
  CHECK(code_of([] {
          load_vmt("(declare-const x Int)"
                   "(define-fun s () Int (! x :next nope))");
        }) == ErrCode::NextTargetUndeclared);
  // two variables sharing one next
  CHECK(code_of([] {
          load_vmt("(declare-const x Int)(declare-const y Int)"
                   "(declare-const n Int)"
                   "(define-fun sx () Int (! x :next n))"
                   "(define-fun sy () Int (! y :next n))");
        }) == ErrCode::NextNotInjective);
  // sort clash
  CHECK(code_of([] {
          load_vmt("(declare-const x Int)(declare-const n Bool)"
                   "(define-fun s () Int (! x :next n))");
        }) == ErrCode::NextSortMismatch);
  // :next on a non-variable
  CHECK(code_of([] {
          load_vmt("(declare-const x Int)(declare-const n Int)"
                   "(define-fun s () Int (! (+ x 1) :next n))");
        }) == ErrCode::NextOnNonVariable);
  // self pairing
  CHECK(code_of([] {
          load_vmt("(declare-const x Int)"
                   "(define-fun s () Int (! x :next x))");
        }) == ErrCode::MalformedAnnotation);
  // one current, two nexts
  CHECK(code_of([] {
          load_vmt("(declare-const x Int)(declare-const n Int)"
                   "(declare-const m Int)"
                   "(define-fun s () Int (! x :next n))"
                   "(define-fun s2 () Int (! x :next m))");
        }) == ErrCode::MalformedAnnotation);
}

TEST_CASE("extract: forward reference from :next is fine")
{
  VmtDocument doc = load_vmt(
      "(declare-const x Int)"
      "(define-fun s () Int (! x :next y))"
      "(declare-const y Int)");
  REQUIRE(doc.system.states.size() == 1);
  CHECK(doc.system.states[0].next == "y");
}

TEST_CASE("extract: property errors")
{
  CHECK(code_of([] {
          load_vmt("(declare-const x Int)"
                   "(define-fun p () Bool (! (> x 0) :invar-property 1))"
                   "(define-fun q () Bool (! (< x 5) :live-property 1))");
        }) == ErrCode::DuplicatePropertyIndex);
  CHECK(code_of([] {
          load_vmt("(declare-const x Int)"
                   "(define-fun p () Int (! (+ x 1) :invar-property 1))");
        }) == ErrCode::NonBooleanAnnotation);
  CHECK(code_of([] {
          load_vmt("(declare-const x Int)"
                   "(define-fun p () Bool (! (> x 0) :invar-property))");
        }) == ErrCode::MalformedAnnotation);
  CHECK(code_of([] {
          load_vmt("(declare-const x Int)"
                   "(define-fun p () Bool (! (> x 0) :invar-property x))");
        }) == ErrCode::MalformedAnnotation);
}

TEST_CASE("extract: non-boolean init is rejected")
{
  CHECK(code_of([] {
          load_vmt("(declare-const x Int)"
                   "(define-fun i () Int (! x :init))");
        }) == ErrCode::NonBooleanAnnotation);
  CHECK(code_of([] {
          load_vmt("(declare-const x Bool)"
                   "(define-fun i () Bool (! x :init false))");
        }) == ErrCode::MalformedAnnotation);
}

TEST_CASE("extract: macros inside annotated terms are inlined")
{
  VmtDocument doc = load_vmt(
      "(declare-const x Int)(declare-const xn Int)"
      "(define-fun s () Int (! x :next xn))"
      "(define-fun inc ((a Int)) Int (+ a 1))"
      "(define-fun t () Bool (! (= xn (inc x)) :trans))");
  CHECK(doc.system.trans.str() == "(= xn (+ x 1))");
  CHECK(doc.unused_defines.empty());  // inc is reachable from t
}

TEST_CASE("extract: unused defines are reported by validate")
{
  VmtDocument doc = load_vmt(
      "(declare-const x Int)(declare-const xn Int)"
      "(define-fun s () Int (! x :next xn))"
      "(define-fun dead () Int (+ x 2))"
      "(define-fun p () Bool (! (> x 0) :invar-property 0))");
  REQUIRE(doc.unused_defines.size() == 1);
  CHECK(doc.unused_defines[0] == "dead");
  auto ds = validate(doc);
  CHECK(has_code(ds, ErrCode::UnusedDefine));
  CHECK(!has_errors(ds));
}

TEST_CASE("extract: rigid function symbols are not inputs")
{
  VmtDocument doc = load_vmt(
      "(declare-const x Int)(declare-const xn Int)"
      "(declare-fun f (Int) Int)"
      "(define-fun s () Int (! x :next xn))"
      "(define-fun t () Bool (! (= xn (f x)) :trans))");
  CHECK(doc.rigid == std::vector<std::string>{"f"});
  CHECK(doc.system.inputs.empty());
  CHECK(validate(doc).empty() == false);  // only the NoProperties warning
  CHECK(!has_errors(validate(doc)));
}

TEST_CASE("validate: scope rules")
{
  // init mentioning a next-state variable
  VmtDocument doc = load_vmt(
      "(declare-const x Int)(declare-const xn Int)"
      "(define-fun s () Int (! x :next xn))"
      "(define-fun i () Bool (! (= xn 1) :init))");
  auto ds = validate(doc);
  CHECK(has_code(ds, ErrCode::InitUsesNextVar));

  // init mentioning an input
  VmtDocument d2 = load_vmt(
      "(declare-const x Int)(declare-const xn Int)(declare-const b Bool)"
      "(define-fun s () Int (! x :next xn))"
      "(define-fun i () Bool (! b :init))");
  CHECK(has_code(validate(d2), ErrCode::InitUsesInput));

  // property mentioning an input
  VmtDocument d3 = load_vmt(
      "(declare-const x Int)(declare-const xn Int)(declare-const b Bool)"
      "(define-fun s () Int (! x :next xn))"
      "(define-fun p () Bool (! b :invar-property 0))");
  CHECK(has_code(validate(d3), ErrCode::PropertyUsesInput));

  // property mentioning a next-state variable
  VmtDocument d4 = load_vmt(
      "(declare-const x Int)(declare-const xn Int)"
      "(define-fun s () Int (! x :next xn))"
      "(define-fun p () Bool (! (> xn 0) :invar-property 0))");
  CHECK(has_code(validate(d4), ErrCode::PropertyUsesNextVar));
}

TEST_CASE("prime and unprime")
{
  VmtDocument doc = load_vmt(testdata::kCounterVmt);
  Term p = doc.properties[0].formula;  // (> x 0)
  Term pp = prime(p, doc);
  CHECK(pp.str() == "(> x.next 0)");
  CHECK(unprime(pp, doc) == p);
  CHECK(prime(Term::true_(), doc).is_true());

  Term init = doc.system.init;  // (= x 1)
  CHECK(unprime(prime(init, doc), doc) == init);

  // terms mixing both versions are rejected
  CHECK(code_of([&] { prime(doc.system.trans, doc); }) ==
        ErrCode::MixedStateVersions);
  CHECK(code_of([&] { unprime(doc.system.trans, doc); }) ==
        ErrCode::MixedStateVersions);

  // inputs are untouched
  VmtDocument d2 = load_vmt(
      "(declare-const x Int)(declare-const xn Int)(declare-const b Bool)"
      "(define-fun s () Int (! x :next xn))");
  Term t = Term::mk_and({Term::var("b", Sort::boolean()),
                         Term::app(Op::Gt, {Term::var("x", Sort::integer()),
                                            Term::int_const(0)})});
  CHECK(prime(t, d2).str() == "(and b (> xn 0))");
}

TEST_CASE("print: counter system round-trips")
{
  VmtDocument doc = load_vmt(testdata::kCounterVmt);
  std::string text = print_vmt(doc);
  VmtDocument again = load_vmt(text);
  CHECK(same_document(doc, again));
  // printing is idempotent modulo nothing: same text again
  CHECK(print_vmt(again) == text);
  // the output respects the whitelist and ends with the marker
  CHECK(text.find("(assert true)\n") != std::string::npos);
  CHECK(text.find(":init true") != std::string::npos);
  CHECK(text.find(":trans true") != std::string::npos);
}

TEST_CASE("print: empty system")
{
  VmtDocument doc = load_vmt("(declare-const v Bool)");
  std::string text = print_vmt(doc);
  CHECK(text.find(":init true") != std::string::npos);
  CHECK(text.find(":trans true") != std::string::npos);
  VmtDocument again = load_vmt(text);
  CHECK(same_document(doc, again));
}

TEST_CASE("print: synthesized names dodge declared symbols")
{
  VmtDocument doc = load_vmt(
      "(declare-const x Int)(declare-const xn Int)"
      "(declare-const .init Bool)(declare-const |.sv.x| Int)"
      "(define-fun s () Int (! x :next xn))");
  std::string text = print_vmt(doc);
  VmtDocument again = load_vmt(text);
  CHECK(same_document(doc, again));
}

TEST_CASE("print: many random boolean variables round-trip")
{
  std::mt19937 rng(12345);
  std::string script;
  int n = 100;
  for (int i = 0; i < n; ++i) {
    std::string v = "v" + std::to_string(i);
    script += "(declare-const " + v + " Bool)(declare-const " + v + ".n Bool)";
    script += "(define-fun s" + std::to_string(i) + " () Bool (! " + v +
              " :next " + v + ".n))";
  }
  // random init over a few variables
  script += "(define-fun i () Bool (! (and";
  for (int k = 0; k < 10; ++k) {
    int i = static_cast<int>(rng() % n);
    script += (rng() % 2 ? " v" + std::to_string(i)
                         : " (not v" + std::to_string(i) + ")");
  }
  script += ") :init))";
  script += "(define-fun t () Bool (! (= v0.n v0) :trans))";
  script += "(define-fun p () Bool (! v0 :invar-property 7))";

  VmtDocument doc = load_vmt(script);
  REQUIRE(doc.system.states.size() == static_cast<size_t>(n));
  VmtDocument again = load_vmt(print_vmt(doc));
  CHECK(same_document(doc, again));
  CHECK(print_vmt(again) == print_vmt(doc));
}

TEST_CASE("document lookups")
{
  VmtDocument doc = load_vmt(testdata::kCounterVmt);
  REQUIRE(doc.property(1));
  CHECK(doc.property(1)->kind == PropertyKind::Invariant);
  CHECK(doc.property(99) == nullptr);
  REQUIRE(doc.first_property(PropertyKind::Live));
  CHECK(doc.first_property(PropertyKind::Live)->index == 2);
  CHECK(doc.system.by_current("x"));
  CHECK(doc.system.by_next("x.next"));
  CHECK(doc.system.by_current("b") == nullptr);
  CHECK(doc.system.is_input("b"));
}
