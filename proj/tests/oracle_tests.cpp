#include <functional>
#include <limits>

#include "counter_system.h"
#include "doctest.h"
#include "vmtkit/model.h"
#include "vmtkit/oracle.h"

using namespace vmtkit;

namespace {

Value B(bool v) { return Value::boolean(v); }
Value I(long long v) { return Value::integer(v); }
Value BV(unsigned long long v, unsigned w) { return Value::bitvec(v, w); }

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

VmtDocument counter()
{
  return load_vmt(testdata::kCounterVmt);
}

DomainBounds x_bounds(long long lo, long long hi)
{
  DomainBounds db;
  db.per_var["x"] = {lo, hi};
  return db;
}

}  // namespace

TEST_CASE("values: factories, masking, comparison, printing")
{
  CHECK(B(true).str() == "true");
  CHECK(I(5).str() == "5");
  CHECK(I(-3).str() == "(- 3)");
  CHECK(BV(5, 4).str() == "#b0101");
  CHECK(BV(0x1ff, 8).bv == 0xff);  // masked to width
  CHECK(BV(3, 4) == BV(3, 4));
  CHECK(BV(3, 4) != BV(3, 5));
  CHECK(B(true) != I(1));
  CHECK(I(-2) < I(7));
  CHECK_FALSE(I(7) < I(-2));
  std::vector<Value> a{I(1), I(2)}, b{I(1), I(3)};
  CHECK(a < b);  // states order lexicographically
  CHECK(code_of([] { Value::bitvec(1, 0); }) == ErrCode::UnsupportedForOracle);
  CHECK(code_of([] { Value::bitvec(1, 65); }) == ErrCode::UnsupportedForOracle);
}

TEST_CASE("kernel: boolean connectives")
{
  auto ap = [](Op op, std::vector<Value> args) {
    return apply_op_values(op, args, {});
  };
  CHECK(ap(Op::And, {B(true), B(true), B(false)}) == B(false));
  CHECK(ap(Op::And, {}) == B(true));
  CHECK(ap(Op::Or, {B(false), B(true)}) == B(true));
  CHECK(ap(Op::Not, {B(false)}) == B(true));
  // => is right-associative: (=> a b c) is a => (b => c)
  CHECK(ap(Op::Implies, {B(true), B(false), B(false)}) == B(true));
  CHECK(ap(Op::Implies, {B(true), B(true), B(false)}) == B(false));
  CHECK(ap(Op::Xor, {B(true), B(true), B(true)}) == B(true));
  CHECK(ap(Op::Eq, {I(2), I(2), I(2)}) == B(true));
  CHECK(ap(Op::Eq, {I(2), I(2), I(3)}) == B(false));
  CHECK(ap(Op::Distinct, {I(1), I(2), I(3)}) == B(true));
  CHECK(ap(Op::Distinct, {I(1), I(2), I(1)}) == B(false));
  CHECK(ap(Op::Ite, {B(false), I(1), I(2)}) == I(2));
}

TEST_CASE("kernel: integer arithmetic is Euclidean and overflow-checked")
{
  auto ap = [](Op op, std::vector<Value> args) {
    return apply_op_values(op, args, {});
  };
  CHECK(ap(Op::Add, {I(1), I(2), I(3)}) == I(6));
  CHECK(ap(Op::Sub, {I(10), I(3), I(2)}) == I(5));
  CHECK(ap(Op::Neg, {I(-4)}) == I(4));
  CHECK(ap(Op::Mul, {I(3), I(-4)}) == I(-12));
  CHECK(ap(Op::Abs, {I(-7)}) == I(7));

  // SMT-LIB div/mod: remainder is always in [0, |divisor|)
  CHECK(ap(Op::IntDiv, {I(7), I(2)}) == I(3));
  CHECK(ap(Op::IntDiv, {I(-7), I(2)}) == I(-4));
  CHECK(ap(Op::IntDiv, {I(7), I(-2)}) == I(-3));
  CHECK(ap(Op::IntDiv, {I(-7), I(-2)}) == I(4));
  CHECK(ap(Op::Mod, {I(7), I(2)}) == I(1));
  CHECK(ap(Op::Mod, {I(-7), I(2)}) == I(1));
  CHECK(ap(Op::Mod, {I(7), I(-2)}) == I(1));
  CHECK(ap(Op::Mod, {I(-7), I(-2)}) == I(1));
  CHECK(ap(Op::Mod, {I(-8), I(4)}) == I(0));

  CHECK(code_of([&] { ap(Op::IntDiv, {I(1), I(0)}); }) == ErrCode::UnsupportedForOracle);
  CHECK(code_of([&] { ap(Op::Mod, {I(1), I(0)}); }) == ErrCode::UnsupportedForOracle);
  long long max = std::numeric_limits<long long>::max();
  long long min = std::numeric_limits<long long>::min();
  CHECK(code_of([&] { ap(Op::Add, {I(max), I(1)}); }) == ErrCode::DomainOverflow);
  CHECK(code_of([&] { ap(Op::Sub, {I(min), I(1)}); }) == ErrCode::DomainOverflow);
  CHECK(code_of([&] { ap(Op::Mul, {I(min), I(-1)}); }) == ErrCode::DomainOverflow);
  CHECK(code_of([&] { ap(Op::Neg, {I(min)}); }) == ErrCode::DomainOverflow);
  CHECK(code_of([&] { ap(Op::IntDiv, {I(min), I(-1)}); }) == ErrCode::DomainOverflow);
  CHECK(ap(Op::Mod, {I(min), I(-1)}) == I(0));

  CHECK(ap(Op::Le, {I(1), I(1), I(2)}) == B(true));
  CHECK(ap(Op::Lt, {I(1), I(1)}) == B(false));
  CHECK(ap(Op::Ge, {I(3), I(2), I(2)}) == B(true));
  CHECK(ap(Op::Gt, {I(3), I(2), I(2)}) == B(false));
}

TEST_CASE("kernel: bit-vector operations")
{
  auto ap = [](Op op, std::vector<Value> args, std::vector<unsigned> idx = {}) {
    return apply_op_values(op, args, idx);
  };
  CHECK(ap(Op::BvNot, {BV(0b0101, 4)}) == BV(0b1010, 4));
  CHECK(ap(Op::BvAnd, {BV(0b1100, 4), BV(0b1010, 4)}) == BV(0b1000, 4));
  CHECK(ap(Op::BvOr, {BV(0b1100, 4), BV(0b1010, 4)}) == BV(0b1110, 4));
  CHECK(ap(Op::BvXor, {BV(0b1100, 4), BV(0b1010, 4)}) == BV(0b0110, 4));
  CHECK(ap(Op::BvNand, {BV(0b1100, 4), BV(0b1010, 4)}) == BV(0b0111, 4));
  CHECK(ap(Op::BvNor, {BV(0b1100, 4), BV(0b1010, 4)}) == BV(0b0001, 4));
  CHECK(ap(Op::BvXnor, {BV(0b1100, 4), BV(0b1010, 4)}) == BV(0b1001, 4));

  CHECK(ap(Op::BvNeg, {BV(1, 4)}) == BV(15, 4));
  CHECK(ap(Op::BvNeg, {BV(0, 4)}) == BV(0, 4));
  CHECK(ap(Op::BvAdd, {BV(9, 4), BV(9, 4)}) == BV(2, 4));   // wraps
  CHECK(ap(Op::BvSub, {BV(3, 4), BV(5, 4)}) == BV(14, 4));  // wraps
  CHECK(ap(Op::BvMul, {BV(7, 4), BV(7, 4)}) == BV(1, 4));   // 49 mod 16
  CHECK(ap(Op::BvAdd, {BV(~0ull, 64), BV(1, 64)}) == BV(0, 64));

  // division conventions: udiv by zero is all-ones, urem by zero is the
  // dividend; the signed forms follow from the sign-case expansion
  CHECK(ap(Op::BvUdiv, {BV(13, 4), BV(3, 4)}) == BV(4, 4));
  CHECK(ap(Op::BvUdiv, {BV(13, 4), BV(0, 4)}) == BV(15, 4));
  CHECK(ap(Op::BvUrem, {BV(13, 4), BV(3, 4)}) == BV(1, 4));
  CHECK(ap(Op::BvUrem, {BV(13, 4), BV(0, 4)}) == BV(13, 4));
  CHECK(ap(Op::BvSdiv, {BV(13, 4), BV(3, 4)}) == BV(15, 4));   // -3 / 3 = -1
  CHECK(ap(Op::BvSdiv, {BV(13, 4), BV(13, 4)}) == BV(1, 4));   // -3 / -3
  CHECK(ap(Op::BvSdiv, {BV(3, 4), BV(0, 4)}) == BV(15, 4));    // all-ones
  CHECK(ap(Op::BvSdiv, {BV(13, 4), BV(0, 4)}) == BV(1, 4));    // negative / 0
  CHECK(ap(Op::BvSdiv, {BV(8, 4), BV(15, 4)}) == BV(8, 4));    // INT_MIN / -1 wraps
  CHECK(ap(Op::BvSrem, {BV(13, 4), BV(3, 4)}) == BV(0, 4));
  CHECK(ap(Op::BvSrem, {BV(14, 4), BV(3, 4)}) == BV(14, 4));   // -2 rem 3 = -2
  CHECK(ap(Op::BvSrem, {BV(14, 4), BV(0, 4)}) == BV(14, 4));

  CHECK(ap(Op::BvShl, {BV(0b0011, 4), BV(1, 4)}) == BV(0b0110, 4));
  CHECK(ap(Op::BvShl, {BV(1, 4), BV(9, 4)}) == BV(0, 4));  // shift >= width
  CHECK(ap(Op::BvLshr, {BV(0b1000, 4), BV(3, 4)}) == BV(1, 4));
  CHECK(ap(Op::BvAshr, {BV(0b1000, 4), BV(2, 4)}) == BV(0b1110, 4));
  CHECK(ap(Op::BvAshr, {BV(0b1000, 4), BV(9, 4)}) == BV(0b1111, 4));
  CHECK(ap(Op::BvAshr, {BV(0b0100, 4), BV(9, 4)}) == BV(0, 4));

  CHECK(ap(Op::BvUlt, {BV(3, 4), BV(12, 4)}) == B(true));
  CHECK(ap(Op::BvSlt, {BV(12, 4), BV(3, 4)}) == B(true));  // -4 < 3
  CHECK(ap(Op::BvSge, {BV(0, 4), BV(15, 4)}) == B(true));  // 0 >= -1
  CHECK(ap(Op::BvSlt, {BV(7, 3), BV(0, 3)}) == B(true));   // -1 < 0
  CHECK(ap(Op::BvSgt, {BV(0, 3), BV(6, 3)}) == B(true));   // 0 > -2
  CHECK(ap(Op::BvSle, {BV(4, 3), BV(3, 3)}) == B(true));   // -4 <= 3
  CHECK(ap(Op::BvUle, {BV(5, 4), BV(5, 4)}) == B(true));
  CHECK(ap(Op::BvUgt, {BV(5, 4), BV(5, 4)}) == B(false));

  CHECK(ap(Op::Concat, {BV(0b10, 2), BV(0b01, 2)}) == BV(0b1001, 4));
  CHECK(ap(Op::Extract, {BV(0b110100, 6)}, {4, 2}) == BV(0b101, 3));
  CHECK(ap(Op::ZeroExtend, {BV(0b10, 2)}, {3}) == BV(0b00010, 5));
  CHECK(ap(Op::SignExtend, {BV(0b10, 2)}, {3}) == BV(0b11110, 5));
  CHECK(code_of([&] { ap(Op::Concat, {BV(1, 40), BV(1, 40)}); }) ==
        ErrCode::UnsupportedForOracle);
}

TEST_CASE("eval: annotated counter formulas")
{
  VmtDocument doc = counter();
  Oracle o(doc, x_bounds(0, 12));

  // invariant formula at x = 1
  CHECK(o.holds(doc.property(1)->formula, {I(1)}));
  CHECK_FALSE(o.holds(doc.property(1)->formula, {I(0)}));

  // transition formula with explicit input and next-state assignments
  InputVals bt{B(true)}, bf{B(false)};
  State x1{I(1)}, x2{I(2)};
  CHECK(o.holds(doc.system.trans, x1, &bt, &x2));
  CHECK_FALSE(o.holds(doc.system.trans, x1, &bf, &x2));
  CHECK(o.holds(doc.system.trans, x1, &bf, &x1));

  // missing assignments are reported, not defaulted
  CHECK(code_of([&] { o.eval(doc.system.trans, x1); }) ==
        ErrCode::UnsupportedForOracle);
  CHECK(code_of([&] { o.eval(doc.system.trans, x1, &bt); }) ==
        ErrCode::UnsupportedForOracle);
}

TEST_CASE("eval: constants on an empty system")
{
  VmtDocument doc;  // no variables at all
  Oracle o(doc, {});
  CHECK(o.eval(Term::true_(), {}) == B(true));
  CHECK(o.eval(Term::int_const(-3), {}) == I(-3));
  CHECK(o.eval(Term::bv_const(5, 4), {}) == BV(5, 4));
}

TEST_CASE("eval: lets are parallel and lexically scoped")
{
  VmtDocument doc = load_vmt(R"(
    (declare-const x Int)
    (declare-const xn Int)
    (define-fun sv () Int (! x :next xn))
    (define-fun i () Bool (! (= x 0) :init))
    (define-fun t () Bool
      (! (let ((a (+ x 1)) (b x))
           (let ((b a) (a b))    ; swap: refers to the outer pair
             (= xn (- a b))))
         :trans))
    (define-fun p () Bool (! true :invar-property 0))
  )");
  Oracle o(doc, x_bounds(-4, 4));
  // a = outer b = x, b = outer a = x+1, so xn = x - (x+1) = -1
  State s{I(2)};
  State good{I(-1)}, bad{I(1)};
  CHECK(o.holds(doc.system.trans, s, nullptr, &good));
  CHECK_FALSE(o.holds(doc.system.trans, s, nullptr, &bad));
}

TEST_CASE("eval: short-circuiting guards partial operations")
{
  VmtDocument doc = load_vmt(R"(
    (declare-const x Int)
    (declare-const xn Int)
    (declare-const y Int)
    (declare-const yn Int)
    (define-fun svx () Int (! x :next xn))
    (define-fun svy () Int (! y :next yn))
    (define-fun i () Bool (! (and (= x 4) (= y 0)) :init))
    (define-fun t () Bool (! (and (= xn x) (= yn y)) :trans))
    (define-fun g1 () Bool (! (or (= y 0) (= (div x y) 2)) :invar-property 0))
    (define-fun g2 () Bool (! (=> (distinct y 0) (= (div x y) 2)) :invar-property 1))
    (define-fun g3 () Bool (! (= (ite (= y 0) x (div x y)) 4) :invar-property 2))
    (define-fun bad () Bool (! (= (div x y) 2) :invar-property 3))
  )");
  Oracle o(doc, {});
  State s{I(4), I(0)};
  CHECK(o.holds(doc.property(0)->formula, s));
  CHECK(o.holds(doc.property(1)->formula, s));
  CHECK(o.holds(doc.property(2)->formula, s));
  CHECK(code_of([&] { o.eval(doc.property(3)->formula, s); }) ==
        ErrCode::UnsupportedForOracle);
  // `and` short-circuits too: guard before use
  Term y = Term::var("y", Sort::integer());
  Term guarded = Term::mk_and(
      {Term::mk_eq(y, Term::int_const(1)), doc.property(3)->formula});
  CHECK_FALSE(o.holds(guarded, s));
}

TEST_CASE("eval: assignments are bounds-checked")
{
  VmtDocument doc = counter();
  Oracle o(doc, x_bounds(0, 8));
  CHECK(code_of([&] { o.eval(doc.property(1)->formula, {I(9)}); }) ==
        ErrCode::DomainOverflow);
  State x8{I(8)};
  InputVals bt{B(true)};
  State x9{I(9)};
  CHECK(code_of([&] { o.eval(doc.system.trans, x8, &bt, &x9); }) ==
        ErrCode::DomainOverflow);

  // arithmetic overflow inside eval is DomainOverflow as well
  long long max = std::numeric_limits<long long>::max();
  Oracle wide(doc, x_bounds(max - 1, max));
  CHECK(code_of([&] {
          InputVals in{B(true)};
          State top{I(max)};
          wide.eval(doc.system.trans, top, &in, &top);
        }) == ErrCode::DomainOverflow);
}

TEST_CASE("eval: unsupported features are reported by code")
{
  VmtDocument doc = counter();
  Oracle o(doc, x_bounds(0, 4));
  Term q = Term::quant(true, {{"k", Sort::integer()}},
                       Term::app(Op::Ge, {Term::var("k", Sort::integer(), true),
                                          Term::int_const(0)}));
  CHECK(code_of([&] { o.eval(q, {I(1)}); }) == ErrCode::UnsupportedForOracle);
  Term u = Term::uapp("f", {Term::int_const(1)}, Sort::integer());
  CHECK(code_of([&] { o.eval(Term::mk_eq(u, Term::int_const(0)), {I(1)}); }) ==
        ErrCode::UnsupportedForOracle);
  Term unknown = Term::var("ghost", Sort::boolean());
  CHECK(code_of([&] { o.eval(unknown, {I(1)}); }) == ErrCode::UnsupportedForOracle);
}

TEST_CASE("construction rejects non-enumerable variables")
{
  auto doc_with = [](const std::string& sort_decl) {
    return load_vmt("(declare-const v " + sort_decl + ")" +
                    "(declare-const vn " + sort_decl + ")" +
                    "(define-fun sv () " + sort_decl + " (! v :next vn))" +
                    "(define-fun p () Bool (! true :invar-property 0))");
  };
  CHECK(code_of([&] { Oracle(doc_with("Real"), {}); }) ==
        ErrCode::UnsupportedForOracle);
  CHECK(code_of([&] { Oracle(doc_with("(_ BitVec 16)"), {}); }) ==
        ErrCode::UnsupportedForOracle);
  CHECK(code_of([&] { Oracle(doc_with("(Array Int Int)"), {}); }) ==
        ErrCode::UnsupportedForOracle);
  CHECK_NOTHROW(Oracle(doc_with("(_ BitVec 8)"), {}));

  VmtDocument cnt = counter();
  CHECK(code_of([&] { Oracle(cnt, x_bounds(3, 1)); }) == ErrCode::UsageError);
  CHECK(code_of([&] { Oracle(cnt, x_bounds(0, 5'000'000)); }) ==
        ErrCode::UnsupportedForOracle);
}

TEST_CASE("initial states and successors of the counter")
{
  VmtDocument doc = counter();
  Oracle o(doc, x_bounds(0, 5));

  auto inits = o.initial_states();
  REQUIRE(inits.size() == 1);
  CHECK(inits[0] == State{I(1)});

  auto succ = o.successors({I(1)});
  REQUIRE(succ.size() == 2);
  CHECK(succ[0].first == InputVals{B(false)});
  CHECK(succ[0].second == State{I(1)});
  CHECK(succ[1].first == InputVals{B(true)});
  CHECK(succ[1].second == State{I(2)});

  // at the top of the interval the increment leaves the bounded instance:
  // only the stuttering input remains
  auto top = o.successors({I(5)});
  REQUIRE(top.size() == 1);
  CHECK(top[0].first == InputVals{B(false)});
  CHECK(top[0].second == State{I(5)});
}

TEST_CASE("successors of degenerate relations")
{
  VmtDocument none = load_vmt(R"(
    (declare-const v Bool)
    (declare-const vn Bool)
    (define-fun sv () Bool (! v :next vn))
    (define-fun t () Bool (! false :trans))
    (define-fun p () Bool (! v :invar-property 0))
  )");
  Oracle o0(none, {});
  CHECK(o0.successors({B(false)}).empty());
  CHECK(o0.successors({B(true)}).empty());

  VmtDocument all = load_vmt(R"(
    (declare-const v Bool)
    (declare-const vn Bool)
    (declare-const in0 Bool)
    (define-fun sv () Bool (! v :next vn))
    (define-fun p () Bool (! v :invar-property 0))
  )");
  Oracle o1(all, {});  // trans defaults to true
  CHECK(o1.successors({B(false)}).size() == 4);  // 2 inputs x 2 next states
}

TEST_CASE("invariant checking: counter is safe within its bounds")
{
  VmtDocument doc = counter();
  Oracle o(doc, x_bounds(0, 12));
  InvariantResult r = o.check_invariant(*doc.property(1), 12);
  CHECK_FALSE(r.cex.has_value());
  CHECK(r.exhausted);
  CHECK(o.reachable_count() == 12);  // x in 1..12
}

TEST_CASE("invariant checking: initial-state violation has length 1")
{
  VmtDocument doc = load_vmt(R"(
    (declare-const x Int)
    (declare-const x.next Int)
    (define-fun sv.x () Int (! x :next x.next))
    (declare-const b Bool)
    (define-fun init () Bool (! (= x 0) :init))
    (define-fun trans () Bool (! (= x.next (ite b (+ x 1) x)) :trans))
    (define-fun p1 () Bool (! (> x 0) :invar-property 1))
  )");
  Oracle o(doc, x_bounds(0, 12));
  InvariantResult r = o.check_invariant(*doc.property(1), 12);
  REQUIRE(r.cex.has_value());
  CHECK(r.cex->states.size() == 1);
  CHECK(r.cex->states[0] == State{I(0)});
  CHECK(r.cex->inputs.empty());
  CHECK(o.valid_path(*r.cex));
}

TEST_CASE("invariant checking: decrementing counter violates in two states")
{
  VmtDocument doc = load_vmt(R"(
    (declare-const x Int)
    (declare-const x.next Int)
    (define-fun sv.x () Int (! x :next x.next))
    (define-fun init () Bool (! (= x 1) :init))
    (define-fun trans () Bool (! (= x.next (- x 1)) :trans))
    (define-fun p () Bool (! (> x 0) :invar-property 1))
  )");
  Oracle o(doc, x_bounds(-1, 1));
  InvariantResult r = o.check_invariant(*doc.property(1), 8);
  REQUIRE(r.cex.has_value());
  REQUIRE(r.cex->states.size() == 2);
  CHECK(r.cex->states[0] == State{I(1)});
  CHECK(r.cex->states[1] == State{I(0)});
  CHECK(r.cex->inputs.size() == 1);
  CHECK(r.cex->inputs[0].empty());  // no input variables
  CHECK(o.valid_path(*r.cex));
}

TEST_CASE("invariant checking: depth truncation vs exhaustion")
{
  VmtDocument doc = load_vmt(R"(
    (declare-const x Int)
    (declare-const x.next Int)
    (define-fun sv.x () Int (! x :next x.next))
    (declare-const b Bool)
    (define-fun init () Bool (! (= x 1) :init))
    (define-fun trans () Bool (! (= x.next (ite b (+ x 1) x)) :trans))
    (define-fun p () Bool (! (< x 5) :invar-property 1))
  )");
  Oracle o(doc, x_bounds(0, 12));

  InvariantResult shallow = o.check_invariant(*doc.property(1), 2);
  CHECK_FALSE(shallow.cex.has_value());
  CHECK_FALSE(shallow.exhausted);  // frontier was cut off, no verdict

  // the violation x=5 is 4 steps from x=1; monotone in the depth bound
  for (int depth : {4, 5, 8, 12}) {
    InvariantResult deep = o.check_invariant(*doc.property(1), depth);
    REQUIRE(deep.cex.has_value());
    CHECK(deep.cex->states.size() == 5);  // shortest: 1,2,3,4,5
    CHECK(deep.cex->states.back() == State{I(5)});
    CHECK(o.valid_path(*deep.cex));
  }
  InvariantResult at3 = o.check_invariant(*doc.property(1), 3);
  CHECK_FALSE(at3.cex.has_value());
}

TEST_CASE("live checking: counter stutters below the threshold")
{
  VmtDocument doc = counter();
  Oracle o(doc, x_bounds(0, 12));
  auto lasso = o.check_live(*doc.property(2));
  REQUIRE(lasso.has_value());
  CHECK(lasso->path.states == std::vector<State>{{I(1)}});
  CHECK(lasso->path.inputs.empty());
  CHECK(lasso->loop_start == 0);
  CHECK(lasso->closing_input == InputVals{B(false)});
  CHECK(o.valid_lasso(*lasso, doc.property(2)->formula));
}

TEST_CASE("live checking: no infinite path means vacuous satisfaction")
{
  VmtDocument doc = load_vmt(R"(
    (declare-const v Bool)
    (declare-const vn Bool)
    (define-fun sv () Bool (! v :next vn))
    (define-fun t () Bool (! false :trans))
    (define-fun p () Bool (! v :live-property 0))
  )");
  Oracle o(doc, {});
  CHECK_FALSE(o.check_live(*doc.property(0)).has_value());

  // dead-end path: x increments and deadlocks at the bound
  VmtDocument inc = load_vmt(R"(
    (declare-const x Int)
    (declare-const x.next Int)
    (define-fun sv () Int (! x :next x.next))
    (define-fun i () Bool (! (= x 0) :init))
    (define-fun t () Bool (! (= x.next (+ x 1)) :trans))
    (define-fun p () Bool (! (< x 2) :live-property 0))
  )");
  Oracle oi(inc, x_bounds(0, 3));
  CHECK_FALSE(oi.check_live(*inc.property(0)).has_value());
}

TEST_CASE("live checking: alternating bit yields a two-state loop")
{
  VmtDocument doc = load_vmt(R"(
    (declare-const v Bool)
    (declare-const vn Bool)
    (define-fun sv () Bool (! v :next vn))
    (define-fun i () Bool (! (not v) :init))
    (define-fun t () Bool (! (= vn (not v)) :trans))
    (define-fun p () Bool (! v :live-property 0))
  )");
  Oracle o(doc, {});
  auto lasso = o.check_live(*doc.property(0));
  REQUIRE(lasso.has_value());
  REQUIRE(lasso->path.states.size() == 2);
  CHECK(lasso->path.states[0] == State{B(false)});
  CHECK(lasso->path.states[1] == State{B(true)});
  CHECK(lasso->loop_start == 0);
  CHECK(o.valid_lasso(*lasso, doc.property(0)->formula));
  CHECK(o.reachable_count() == 2);
}

TEST_CASE("live checking: violating state off every cycle is not a counterexample")
{
  // v flips once and then stays true; p = v fails only at the initial state,
  // which no cycle revisits, so FG v holds on the bounded instance
  VmtDocument doc = load_vmt(R"(
    (declare-const v Bool)
    (declare-const vn Bool)
    (define-fun sv () Bool (! v :next vn))
    (define-fun i () Bool (! (not v) :init))
    (define-fun t () Bool (! vn :trans))
    (define-fun p () Bool (! v :live-property 0))
  )");
  Oracle o(doc, {});
  CHECK_FALSE(o.check_live(*doc.property(0)).has_value());
}

TEST_CASE("live counterexample reaches the loop through a stem")
{
  // x counts 0,1,2 and then oscillates between 2 and 3; p = x < 2 fails
  // exactly on the oscillation states
  VmtDocument doc = load_vmt(R"(
    (declare-const x Int)
    (declare-const x.next Int)
    (define-fun sv () Int (! x :next x.next))
    (define-fun i () Bool (! (= x 0) :init))
    (define-fun t () Bool
      (! (= x.next (ite (< x 2) (+ x 1) (ite (= x 2) 3 2))) :trans))
    (define-fun p () Bool (! (< x 2) :live-property 0))
  )");
  Oracle o(doc, x_bounds(0, 3));
  auto lasso = o.check_live(*doc.property(0));
  REQUIRE(lasso.has_value());
  CHECK(o.valid_lasso(*lasso, doc.property(0)->formula));
  CHECK(lasso->loop_start == 2);  // stem 0,1 then loop 2,3
  REQUIRE(lasso->path.states.size() == 4);
  CHECK(lasso->path.states[0] == State{I(0)});
  CHECK(lasso->path.states[2] == State{I(2)});
  CHECK(lasso->path.states[3] == State{I(3)});
}

TEST_CASE("bit-vector system end-to-end")
{
  VmtDocument doc = load_vmt(R"(
    (declare-const x (_ BitVec 4))
    (declare-const xn (_ BitVec 4))
    (define-fun sv () (_ BitVec 4) (! x :next xn))
    (define-fun i () Bool (! (= x #b0000) :init))
    (define-fun t () Bool (! (= xn (bvadd x #b0001)) :trans))
    (define-fun safe () Bool (! (bvult x #b1111) :invar-property 0))
    (define-fun low () Bool (! (bvult x #b1000) :live-property 1))
  )");
  Oracle o(doc, {});
  CHECK(o.reachable_count() == 16);

  InvariantResult r = o.check_invariant(*doc.property(0), 20);
  REQUIRE(r.cex.has_value());
  CHECK(r.cex->states.size() == 16);  // 0 up to 15
  CHECK(r.cex->states.back() == State{BV(15, 4)});
  CHECK(o.valid_path(*r.cex));

  auto lasso = o.check_live(*doc.property(1));
  REQUIRE(lasso.has_value());  // the wraparound cycle visits x >= 8 forever
  CHECK(o.valid_lasso(*lasso, doc.property(1)->formula));
}

TEST_CASE("path and lasso re-validation rejects tampered witnesses")
{
  VmtDocument doc = counter();
  Oracle o(doc, x_bounds(0, 5));

  FinitePath p;
  CHECK_FALSE(o.valid_path(p));  // empty
  p.states = {State{I(2)}};
  CHECK_FALSE(o.valid_path(p));  // wrong initial state
  p.states = {State{I(1)}, State{I(2)}};
  p.inputs = {InputVals{B(false)}};
  CHECK_FALSE(o.valid_path(p));  // step contradicts trans
  p.inputs = {InputVals{B(true)}};
  CHECK(o.valid_path(p));
  p.inputs.push_back(InputVals{B(true)});
  CHECK_FALSE(o.valid_path(p));  // length mismatch

  Lasso l;
  l.path.states = {State{I(1)}};
  l.closing_input = InputVals{B(false)};
  l.loop_start = 0;
  Term p2 = doc.property(2)->formula;
  CHECK(o.valid_lasso(l, p2));
  l.loop_start = 3;
  CHECK_FALSE(o.valid_lasso(l, p2));  // loop start out of range
  l.loop_start = 0;
  l.closing_input = InputVals{B(true)};
  CHECK_FALSE(o.valid_lasso(l, p2));  // closing edge not in trans
  // loop satisfying the property everywhere is not a counterexample
  CHECK_FALSE(o.valid_lasso(l, doc.property(1)->formula));
}

TEST_CASE("simulation is seeded and respects the relation")
{
  VmtDocument doc = counter();
  Oracle o(doc, x_bounds(0, 5));
  FinitePath a = o.simulate(10, 42);
  FinitePath b = o.simulate(10, 42);
  CHECK(a.states == b.states);
  CHECK(a.inputs == b.inputs);
  CHECK(a.states.size() == 11);
  CHECK(o.valid_path(a));
  FinitePath c = o.simulate(10, 43);
  CHECK(o.valid_path(c));

  // deadlocking system: walk stops at the wall
  VmtDocument inc = load_vmt(R"(
    (declare-const x Int)
    (declare-const x.next Int)
    (define-fun sv () Int (! x :next x.next))
    (define-fun i () Bool (! (= x 0) :init))
    (define-fun t () Bool (! (= x.next (+ x 1)) :trans))
    (define-fun p () Bool (! true :invar-property 0))
  )");
  Oracle oi(inc, x_bounds(0, 3));
  FinitePath w = oi.simulate(10, 7);
  CHECK(w.states.size() == 4);  // 0,1,2,3 then deadlock
  CHECK(oi.valid_path(w));
}

TEST_CASE("renaming all symbols leaves oracle behavior unchanged")
{
  VmtDocument a = counter();
  VmtDocument b = load_vmt(R"(
    (declare-const cell Int)
    (declare-const cell.n Int)
    (define-fun sv () Int (! cell :next cell.n))
    (declare-const tick Bool)
    (define-fun init () Bool (! (= cell 1) :init))
    (define-fun trans () Bool (! (= cell.n (ite tick (+ cell 1) cell)) :trans))
    (define-fun p1 () Bool (! (> cell 0) :invar-property 1))
    (define-fun p2 () Bool (! (> cell 10) :live-property 2))
  )");
  DomainBounds dbb;
  dbb.per_var["cell"] = {0, 12};
  Oracle oa(a, x_bounds(0, 12)), ob(b, dbb);

  CHECK(oa.reachable_count() == ob.reachable_count());
  CHECK(oa.initial_states() == ob.initial_states());

  auto ra = oa.check_invariant(*a.property(1), 12);
  auto rb = ob.check_invariant(*b.property(1), 12);
  CHECK(ra.cex.has_value() == rb.cex.has_value());
  CHECK(ra.exhausted == rb.exhausted);

  auto la = oa.check_live(*a.property(2));
  auto lb = ob.check_live(*b.property(2));
  REQUIRE(la.has_value());
  REQUIRE(lb.has_value());
  CHECK(la->path.states == lb->path.states);
  CHECK(la->loop_start == lb->loop_start);
  CHECK(la->closing_input == lb->closing_input);
}

TEST_CASE("free-function entry points")
{
  VmtDocument doc = counter();
  auto r = check_invariant_explicit(doc, *doc.property(1), x_bounds(0, 12), 12);
  CHECK_FALSE(r.cex.has_value());
  CHECK(r.exhausted);
  auto l = check_live_explicit(doc, *doc.property(2), x_bounds(0, 12));
  CHECK(l.has_value());
}
