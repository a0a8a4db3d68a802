#include <gtest/gtest.h>

#include "carma/errors.hpp"
#include "carma/parser.hpp"
#include "carma/print.hpp"
#include "support.hpp"

using namespace carma;
using namespace testing_support;

namespace {

// Position and message of the error raised for `src`.
std::string errorOf(const std::string& src) {
  try {
    parseModel(src);
  } catch (const ParseError& e) {
    return std::to_string(e.line()) + ":" + std::to_string(e.column()) + " " + e.message();
  } catch (const ModelError& e) {
    return std::string(errorKindName(e.kind())) + " " + e.what();
  }
  return "accepted";
}

}  // namespace

TEST(Parser, StationProcess) {
  ProcessPtr g = parseProcess("[bikes > 0] get[zone == this.zone]<unit>{ bikes := bikes - 1 }.G");
  ASSERT_EQ(g->kind(), ProcessKind::Guard);
  EXPECT_EQ(g->guardPredicate(), Expr::binary(BinaryOp::Gt, Expr::attribute("bikes"), Expr::constant(I(0))));
  const ProcessPtr& p = g->body();
  ASSERT_EQ(p->kind(), ProcessKind::Prefix);
  const ActionPrefix& a = p->action();
  EXPECT_EQ(a.kind, ActionKind::UnicastOut);
  EXPECT_EQ(a.action, "get");
  EXPECT_EQ(a.predicate, Expr::binary(BinaryOp::Eq, Expr::attribute("zone"), Expr::self("zone")));
  EXPECT_EQ(a.outputs, std::vector<Expr>{Expr::constant(Value::unit())});
  ASSERT_EQ(a.update.branches().size(), 1u);
  ASSERT_EQ(p->body()->kind(), ProcessKind::Constant);
  EXPECT_EQ(p->body()->name(), "G");
}

TEST(Parser, Nil) { EXPECT_EQ(parseProcess("nil")->kind(), ProcessKind::Nil); }

TEST(Parser, Precedence) {
  EXPECT_EQ(printProcess(parseProcess("a<>.A + b<>.B | C")), "a<>.A + b<>.B | C");
  ProcessPtr p = parseProcess("a<>.A + b<>.B | C");
  ASSERT_EQ(p->kind(), ProcessKind::Choice);
  EXPECT_EQ(p->right()->kind(), ProcessKind::Parallel);
  EXPECT_EQ(parseExpr("1 + 2 * 3"), parseExpr("1 + (2 * 3)"));
  EXPECT_EQ(parseExpr("a || b && c"), parseExpr("a || (b && c)"));
  EXPECT_EQ(parseExpr("-3"), Expr::constant(I(-3)));
  EXPECT_EQ(parseExpr("- x").kind(), ExprKind::Unary);
}

TEST(Parser, InputBindsSlots) {
  ProcessPtr p = parseProcess("go*[x > this.a](x, unit){ a := x }.out*<x, a>.nil");
  const ActionPrefix& a = p->action();
  EXPECT_EQ(a.kind, ActionKind::BroadcastIn);
  EXPECT_EQ(a.inputs, (std::vector<InputSlot>{std::string("x"), std::nullopt}));
  EXPECT_TRUE(a.predicate.mentions(ExprKind::Variable));
  const ActionPrefix& out = p->body()->action();
  EXPECT_EQ(out.outputs[0].kind(), ExprKind::Variable);
  EXPECT_EQ(out.outputs[1].kind(), ExprKind::Attribute);
}

TEST(Parser, ShippedModelsRoundTrip) {
  for (const char* name : {"bikes.carma", "tiny.carma"}) {
    Model m = parseModel(readModel(name));
    std::string text = printModel(m);
    EXPECT_EQ(parseModel(text), m) << name;
    EXPECT_EQ(printModel(parseModel(text)), text) << name;
  }
}

TEST(Parser, BikeModelShape) {
  Model m = parseModel(readModel("bikes.carma"));
  EXPECT_EQ(m.symbols, (std::vector<std::string>{"z0", "z1", "z2", "z3"}));
  EXPECT_EQ(m.components.size(), 3u);
  EXPECT_EQ(m.measures.size(), 4u);
  std::uint32_t users = 0;
  for (const auto& s : m.system) {
    if (s.component != "Station") users += s.count;
  }
  EXPECT_EQ(users, 150u);
}

TEST(ParserErrors, Positions) {
  EXPECT_EQ(errorOf("A := a*[(x > 0]<>.A;"), "1:15 unexpected ']'");
  EXPECT_EQ(errorOf("A := a<>.A;\ncomponent K { behaviour B }\nsystem { K }"), "2:25 undefined process constant 'B'");
  EXPECT_EQ(errorOf("system { K }"), "1:10 unknown component 'K'");
}

TEST(ParserErrors, Messages) {
  EXPECT_NE(errorOf("component K { behaviour kill }\nsystem { K }").find("kill must occur under an action prefix"),
            std::string::npos);
  EXPECT_NE(errorOf("component K { store { a = 1, a = 2 } behaviour nil }\nsystem { K }").find("bound twice"),
            std::string::npos);
  EXPECT_NE(errorOf("measure m = count[1 < 2 < 3] @ [0 : 1 : 2];\nsystem { }").find("comparisons do not chain"),
            std::string::npos);
  EXPECT_NE(errorOf("component K { store { a = 9223372036854775808 } behaviour nil }\nsystem { }").find("range"),
            std::string::npos);
  EXPECT_NE(errorOf("A := B;\nB := A;\nsystem { }").find("unguarded recursion"), std::string::npos);
  EXPECT_NE(errorOf("component K(p) { behaviour nil }\nsystem { K }").find("argument"), std::string::npos);
  EXPECT_NE(errorOf("A := a<>{ 0 : x := 1 }.A;\nsystem { }").find("1:9 update branch weights sum to zero"), std::string::npos);
  EXPECT_EQ(errorOf("system { }"), "accepted");
}

TEST(ParserErrors, DeepNesting) {
  std::string deep(100000, '(');
  EXPECT_NE(errorOf("measure m = count[" + deep + "] @ [0 : 1 : 2];\nsystem { }").find("nest"), std::string::npos);
}
