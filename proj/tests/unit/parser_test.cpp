#include <doctest.h>

#include "aspdbg/parser.hpp"
#include "support.hpp"

using namespace aspdbg;

namespace {

ErrorKind parse_kind(const std::string& text, bool interpretation = false) {
  try {
    if (interpretation) {
      (void)parse_interpretation(text);
    } else {
      (void)parse_program(text);
    }
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error for: " << text);
  return ErrorKind::Io;
}

}  // namespace

TEST_SUITE("parser") {

TEST_CASE("rule structure") {
  Program p = parse_program("some_bid(M,P) :- bid(M,P,X).");
  REQUIRE(p.size() == 1);
  CHECK(p[0].head().size() == 1);
  CHECK(p[0].head()[0].str() == "some_bid(M,P)");
  CHECK(p[0].pos().size() == 1);
  CHECK(p[0].neg().empty());
}

TEST_CASE("empty program") {
  CHECK(parse_program("").empty());
  CHECK(parse_program("  % only a comment\n").empty());
}

TEST_CASE("constraint with default negation") {
  Program p = parse_program(":- paper(P), pc(M), not assigned(P,M).");
  REQUIRE(p.size() == 1);
  CHECK(p[0].is_constraint());
  CHECK(p[0].pos().size() == 2);
  REQUIRE(p[0].neg().size() == 1);
  CHECK(p[0].neg()[0].str() == "assigned(P,M)");
}

TEST_CASE("disjunction, strong negation and builtins") {
  Program p = parse_program("assigned(P,M) | -assigned(P,M) :- paper(P), pc(M), X + 1 <= Y * 2.");
  REQUIRE(p.size() == 1);
  CHECK(p[0].head().size() == 2);
  CHECK(p[0].head()[1].eps().strong_neg);
  CHECK(p[0].has_builtins());
  CHECK(p[0].str() == "assigned(P,M) | -assigned(P,M) :- paper(P), pc(M), X+1<=Y*2.");
}

TEST_CASE("errors carry kinds and positions") {
  CHECK(parse_kind("X = 1 :- p.") == ErrorKind::BuiltinInHead);
  CHECK(parse_kind("p :- not X = 1.") == ErrorKind::BuiltinInNegativeBody);
  CHECK(parse_kind("p :- q") == ErrorKind::Syntax);
  CHECK(parse_kind("p(f(a)).") == ErrorKind::Syntax);
  CHECK(parse_kind("p(X+1) :- q(X).") == ErrorKind::Syntax);
  CHECK(parse_kind("{ a, -a }", true) == ErrorKind::InconsistentInterpretation);
  CHECK(parse_kind("{ 1 < 2 }", true) == ErrorKind::BuiltinInInterpretation);
  CHECK(parse_kind("{ p(X) }", true) == ErrorKind::Syntax);
  try {
    parse_program("p.\nq :- r,\n  s(.");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position().line == 3);
    CHECK(e.position().column == 5);
  }
}

TEST_CASE("arity clash is a warning") {
  auto parsed = parse_program_with_warnings("p(1).\np(1,2).");
  CHECK(parsed.program.size() == 2);
  REQUIRE(parsed.warnings.size() == 1);
  CHECK(parsed.warnings[0].kind() == ErrorKind::ArityClashWarning);
}

TEST_CASE("interpretation formats") {
  CHECK(parse_interpretation("{ pc(m1), pc(m2) }").size() == 2);
  CHECK(parse_interpretation("{ }").empty());
  CHECK(parse_interpretation("").empty());
  CHECK(parse_interpretation("a.\n-b\nc(1),\n").size() == 3);
  Interpretation e1 = testing::interpretation("e1.int");
  Interpretation expected = testing::interpretation("s1.int");
  // E1 = (S1 + {bid(m2,p1,1)}) - {some_bid(m2,p1), bid(m2,p1,3)}
  LiteralSet s = expected.literals();
  s.insert(parse_literal("bid(m2,p1,1)"));
  s.erase(parse_literal("some_bid(m2,p1)"));
  s.erase(parse_literal("bid(m2,p1,3)"));
  CHECK(e1.literals() == s);
  CHECK(e1.size() == 6);
}

TEST_CASE("round trip on fixtures") {
  for (auto name : {"lucy1.lp", "lucy2.lp", "lucy3.lp", "linus1.lp", "linus2.lp", "patty1.lp"}) {
    Program p = testing::program(name);
    CHECK(parse_program(p.str()) == p);
  }
  for (auto name : {"s1.int", "e1.int", "e2.int", "s3.int", "e3.int", "s4.int", "e4.int"}) {
    Interpretation i = testing::interpretation(name);
    CHECK(parse_interpretation(i.str()) == i);
  }
}

TEST_CASE("round trip on random programs") {
  testing::RandomShape shape;
  shape.builtins = true;
  testing::Generator gen(3, shape);
  for (int k = 0; k < 300; ++k) {
    Program p = parse_program(gen.program_text());
    CHECK(parse_program(p.str()) == p);
  }
}

TEST_CASE("spans cover each rule and do not overlap") {
  std::string text = testing::slurp(testing::fixture_path("linus1.lp"));
  Program p = parse_program(text);
  std::size_t prev = 0;
  for (const auto& r : p.rules()) {
    CHECK(r.span().begin >= prev);
    CHECK(r.span().end > r.span().begin);
    CHECK(text[r.span().end - 1] == '.');
    CHECK(parse_program(text.substr(r.span().begin, r.span().end - r.span().begin))[0] == r);
    prev = r.span().end;
  }
}

}  // TEST_SUITE
