#include <doctest.h>

#include "aspdbg/parser.hpp"
#include "support.hpp"

using namespace aspdbg;

TEST_SUITE("core") {

TEST_CASE("constant order puts numbers first") {
  auto one = Constant::number(1), three = Constant::number(3);
  auto m1 = Constant::symbol("m1"), two = Constant::number(2);
  CHECK(compare(one, three) < 0);
  CHECK(compare(m1, m1) == 0);
  CHECK(compare(two, m1) < 0);
  CHECK(compare(Constant::symbol("a"), Constant::symbol("b")) < 0);
  CHECK(compare(Constant::number(10), Constant::number(9)) > 0);
}

TEST_CASE("constant order is total, antisymmetric and transitive on fixture constants") {
  std::set<Constant> all;
  for (auto name : {"lucy1.lp", "lucy2.lp", "lucy3.lp", "linus1.lp", "linus2.lp", "patty1.lp"}) {
    auto cs = testing::program(name).constants();
    all.insert(cs.begin(), cs.end());
  }
  std::vector<Constant> v(all.begin(), all.end());
  for (const auto& a : v) {
    for (const auto& b : v) {
      auto ab = compare(a, b), ba = compare(b, a);
      CHECK((ab == 0) == (a == b));
      CHECK((ab < 0) == (ba > 0));
      for (const auto& c : v) {
        if (ab < 0 && compare(b, c) < 0) CHECK(compare(a, c) < 0);
      }
    }
  }
}

TEST_CASE("apply grounds a rule positionally") {
  Program p = parse_program("some_bid(M,P) :- bid(M,P,X).");
  Substitution theta;
  theta.bind("M", Constant::symbol("m2"));
  theta.bind("P", Constant::symbol("p1"));
  theta.bind("X", Constant::number(1));
  Rule r = apply(p[0], theta);
  CHECK(r.str() == "some_bid(m2,p1) :- bid(m2,p1,1).");
  CHECK(r.is_ground());

  Program fact = parse_program("pc(m1).");
  CHECK(apply(fact[0], Substitution{}) == fact[0]);

  Program c = parse_program(":- assigned(P,M), bid(M,P,0).");
  Substitution t2;
  t2.bind("P", Constant::symbol("p1"));
  t2.bind("M", Constant::symbol("m1"));
  CHECK(apply(c[0], t2).str() == ":- assigned(p1,m1), bid(m1,p1,0).");
}

TEST_CASE("apply rejects a partial substitution") {
  Program p = parse_program("p(X,Y) :- q(X).");
  Substitution theta;
  theta.bind("X", Constant::number(1));
  try {
    (void)apply(p[0], theta);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundVariable);
  }
}

TEST_CASE("apply leaves no variables for random rules") {
  testing::Generator gen(11);
  for (int k = 0; k < 200; ++k) {
    Program p = parse_program(gen.program_text());
    for (const auto& r : p.rules()) {
      Substitution theta;
      for (const auto& v : r.variables()) theta.bind(v, Constant::symbol("z"));
      CHECK(apply(r, theta).is_ground());
    }
  }
}

TEST_CASE("interpretations reject complementary pairs") {
  LiteralSet s{parse_literal("a"), parse_literal("-a")};
  CHECK_FALSE(is_consistent(s));
  CHECK_THROWS_AS(Interpretation{s}, Error);
  try {
    Interpretation i{s};
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentInterpretation);
  }
  CHECK_THROWS_AS(Interpretation{LiteralSet{parse_literal("p(X)")}}, Error);
}

TEST_CASE("random literal sets are accepted iff consistent") {
  std::mt19937 rng(5);
  std::vector<Literal> pool;
  for (auto t : {"a", "-a", "p(1)", "-p(1)", "p(c)", "q(1,c)", "-q(1,c)"}) pool.push_back(parse_literal(t));
  for (int k = 0; k < 300; ++k) {
    LiteralSet s;
    for (const auto& l : pool) {
      if (rng() % 2) s.insert(l);
    }
    bool consistent = true;
    for (const auto& l : s) consistent = consistent && !s.count(complement(l));
    CHECK(is_consistent(s) == consistent);
    if (consistent) {
      CHECK_NOTHROW(Interpretation{s});
    } else {
      CHECK_THROWS(Interpretation{s});
    }
  }
}

TEST_CASE("rules and facts") {
  Program p = parse_program("pc(m1).\na | b :- c, not d.\n:- e.");
  CHECK(p[0].is_fact());
  CHECK_FALSE(p[1].is_fact());
  CHECK_FALSE(p[1].is_normal());
  CHECK(p[2].is_constraint());
  CHECK_THROWS_AS(Rule({}, {}, {}), Error);
}

TEST_CASE("substitution printing") {
  Substitution theta;
  theta.bind("P", Constant::symbol("p1"));
  theta.bind("M", Constant::symbol("m2"));
  CHECK(theta.str() == "{M->m2, P->p1}");
  CHECK(Substitution{}.str() == "{}");
}

}  // TEST_SUITE
