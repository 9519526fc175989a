#include <doctest.h>

#include "aspdbg/unfoundedness.hpp"
#include "aspdbg/loops.hpp"
#include "aspdbg/semantics.hpp"
#include "support.hpp"

using namespace aspdbg;

namespace {

LiteralSet lits(std::initializer_list<const char*> names) {
  LiteralSet out;
  for (auto n : names) out.insert(parse_literal(n));
  return out;
}

}  // namespace

TEST_SUITE("unfoundedness") {

TEST_CASE("some_bid(m2,p1) is supported by the some_bid rule") {
  GroundProgram g = ground(testing::program("lucy2.lp"));
  auto w = externally_supported(lits({"some_bid(m2,p1)"}), g, testing::interpretation("e2.int"));
  REQUIRE(w.has_value());
  CHECK(w->rule_index == 4);
  CHECK(w->theta.str() == "{M->m2, P->p1, X->1}");
  CHECK(w->instance.str() == "some_bid(m2,p1) :- bid(m2,p1,1).");
}

TEST_CASE("bid(m2,p1,1) has no external support") {
  GroundProgram g = ground(testing::program("lucy2.lp"));
  Interpretation e2 = testing::interpretation("e2.int");
  CHECK_FALSE(externally_supported(lits({"bid(m2,p1,1)"}), g, e2).has_value());
  CHECK(unfounded(lits({"bid(m2,p1,1)"}), g, e2));
}

TEST_CASE("a set outside every head is unfounded") {
  GroundProgram g = ground(testing::program("lucy2.lp"));
  CHECK(unfounded(lits({"zzz(1)"}), g, testing::interpretation("e2.int")));
}

TEST_CASE("the Patty loop is unfounded") {
  GroundProgram g = ground(testing::program("patty1.lp"));
  CHECK(unfounded(lits({"conflict_of_interest(m1,p1)", "bid(m1,p1,0)"}), g,
                  testing::interpretation("e4.int")));
}

TEST_CASE("facts support themselves") {
  GroundProgram g = ground(testing::program("lucy1.lp"));
  CHECK_FALSE(unfounded(lits({"pc(m1)"}), g, testing::interpretation("s1.int")));
}

TEST_CASE("the disjunctive guess supports -assigned(p1,m2)") {
  GroundProgram g = ground(testing::program("linus1.lp"));
  Interpretation e3 = testing::interpretation("e3.int");
  auto w = externally_supported(lits({"-assigned(p1,m2)"}), g, e3);
  REQUIRE(w.has_value());
  CHECK(w->rule_index == 8);
  CHECK(w->instance.str() == "assigned(p1,m2) | -assigned(p1,m2) :- paper(p1), pc(m2).");
}

TEST_CASE("violated conditions") {
  GroundProgram g = ground(testing::program("patty1.lp"));
  Interpretation e4 = testing::interpretation("e4.int");
  LiteralSet loop = lits({"conflict_of_interest(m1,p1)", "bid(m1,p1,0)"});
  for (const auto& r : g.rules) {
    if (r.str() == "conflict_of_interest(m1,p1) :- bid(m1,p1,0).") {
      CHECK(violated_conditions(r, loop, e4) == std::vector{SupportCondition::External});
    }
    if (r.str() == "pc(m1).") {
      // pc(m1) is in I but not in the loop, so (iii) fails as well.
      CHECK(violated_conditions(r, loop, e4) ==
            std::vector{SupportCondition::HeadMeetsSet, SupportCondition::OtherHeadsFalse});
    }
  }
  GroundRule d;
  d.head = {parse_literal("a"), parse_literal("b")};
  auto v = violated_conditions(d, lits({"a"}), parse_interpretation("{a, b}"));
  CHECK(v == std::vector{SupportCondition::OtherHeadsFalse});
  CHECK(roman(SupportCondition::OtherHeadsFalse) == "iii");
}

TEST_CASE("witnesses are ordered and complete") {
  GroundProgram g = ground(parse_program("a :- b.\na :- c.\nb.\nc."));
  Interpretation i = parse_interpretation("{a, b, c}");
  auto all = all_external_supports(lits({"a"}), g, i);
  REQUIRE(all.size() == 2);
  CHECK(all[0].rule_index == 0);
  CHECK(externally_supported(lits({"a"}), g, i)->rule_index == 0);
}

TEST_CASE("removing a witness finds another or flips to unfounded") {
  for (auto [prog, interp] : {std::pair{"lucy1.lp", "s1.int"}, {"lucy2.lp", "e2.int"},
                              {"linus1.lp", "e3.int"}, {"patty1.lp", "e4.int"}}) {
    GroundProgram g = ground(testing::program(prog));
    Interpretation i = testing::interpretation(interp);
    for (const auto& l : i.literals()) {
      LiteralSet j{l};
      auto witnesses = all_external_supports(j, g, i);
      if (witnesses.empty()) continue;
      GroundProgram reduced;
      for (const auto& r : g.rules) {
        if (!(r == witnesses.front().instance)) reduced.rules.push_back(r);
      }
      auto again = externally_supported(j, reduced, i);
      CHECK(again.has_value() == (witnesses.size() > 1));
    }
  }
}

TEST_CASE("no loop inside an answer set is unfounded") {
  testing::Generator gen(37);
  for (int k = 0; k < 150; ++k) {
    Program p = parse_program(gen.program_text());
    GroundProgram g = ground(p);
    for (const auto& a : enumerate_answer_sets(p)) {
      for (const auto& l : loops_within(a, dep_graph(g, a))) CHECK_FALSE(unfounded(l.literals, g, a));
    }
  }
}

}  // TEST_SUITE
