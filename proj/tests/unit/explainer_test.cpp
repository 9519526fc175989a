#include <doctest.h>

#include "aspdbg/explainer.hpp"
#include "aspdbg/semantics.hpp"
#include "support.hpp"

using namespace aspdbg;

namespace {

LiteralSet lits(std::initializer_list<const char*> names) {
  LiteralSet out;
  for (auto n : names) out.insert(parse_literal(n));
  return out;
}

Explanation run(const char* prog, const char* interp, ExplainOptions o = {}) {
  return explain(testing::program(prog), testing::interpretation(interp), o);
}

}  // namespace

TEST_SUITE("explainer") {

TEST_CASE("S1 is an answer set of L1") {
  Explanation e = run("lucy1.lp", "s1.int");
  CHECK(e.verdict == Verdict::IsAnswerSet);
  CHECK(e.unsatisfied.empty());
  CHECK(e.unfounded_loops.empty());
  CHECK(verdict_name(e.verdict) == "is-answer-set");
}

TEST_CASE("E1: some_bid rule unsatisfied") {
  Explanation e = run("lucy2.lp", "e1.int");
  CHECK(e.verdict == Verdict::NotAnswerSet);
  REQUIRE(e.unsatisfied.size() == 1);
  CHECK(e.unsatisfied[0].rule_index == 4);
  CHECK(e.unsatisfied[0].theta.str() == "{M->m2, P->p1, X->1}");
  CHECK(e.unsatisfied[0].instance.str() == "some_bid(m2,p1) :- bid(m2,p1,1).");
  CHECK(e.unfounded_loops.empty());
}

TEST_CASE("E2: bid(m2,p1,1) is unfounded") {
  Explanation e = run("lucy2.lp", "e2.int");
  CHECK(e.unsatisfied.empty());
  REQUIRE(e.unfounded_loops.size() == 1);
  const auto& f = e.unfounded_loops[0];
  CHECK(f.loop.literals == lits({"bid(m2,p1,1)"}));
  REQUIRE(f.diagnostics.size() == 1);
  REQUIRE(f.diagnostics[0].blocked.size() == 1);
  const auto& b = f.diagnostics[0].blocked[0];
  CHECK(b.rule_index == 5);
  CHECK(b.violated == std::vector{SupportCondition::BodyTrue});
}

TEST_CASE("E3: the coverage constraint for (p1,m2)") {
  Explanation e = run("linus1.lp", "e3.int");
  REQUIRE(e.unsatisfied.size() == 1);
  CHECK(e.unsatisfied[0].rule_index == 9);
  CHECK(e.unsatisfied[0].theta.str() == "{M->m2, P->p1}");
  CHECK(e.unfounded_loops.empty());
}

TEST_CASE("corrected Linus program has answer sets and E3 is not one") {
  Program p = testing::program("linus2.lp");
  auto sets = enumerate_answer_sets(p);
  CHECK_FALSE(sets.empty());
  for (const auto& a : sets) CHECK(explain(p, a).verdict == Verdict::IsAnswerSet);
}

TEST_CASE("E4: both findings") {
  Explanation e = run("patty1.lp", "e4.int");
  REQUIRE(e.unsatisfied.size() == 1);
  CHECK(e.unsatisfied[0].rule_index == 8);
  CHECK(e.unsatisfied[0].theta.str() == "{M->m1, P->p1}");
  REQUIRE(e.unfounded_loops.size() == 1);
  CHECK(e.unfounded_loops[0].loop.literals ==
        lits({"conflict_of_interest(m1,p1)", "bid(m1,p1,0)"}));
  // Each loop literal lists every rule with it in the head.
  for (const auto& d : e.unfounded_loops[0].diagnostics) {
    CHECK_FALSE(d.blocked.empty());
    for (const auto& b : d.blocked) {
      CHECK(std::find(b.instance.head.begin(), b.instance.head.end(), d.literal) !=
            b.instance.head.end());
      CHECK_FALSE(b.violated.empty());
    }
  }
}

TEST_CASE("first stops after one finding of each kind") {
  Program p = parse_program("a :- b.\nc :- b.\nb.");
  Interpretation i = parse_interpretation("{b}");
  ExplainOptions o;
  CHECK(explain(p, i).unsatisfied.size() == 2);
  o.first = true;
  CHECK(explain(p, i, o).unsatisfied.size() == 1);
}

TEST_CASE("an unfounded loop need not have unfounded subloops") {
  // {a,c} is supported by c :- b and {b,c} by c :- a.
  Program p = parse_program("a :- c.\nc :- a.\nb :- c.\nc :- b.");
  Interpretation i = parse_interpretation("{a, b, c}");
  auto all = find_unfounded_loops(p, i, false);
  REQUIRE(all.size() == 1);
  CHECK(all[0].loop.literals == lits({"a", "b", "c"}));
  CHECK(find_unfounded_loops(p, i, true).size() == 1);
}

TEST_CASE("minimal loops form an antichain") {
  // Each singleton fails (iii) through the other disjunct.
  Program p = parse_program("a | b :- a.\na | b :- b.");
  Interpretation i = parse_interpretation("{a, b}");
  auto all = find_unfounded_loops(p, i, false);
  auto minimal = find_unfounded_loops(p, i, true);
  CHECK(all.size() == 3);
  REQUIRE(minimal.size() == 2);
  for (const auto& x : minimal) {
    for (const auto& y : minimal) {
      if (&x == &y) continue;
      CHECK_FALSE(std::includes(y.loop.literals.begin(), y.loop.literals.end(),
                                x.loop.literals.begin(), x.loop.literals.end()));
    }
  }
  // Every reported loop contains a minimal one.
  for (const auto& x : all) {
    CHECK(std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
      return std::includes(x.loop.literals.begin(), x.loop.literals.end(),
                           m.loop.literals.begin(), m.loop.literals.end());
    }));
  }
}

TEST_CASE("verdict agrees with the reduct definition") {
  testing::Generator gen(5);
  std::size_t pairs = 0;
  for (int k = 0; k < 200; ++k) {
    Program p = parse_program(gen.program_text());
    GroundProgram g = ground(p);
    for (const auto& i : gen.interpretations(p, 4)) {
      Explanation e = explain(p, i);
      CHECK((e.verdict == Verdict::IsAnswerSet) == is_answer_set(p, i));
      CHECK((e.verdict == Verdict::IsAnswerSet) ==
            (e.unsatisfied.empty() && e.unfounded_loops.empty()));
      for (const auto& u : e.unsatisfied) {
        CHECK_FALSE(satisfies_rule(i, u.instance));
        CHECK(*instantiate(p, u.rule_index, u.theta) == u.instance);
      }
      for (const auto& f : e.unfounded_loops) {
        CHECK(is_loop(f.loop.literals, dep_graph(g, i)));
        CHECK(unfounded(f.loop.literals, g, i));
      }
      ++pairs;
    }
  }
  CHECK(pairs >= 800);
}

}  // TEST_SUITE
