#include <doctest.h>

#include <algorithm>
#include <set>

#include "aspdbg/reifier.hpp"
#include "support.hpp"

using namespace aspdbg;

namespace {

std::size_t count(const FactSet& facts, const std::string& pred) {
  return static_cast<std::size_t>(std::count_if(
      facts.begin(), facts.end(), [&](const Fact& f) { return f.predicate == pred; }));
}

bool has(const FactSet& facts, const std::string& text) {
  return std::any_of(facts.begin(), facts.end(), [&](const Fact& f) { return f.str() == text; });
}

std::size_t tokens(const Literal& l) { return 1 + l.args().size(); }

std::size_t tokens(const Program& p) {
  std::size_t n = 0;
  for (const auto& r : p.rules()) {
    n += 1;
    for (const auto& h : r.head()) n += tokens(h);
    for (const auto& b : r.pos()) {
      n += std::holds_alternative<Literal>(b) ? tokens(std::get<Literal>(b)) : 3;
    }
    for (const auto& c : r.neg()) n += tokens(c);
  }
  return n;
}

std::size_t tokens(const Interpretation& i) {
  std::size_t n = 0;
  for (const auto& l : i.literals()) n += tokens(l);
  return n;
}

// Parse emitted facts back with the object-language parser.
FactSet reparse(const std::string& text) {
  FactSet out;
  Program p = parse_program(text);
  for (const auto& r : p.rules()) {
    REQUIRE(r.is_fact());
    const Literal& l = r.head()[0];
    Fact f{l.eps().name, {}};
    for (const auto& t : l.args()) f.args.push_back(t.constant());
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

constexpr std::size_t kSizeFactor = 4;

const std::pair<const char*, const char*> kFixtures[] = {
    {"lucy1.lp", "s1.int"}, {"lucy2.lp", "e1.int"}, {"lucy2.lp", "e2.int"},
    {"linus1.lp", "e3.int"}, {"patty1.lp", "e4.int"}};

std::string stem(const char* file) {
  std::string s(file);
  return s.substr(0, s.find('.'));
}

}  // namespace

TEST_SUITE("reifier") {

TEST_CASE("a fact reifies to four facts") {
  Program p = parse_program("pc(m1).");
  LabelTable labels(p, Interpretation{});
  FactSet f = reify_rule(p, 0, labels);
  REQUIRE(f.size() == 4);
  CHECK(to_text(f) == "head(r1,l1).\npred(l1,p_pc).\nrule(r1).\nstruct(l1,1,const,m1).\n");
}

TEST_CASE("constraints have no head facts") {
  Program q1 = testing::program("patty1.lp");
  LabelTable labels(q1, Interpretation{});
  for (std::size_t i = 0; i < q1.size(); ++i) {
    if (q1[i].is_constraint()) CHECK(count(reify_rule(q1, i, labels), "head") == 0);
  }
}

TEST_CASE("variables and negation") {
  Program p = parse_program("some_bid(M,P) :- bid(M,P,X).\nq :- not r.");
  LabelTable labels(p, Interpretation{});
  FactSet f = reify_rule(p, 0, labels);
  CHECK(has(f, "var(r1,v_M)."));
  CHECK(has(f, "var(r1,v_X)."));
  CHECK(has(f, "struct(l2,3,var,v_X)."));
  CHECK(has(reify_rule(p, 1, labels), "negbody(r2,l4)."));
}

TEST_CASE("program facts") {
  Program q1 = testing::program("patty1.lp");
  FactSet f = reify_program(q1, LabelTable(q1, Interpretation{}));
  CHECK(has(f, "arity(p_bid,3)."));
  CHECK(has(f, "dom(p1)."));
  CHECK(reify_program(Program{}, LabelTable(Program{}, Interpretation{})).empty());
  Program l2 = testing::program("lucy2.lp");
  FactSet g = reify_program(l2, LabelTable(l2, Interpretation{}));
  CHECK(has(g, "dom(1)."));
  CHECK(has(g, "dom(2)."));
}

TEST_CASE("strong negation gets an n_ label") {
  Program p1 = testing::program("linus1.lp");
  LabelTable labels(p1, Interpretation{});
  CHECK(labels.eps(Eps{"assigned", true, 2}) == "n_assigned");
  CHECK(labels.eps(Eps{"assigned", false, 2}) == "p_assigned");
}

TEST_CASE("arity clash gets a suffix") {
  Program p = parse_program("p(1).\np(1,2).");
  LabelTable labels(p, Interpretation{});
  CHECK(labels.eps(Eps{"p", false, 1}) == "p_p__1");
  CHECK(labels.eps(Eps{"p", false, 2}) == "p_p__2");
}

TEST_CASE("interpretation facts") {
  Interpretation i = parse_interpretation("{pc(m1)}");
  Program empty;
  FactSet f = reify_interpretation(i, LabelTable(empty, i));
  CHECK(to_text(f) == "int(l1).\npred(l1,p_pc).\nstruct(l1,1,const,m1).\n");
  CHECK(reify_interpretation(Interpretation{}, LabelTable(empty, Interpretation{})).empty());
  Program q1 = testing::program("patty1.lp");
  Interpretation e4 = testing::interpretation("e4.int");
  CHECK(count(reify_interpretation(e4, LabelTable(q1, e4)), "int") == 7);
}

TEST_CASE("literal labels are shared between P and I") {
  Program l1 = testing::program("lucy1.lp");
  Interpretation s1 = testing::interpretation("s1.int");
  LabelTable labels(l1, s1);
  FactSet f = reify_input(l1, s1);
  std::string l = labels.literal(parse_literal("pc(m1)"));
  CHECK(l == "l1");
  CHECK(has(f, "head(r1," + l + ")."));
  CHECK(has(f, "int(" + l + ")."));
}

TEST_CASE("natNumber range") {
  CHECK(to_text(reify_input(Program{}, Interpretation{})) == "natNumber(0).\n");
  Program l2 = testing::program("lucy2.lp");
  Interpretation e1 = testing::interpretation("e1.int");
  CHECK(nat_bound(l2, e1) == 6);
  CHECK(count(reify_input(l2, e1), "natNumber") == 7);
}

TEST_CASE("fixture facts match the golden files") {
  for (auto [prog, interp] : kFixtures) {
    std::string name = stem(prog) + "_" + stem(interp) + ".facts";
    CAPTURE(name);
    std::string text = to_text(reify_input(testing::program(prog), testing::interpretation(interp)));
    CHECK(text == testing::slurp(testing::golden_path(name)));
  }
}

TEST_CASE("emitted facts parse back to the same set") {
  for (auto [prog, interp] : kFixtures) {
    FactSet f = reify_input(testing::program(prog), testing::interpretation(interp));
    CHECK(reparse(to_text(f)) == f);
  }
  Program l3 = testing::program("lucy3.lp");
  FactSet f = reify_input(l3, testing::interpretation("s1.int"));
  CHECK(reparse(to_text(f)) == f);
}

TEST_CASE("facts are sorted and distinct") {
  testing::Generator gen(11, testing::RandomShape{.builtins = true});
  for (int k = 0; k < 100; ++k) {
    Program p = parse_program(gen.program_text());
    for (const auto& i : gen.interpretations(p, 1)) {
      FactSet f = reify_input(p, i);
      CHECK(std::adjacent_find(f.begin(), f.end(),
                               [](const Fact& a, const Fact& b) { return !(a < b); }) == f.end());
    }
  }
}

TEST_CASE("size is linear in the input") {
  auto check = [](const Program& p, const Interpretation& i) {
    std::size_t n = reify_input(p, i).size();
    std::size_t bound = kSizeFactor * (tokens(p) + tokens(i) + nat_bound(p, i) + 1);
    CAPTURE(p.str());
    CHECK(n <= bound);
  };
  for (auto [prog, interp] : kFixtures) check(testing::program(prog), testing::interpretation(interp));
  testing::Generator gen(13);
  int instances = 0;
  while (instances < 100) {
    Program p = parse_program(gen.program_text());
    for (const auto& i : gen.interpretations(p, 1)) {
      check(p, i);
      ++instances;
    }
  }
}

TEST_CASE("labels are injective and avoid constants") {
  testing::Generator gen(17, testing::RandomShape{.builtins = true});
  for (int k = 0; k < 100; ++k) {
    Program p = parse_program(gen.program_text());
    for (const auto& i : gen.interpretations(p, 1)) {
      LabelTable labels(p, i);
      std::set<std::string> seen;
      std::size_t objects = 0;
      for (std::size_t r = 0; r < p.size(); ++r, ++objects) seen.insert(labels.rule(r));
      std::set<std::string> printed;
      for (const auto& r : p.rules()) {
        for (const auto& h : r.head()) printed.insert(h.str());
        for (const auto& b : r.pos()) {
          if (std::holds_alternative<Literal>(b)) printed.insert(std::get<Literal>(b).str());
        }
        for (const auto& c : r.neg()) printed.insert(c.str());
      }
      for (const auto& l : i.literals()) printed.insert(l.str());
      for (const auto& s : printed) {
        seen.insert(labels.literal(s));
        ++objects;
      }
      for (const auto& e : p.predicates()) {
        seen.insert(labels.eps(e));
        ++objects;
      }
      CHECK(seen.size() == objects);
      for (const auto& c : p.constants()) CHECK(seen.count(c.str()) == 0);
      for (const auto& c : i.constants()) CHECK(seen.count(c.str()) == 0);
      for (const auto& [label, object] : labels.reverse()) CHECK_FALSE(label.empty());
    }
  }
}

TEST_CASE("a constant equal to a generated label is rejected") {
  Program p = parse_program("p(r1).");
  CHECK_THROWS_AS(LabelTable(p, Interpretation{}), Error);
  try {
    LabelTable t(p, Interpretation{});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LabelCollision);
  }
  CHECK_THROWS_AS(LabelTable(Program{}, parse_interpretation("{q(l1)}")), Error);
  CHECK_NOTHROW(LabelTable(parse_program("p(rx)."), Interpretation{}));
}

TEST_CASE("builtins") {
  Program l3 = testing::program("lucy3.lp");
  FactSet f = reify_input(l3, testing::interpretation("s1.int"));
  CHECK(has(f, "pred(" + LabelTable(l3, Interpretation{}).literal("bid(M,P,X)") + ",p_bid)."));
  CHECK(has(f, "arity(p_bid,3)."));
  CHECK_FALSE(has(f, "arity(b_neq,2)."));
  CHECK(count(f, "cmp") > 0);
  CHECK(std::all_of(f.begin(), f.end(), [](const Fact& x) {
    return x.predicate != "cmp" || x.args[0] == Constant::symbol("b_neq");
  }));

  Program arith = parse_program("p(Y) :- q(X), q(Y), Y = X+1.");
  FactSet g = reify_input(arith, parse_interpretation("{q(1), q(2)}"));
  CHECK(has(g, "arith(e1,plus)."));
  CHECK(has(g, "struct(e1,1,var,v_X)."));
  CHECK(has(g, "struct(e1,2,const,1)."));
  CHECK(has(g, "plus(1,1,2)."));

  Program nested = parse_program("p(X) :- q(X), X+1+2 < 5.");
  try {
    reify_input(nested, Interpretation{});
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
}

}  // TEST_SUITE
