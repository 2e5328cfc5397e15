#include <gtest/gtest.h>

#include <chrono>

#include "lff/evaluate.hpp"
#include "lff/generator.hpp"
#include "lff/parser.hpp"
#include "lff/taskio.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using lff::Clause;
using lff::Completeness;
using lff::Consistency;
using lff::Literal;
using lff::Program;
using lff::Term;

namespace {

Program program(const char* text) { return Program(lff::parse_clauses(text)); }
Literal lit(const char* text) { return lff::parse_literal(text); }

std::vector<Literal> intro_pos() { return {lit("f([],0)"), lit("f([i,j,c,a,i],5)")}; }

lff::EvalConfig cfg() { return {}; }

Term node(int i) { return Term::atom("c" + std::to_string(i)); }

}  // namespace

TEST(Classify, CompletenessAndConsistency) {
  EXPECT_EQ(lff::classify({true, true}, {false}).completeness, Completeness::Complete);
  EXPECT_EQ(lff::classify({true, false}, {false}).completeness, Completeness::PartiallyComplete);
  EXPECT_EQ(lff::classify({false, false}, {true}).completeness, Completeness::TotallyIncomplete);
  EXPECT_EQ(lff::classify({false}, {false, true}).consistency, Consistency::Inconsistent);
  EXPECT_TRUE(lff::classify({true}, {false}).is_solution());
  EXPECT_FALSE(lff::classify({true}, {true}).is_solution());
}

TEST(Entails, ListBuiltinsAndIntegers) {
  const lff::KnowledgeBase kb;
  const Program h = program("g(A,B):- tail(A,C), head(C,B).");
  EXPECT_TRUE(lff::entails(kb, h, lit("g([a,b,c],b)"), cfg()));
  EXPECT_FALSE(lff::entails(kb, h, lit("g([a],a)"), cfg()));
  const Program n = program("n(A,B):- decrement(A,C), decrement(C,B).");
  EXPECT_TRUE(lff::entails(kb, n, lit("n(5,3)"), cfg()));
  EXPECT_FALSE(lff::entails(kb, n, lit("n(5,4)"), cfg()));
  const Program s = program("s(A,B,C):- sum(A,B,C).");
  EXPECT_TRUE(lff::entails(kb, s, lit("s(2,3,5)"), cfg()));
  EXPECT_TRUE(lff::entails(kb, program("z(A):- zero(A)."), lit("z(0)"), cfg()));
  EXPECT_TRUE(lff::entails(kb, program("e(A):- even(A)."), lit("e(4)"), cfg()));
  EXPECT_FALSE(lff::entails(kb, program("e(A):- odd(A)."), lit("e(4)"), cfg()));
  EXPECT_TRUE(lff::entails(kb, program("q(A,B):- geq(A,B)."), lit("q(4,4)"), cfg()));
}

TEST(Entails, NonTerminatingProgramFailsWithinBudget) {
  const lff::KnowledgeBase kb;
  const Program loop = program("f(A,B):- f(A,C), head(C,B).");
  const auto start = std::chrono::steady_clock::now();
  EXPECT_FALSE(lff::entails(kb, loop, lit("f([a],a)"), cfg()));
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::milliseconds(500));
}

TEST(Test, LastSolutionOnTask) {
  const auto task = lff::load_task(std::string(LFF_DATA_DIR) + "/tasks/last");
  lff::KnowledgeBase kb = task.bk;
  kb.set_modes(task.bias.directions);
  const Program last = program(
      "last(A,B):- head(A,B), tail(A,C), empty(C).\n"
      "last(A,B):- tail(A,C), last(C,B).");
  EXPECT_TRUE(lff::test(task.examples.pos, task.examples.neg, kb, last, cfg()).is_solution());
  // The base case alone covers only the one-element lists.
  const Program partial = program("last(A,B):- head(A,B), tail(A,C), empty(C).");
  const auto out = lff::test(task.examples.pos, task.examples.neg, kb, partial, cfg());
  EXPECT_EQ(out.completeness, Completeness::PartiallyComplete);
  EXPECT_EQ(out.consistency, Consistency::Consistent);
  const Program none = program("last(A,B):- empty(A), head(A,B).");
  EXPECT_EQ(lff::test(task.examples.pos, task.examples.neg, kb, none, cfg()).completeness,
            Completeness::TotallyIncomplete);
}

TEST(Test, IntroductionHypothesis) {
  const lff::KnowledgeBase kb;
  const std::vector<Literal> neg{lit("f([a,b],a)")};
  const auto out = lff::test(intro_pos(), neg, kb, program("f(A,B):- head(A,B)."), cfg());
  EXPECT_EQ(out.completeness, Completeness::TotallyIncomplete);
  EXPECT_EQ(out.consistency, Consistency::Inconsistent);
}

TEST(IsSatisfiable, GoalClauses) {
  const lff::KnowledgeBase kb;
  EXPECT_FALSE(lff::is_satisfiable(program(":- tail(A,C), tail(C,A)."), intro_pos(), kb, cfg()));
  EXPECT_FALSE(lff::is_satisfiable(program(":- head(A,B), empty(A)."), intro_pos(), kb, cfg()));
  EXPECT_FALSE(lff::is_satisfiable(program(":- tail(A,B), empty(A)."), intro_pos(), kb, cfg()));
  EXPECT_TRUE(lff::is_satisfiable(program(":- tail(A,C), head(C,B)."), intro_pos(), kb, cfg()));
}

TEST(IsSatisfiable, HeadedClausesNeedAPositive) {
  const lff::KnowledgeBase kb;
  EXPECT_FALSE(lff::is_satisfiable(program("f(A,B):- head(A,B)."), intro_pos(), kb, cfg()));
  EXPECT_TRUE(lff::is_satisfiable(program("f(A,B):- empty(A), zero(B)."), intro_pos(), kb, cfg()));
}

// Random function-free programs over a DAG. Every recursive call moves the
// first argument along an edge, so SLD terminates and must agree with the
// least model.
TEST(EvaluateProperty, AgreesWithFixpointOracle) {
  oracle::Random rnd(505);
  const std::vector<std::vector<std::string>> bodies{
      {"e(A,B)"}, {"e(A,C)", "e(C,B)"}, {"e(A,B)", "g(B)"}, {"g(A)", "e(A,B)"},
      {"e(A,C)", "e(B,C)"}, {"e(A,B)", "g(A)"}};
  const std::vector<std::vector<std::string>> recursive{
      {"e(A,C)", "f(C,B)"}, {"e(A,C)", "f(C,D)", "e(D,B)"}, {"e(A,C)", "f(C,B)", "g(C)"},
      {"e(A,C)", "f(C,D)", "f(D,B)"}};
  int proved = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<Clause> bk_clauses;
    const int nodes = 4 + rnd.below(3);
    for (int a = 0; a < nodes; ++a) {
      for (int b = a + 1; b < nodes; ++b) {
        if (rnd.coin(0.35)) bk_clauses.emplace_back(Literal("e", {node(a), node(b)}), std::vector<Literal>{});
      }
      if (rnd.coin(0.4)) bk_clauses.emplace_back(Literal("g", {node(a)}), std::vector<Literal>{});
    }
    std::vector<Clause> h;
    auto rule = [&](const std::vector<std::string>& body) {
      std::string text = "f(A,B):- ";
      for (std::size_t k = 0; k < body.size(); ++k) text += (k ? ", " : "") + body[k];
      return lff::parse_clause(text + ".");
    };
    h.push_back(rule(rnd.pick(bodies)));
    if (rnd.coin(0.7)) h.push_back(rule(rnd.pick(recursive)));
    if (rnd.coin(0.3)) h.push_back(rule(rnd.pick(bodies)));

    const Literal goal("f", {node(rnd.below(nodes)), node(rnd.below(nodes))});
    std::vector<Clause> all = bk_clauses;
    all.insert(all.end(), h.begin(), h.end());
    std::vector<Term> constants;
    for (int a = 0; a < nodes; ++a) constants.push_back(node(a));
    const bool expected = oracle::least_model(all, constants).contains(goal.to_string());
    proved += expected;

    const lff::KnowledgeBase kb(bk_clauses, false);
    EXPECT_EQ(lff::entails(kb, Program(h), goal, cfg()), expected)
        << Program(h).to_string() << goal.to_string();
  }
  EXPECT_GT(proved, 20);
  EXPECT_LT(proved, 180);
}

// Adding a clause never loses an entailed example.
TEST(EvaluateProperty, EntailmentIsMonotoneInClauses) {
  const auto task = lff::load_task(std::string(LFF_DATA_DIR) + "/tasks/last");
  lff::KnowledgeBase kb = task.bk;
  kb.set_modes(task.bias.directions);
  lff::Generator gen(task.bias);
  const auto& small = gen.pool(3);
  const auto& big = gen.pool(4);
  oracle::Random rnd(506);
  std::vector<Literal> examples = task.examples.pos;
  examples.insert(examples.end(), task.examples.neg.begin(), task.examples.neg.end());
  for (int i = 0; i < 200; ++i) {
    const Clause c1 = rnd.pick(big);
    const Clause c2 = rnd.coin() ? rnd.pick(small) : rnd.pick(big);
    const Program one{c1};
    const Program two{c1, c2};
    for (const auto& e : examples) {
      if (lff::entails(kb, one, e, cfg())) {
        EXPECT_TRUE(lff::entails(kb, two, e, cfg())) << two.to_string() << e.to_string();
      }
    }
  }
}

TEST(OrderBody, InputsBoundFirst) {
  lff::ModeTable modes;
  modes[{lff::Symbol("f"), 2}] = {lff::Direction::In, lff::Direction::Out};
  modes[{lff::Symbol("head"), 2}] = {lff::Direction::In, lff::Direction::Out};
  modes[{lff::Symbol("tail"), 2}] = {lff::Direction::In, lff::Direction::Out};
  const Clause c = lff::parse_clause("f(A,B):- head(C,B), tail(A,C).");
  EXPECT_EQ(lff::order_body(c, modes).to_string(), "f(A,B):- tail(A,C), head(C,B).");
}
