#include <gtest/gtest.h>

#include <chrono>
#include <map>
#include <set>

#include "lff/generator.hpp"
#include "lff/logic.hpp"
#include "lff/musp.hpp"
#include "lff/parser.hpp"
#include "lff/taskio.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using lff::Clause;
using lff::ConstraintKind;
using lff::Literal;
using lff::Program;

namespace {

Program program(const char* text) { return Program(lff::parse_clauses(text)); }
Literal lit(const char* text) { return lff::parse_literal(text); }

const char* kBias = R"(
max_clause(2). max_vars(5). max_body(5).
head_pred(f,2). body_pred(head,2). body_pred(tail,2). body_pred(empty,1).
type(f,(list,element)). type(head,(list,element)). type(tail,(list,list)). type(empty,(list,)).
direction(f,(in,out)). direction(head,(in,out)). direction(tail,(in,out)). direction(empty,(in,)).
)";

struct Setup {
  lff::Bias bias = lff::parse_bias(kBias);
  lff::KnowledgeBase kb;
  std::vector<std::vector<Clause>> pools;  // by clause size
  std::vector<std::vector<Literal>> example_sets;

  Setup() {
    kb.set_modes(bias.directions);
    lff::Generator gen(bias);
    pools.resize(7);
    for (std::size_t s = 2; s <= 6; ++s) pools[s] = gen.pool(s);
    for (const char* set : {"f([],a)", "f([a],b)", "f([b,a],c)", "f([x],y)", "f([a,b,c],c) f([],a)",
                            "f([a,b],a) f([c],d)", "f([],0) f([i,j,c,a,i],5)"}) {
      std::vector<Literal> pos;
      std::string s(set);
      for (std::size_t at = 0; at < s.size();) {
        const auto end = s.find(' ', at);
        pos.push_back(lff::parse_literal(s.substr(at, end - at)));
        if (end == std::string::npos) break;
        at = end + 1;
      }
      example_sets.push_back(pos);
    }
  }

  // A random definite program of at most six literals.
  Program random_program(oracle::Random& rnd) const {
    if (rnd.coin(0.5)) return Program{rnd.pick(pools[3 + rnd.below(4)])};
    const std::size_t a = 2 + rnd.below(3);
    const std::size_t b = 2 + rnd.below(static_cast<int>(6 - a) - 1);
    return Program{rnd.pick(pools[a]), rnd.pick(pools[b])};
  }
};

const Setup& setup() {
  static const Setup s;
  return s;
}

std::vector<Program> smallest(std::vector<Program> ps) {
  if (ps.empty()) return ps;
  std::size_t best = lff::program_size(ps.front());
  for (const auto& p : ps) best = std::min(best, lff::program_size(p));
  std::erase_if(ps, [&](const Program& p) { return lff::program_size(p) != best; });
  return ps;
}

std::set<std::string> subprog_closure(const Program& h) {
  std::set<std::string> seen{oracle::text(h)};
  std::vector<Program> todo{h};
  while (!todo.empty()) {
    const Program p = todo.back();
    todo.pop_back();
    for (const auto& g : lff::subprogs(p)) {
      if (seen.insert(oracle::text(g)).second) todo.push_back(g);
    }
  }
  return seen;
}

lff::Task example_task() { return lff::load_task(std::string(LFF_DATA_DIR) + "/musp-example"); }

Program example_program() {
  return Program(lff::parse_clauses(lff::read_file(std::string(LFF_DATA_DIR) + "/musp-example/prog.pl")));
}

}  // namespace

TEST(Subprogs, ExampleTwoLatticeReachesGoalAndHeadedClauses) {
  const auto closure = subprog_closure(example_program());
  EXPECT_TRUE(closure.contains(oracle::text(program(":- empty(A), head(A,B)."))));
  EXPECT_TRUE(closure.contains(oracle::text(program("f(A,B):- empty(A), head(A,B)."))));
  EXPECT_TRUE(closure.contains(oracle::text(program(":- empty(A), head(A,B), tail(A,C)."))));
}

TEST(Subprogs, SingleLiteralGoalHasNone) {
  EXPECT_TRUE(lff::subprogs(program(":- head(A,B).")).empty());
}

TEST(Subprogs, DeletingHeadLeavesGoalClause) {
  const auto subs = lff::subprogs(program("f(A,B):- head(A,B)."));
  const auto t = oracle::texts(subs);
  EXPECT_TRUE(t.contains(oracle::text(program(":- head(A,B).")))) << t.size();
}

TEST(FindMusps, ExampleThree) {
  const auto task = example_task();
  lff::KnowledgeBase kb = task.bk;
  kb.set_modes(task.bias.directions);
  const auto start = std::chrono::steady_clock::now();
  const auto musps = lff::find_musps(example_program(), task.examples.pos, kb, {});
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
  const std::set<std::string> want{oracle::text(program(":- empty(A), head(A,B).")),
                                   oracle::text(program(":- empty(A), tail(A,C).")),
                                   oracle::text(program("f(A,B):- head(A,B)."))};
  EXPECT_EQ(oracle::texts(musps), want);
  const auto cons = lff::unsat_constraints(example_program(), task.examples.pos, kb, {});
  EXPECT_EQ(cons.size(), 6u);
}

TEST(FindMusps, AlreadyMinimal) {
  const auto& s = setup();
  const Program h = program(":- empty(A), head(A,B).");
  const auto musps = lff::find_musps(h, {lit("f([],a)")}, s.kb, {});
  ASSERT_EQ(musps.size(), 1u);
  EXPECT_EQ(oracle::text(musps[0]), oracle::text(h));
}

TEST(UnsatConstraints, ExampleFour) {
  const auto& s = setup();
  const Program h = program("f(A,B):- tail(A,C), tail(C,A), head(C,B).");
  const auto cons = lff::unsat_constraints(h, {lit("f([x],y)")}, s.kb, {});
  const auto m = oracle::text(program(":- tail(A,C), tail(C,A)."));
  bool spec = false, redund = false;
  for (const auto& c : cons) {
    if (oracle::text(c.payload) != m) continue;
    spec |= c.kind == ConstraintKind::Specialisation;
    redund |= c.kind == ConstraintKind::Redundancy;
  }
  EXPECT_TRUE(spec);
  EXPECT_TRUE(redund);
}

TEST(UnsatConstraints, ExampleFive) {
  const auto& s = setup();
  const Program h = program("f(A,B):- tail(A,C), tail(C,D), head(D,B).");
  const auto cons = lff::unsat_constraints(h, {lit("f([x],y)")}, s.kb, {});
  const auto m = oracle::text(program("f(A,B):- tail(A,C), tail(C,D)."));
  lff::ConstraintStore store;
  for (const auto& c : cons) {
    if (oracle::text(c.payload) == m && c.kind == ConstraintKind::Redundancy) store.add(c);
  }
  ASSERT_EQ(store.size(), 1u);
  EXPECT_TRUE(lff::violates(program("f(A,B):- head(A,B).\nf(A,B):- tail(A,C), tail(C,D), f(D,B)."), store));
}

TEST(FindMusps, SizeCapDisablesExtraction) {
  const auto task = example_task();
  lff::MuspOptions opts;
  opts.max_size = 4;
  EXPECT_TRUE(lff::find_musps(example_program(), task.examples.pos, task.bk, opts).empty());
}

// The closure of subprogs is the deletion lattice built by the oracle.
TEST(SubprogsProperty, ClosureMatchesLatticeOracle) {
  oracle::Random rnd(901);
  const auto& s = setup();
  for (int i = 0; i < 200; ++i) {
    const Program h = s.random_program(rnd);
    EXPECT_EQ(subprog_closure(h), oracle::texts(oracle::deletion_lattice(h))) << h.to_string();
  }
}

// Random unsatisfiable programs of at most six literals. The descent must
// return exactly the lattice members that are unsatisfiable with only
// satisfiable children, memoised or not, and find_musps the smallest of them.
TEST(FindMuspsProperty, MatchesLatticeOracle) {
  oracle::Random rnd(902);
  const auto& s = setup();
  lff::MuspOptions memo, naive;
  naive.memoize = false;
  int cases = 0, multi = 0;
  for (int i = 0; cases < 200 && i < 20000; ++i) {
    const Program h = s.random_program(rnd);
    const auto& pos = rnd.pick(s.example_sets);
    if (lff::is_satisfiable(h, pos, s.kb, {})) continue;
    ++cases;
    const auto expected = oracle::deletion_minimal(h, pos, s.kb, {});
    const auto got = lff::deletion_minimal_unsat(h, pos, s.kb, memo);
    EXPECT_EQ(oracle::texts(got), oracle::texts(expected)) << h.to_string();
    EXPECT_EQ(oracle::texts(lff::deletion_minimal_unsat(h, pos, s.kb, naive)), oracle::texts(got));
    const auto musps = lff::find_musps(h, pos, s.kb, memo);
    EXPECT_EQ(oracle::texts(musps), oracle::texts(smallest(expected))) << h.to_string();
    multi += musps.size() > 1;

    for (const auto& m : got) {
      EXPECT_FALSE(lff::is_satisfiable(m, pos, s.kb, {})) << m.to_string();
      for (const auto& g : lff::subprogs(m)) EXPECT_TRUE(lff::is_satisfiable(g, pos, s.kb, {})) << g.to_string();
      EXPECT_TRUE(oracle::theory_subsumes(m, h)) << m.to_string();
      EXPECT_LE(lff::program_size(m), lff::program_size(h));
      if (oracle::text(m) != oracle::text(h)) EXPECT_LT(lff::program_size(m), lff::program_size(h));
      for (const auto& c : m) {
        EXPECT_TRUE(std::any_of(h.begin(), h.end(), [&](const Clause& d) { return oracle::subsumes(c, d); }))
            << c.to_string();
      }
    }
  }
  EXPECT_EQ(cases, 200);
  EXPECT_GT(multi, 10);
}

// A shared cache gives the same answers as a fresh one and checks each
// canonical subprogram once.
TEST(SatCache, SharedCacheIsTransparent) {
  oracle::Random rnd(903);
  const auto& s = setup();
  const auto& pos = s.example_sets[4];
  lff::SatCache shared;
  for (int i = 0; i < 100; ++i) {
    const Program h = s.random_program(rnd);
    if (lff::is_satisfiable(h, pos, s.kb, {})) continue;
    EXPECT_EQ(oracle::texts(lff::find_musps(h, pos, s.kb, {}, &shared)),
              oracle::texts(lff::find_musps(h, pos, s.kb, {})));
  }
  const std::size_t checks = shared.checks();
  EXPECT_EQ(checks, shared.size());
}
