#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "lff/parser.hpp"
#include "lff/report.hpp"
#include "lff/taskio.hpp"
#include "random_instances.hpp"

using lff::Literal;

namespace {

const char* kZendo = R"(max_clause(6).
max_vars(6).
max_body(6).

head_pred(zendo,1).
body_pred(piece,2).
body_pred(contact,2).
body_pred(coord1,2).
body_pred(coord2,2).
body_pred(size,2).
body_pred(blue,1).
body_pred(green,1).
body_pred(red,1).
body_pred(small,1).
body_pred(medium,1).
body_pred(large,1).
body_pred(upright,1).
body_pred(lhs,1).
body_pred(rhs,1).
body_pred(strange,1).

type(zendo,(state,)).
type(piece,(state,piece)).
type(contact,(piece,piece)).
type(coord1,(piece,real)).
type(coord2,(piece,real)).
type(size,(piece,real)).
type(blue,(piece,)).
type(green,(piece,)).
type(red,(piece,)).
type(small,(real,)).
type(medium,(real,)).
type(large,(real,)).
type(upright,(piece,)).
type(lhs,(piece,)).
type(rhs,(piece,)).
type(strange,(piece,)).

direction(zendo,(in,)).
direction(piece,(in,out)).
direction(contact,(in,out)).
direction(coord1,(in,out)).
direction(coord2,(in,out)).
direction(size,(in,out)).
direction(blue,(in,)).
direction(green,(in,)).
direction(red,(in,)).
direction(small,(in,)).
direction(medium,(in,)).
direction(large,(in,)).
direction(upright,(in,)).
direction(lhs,(in,)).
direction(rhs,(in,)).
direction(strange,(in,)).
)";

const char* kSmallBias = R"(head_pred(f,2).
body_pred(head,2).
type(f,(list,element)).
type(head,(list,element)).
direction(f,(in,out)).
direction(head,(in,out)).
)";

std::vector<std::string> corpus() {
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(std::string(LFF_DATA_DIR) + "/tasks")) {
    names.push_back(e.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

template <typename F>
std::pair<std::size_t, std::size_t> error_position(F&& f) {
  try {
    f();
  } catch (const lff::ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST(ParseBias, ZendoBias) {
  const auto b = lff::parse_bias(kZendo);
  EXPECT_EQ(b.head_pred.name.name(), "zendo");
  EXPECT_EQ(b.head_pred.arity, 1u);
  EXPECT_EQ(b.body_preds.size(), 15u);
  EXPECT_EQ(b.max_vars, 6u);
  EXPECT_EQ(b.max_body, 6u);
  EXPECT_EQ(b.max_clauses, 6u);
  EXPECT_EQ(b.types.at({lff::Symbol("coord1"), 2})[1].name(), "real");
  EXPECT_EQ(b.directions.at({lff::Symbol("piece"), 2})[1], lff::Direction::Out);
  EXPECT_NO_THROW(b.validate());
}

TEST(ParseBias, DefaultsAndDuplicates) {
  const auto b = lff::parse_bias(kSmallBias);
  EXPECT_EQ(b.max_vars, 5u);
  EXPECT_EQ(b.max_body, 5u);
  EXPECT_EQ(b.max_clauses, 2u);
  EXPECT_THROW(lff::parse_bias(std::string(kSmallBias) + "body_pred(head,2).\n"), lff::ParseError);
  EXPECT_THROW(lff::parse_bias(std::string(kSmallBias) + "max_vars(3).\nmax_vars(4).\n"), lff::ParseError);
  EXPECT_THROW(lff::parse_bias("body_pred(head,2).\n"), lff::ParseError);
  EXPECT_THROW(lff::parse_bias(std::string(kSmallBias) + "direction(head,(in,sideways)).\n"), lff::ParseError);
}

TEST(ParseBias, PositionedSyntaxError) {
  const auto [line, column] = error_position([] { lff::parse_bias("head_pred(f,2).\nbody_pred(head 2).\n"); });
  EXPECT_EQ(line, 2u);
  EXPECT_GT(column, 1u);
}

TEST(ParseExamples, IntroductionExample) {
  const auto ex = lff::parse_examples("pos(f([i,j,c,a,i],i)).\nneg(f([i,j,c,a,i],j)).\n");
  ASSERT_EQ(ex.pos.size(), 1u);
  ASSERT_EQ(ex.neg.size(), 1u);
  EXPECT_EQ(ex.pos[0].to_string(), "f([i,j,c,a,i],i)");
  EXPECT_EQ(ex.pos[0], Literal("f", {lff::parse_term("[i,j,c,a,i]"), lff::Term::atom("i")}));
}

TEST(ParseExamples, EmptyFileIsAnError) {
  try {
    lff::parse_examples("");
    FAIL() << "expected an error";
  } catch (const lff::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("no positive examples"), std::string::npos);
  }
  EXPECT_THROW(lff::parse_examples("neg(f([a],b)).\n"), lff::ParseError);
  EXPECT_THROW(lff::parse_examples("pos(f([a],b).\n"), lff::ParseError);
  EXPECT_THROW(lff::parse_examples("maybe(f([a],b)).\n"), lff::ParseError);
}

TEST(ParseTask, CrossReferenceErrors) {
  const std::string bk = "";
  EXPECT_THROW(lff::parse_task(kSmallBias, bk, "pos(f([a])).\n"), std::invalid_argument);
  EXPECT_THROW(lff::parse_task(kSmallBias, bk, "pos(g([a],a)).\n"), std::invalid_argument);
  EXPECT_THROW(lff::parse_task(kSmallBias, bk, "pos(f([a],a)).\nneg(f([a],a)).\n"), std::invalid_argument);
  EXPECT_THROW(lff::parse_task(std::string(kSmallBias) + "body_pred(nope,1).\ntype(nope,(list,)).\ndirection(nope,(in,)).\n",
                               bk, "pos(f([a],a)).\n"),
               std::invalid_argument);
  EXPECT_NO_THROW(lff::parse_task(kSmallBias, bk, "pos(f([a],a)).\n"));
}

TEST(ParseBackground, ClausesAndFacts) {
  const auto cs = lff::parse_background("edge(a,b).\npath(X,Y):- edge(X,Y).\npath(X,Y):- edge(X,Z), path(Z,Y).\n");
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_TRUE(cs[0].body.empty());
  EXPECT_EQ(cs[2].body.size(), 2u);
  const auto [line, column] = error_position([] { lff::parse_background("edge(a,b).\n\npath(X,Y) :- .\n"); });
  EXPECT_EQ(line, 3u);
  EXPECT_GT(column, 1u);
}

// Printing then parsing gives back the same bundle for every corpus task.
TEST(RoundTrip, CorpusTasks) {
  const auto names = corpus();
  ASSERT_EQ(names.size(), 10u);
  for (const auto& name : names) {
    const auto dir = std::string(LFF_DATA_DIR) + "/tasks/" + name;
    const auto t = lff::load_task(dir);
    const auto bias_text = lff::print_bias(t.bias);
    const auto exs_text = lff::print_examples(t.examples);
    const auto bk_text = lff::print_background(lff::parse_background(lff::read_file(dir + "/bk.pl")));
    const auto again = lff::parse_task(bias_text, bk_text, exs_text, name);
    EXPECT_EQ(lff::print_bias(again.bias), bias_text) << name;
    EXPECT_EQ(lff::print_examples(again.examples), exs_text) << name;
    EXPECT_EQ(again.examples.pos, t.examples.pos) << name;
    EXPECT_EQ(again.examples.neg, t.examples.neg) << name;
    EXPECT_EQ(again.bias.body_preds, t.bias.body_preds) << name;
    EXPECT_EQ(again.bias.head_pred, t.bias.head_pred) << name;
    EXPECT_EQ(again.bias.types, t.bias.types) << name;
    EXPECT_EQ(again.bias.directions, t.bias.directions) << name;
    EXPECT_EQ(lff::print_background(lff::parse_background(bk_text)), bk_text) << name;
  }
}

TEST(RoundTrip, RandomExamples) {
  oracle::Random rnd(1101);
  const std::vector<std::string> vars;
  for (int i = 0; i < 200; ++i) {
    lff::ExampleSet ex;
    for (int k = 0; k < 1 + rnd.below(4); ++k) ex.pos.emplace_back("p", std::vector<lff::Term>{rnd.term(vars, 3), rnd.term(vars, 2)});
    for (int k = 0; k < rnd.below(4); ++k) ex.neg.emplace_back("q", std::vector<lff::Term>{rnd.term(vars, 3)});
    const auto text = lff::print_examples(ex);
    const auto back = lff::parse_examples(text);
    EXPECT_EQ(back.pos, ex.pos) << text;
    EXPECT_EQ(back.neg, ex.neg) << text;
  }
}

TEST(Corpus, LimitsAndRelations) {
  const std::set<std::string> allowed{"head", "tail", "decrement", "increment", "geq", "empty", "zero",
                                      "one", "even", "odd", "element", "cons", "append", "sum"};
  for (const auto& name : corpus()) {
    const auto t = lff::load_task(std::string(LFF_DATA_DIR) + "/tasks/" + name);
    EXPECT_EQ(t.bias.max_vars, 5u) << name;
    EXPECT_EQ(t.bias.max_body, 5u) << name;
    EXPECT_EQ(t.bias.max_clauses, name == "contains" ? 3u : 2u) << name;
    EXPECT_GE(t.examples.pos.size(), 5u) << name;
    EXPECT_TRUE(t.held_out.has_value()) << name;
    for (const auto& p : t.bias.body_preds) {
      const std::string n(p.name.name());
      // Task-specific guards and output-mode copies of bundled relations.
      const bool extra = n.starts_with("c_") || n.ends_with("_out");
      EXPECT_TRUE(allowed.contains(n) || extra) << name << ": " << n;
    }
  }
}
