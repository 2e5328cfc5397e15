#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lff/bias.hpp"
#include "lff/evaluate.hpp"
#include "lff/knowledge_base.hpp"
#include "lff/parser.hpp"

namespace lff {

/// Bias directives, one per clause:
///   max_clause(N). max_vars(N). max_body(N).
///   head_pred(p,A). body_pred(p,A).
///   type(p,(t1,...)). direction(p,(in|out,...)).
/// Unset limits keep the Bias defaults.
Bias parse_bias(std::string_view text);

/// `pos(Atom).` and `neg(Atom).` facts. Requires at least one positive.
ExampleSet parse_examples(std::string_view text);

/// Background knowledge: definite clauses and facts.
std::vector<Clause> parse_background(std::string_view text);

struct Task {
  std::string name;
  Bias bias;
  KnowledgeBase bk;
  ExampleSet examples;
  std::optional<ExampleSet> held_out;
};

/// Parses and cross-checks the three files. Throws ParseError on syntax
/// errors and std::invalid_argument on inconsistent content.
Task parse_task(std::string_view bias_text, std::string_view bk_text, std::string_view exs_text,
                std::string name = "");

/// Reads bias.pl, bk.pl, exs.pl and, if present, test.pl from `dir`.
Task load_task(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& path);

/// Canonical text forms; parsing them yields the same values.
std::string print_bias(const Bias& bias);
std::string print_examples(const ExampleSet& examples);
std::string print_background(const std::vector<Clause>& clauses);

}  // namespace lff
