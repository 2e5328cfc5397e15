#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "lff/learner.hpp"
#include "lff/taskio.hpp"

namespace lff {

/// Structured stats document (schema 1) for one learning run.
nlohmann::json stats_json(const RunStats& stats, const std::optional<Program>& solution);

/// `key: value` lines for the same fields.
std::string stats_lines(const RunStats& stats);

struct BenchmarkConfig {
  LearnerConfig learner;
  std::size_t jobs = 1;
};

struct BenchmarkRow {
  std::string task;
  std::string config;  // "musp_on" or "musp_off"
  bool solved = false;
  std::optional<double> accuracy;  // on held-out examples, when present
  std::string solution;
  std::string error;
  RunStats stats;
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;

  const BenchmarkRow* find(const std::string& task, const std::string& config) const;
  nlohmann::json to_json() const;
  /// Programs generated and times per task with the relative change.
  std::string table() const;
};

/// Accuracy of `h` on held-out examples.
double accuracy(const KnowledgeBase& bk, const Program& h, const ExampleSet& examples,
                const EvalConfig& cfg);

/// Runs each task directory with MUSP extraction on and off. Per-task
/// failures are recorded in the rows.
BenchmarkReport run_benchmark(const std::vector<std::filesystem::path>& tasks,
                              const BenchmarkConfig& cfg);

/// Task directories under `root`, sorted by name.
std::vector<std::filesystem::path> corpus_tasks(const std::filesystem::path& root);

}  // namespace lff
