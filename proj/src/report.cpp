#include "lff/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <thread>

#include "lff/logic.hpp"

namespace lff {
namespace {

double seconds(std::chrono::nanoseconds d) { return std::chrono::duration<double>(d).count(); }

const char* kind_name(std::size_t k) {
  static const char* names[] = {"specialisation", "generalisation", "redundancy"};
  return names[k];
}

}  // namespace

nlohmann::json stats_json(const RunStats& s, const std::optional<Program>& solution) {
  nlohmann::json j;
  j["schema"] = 1;
  j["solved"] = solution.has_value();
  j["programs_generated"] = s.programs_generated;
  j["candidates_pruned"] = s.candidates_pruned;
  nlohmann::json cons;
  for (std::size_t k = 0; k < 3; ++k) cons[kind_name(k)] = s.constraints_by_kind[k];
  j["constraints_by_kind"] = cons;
  j["musps_found"] = s.musps_found;
  j["total_time"] = seconds(s.total_time);
  j["musp_time"] = seconds(s.musp_time);
  j["generate_time"] = seconds(s.generate_time);
  j["test_time"] = seconds(s.test_time);
  j["solution_size"] = s.solution_size ? nlohmann::json(*s.solution_size) : nlohmann::json(nullptr);
  j["solution_rules"] = s.solution_rules ? nlohmann::json(*s.solution_rules) : nlohmann::json(nullptr);
  j["max_size_searched"] = s.last_size;
  j["timed_out"] = s.timed_out;
  if (solution) j["solution"] = solution->to_string();
  return j;
}

std::string stats_lines(const RunStats& s) {
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) { out += k + ": " + v + "\n"; };
  line("programs_generated", std::to_string(s.programs_generated));
  line("candidates_pruned", std::to_string(s.candidates_pruned));
  for (std::size_t k = 0; k < 3; ++k) {
    line(std::string("constraints.") + kind_name(k), std::to_string(s.constraints_by_kind[k]));
  }
  line("musps_found", std::to_string(s.musps_found));
  char buf[64];
  auto secs = [&](std::chrono::nanoseconds d) {
    std::snprintf(buf, sizeof buf, "%.6f", seconds(d));
    return std::string(buf);
  };
  line("total_time", secs(s.total_time));
  line("musp_time", secs(s.musp_time));
  line("generate_time", secs(s.generate_time));
  line("test_time", secs(s.test_time));
  line("solution_size", s.solution_size ? std::to_string(*s.solution_size) : "none");
  return out;
}

const BenchmarkRow* BenchmarkReport::find(const std::string& task, const std::string& config) const {
  for (const auto& r : rows) {
    if (r.task == task && r.config == config) return &r;
  }
  return nullptr;
}

nlohmann::json BenchmarkReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = stats_json(r.stats, std::nullopt);
    row["task"] = r.task;
    row["config"] = r.config;
    row["solved"] = r.solved;
    row["accuracy"] = r.accuracy ? nlohmann::json(*r.accuracy) : nlohmann::json(nullptr);
    if (!r.solution.empty()) row["solution"] = r.solution;
    if (!r.error.empty()) row["error"] = r.error;
    j["rows"].push_back(std::move(row));
  }
  return j;
}

std::string BenchmarkReport::table() const {
  std::vector<std::string> tasks;
  for (const auto& r : rows) {
    if (std::find(tasks.begin(), tasks.end(), r.task) == tasks.end()) tasks.push_back(r.task);
  }
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-14s %10s %10s %8s %9s %9s %9s %5s\n", "task", "progs_off",
                "progs_on", "change", "time_off", "time_on", "musp_t", "size");
  out += buf;
  for (const auto& t : tasks) {
    const auto* off = find(t, "musp_off");
    const auto* on = find(t, "musp_on");
    if (!off || !on) continue;
    const double a = static_cast<double>(off->stats.programs_generated);
    const double b = static_cast<double>(on->stats.programs_generated);
    const double change = a > 0 ? 100.0 * (b - a) / a : 0.0;
    std::string size = on->stats.solution_size ? std::to_string(*on->stats.solution_size) : "-";
    std::snprintf(buf, sizeof buf, "%-14s %10.0f %10.0f %+7.0f%% %9.2f %9.2f %9.2f %5s\n", t.c_str(),
                  a, b, change, seconds(off->stats.total_time), seconds(on->stats.total_time),
                  seconds(on->stats.musp_time), size.c_str());
    out += buf;
  }
  return out;
}

double accuracy(const KnowledgeBase& bk, const Program& h, const ExampleSet& examples,
                const EvalConfig& cfg) {
  SldEngine engine = make_engine(bk, h);
  std::size_t right = 0;
  for (const auto& e : examples.pos) right += engine.prove(e, cfg.limits()) == Proof::Proved;
  for (const auto& e : examples.neg) right += engine.prove(e, cfg.limits()) != Proof::Proved;
  const auto total = examples.pos.size() + examples.neg.size();
  return total == 0 ? 1.0 : static_cast<double>(right) / static_cast<double>(total);
}

BenchmarkReport run_benchmark(const std::vector<std::filesystem::path>& tasks,
                              const BenchmarkConfig& cfg) {
  struct Job {
    std::filesystem::path dir;
    bool musp;
  };
  std::vector<Job> jobs;
  for (const auto& t : tasks) {
    jobs.push_back({t, true});
    jobs.push_back({t, false});
  }
  std::vector<BenchmarkRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      BenchmarkRow& row = rows[i];
      row.task = jobs[i].dir.filename().string();
      row.config = jobs[i].musp ? "musp_on" : "musp_off";
      try {
        Task task = load_task(jobs[i].dir);
        LearnerConfig lc = cfg.learner;
        lc.musp_enabled = jobs[i].musp;
        auto result = learn(task.bk, task.examples, task.bias, lc);
        row.stats = result.stats;
        row.solved = result.solution.has_value();
        if (result.solution) {
          row.solution = result.solution->to_string();
          if (task.held_out) {
            KnowledgeBase kb = task.bk;
            kb.set_modes(task.bias.directions);
            row.accuracy = accuracy(kb, *result.solution, *task.held_out, lc.eval);
          }
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(cfg.jobs, jobs.size()));
  std::vector<std::thread> threads;
  for (std::size_t i = 1; i < n; ++i) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return BenchmarkReport{std::move(rows)};
}

std::vector<std::filesystem::path> corpus_tasks(const std::filesystem::path& root) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(root)) {
    if (e.is_directory() && std::filesystem::exists(e.path() / "bias.pl")) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lff
