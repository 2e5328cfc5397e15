// Command-line front end: learn a program, list MUSPs, or run the corpus.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lff/learner.hpp"
#include "lff/logic.hpp"
#include "lff/musp.hpp"
#include "lff/report.hpp"
#include "lff/taskio.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kNoSolution = 3;

lff::Task load(const std::string& bias, const std::string& bk, const std::string& exs) {
  return lff::parse_task(lff::read_file(bias), lff::read_file(bk), lff::read_file(exs), "");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learn minimal logic programs from examples"};
  app.require_subcommand(1);

  std::string bias_file, bk_file, exs_file, prog_file, stats_file, out_file;
  std::string corpus = LFF_CORPUS_DIR;
  std::size_t max_size = 0, eval_steps = 20000, jobs = 1;
  double eval_timeout_ms = 10, timeout_s = 600;
  bool no_musp = false;
  std::vector<std::string> tasks;

  auto add_eval = [&](CLI::App* cmd) {
    cmd->add_option("--eval-timeout-ms", eval_timeout_ms, "Per-example time limit");
    cmd->add_option("--eval-steps", eval_steps, "Per-example resolution step limit");
  };

  auto* learn = app.add_subcommand("learn", "Search for an optimal program");
  learn->add_option("--bias", bias_file)->required();
  learn->add_option("--bk", bk_file)->required();
  learn->add_option("--exs", exs_file)->required();
  learn->add_option("--max-size", max_size, "Largest program size to try");
  learn->add_flag("--no-musp", no_musp, "Disable MUSP constraints");
  learn->add_option("--timeout-s", timeout_s, "Overall time limit");
  learn->add_option("--stats", stats_file, "Write run statistics as JSON");
  add_eval(learn);

  auto* musps = app.add_subcommand("musps", "List the MUSPs of a program");
  musps->add_option("--prog", prog_file)->required();
  musps->add_option("--bias", bias_file)->required();
  musps->add_option("--bk", bk_file)->required();
  musps->add_option("--exs", exs_file)->required();
  add_eval(musps);

  auto* bench = app.add_subcommand("bench", "Run the task corpus with MUSPs on and off");
  bench->add_option("--tasks", tasks, "Task names (default: all)");
  bench->add_option("--corpus", corpus, "Directory of task directories");
  bench->add_option("--out", out_file, "Write the JSON report here");
  bench->add_option("--jobs", jobs, "Parallel workers");
  bench->add_option("--timeout-s", timeout_s, "Time limit per run");
  add_eval(bench);

  CLI11_PARSE(app, argc, argv);

  lff::EvalConfig eval;
  eval.timeout = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::duration<double, std::milli>(eval_timeout_ms));
  eval.max_steps = eval_steps;

  lff::LearnerConfig cfg;
  cfg.eval = eval;
  cfg.max_size = max_size;
  cfg.musp_enabled = !no_musp;
  cfg.timeout = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::duration<double>(timeout_s));

  try {
    if (*learn) {
      lff::Task task = load(bias_file, bk_file, exs_file);
      auto result = lff::learn(task.bk, task.examples, task.bias, cfg);
      std::cerr << lff::stats_lines(result.stats);
      if (!stats_file.empty()) {
        write_text(stats_file, lff::stats_json(result.stats, result.solution).dump(2) + "\n");
      }
      if (!result.solution) {
        std::cerr << "no solution found\n";
        return kNoSolution;
      }
      std::cout << result.solution->to_string();
      return kOk;
    }
    if (*musps) {
      lff::Task task = load(bias_file, bk_file, exs_file);
      lff::Program h(lff::parse_clauses(lff::read_file(prog_file)));
      lff::KnowledgeBase kb = task.bk;
      kb.set_modes(task.bias.directions);
      lff::MuspOptions opts;
      opts.eval = eval;
      opts.max_size = std::max<std::size_t>(opts.max_size, lff::program_size(h));
      if (lff::is_satisfiable(h, task.examples.pos, kb, eval)) {
        std::cerr << "program is satisfiable; it has no MUSPs\n";
        return kOk;
      }
      for (const auto& m : lff::find_musps(h, task.examples.pos, kb, opts)) {
        std::cout << m.to_string() << "\n";
      }
      return kOk;
    }
    if (*bench) {
      std::vector<std::filesystem::path> dirs;
      if (tasks.empty()) {
        dirs = lff::corpus_tasks(corpus);
      } else {
        for (const auto& t : tasks) dirs.push_back(std::filesystem::path(corpus) / t);
      }
      lff::BenchmarkConfig bc{cfg, jobs};
      auto report = lff::run_benchmark(dirs, bc);
      std::cout << report.table();
      for (const auto& r : report.rows) {
        if (!r.error.empty()) std::cerr << r.task << " (" << r.config << "): " << r.error << "\n";
      }
      if (!out_file.empty()) write_text(out_file, report.to_json().dump(2) + "\n");
      return kOk;
    }
  } catch (const lff::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
