#include "lff/learner.hpp"

#include "lff/generator.hpp"
#include "lff/logic.hpp"

namespace lff {

LearnResult learn(const KnowledgeBase& bk, const ExampleSet& examples, const Bias& bias,
                  const LearnerConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto deadline = start + cfg.timeout;

  LearnResult result;
  RunStats& stats = result.stats;

  // Hypothesis bodies are executed in an order that respects the bias modes.
  KnowledgeBase kb = bk;
  kb.set_modes(bias.directions);

  auto t0 = Clock::now();
  Generator gen(bias);
  gen.set_deadline(deadline);
  stats.generate_time += Clock::now() - t0;

  const std::size_t max_size =
      cfg.max_size > 0 ? cfg.max_size : bias.max_clauses * (bias.max_body + 1);
  MuspOptions musp_opts;
  musp_opts.eval = cfg.eval;
  musp_opts.max_size = cfg.musp_max_size;
  SatCache sat_cache;
  ConstraintStore store;

  auto finish = [&] {
    for (std::size_t k = 0; k < 3; ++k) stats.constraints_by_kind[k] = store.count(ConstraintKind(k));
    stats.candidates_pruned = gen.pruned();
    stats.total_time = Clock::now() - start;
  };

  for (std::size_t size = 1; size <= max_size; ++size) {
    stats.last_size = size;
    gen.reset(size);
    for (;;) {
      if (Clock::now() > deadline) {
        stats.timed_out = true;
        finish();
        return result;
      }
      t0 = Clock::now();
      auto h = gen.generate(store);
      stats.generate_time += Clock::now() - t0;
      if (!h) {
        if (gen.expired()) {
          stats.timed_out = true;
          finish();
          return result;
        }
        break;
      }
      ++stats.programs_generated;
      if (cfg.on_candidate) cfg.on_candidate(*h);

      t0 = Clock::now();
      const Outcome outcome = test(examples.pos, examples.neg, kb, *h, cfg.eval);
      stats.test_time += Clock::now() - t0;

      if (outcome.is_solution()) {
        stats.solution_size = program_size(*h);
        stats.solution_rules = h->num_clauses();
        result.solution = std::move(h);
        finish();
        return result;
      }
      if (cfg.musp_enabled && outcome.completeness == Completeness::TotallyIncomplete) {
        t0 = Clock::now();
        std::size_t found = 0;
        auto cons = unsat_constraints(*h, examples.pos, kb, musp_opts, &sat_cache, &found);
        stats.musps_found += found;
        store.add(cons.begin(), cons.end());
        stats.musp_time += Clock::now() - t0;
      }
      auto cons = constrain(*h, outcome);
      store.add(cons.begin(), cons.end());
    }
  }
  finish();
  return result;
}

}  // namespace lff
