#include "lff/musp.hpp"

#include <algorithm>
#include <map>

#include "lff/logic.hpp"

namespace lff {

bool SatCache::check(const Program& s, const std::vector<Literal>& pos, const KnowledgeBase& bk,
                     const EvalConfig& cfg) {
  auto key = canonical_form(s);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  ++checks_;
  const bool sat = is_satisfiable(s, pos, bk, cfg);
  cache_.emplace(std::move(key), sat);
  return sat;
}

std::vector<Program> subprogs(const Program& h) {
  std::vector<Program> out;
  std::vector<ProgramKey> seen;
  auto emit = [&](std::vector<Clause> clauses) {
    if (clauses.empty()) return;
    Program g(std::move(clauses));
    for (const auto& c : g) {
      if (!is_connected(c)) return;
    }
    if (!theory_subsumes(g, h)) return;
    auto key = canonical_form(g);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
    seen.push_back(std::move(key));
    out.push_back(std::move(g));
  };

  const auto& cs = h.clauses();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto with = [&](std::optional<Clause> replacement) {
      std::vector<Clause> clauses;
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (k != i) clauses.push_back(cs[k]);
        else if (replacement) clauses.push_back(*replacement);
      }
      emit(std::move(clauses));
    };
    const Clause& c = cs[i];
    if (c.head) {
      if (c.body.empty()) with(std::nullopt);
      else with(Clause(std::nullopt, c.body));
    }
    for (std::size_t j = 0; j < c.body.size(); ++j) {
      Clause d = c;
      d.body.erase(d.body.begin() + static_cast<std::ptrdiff_t>(j));
      if (d.size() == 0) with(std::nullopt);
      else with(std::move(d));
    }
  }
  return out;
}

namespace {

class Descent {
 public:
  Descent(const std::vector<Literal>& pos, const KnowledgeBase& bk, const MuspOptions& opts,
          SatCache& cache)
      : pos_(pos), bk_(bk), opts_(opts), cache_(cache) {}

  void run(const Program& h) {
    if (opts_.memoize && !visited_.emplace(canonical_form(h), true).second) return;
    bool has_unsat_subprog = false;
    for (const auto& g : subprogs(h)) {
      if (!cache_.check(g, pos_, bk_, opts_.eval)) {
        has_unsat_subprog = true;
        run(g);
      }
    }
    if (!has_unsat_subprog) found_.emplace(canonical_form(h), h);
  }

  std::vector<Program> results() const {
    std::vector<Program> out;
    for (const auto& [k, p] : found_) out.push_back(p);
    std::sort(out.begin(), out.end(),
              [](const Program& a, const Program& b) { return a.to_string() < b.to_string(); });
    return out;
  }

 private:
  const std::vector<Literal>& pos_;
  const KnowledgeBase& bk_;
  const MuspOptions& opts_;
  SatCache& cache_;
  std::map<ProgramKey, bool> visited_;
  std::map<ProgramKey, Program> found_;
};

}  // namespace

std::vector<Program> deletion_minimal_unsat(const Program& h, const std::vector<Literal>& pos,
                                            const KnowledgeBase& bk, const MuspOptions& opts,
                                            SatCache* cache) {
  if (program_size(h) > opts.max_size) return {};
  SatCache local;
  Descent d(pos, bk, opts, cache ? *cache : local);
  d.run(h);
  return d.results();
}

std::vector<Program> find_musps(const Program& h, const std::vector<Literal>& pos,
                                const KnowledgeBase& bk, const MuspOptions& opts, SatCache* cache) {
  auto all = deletion_minimal_unsat(h, pos, bk, opts, cache);
  if (all.empty()) return all;
  std::size_t best = program_size(all.front());
  for (const auto& p : all) best = std::min(best, program_size(p));
  std::erase_if(all, [&](const Program& p) { return program_size(p) != best; });
  return all;
}

std::vector<Constraint> unsat_constraints(const Program& h, const std::vector<Literal>& pos,
                                          const KnowledgeBase& bk, const MuspOptions& opts,
                                          SatCache* cache, std::size_t* musps_found) {
  std::vector<Constraint> out;
  const auto musps = find_musps(h, pos, bk, opts, cache);
  if (musps_found) *musps_found = musps.size();
  for (const auto& m : musps) {
    out.push_back({ConstraintKind::Specialisation, m});
    out.push_back({ConstraintKind::Redundancy, m});
  }
  return out;
}

}  // namespace lff
