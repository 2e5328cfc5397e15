#include "lff/generator.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "lff/canonical.hpp"
#include "lff/logic.hpp"

namespace lff {

std::uint64_t predicate_mask(const std::vector<Literal>& body) {
  std::uint64_t m = 0;
  for (const auto& l : body) m |= 1ull << ((l.predicate().id() * 7 + l.arity()) % 64);
  return m;
}

bool quick_subsumes(const Clause& c1, std::uint64_t mask1, const Clause& c2, std::uint64_t mask2) {
  if ((mask1 & ~mask2) != 0) return false;
  if (c1.head && (!c2.head || c1.head->key() != c2.head->key())) return false;
  return clause_subsumes(c1, c2);
}

namespace {

constexpr std::size_t kMaxVars = 64;

template <class Body>
std::size_t num_vars(const Body& b, std::size_t head_arity) {
  std::size_t n = head_arity;
  for (const auto& l : b) {
    for (auto a : l.args) {
      if (a != 0xff) n = std::max<std::size_t>(n, a + 1u);
    }
  }
  return n;
}

// Minimal sorted encoding over renamings of the non-head variables. `added`
// enters as the position of one literal in b and leaves as its position in
// the result.
template <class Body>
Body canonicalise(const Body& b, std::size_t head_arity, std::uint8_t& added) {
  const std::size_t n = num_vars(b, head_arity);
  std::array<std::uint8_t, kMaxVars> perm;
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), 0);
  Body best;
  auto tracked = b.lits[added];
  bool have = false;
  do {
    Body r = b;
    for (std::size_t i = 0; i < r.size; ++i) {
      for (auto& a : r.lits[i].args) {
        if (a != 0xff) a = perm[a];
      }
    }
    const auto image = r.lits[added];
    std::sort(r.lits.begin(), r.lits.begin() + r.size);
    if (!have || r < best) {
      best = r;
      tracked = image;
      have = true;
    }
  } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(head_arity),
                                 perm.begin() + static_cast<std::ptrdiff_t>(n)));
  added = static_cast<std::uint8_t>(std::find(best.begin(), best.end(), tracked) - best.begin());
  return best;
}

// Every literal linked to the head through shared variables.
template <class Body>
bool connected(const Body& b, std::size_t head_arity) {
  std::uint64_t reached = head_arity >= 64 ? ~0ull : (1ull << head_arity) - 1;
  std::uint32_t linked = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j < b.size; ++j) {
      if ((linked >> j) & 1u) continue;
      std::uint64_t vars = 0;
      for (auto a : b.lits[j].args) {
        if (a != 0xff) vars |= 1ull << a;
      }
      if ((vars & reached) == 0) continue;
      reached |= vars;
      linked |= 1u << j;
      changed = true;
    }
  }
  return linked == (1u << b.size) - 1;
}

// Is there a variable map, fixing variables below `fixed`, that sends every
// literal of src onto a literal of dst? With must >= 0 some literal of src
// has to land on dst.lits[must].
template <class Body>
class Embedding {
 public:
  Embedding(const Body& src, std::size_t fixed, const Body& dst) : src_(src), dst_(dst) {
    map_.fill(0xff);
    for (std::size_t i = 0; i < fixed; ++i) map_[i] = static_cast<std::uint8_t>(i);
  }

  bool run(int must) {
    if (must < 0) return extend(0);
    const auto& target = dst_.lits[static_cast<std::size_t>(must)];
    for (std::size_t j = 0; j < src_.size; ++j) {
      if (src_.lits[j].pred != target.pred) continue;
      const std::size_t mark = undo_size_;
      if (bind(src_.lits[j], target) && extend(0)) return true;
      rollback(mark);
    }
    return false;
  }

 private:
  bool bind(const auto& s, const auto& d) {
    for (std::size_t i = 0; i < 4 && s.args[i] != 0xff; ++i) {
      auto& m = map_[s.args[i]];
      if (m == 0xff) {
        m = d.args[i];
        undo_[undo_size_++] = s.args[i];
      } else if (m != d.args[i]) {
        return false;
      }
    }
    return true;
  }

  void rollback(std::size_t mark) {
    while (undo_size_ > mark) map_[undo_[--undo_size_]] = 0xff;
  }

  bool extend(std::size_t j) {
    if (j == src_.size) return true;
    for (std::size_t k = 0; k < dst_.size; ++k) {
      if (dst_.lits[k].pred != src_.lits[j].pred) continue;
      const std::size_t mark = undo_size_;
      if (bind(src_.lits[j], dst_.lits[k]) && extend(j + 1)) return true;
      rollback(mark);
    }
    return false;
  }

  const Body& src_;
  const Body& dst_;
  std::array<std::uint8_t, kMaxVars> map_;
  std::array<std::uint8_t, kMaxVars> undo_;
  std::size_t undo_size_ = 0;
};

template <class Body>
bool embeds(const Body& src, std::size_t fixed, const Body& dst, int must = -1) {
  return Embedding<Body>(src, fixed, dst).run(must);
}

// No literal can be dropped by mapping the clause into the rest of itself
// with the head fixed. A non-reduced clause is equivalent to a smaller one.
template <class Body>
bool reduced(const Body& b, std::size_t head_arity) {
  for (std::size_t i = 0; i < b.size; ++i) {
    Body rest = b;
    std::copy(b.lits.begin() + static_cast<std::ptrdiff_t>(i) + 1, b.lits.begin() + b.size,
              rest.lits.begin() + static_cast<std::ptrdiff_t>(i));
    --rest.size;
    if (embeds(b, head_arity, rest)) return false;
  }
  return true;
}

}  // namespace

std::size_t Generator::BodyHash::operator()(const Body& b) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto& l : b) {
    h = (h ^ l.pred) * 1099511628211ull;
    for (auto a : l.args) h = (h ^ a) * 1099511628211ull;
  }
  return h;
}

Generator::Generator(Bias bias) : bias_(std::move(bias)) {
  bias_.validate();
  if (bias_.max_body > kMaxBody) {
    throw std::invalid_argument("max_body above " + std::to_string(kMaxBody) + " is not supported");
  }
  if (bias_.max_vars > kMaxVars) {
    throw std::invalid_argument("max_vars above " + std::to_string(kMaxVars) + " is not supported");
  }
  head_arity_ = bias_.head_pred.arity;
  preds_ = bias_.predicates();
  for (std::size_t i = 0; i < preds_.size(); ++i) pred_ids_[preds_[i]] = static_cast<std::uint8_t>(i);
  build_signature();
  levels_.assign(bias_.max_body + 1, {});
  levels_[0].push_back(Node{});
  level_state_.assign(bias_.max_body + 1, LevelState::None);
  level_state_[0] = LevelState::Full;
  pools_.assign(bias_.max_body + 2, {});
  pool_views_.assign(pools_.size(), {});
  view_ready_.assign(pools_.size(), false);
}

Clause Generator::to_clause(const Body& b) const {
  std::vector<Term> head_args;
  for (std::size_t i = 0; i < head_arity_; ++i) head_args.push_back(Term::variable(canonical_variable_name(i)));
  std::vector<Literal> body;
  for (const auto& l : b) {
    std::vector<Term> args;
    for (std::size_t i = 0; i < preds_[l.pred].arity; ++i) {
      args.push_back(Term::variable(canonical_variable_name(l.args[i])));
    }
    body.emplace_back(preds_[l.pred].name, std::move(args));
  }
  return Clause(Literal(bias_.head_pred.name, std::move(head_args)), std::move(body));
}

void Generator::build_signature() {
  std::unordered_map<Symbol, int> type_ids;
  for (const auto& p : preds_) {
    sig_.arity.push_back(p.arity);
    std::array<int, 4> t{-1, -1, -1, -1};
    std::array<bool, 4> in{false, false, false, false};
    const auto& ts = bias_.types.at(p);
    const auto& ds = bias_.directions.at(p);
    for (std::size_t i = 0; i < p.arity; ++i) {
      t[i] = type_ids.try_emplace(ts[i], static_cast<int>(type_ids.size())).first->second;
      in[i] = ds[i] == Direction::In;
    }
    sig_.types.push_back(t);
    sig_.in.push_back(in);
  }
}

// Level k holds type-consistent, direction-safe bodies of k literals up to
// renaming, connected or not; the connected ones form the pool. A safe body
// has an order binding every input before use, and dropping the last
// literal of that order leaves a safe body, so extending level k-1 by one
// literal whose inputs are bound reaches all of level k. Whatever subsumes
// a parent subsumes its extensions, so a partial level skips the
// extensions of dead parents.
void Generator::build_level(std::size_t k, bool full) {
  const std::size_t ha = head_arity_;
  Lit head_lit{0};
  for (std::size_t i = 0; i < ha; ++i) head_lit.args[i] = static_cast<std::uint8_t>(i);

  for (std::size_t j = k; j < levels_.size(); ++j) {
    levels_[j].clear();
    levels_[j].shrink_to_fit();
    level_state_[j] = LevelState::None;
    pools_[j + 1].clear();
    pool_views_[j + 1].clear();
    view_ready_[j + 1] = false;
  }
  std::vector<Node> next;
  std::unordered_map<Body, std::uint32_t, BodyHash> seen;
  for (std::uint32_t bi = 0; bi < levels_[k - 1].size(); ++bi) {
    if ((bi & 255u) == 0 && past_deadline()) return;
    if (!full) {
      refresh(k - 1, bi);
      if (levels_[k - 1][bi].dead) continue;
    }
    const Body& b = levels_[k - 1][bi].body;
    std::array<int, kMaxVars> vt;
    vt.fill(-1);
    for (std::size_t i = 0; i < ha; ++i) vt[i] = sig_.types[0][i];
    for (const auto& l : b) {
      for (std::size_t i = 0; i < sig_.arity[l.pred]; ++i) vt[l.args[i]] = sig_.types[l.pred][i];
    }
    const std::size_t nv = num_vars(b, ha);
    // Bound variables: head inputs and every output of the (safe) parent.
    std::uint64_t bound = 0;
    for (std::size_t i = 0; i < ha; ++i) {
      if (sig_.in[0][i]) bound |= 1ull << i;
    }
    for (const auto& l : b) {
      for (std::size_t i = 0; i < sig_.arity[l.pred]; ++i) {
        if (!sig_.in[l.pred][i]) bound |= 1ull << l.args[i];
      }
    }
    for (std::uint8_t p = 0; p < preds_.size(); ++p) {
      const std::size_t arity = sig_.arity[p];
      Lit l{p};
      // Inputs take bound variables; outputs take any variable of the
      // right type or the next fresh one.
      std::array<int, 4> fresh_type{};
      std::size_t fresh = 0;
      auto assign = [&](auto&& self, std::size_t i) -> void {
        if (i == arity) {
          if (l == head_lit) return;
          if (std::find(b.begin(), b.end(), l) != b.end()) return;
          Body nb = b;
          nb.lits[nb.size++] = l;
          std::uint8_t added = b.size;
          nb = canonicalise(nb, ha, added);
          if (seen.try_emplace(nb, static_cast<std::uint32_t>(next.size())).second) {
            Node n;
            n.body = nb;
            n.parent = static_cast<std::int32_t>(bi);
            n.added = added;
            for (const auto& x : nb) n.preds |= 1ull << x.pred;
            next.push_back(std::move(n));
          }
          return;
        }
        const int t = sig_.types[p][i];
        const bool in = sig_.in[p][i];
        for (std::size_t v = 0; v < nv; ++v) {
          if (vt[v] != t || (in && !((bound >> v) & 1u))) continue;
          l.args[i] = static_cast<std::uint8_t>(v);
          self(self, i + 1);
        }
        if (!in) {
          for (std::size_t f = 0; f < fresh; ++f) {
            if (fresh_type[f] != t) continue;
            l.args[i] = static_cast<std::uint8_t>(nv + f);
            self(self, i + 1);
          }
          if (nv + fresh < bias_.max_vars) {
            l.args[i] = static_cast<std::uint8_t>(nv + fresh);
            fresh_type[fresh++] = t;
            self(self, i + 1);
            --fresh;
          }
        }
        l.args[i] = kNoArg;
      };
      assign(assign, 0);
    }
  }
  std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.body < b.body; });

  auto& pool = pools_[k + 1];
  for (std::uint32_t i = 0; i < next.size(); ++i) {
    if (!connected(next[i].body, ha) || !reduced(next[i].body, ha)) continue;
    PoolClause pc;
    pc.level = static_cast<std::uint8_t>(k);
    pc.node = i;
    pc.recursive = (next[i].preds & 1u) != 0;
    pool.push_back(pc);
  }
  levels_[k] = std::move(next);
  level_state_[k] = full ? LevelState::Full : LevelState::Partial;
}

bool Generator::past_deadline() {
  if (!expired_ && std::chrono::steady_clock::now() > deadline_) expired_ = true;
  return expired_;
}

void Generator::ensure_full(std::size_t k) {
  for (std::size_t j = 1; j <= k && j < levels_.size() && !expired_; ++j) {
    if (level_state_[j] != LevelState::Full) build_level(j, true);
  }
}

void Generator::ensure_some(std::size_t k) {
  if (k == 0 || k >= levels_.size() || level_state_[k] != LevelState::None || expired_) return;
  ensure_some(k - 1);
  build_level(k, false);
}

// Pools for the partitions of the current size. Programs with several
// clauses draw on full levels. A lone clause is pruned whenever a parent is
// dead, so the single-clause pool may come from a partial level.
void Generator::prepare() {
  std::size_t single = 0;
  for (const auto& parts : partitions_) {
    if (parts.size() == 1) {
      single = parts[0];
      continue;
    }
    for (auto p : parts) ensure_full(p - 1);
  }
  if (single >= 2 && single - 1 < levels_.size() && level_state_[single - 1] != LevelState::Full) {
    ensure_some(single - 2);
    build_level(single - 1, false);
  }
}

const std::vector<Clause>& Generator::pool(std::size_t clause_size) {
  static const std::vector<Clause> kEmpty;
  if (clause_size < 2 || clause_size >= pools_.size()) return kEmpty;
  ensure_full(clause_size - 1);
  if (!view_ready_[clause_size]) {
    for (const auto& pc : pools_[clause_size]) pool_views_[clause_size].push_back(to_clause(node(pc).body));
    view_ready_[clause_size] = true;
  }
  return pool_views_[clause_size];
}

void Generator::reset(std::size_t size) {
  partitions_.clear();
  const std::size_t lo = 2, hi = bias_.max_body + 1;
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t min_part) -> void {
    if (remaining == 0) {
      if (!parts.empty()) partitions_.push_back(parts);
      return;
    }
    if (parts.size() == bias_.max_clauses) return;
    for (std::size_t p = std::max(min_part, lo); p <= std::min(hi, remaining); ++p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, size, lo);
  std::stable_sort(partitions_.begin(), partitions_.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  partition_ = 0;
  fresh_ = true;
  prepared_ = false;
  tuple_.clear();
}

// Smallest tuple for the current partition, moving on to later partitions
// when a pool is too small.
bool Generator::first_tuple() {
  for (; partition_ < partitions_.size(); ++partition_) {
    const auto& parts = partitions_[partition_];
    tuple_.assign(parts.size(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0 && parts[i] == parts[i - 1]) tuple_[i] = tuple_[i - 1] + 1;
      if (tuple_[i] >= pools_[parts[i]].size()) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

bool Generator::next_tuple() {
  const auto& parts = partitions_[partition_];
  const std::size_t m = parts.size();
  for (std::size_t pos = m; pos-- > 0;) {
    ++tuple_[pos];
    if (tuple_[pos] >= pools_[parts[pos]].size()) continue;
    bool ok = true;
    for (std::size_t j = pos + 1; j < m; ++j) {
      tuple_[j] = parts[j] == parts[j - 1] ? tuple_[j - 1] + 1 : 0;
      if (tuple_[j] >= pools_[parts[j]].size()) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  ++partition_;
  return first_tuple();
}

Generator::PayloadClause Generator::compile_payload(const Clause& c) const {
  PayloadClause pc;
  pc.clause = c;
  pc.headed = c.head.has_value();
  pc.name_mask = predicate_mask(c.body);
  pc.compact = c.body.size() <= kMaxBody;
  std::vector<Symbol> vars;
  auto var_id = [&](const Term& t) -> int {
    if (!t.is_variable()) return -1;
    auto it = std::find(vars.begin(), vars.end(), t.symbol());
    if (it != vars.end()) return static_cast<int>(it - vars.begin());
    if (vars.size() == kMaxVars) return -1;
    vars.push_back(t.symbol());
    return static_cast<int>(vars.size() - 1);
  };
  if (c.head) {
    if (c.head->key() != bias_.head_pred) pc.compact = false;
    for (std::size_t i = 0; i < c.head->arity() && pc.compact; ++i) {
      if (var_id(c.head->args()[i]) != static_cast<int>(i)) pc.compact = false;
    }
  }
  for (const auto& l : c.body) {
    if (!pc.compact) break;
    auto it = pred_ids_.find(l.key());
    if (it == pred_ids_.end()) {
      pc.compact = false;
      break;
    }
    Lit x{it->second};
    for (std::size_t i = 0; i < l.arity(); ++i) {
      const int v = var_id(l.args()[i]);
      if (v < 0) pc.compact = false;
      x.args[i] = static_cast<std::uint8_t>(v);
    }
    pc.body.lits[pc.body.size++] = x;
    pc.preds |= 1ull << x.pred;
  }
  return pc;
}

void Generator::sync_payloads(const ConstraintStore& store) {
  for (std::size_t i = payloads_.size(); i < store.size(); ++i) {
    const auto& c = store.constraints()[i];
    Payload p;
    p.kind = c.kind;
    for (const auto& cl : c.payload) p.clauses.push_back(compile_payload(cl));
    p.full = p.clauses.size() >= 32 ? 0xffffffffu : (1u << p.clauses.size()) - 1;
    payloads_.push_back(std::move(p));
  }
}

// Relations are inherited along parent links. A body extends its parent,
// so whatever subsumes the parent subsumes it, and it can only subsume what
// the parent subsumes. A new subsumption of the body must use the added
// literal.
bool Generator::relation(const Node& n, std::size_t level, const PayloadClause& pc,
                         ConstraintKind kind, bool parent_holds) const {
  if (kind == ConstraintKind::Generalisation) {
    if (!parent_holds || !pc.headed) return false;
    if (pc.compact) return embeds(n.body, head_arity_, pc.body);
    const Clause self = to_clause(n.body);
    return quick_subsumes(self, predicate_mask(self.body), pc.clause, pc.name_mask);
  }
  if (parent_holds) return true;
  if (!pc.compact) return false;
  if (pc.body.size == 0) return pc.headed;
  if ((pc.preds & ~n.preds) != 0 || level == 0) return false;
  return embeds(pc.body, pc.headed ? head_arity_ : 0, n.body, n.added);
}

void Generator::refresh(std::size_t level, std::uint32_t index) {
  Node& n = levels_[level][index];
  if (n.checked == payloads_.size()) return;
  const Node* parent = nullptr;
  if (level > 1) {
    refresh(level - 1, static_cast<std::uint32_t>(n.parent));
    parent = &levels_[level - 1][static_cast<std::size_t>(n.parent)];
  }
  std::size_t pi = 0;
  for (std::uint32_t j = n.checked; j < payloads_.size(); ++j) {
    const auto& p = payloads_[j];
    std::uint32_t pmask = 0;
    if (parent) {
      while (pi < parent->relations.size() && parent->relations[pi].constraint < j) ++pi;
      if (pi < parent->relations.size() && parent->relations[pi].constraint == j) {
        pmask = parent->relations[pi].mask;
      }
    } else if (p.kind == ConstraintKind::Generalisation) {
      pmask = p.full;  // the bare head subsumes every clause with that head
    }
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < p.clauses.size() && i < 32; ++i) {
      if (relation(n, level, p.clauses[i], p.kind, ((pmask >> i) & 1u) != 0)) mask |= 1u << i;
    }
    if (mask != 0) {
      n.relations.push_back({j, mask});
      if (p.clauses.size() == 1 && p.kind != ConstraintKind::Generalisation) n.dead = true;
    }
  }
  n.checked = static_cast<std::uint32_t>(payloads_.size());
}

bool Generator::store_prunes() const {
  const std::size_t m = current_.size();
  std::array<std::size_t, 8> at{};
  std::array<std::uint32_t, 8> masks{};
  for (;;) {
    std::uint32_t cid = 0xffffffffu;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& rel = node(*current_[i]).relations;
      if (at[i] < rel.size()) cid = std::min(cid, rel[at[i]].constraint);
    }
    if (cid == 0xffffffffu) return false;
    std::uint32_t any = 0;
    bool all = true, recursive_ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& rel = node(*current_[i]).relations;
      masks[i] = 0;
      if (at[i] < rel.size() && rel[at[i]].constraint == cid) masks[i] = rel[at[i]++].mask;
      any |= masks[i];
      all = all && masks[i] != 0;
      if (current_[i]->recursive && masks[i] == 0) recursive_ok = false;
    }
    const auto& p = payloads_[cid];
    switch (p.kind) {
      case ConstraintKind::Specialisation:
        if (all) return true;
        break;
      case ConstraintKind::Generalisation:
        if (any == p.full) return true;
        break;
      case ConstraintKind::Redundancy:
        if (any == p.full && recursive_ok) return true;
        break;
    }
  }
}

bool Generator::structurally_rejected() const {
  bool recursive = false, base = false;
  for (const auto* c : current_) {
    if (c->recursive) recursive = true; else base = true;
  }
  if (recursive && !base) return true;
  for (std::size_t i = 0; i < current_.size(); ++i) {
    for (std::size_t j = 0; j < current_.size(); ++j) {
      const Node& a = node(*current_[i]);
      const Node& b = node(*current_[j]);
      if (i != j && (a.preds & ~b.preds) == 0 && embeds(a.body, head_arity_, b.body)) return true;
    }
  }
  return false;
}

std::optional<Program> Generator::generate(const ConstraintStore& store) {
  if (partitions_.empty()) return std::nullopt;
  sync_payloads(store);
  if (!prepared_) {
    prepare();
    prepared_ = true;
  }
  for (std::size_t iteration = 1;; ++iteration) {
    if ((iteration & 1023u) == 0 && past_deadline()) return std::nullopt;
    if (expired_) return std::nullopt;
    const bool have = fresh_ ? first_tuple() : next_tuple();
    fresh_ = false;
    if (!have) {
      partitions_.clear();
      return std::nullopt;
    }
    const auto& parts = partitions_[partition_];
    current_.clear();
    for (std::size_t i = 0; i < parts.size(); ++i) current_.push_back(&pools_[parts[i]][tuple_[i]]);
    if (structurally_rejected()) {
      ++rejected_;
      continue;
    }
    for (const auto* c : current_) refresh(c->level, c->node);
    if (store_prunes()) {
      ++pruned_;
      continue;
    }
    Program p;
    for (const auto* c : current_) p.insert(to_clause(node(*c).body));
    return p;
  }
}

}  // namespace lff
