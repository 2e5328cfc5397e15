#include "lff/knowledge_base.hpp"

#include <stdexcept>

#include "lff/engine.hpp"

namespace lff {

std::optional<Builtin> builtin_for(const PredicateKey& key) {
  static const std::unordered_map<PredicateKey, Builtin> table = {
      {{Symbol("decrement"), 2}, Builtin::Decrement},
      {{Symbol("increment"), 2}, Builtin::Increment},
      {{Symbol("geq"), 2}, Builtin::Geq},
      {{Symbol("zero"), 1}, Builtin::Zero},
      {{Symbol("one"), 1}, Builtin::One},
      {{Symbol("even"), 1}, Builtin::Even},
      {{Symbol("odd"), 1}, Builtin::Odd},
      {{Symbol("sum"), 3}, Builtin::Sum},
  };
  auto it = table.find(key);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::vector<Clause> standard_library() {
  const Term h = Term::variable("H"), t = Term::variable("T"), x = Term::variable("X"),
             r = Term::variable("R"), anon = Term::variable("_G");
  auto lit = [](std::string_view p, std::vector<Term> args) { return Literal(p, std::move(args)); };
  auto fact = [&](Literal l) { return Clause(std::move(l), {}); };
  return {
      fact(lit("head", {Term::cons(h, anon), h})),
      fact(lit("tail", {Term::cons(anon, t), t})),
      fact(lit("empty", {Term::nil()})),
      fact(lit("element", {Term::cons(x, anon), x})),
      Clause(lit("element", {Term::cons(anon, t), x}), {lit("element", {t, x})}),
      fact(lit("cons", {h, t, Term::cons(h, t)})),
      fact(lit("append", {Term::nil(), x, Term::cons(x, Term::nil())})),
      Clause(lit("append", {Term::cons(h, t), x, Term::cons(h, r)}), {lit("append", {t, x, r})}),
      fact(lit("eq", {x, x})),
  };
}

KnowledgeBase::KnowledgeBase(std::vector<Clause> clauses, bool with_standard_library)
    : user_clauses_(std::move(clauses)) {
  for (const auto& c : user_clauses_) {
    if (!c.head) throw std::invalid_argument("background knowledge must be definite clauses");
    if (is_builtin(c.head->key())) {
      throw std::invalid_argument("background knowledge redefines builtin " +
                                  c.head->key().to_string());
    }
    defined_.insert(c.head->key());
  }
  clauses_ = user_clauses_;
  if (with_standard_library) {
    std::unordered_set<PredicateKey> user_defined = defined_;
    for (auto& c : standard_library()) {
      if (user_defined.contains(c.head->key())) continue;
      defined_.insert(c.head->key());
      clauses_.push_back(std::move(c));
    }
  }
  auto image = std::make_shared<detail::CompiledImage>();
  for (const auto& c : clauses_) image->add_clause(c);
  image_ = std::move(image);
}

bool KnowledgeBase::defines(const PredicateKey& key) const { return defined_.contains(key); }

}  // namespace lff
