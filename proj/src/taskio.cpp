#include "lff/taskio.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace lff {
namespace {

[[noreturn]] void error_at(const Located& at, const std::string& msg) {
  throw ParseError(msg, at.line, at.column);
}

std::size_t as_count(const Located& at, const Term& t) {
  if (!t.is_integer() || t.value() < 0) error_at(at, "expected a non-negative integer");
  return static_cast<std::size_t>(t.value());
}

Symbol as_name(const Located& at, const Term& t) {
  if (!t.is_atom()) error_at(at, "expected a predicate name");
  return t.symbol();
}

std::vector<Term> as_tuple(const Located& at, const Term& t) {
  if (t.is_compound() && t.symbol() == tuple_functor()) return {t.args().begin(), t.args().end()};
  if (t.is_atom()) return {t};
  error_at(at, "expected a tuple such as (a,b)");
}

}  // namespace

Bias parse_bias(std::string_view text) {
  Bias bias;
  std::set<std::string> limits_seen;
  for (const auto& at : parse_clauses_located(text)) {
    const Clause& c = at.clause;
    if (!c.head || !c.body.empty()) error_at(at, "bias directives must be facts");
    const Literal& d = *c.head;
    const std::string name(d.predicate().name());
    const auto& args = d.args();
    auto want = [&](std::size_t n) {
      if (args.size() != n) error_at(at, name + " expects " + std::to_string(n) + " arguments");
    };
    if (name == "max_clause" || name == "max_clauses" || name == "max_vars" || name == "max_body") {
      want(1);
      const std::string canonical = name == "max_clauses" ? "max_clause" : name;
      if (!limits_seen.insert(canonical).second) error_at(at, "duplicate " + canonical + " directive");
      const std::size_t n = as_count(at, args[0]);
      if (n == 0) error_at(at, canonical + " must be at least 1");
      if (canonical == "max_clause") bias.max_clauses = n;
      else if (canonical == "max_vars") bias.max_vars = n;
      else bias.max_body = n;
    } else if (name == "head_pred" || name == "body_pred") {
      want(2);
      PredicateKey key{as_name(at, args[0]), as_count(at, args[1])};
      if (name == "head_pred") {
        if (!bias.head_pred.name.empty()) error_at(at, "duplicate head_pred directive");
        bias.head_pred = key;
      } else {
        if (std::find(bias.body_preds.begin(), bias.body_preds.end(), key) != bias.body_preds.end()) {
          error_at(at, "duplicate body_pred " + key.to_string());
        }
        bias.body_preds.push_back(key);
      }
    } else if (name == "type" || name == "direction") {
      want(2);
      const Symbol pred = as_name(at, args[0]);
      const auto items = as_tuple(at, args[1]);
      PredicateKey key{pred, items.size()};
      if (name == "type") {
        std::vector<Symbol> ts;
        for (const auto& t : items) ts.push_back(as_name(at, t));
        if (!bias.types.emplace(key, std::move(ts)).second) {
          error_at(at, "duplicate type for " + key.to_string());
        }
      } else {
        std::vector<Direction> ds;
        for (const auto& t : items) {
          if (!t.is_atom()) error_at(at, "direction must be in or out");
          if (t.symbol().name() == "in") ds.push_back(Direction::In);
          else if (t.symbol().name() == "out") ds.push_back(Direction::Out);
          else error_at(at, "direction must be in or out");
        }
        if (!bias.directions.emplace(key, std::move(ds)).second) {
          error_at(at, "duplicate direction for " + key.to_string());
        }
      }
    } else {
      error_at(at, "unknown bias directive " + name + "/" + std::to_string(args.size()));
    }
  }
  if (bias.head_pred.name.empty()) throw ParseError("missing head_pred directive", 1, 1);

  const auto preds = bias.predicates();
  auto declared = [&](const PredicateKey& k) {
    return std::find(preds.begin(), preds.end(), k) != preds.end();
  };
  for (const auto& [k, v] : bias.types) {
    if (!declared(k)) throw std::invalid_argument("type given for undeclared predicate " + k.to_string());
  }
  for (const auto& [k, v] : bias.directions) {
    if (!declared(k)) {
      throw std::invalid_argument("direction given for undeclared predicate " + k.to_string());
    }
  }
  bias.validate();
  return bias;
}

ExampleSet parse_examples(std::string_view text) {
  ExampleSet ex;
  for (const auto& at : parse_clauses_located(text)) {
    const Clause& c = at.clause;
    if (!c.head || !c.body.empty()) error_at(at, "examples must be pos(...) or neg(...) facts");
    const Literal& l = *c.head;
    const auto kind = l.predicate().name();
    if ((kind != "pos" && kind != "neg") || l.arity() != 1) {
      error_at(at, "examples must be pos(...) or neg(...) facts");
    }
    const Term& t = l.args()[0];
    Literal e;
    if (t.is_atom()) {
      e = Literal(t.symbol(), {});
    } else if (t.is_compound() && t.symbol() != tuple_functor() && !t.is_cons()) {
      e = Literal(t.symbol(), {t.args().begin(), t.args().end()});
    } else {
      error_at(at, "example must be an atom");
    }
    if (!e.is_ground()) error_at(at, "example must be ground");
    (kind == "pos" ? ex.pos : ex.neg).push_back(std::move(e));
  }
  if (ex.pos.empty()) throw ParseError("no positive examples", 1, 1);
  return ex;
}

std::vector<Clause> parse_background(std::string_view text) {
  std::vector<Clause> out;
  for (auto& at : parse_clauses_located(text)) {
    if (!at.clause.head) error_at(at, "background knowledge must not contain goal clauses");
    if (KnowledgeBase::is_builtin(at.clause.head->key())) {
      error_at(at, "cannot redefine builtin " + at.clause.head->key().to_string());
    }
    out.push_back(std::move(at.clause));
  }
  return out;
}

namespace {

void check_examples(const ExampleSet& ex, const Bias& bias) {
  std::set<std::string> pos_text;
  for (const auto& e : ex.pos) {
    if (e.key() != bias.head_pred) {
      throw std::invalid_argument("example " + e.to_string() + " does not match head_pred " +
                                  bias.head_pred.to_string());
    }
    pos_text.insert(e.to_string());
  }
  for (const auto& e : ex.neg) {
    if (e.key() != bias.head_pred) {
      throw std::invalid_argument("example " + e.to_string() + " does not match head_pred " +
                                  bias.head_pred.to_string());
    }
    if (pos_text.contains(e.to_string())) {
      throw std::invalid_argument("example " + e.to_string() + " is both positive and negative");
    }
  }
}

}  // namespace

Task parse_task(std::string_view bias_text, std::string_view bk_text, std::string_view exs_text,
                std::string name) {
  Bias bias = parse_bias(bias_text);
  KnowledgeBase bk(parse_background(bk_text));
  ExampleSet ex = parse_examples(exs_text);
  check_examples(ex, bias);
  if (bk.defines(bias.head_pred) || KnowledgeBase::is_builtin(bias.head_pred)) {
    throw std::invalid_argument("head_pred " + bias.head_pred.to_string() +
                                " is already defined by the background knowledge");
  }
  for (const auto& p : bias.body_preds) {
    if (p == bias.head_pred) continue;
    if (!bk.defines(p) && !KnowledgeBase::is_builtin(p)) {
      throw std::invalid_argument("body_pred " + p.to_string() + " is not defined");
    }
  }
  bk.set_modes(bias.directions);
  return Task{std::move(name), std::move(bias), std::move(bk), std::move(ex), std::nullopt};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Task load_task(const std::filesystem::path& dir) {
  auto with_file = [&](const char* file, auto&& f) {
    try {
      return f(read_file(dir / file));
    } catch (const ParseError& e) {
      throw ParseError((dir / file).string() + ": " + e.what(), e.line(), e.column());
    }
  };
  const std::string bias = with_file("bias.pl", [](std::string s) { return s; });
  const std::string bk = with_file("bk.pl", [](std::string s) { return s; });
  const std::string exs = with_file("exs.pl", [](std::string s) { return s; });
  Task task = [&] {
    try {
      return parse_task(bias, bk, exs, dir.filename().string());
    } catch (const ParseError& e) {
      throw std::invalid_argument(dir.string() + ": " + e.what());
    }
  }();
  if (std::filesystem::exists(dir / "test.pl")) {
    task.held_out = with_file("test.pl", [](const std::string& s) { return parse_examples(s); });
    check_examples(*task.held_out, task.bias);
  }
  return task;
}

std::string print_bias(const Bias& bias) {
  std::string out;
  out += "max_clause(" + std::to_string(bias.max_clauses) + ").\n";
  out += "max_vars(" + std::to_string(bias.max_vars) + ").\n";
  out += "max_body(" + std::to_string(bias.max_body) + ").\n";
  auto key = [](const PredicateKey& k) {
    return std::string(k.name.name()) + "," + std::to_string(k.arity);
  };
  out += "head_pred(" + key(bias.head_pred) + ").\n";
  for (const auto& p : bias.body_preds) out += "body_pred(" + key(p) + ").\n";
  auto tuple = [](const std::vector<std::string>& items) {
    std::string s = "(";
    for (const auto& i : items) s += i + ",";
    if (items.size() > 1) s.pop_back();
    return s + ")";
  };
  for (const auto& p : bias.predicates()) {
    if (auto t = bias.types.find(p); t != bias.types.end()) {
      std::vector<std::string> items;
      for (auto s : t->second) items.emplace_back(s.name());
      out += "type(" + std::string(p.name.name()) + "," + tuple(items) + ").\n";
    }
  }
  for (const auto& p : bias.predicates()) {
    if (auto d = bias.directions.find(p); d != bias.directions.end()) {
      std::vector<std::string> items;
      for (auto x : d->second) items.emplace_back(x == Direction::In ? "in" : "out");
      out += "direction(" + std::string(p.name.name()) + "," + tuple(items) + ").\n";
    }
  }
  return out;
}

std::string print_examples(const ExampleSet& examples) {
  std::string out;
  for (const auto& e : examples.pos) out += "pos(" + e.to_string() + ").\n";
  for (const auto& e : examples.neg) out += "neg(" + e.to_string() + ").\n";
  return out;
}

std::string print_background(const std::vector<Clause>& clauses) {
  std::string out;
  for (const auto& c : clauses) out += c.to_string() + "\n";
  return out;
}

}  // namespace lff
