#include "lff/symbol.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace lff {
namespace {

struct SymbolTable {
  std::mutex mutex;
  std::deque<std::string> names{std::string{}};
  std::unordered_map<std::string_view, std::uint32_t> ids{{std::string_view{}, 0}};
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  if (auto it = t.ids.find(name); it != t.ids.end()) {
    id_ = it->second;
    return;
  }
  id_ = static_cast<std::uint32_t>(t.names.size());
  const std::string& stored = t.names.emplace_back(name);
  t.ids.emplace(stored, id_);
}

std::string_view Symbol::name() const {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  return t.names[id_];
}

std::string PredicateKey::to_string() const {
  return std::string(name.name()) + "/" + std::to_string(arity);
}

}  // namespace lff
