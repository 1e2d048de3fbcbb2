#include "formgen/order_mapping.h"

#include "formgen/error.h"

namespace formgen {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string Singular(const std::string& key) {
  if (key.size() > 3 && key.ends_with("es")) return key.substr(0, key.size() - 2);
  if (key.size() > 1 && key.ends_with('s')) return key.substr(0, key.size() - 1);
  return key;
}

}  // namespace

std::string NormalizeVariableName(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  bool pending_space = false;
  for (char c : name) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

OrderMapping::OrderMapping(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  entry_of_column_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [name, column] = entries_[i];
    const std::string path = "order_mapping." + name;
    if (column >= n) {
      throw ValidationError("index " + std::to_string(column) +
                                " out of range for " + std::to_string(n) +
                                " variables (indices must be 0.." +
                                std::to_string(n == 0 ? 0 : n - 1) + ")",
                            path);
    }
    if (entry_of_column_[column] != n) {
      throw ValidationError(
          "index " + std::to_string(column) + " assigned to both '" +
              entries_[entry_of_column_[column]].first + "' and '" + name + "'",
          path);
    }
    entry_of_column_[column] = i;
    std::string key = NormalizeVariableName(name);
    if (key.empty()) throw ValidationError("empty variable name", path);
    if (!by_key_.emplace(std::move(key), column).second) {
      throw ValidationError("variable name '" + name +
                                "' collides with another key after "
                                "whitespace/case normalization",
                            path);
    }
  }
}

std::optional<std::size_t> OrderMapping::Find(std::string_view name) const {
  auto it = by_key_.find(NormalizeVariableName(name));
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::size_t OrderMapping::Resolve(std::string_view name) const {
  if (auto column = Find(name)) return *column;
  std::string known;
  for (const auto& [key, column] : entries_) {
    if (!known.empty()) known += ", ";
    known += "'" + key + "'";
  }
  throw MappingError("unknown variable '" + std::string(name) +
                     "'; known variables: [" + known + "]");
}

bool OrderMapping::IsAliasOf(std::string_view name) const {
  const std::string key = NormalizeVariableName(name);
  if (by_key_.contains(key)) return true;
  const std::string singular = Singular(key);
  for (const auto& [known, column] : by_key_) {
    if (Singular(known) == singular) return true;
  }
  return false;
}

const std::string& OrderMapping::NameAt(std::size_t index) const {
  return entries_.at(entry_of_column_.at(index)).first;
}

}  // namespace formgen
