#ifndef FORMGEN_ORDER_MAPPING_H_
#define FORMGEN_ORDER_MAPPING_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace formgen {

// Collapses whitespace runs to one space, trims both ends and lowercases ASCII
// letters. Two variable names denote the same variable iff their normalized
// forms are equal.
std::string NormalizeVariableName(std::string_view name);

// Bijection from variable surface names to column indices 0..n-1. Lookups go
// through NormalizeVariableName.
class OrderMapping {
 public:
  using Entry = std::pair<std::string, std::size_t>;

  OrderMapping() = default;
  // Throws ValidationError unless the indices are exactly {0, ..., n-1} and
  // no two names normalize to the same key.
  explicit OrderMapping(std::vector<Entry> entries);

  std::optional<std::size_t> Find(std::string_view name) const;
  // Throws MappingError naming the variable and the known keys.
  std::size_t Resolve(std::string_view name) const;

  // True if `name` resolves directly or after removing an English plural
  // suffix ("s" or "es") from either side.
  bool IsAliasOf(std::string_view name) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Insertion order, as read from the dataset.
  const std::vector<Entry>& entries() const { return entries_; }
  // Surface name of column `index`.
  const std::string& NameAt(std::size_t index) const;

  friend bool operator==(const OrderMapping& a, const OrderMapping& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t, std::less<>> by_key_;
  std::vector<std::size_t> entry_of_column_;
};

}  // namespace formgen

#endif  // FORMGEN_ORDER_MAPPING_H_
