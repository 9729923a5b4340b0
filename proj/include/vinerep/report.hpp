#pragma once

#include <string>
#include <vector>

namespace vinerep {

// Diagnostic item produced by the validators. `code` is a stable tag,
// `where` locates the problem (grid index, vine id, matrix entry).
struct Violation {
  std::string code;
  std::string where;
  std::string detail;
};

struct Report {
  std::vector<Violation> items;

  bool ok() const { return items.empty(); }
  void add(std::string code, std::string where, std::string detail) {
    items.push_back({std::move(code), std::move(where), std::move(detail)});
  }
  void merge(const Report& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
  std::string to_string() const;
};

}  // namespace vinerep
