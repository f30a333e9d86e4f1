#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "antiramsey/errors.hpp"

namespace antiramsey {

/// A forbidden family of cycles, e.g. {C3, C4}. Lengths are kept sorted and
/// unique so families compare structurally.
struct CycleFamily {
  std::vector<int> lengths;

  CycleFamily() = default;
  CycleFamily(std::initializer_list<int> ls) : CycleFamily(std::vector<int>(ls)) {}
  explicit CycleFamily(std::vector<int> ls) : lengths(std::move(ls)) {
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    if (lengths.empty())
      throw InvalidInput("empty cycle family");
    if (lengths.front() < 3)
      throw InvalidInput("cycle lengths must be >= 3");
  }

  bool contains(int len) const { return std::binary_search(lengths.begin(), lengths.end(), len); }

  /// Accepts "c3", "c4", "c3c4", "c5" and comma lists such as "c3,c4".
  static CycleFamily parse(std::string_view text) {
    std::vector<int> ls;
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == ',' || text[i] == ' ') {
        ++i;
        continue;
      }
      if (text[i] != 'c' && text[i] != 'C')
        throw InvalidInput("malformed cycle family '" + std::string(text) + "'");
      std::size_t j = ++i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9')
        ++j;
      if (j == i || j - i > 6)
        throw InvalidInput("malformed cycle family '" + std::string(text) + "'");
      ls.push_back(std::stoi(std::string(text.substr(i, j - i))));
      i = j;
    }
    return CycleFamily(std::move(ls));
  }

  /// "c3c4" style name.
  std::string name() const {
    std::string out;
    for (int l : lengths)
      out += "c" + std::to_string(l);
    return out;
  }

  friend bool operator==(const CycleFamily &, const CycleFamily &) = default;
};

} // namespace antiramsey
