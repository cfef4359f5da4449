#include "vtri/ternary_table.hpp"

#include <string>

#include "vtri/error.hpp"

namespace vtri {

TernaryTable::TernaryTable(int order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ < 1) throw ValidationError("table order must be positive");
  const auto n = static_cast<std::size_t>(order_);
  if (entries_.size() != n * n * n)
    throw ValidationError("table of order " + std::to_string(order_) + " needs " +
                          std::to_string(n * n * n) + " entries, got " +
                          std::to_string(entries_.size()));
  for (Element e : entries_)
    if (e < 1 || e > order_)
      throw ValidationError("table entry " + std::to_string(e) + " outside 1.." +
                            std::to_string(order_));
}

TernaryTable TernaryTable::from_function(
    int order, const std::function<Element(Element, Element, Element)>& op) {
  std::vector<Element> entries;
  entries.reserve(static_cast<std::size_t>(order) * order * order);
  for (Element a = 1; a <= order; ++a)
    for (Element b = 1; b <= order; ++b)
      for (Element c = 1; c <= order; ++c) entries.push_back(op(a, b, c));
  return TernaryTable(order, std::move(entries));
}

}  // namespace vtri
