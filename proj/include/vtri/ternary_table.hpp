#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace vtri {

// An element of the carrier set {1..n}.
using Element = int;

// One ternary operation on {1..n}, stored as n matrices of size n x n:
// the value of (a, b, c) sits in matrix a, row b, column c.
class TernaryTable {
 public:
  TernaryTable() = default;

  // `entries` is the flattened tensor in (a, b, c) lexicographic order.
  // Throws ValidationError on a bad size or an entry outside 1..n.
  TernaryTable(int order, std::vector<Element> entries);

  static TernaryTable from_function(
      int order, const std::function<Element(Element, Element, Element)>& op);

  int order() const noexcept { return order_; }

  Element operator()(Element a, Element b, Element c) const noexcept {
    return entries_[index(a, b, c)];
  }

  std::span<const Element> entries() const noexcept { return entries_; }

  std::size_t index(Element a, Element b, Element c) const noexcept {
    const auto n = static_cast<std::size_t>(order_);
    return ((static_cast<std::size_t>(a) - 1) * n + static_cast<std::size_t>(b) - 1) * n +
           static_cast<std::size_t>(c) - 1;
  }

  friend bool operator==(const TernaryTable&, const TernaryTable&) = default;
  friend auto operator<=>(const TernaryTable&, const TernaryTable&) = default;

 private:
  int order_ = 0;
  std::vector<Element> entries_;
};

}  // namespace vtri
