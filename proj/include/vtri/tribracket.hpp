#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "vtri/ternary_table.hpp"

namespace vtri {

inline constexpr std::size_t kDefaultViolationCap = 16;

// Names of the quantified identities, in the order they are checked.
enum class Identity {
  VirtualInvolution,      // <a,<a,b,c>,c> = b
  ClassicalLeft,          // [a,b,[b,c,d]] = [a,[a,b,c],[[a,b,c],c,d]]
  ClassicalRight,         // [[a,b,c],c,d] = [[a,b,[b,c,d]],[b,c,d],d]
  VirtualLeft,            // same as ClassicalLeft with <,,>
  VirtualRight,           // same as ClassicalRight with <,,>
  MixedLeft,              // [a,b,<b,c,d>] = <a,<a,b,c>,[<a,b,c>,c,d]>
  MixedRight,             // [<a,b,c>,c,d] = <[a,b,<b,c,d>],<b,c,d>,d>
};

std::string to_string(Identity id);

struct Violation {
  Identity identity;
  std::array<Element, 4> tuple;  // (a, b, c, d); d unused for VirtualInvolution
  Element lhs;
  Element rhs;
};

class VirtualTribracket {
 public:
  VirtualTribracket() = default;
  // Throws ValidationError when the two orders differ. Does not verify axioms.
  VirtualTribracket(TernaryTable classical, TernaryTable virtual_table);

  int order() const noexcept { return classical_.order(); }
  const TernaryTable& classical() const noexcept { return classical_; }
  const TernaryTable& virtual_table() const noexcept { return virtual_; }

  // Set only by verified() below and by the constructors that guarantee it.
  bool is_verified() const noexcept { return verified_; }

  // Returns a copy flagged verified; throws ValidationError listing the first
  // violation when any axiom fails.
  VirtualTribracket verified() const;

  friend bool operator==(const VirtualTribracket& l, const VirtualTribracket& r) {
    return l.classical_ == r.classical_ && l.virtual_ == r.virtual_;
  }

 private:
  TernaryTable classical_;
  TernaryTable virtual_;
  bool verified_ = false;
};

// Every unary slice obtained by fixing two of the three argument positions is
// a permutation of {1..n} (a Latin cube).
bool is_three_determined(const TernaryTable& t);

// Checks the two classical identities over all (a, b, c, d).
// Throws ValidationError when `t` is not three-determined.
std::vector<Violation> check_classical_axioms(const TernaryTable& t,
                                              std::size_t cap = kDefaultViolationCap);

// Checks all seven identities of a virtual tribracket.
// Throws ValidationError when either table is not three-determined.
std::vector<Violation> check_virtual_axioms(const VirtualTribracket& v,
                                            std::size_t cap = kDefaultViolationCap);

struct VerifyReport {
  bool classical_three_determined = false;
  bool virtual_three_determined = false;
  std::vector<Violation> violations;

  bool verified() const noexcept {
    return classical_three_determined && virtual_three_determined && violations.empty();
  }
};

VerifyReport verify(const VirtualTribracket& v, std::size_t cap = kDefaultViolationCap);

std::string describe(const VerifyReport& report);

// Solves T(a, b, c) = d for one argument given the other three.
class InverseTables {
 public:
  // Throws ValidationError when `t` is not three-determined.
  explicit InverseTables(const TernaryTable& t);

  int order() const noexcept { return order_; }

  // slot1(b, c, d) = a, slot2(a, c, d) = b, slot3(a, b, d) = c.
  Element slot1(Element b, Element c, Element d) const noexcept { return s1_[idx(b, c, d)]; }
  Element slot2(Element a, Element c, Element d) const noexcept { return s2_[idx(a, c, d)]; }
  Element slot3(Element a, Element b, Element d) const noexcept { return s3_[idx(a, b, d)]; }

 private:
  std::size_t idx(Element x, Element y, Element z) const noexcept {
    const auto n = static_cast<std::size_t>(order_);
    return ((static_cast<std::size_t>(x) - 1) * n + static_cast<std::size_t>(y) - 1) * n +
           static_cast<std::size_t>(z) - 1;
  }

  int order_;
  std::vector<Element> s1_, s2_, s3_;
};

inline InverseTables invert(const TernaryTable& t) { return InverseTables(t); }

}  // namespace vtri
