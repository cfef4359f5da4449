#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace vtri {

enum class Passage { Over, Under };
enum class Sign { Positive, Negative };

struct GaussSymbol {
  int crossing = 0;  // 1-based id
  Passage passage = Passage::Over;
  Sign sign = Sign::Positive;

  friend bool operator==(const GaussSymbol&, const GaussSymbol&) = default;
};

// One symbol sequence per component; an empty sequence is a crossingless
// circle. Crossing ids are 1..k in order of first appearance.
struct GaussCode {
  std::vector<std::vector<GaussSymbol>> components;

  int crossing_count() const noexcept;
  std::string to_string() const;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

// Grammar: components separated by ','; a component is 'o' or a sequence of
// ('O'|'U') digits ('+'|'-'). Whitespace is ignored. Ids are renumbered by
// first appearance. Throws ParseError on bad tokens, ids that do not appear
// exactly once over and once under, or mismatched signs.
GaussCode parse_gauss(std::string_view text);

// Renumbers crossing ids by first appearance.
GaussCode normalized(GaussCode code);

}  // namespace vtri
