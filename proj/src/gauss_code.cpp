#include "vtri/gauss_code.hpp"

#include <cctype>
#include <map>

#include "vtri/error.hpp"

namespace vtri {

int GaussCode::crossing_count() const noexcept {
  int k = 0;
  for (const auto& comp : components)
    for (const auto& s : comp) k = std::max(k, s.crossing);
  return k;
}

std::string GaussCode::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ',';
    if (components[i].empty()) {
      out += 'o';
      continue;
    }
    for (const GaussSymbol& s : components[i]) {
      out += s.passage == Passage::Over ? 'O' : 'U';
      out += std::to_string(s.crossing);
      out += s.sign == Sign::Positive ? '+' : '-';
    }
  }
  return out;
}

GaussCode normalized(GaussCode code) {
  std::map<int, int> renumber;
  for (auto& comp : code.components)
    for (auto& s : comp) {
      auto [it, fresh] = renumber.try_emplace(s.crossing, static_cast<int>(renumber.size()) + 1);
      s.crossing = it->second;
    }
  return code;
}

GaussCode parse_gauss(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) throw ParseError("empty Gauss code");

  GaussCode code;
  code.components.emplace_back();
  bool explicit_loop = false;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("Gauss code '" + compact + "' at position " + std::to_string(i + 1) + ": " +
                     what);
  };
  while (i < compact.size()) {
    const char ch = compact[i];
    if (ch == ',') {
      if (code.components.back().empty() && !explicit_loop) fail("empty component (use 'o')");
      code.components.emplace_back();
      explicit_loop = false;
      ++i;
      continue;
    }
    if (ch == 'o') {
      if (!code.components.back().empty() || explicit_loop) fail("'o' must stand alone");
      explicit_loop = true;
      ++i;
      continue;
    }
    if (explicit_loop) fail("'o' must stand alone");
    if (ch != 'O' && ch != 'U') fail(std::string("bad token '") + ch + "'");
    GaussSymbol s;
    s.passage = ch == 'O' ? Passage::Over : Passage::Under;
    std::size_t j = ++i;
    while (j < compact.size() && std::isdigit(static_cast<unsigned char>(compact[j]))) ++j;
    if (j == i || j - i > 6) fail("expected a crossing number");
    s.crossing = std::stoi(compact.substr(i, j - i));
    if (s.crossing < 1) fail("crossing numbers are positive");
    i = j;
    if (i >= compact.size() || (compact[i] != '+' && compact[i] != '-'))
      fail("expected '+' or '-' after crossing number");
    s.sign = compact[i] == '+' ? Sign::Positive : Sign::Negative;
    ++i;
    code.components.back().push_back(s);
  }
  if (code.components.back().empty() && !explicit_loop) fail("empty component (use 'o')");

  struct Seen {
    int over = 0, under = 0;
    Sign sign = Sign::Positive;
  };
  std::map<int, Seen> seen;
  for (const auto& comp : code.components)
    for (const GaussSymbol& s : comp) {
      auto [it, fresh] = seen.try_emplace(s.crossing, Seen{0, 0, s.sign});
      Seen& entry = it->second;
      if (!fresh && entry.sign != s.sign)
        throw ParseError("Gauss code '" + compact + "': crossing " + std::to_string(s.crossing) +
                         " has mismatched signs");
      (s.passage == Passage::Over ? entry.over : entry.under) += 1;
      if (entry.over > 1 || entry.under > 1)
        throw ParseError("Gauss code '" + compact + "': crossing " + std::to_string(s.crossing) +
                         " has the same passage twice");
    }
  for (const auto& [id, entry] : seen)
    if (entry.over != 1 || entry.under != 1)
      throw ParseError("Gauss code '" + compact + "': crossing " + std::to_string(id) +
                       " is unmatched");
  return normalized(std::move(code));
}

}  // namespace vtri
