#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vtri/diagram.hpp"
#include "vtri/faces.hpp"
#include "vtri/tribracket.hpp"

namespace vtri {

inline constexpr std::uint64_t kBruteForceLimit = 100'000'000;

// Regions and crossing relations of a diagram: [a,b,c] = d at classical
// crossings and <a,b,c> = d at virtual ones.
struct ColoringProblem {
  int regions = 0;
  std::vector<CrossingRoles> roles;
};

ColoringProblem coloring_problem(const Diagram& d, RoleConvention convention = kRoleConvention);

struct ColoringCount {
  std::uint64_t count = 0;
  // One entry per coloring, each indexed by region id.
  std::optional<std::vector<std::vector<Element>>> colorings;
};

struct CountOptions {
  bool materialize = false;
  RoleConvention convention = kRoleConvention;
};

// Backtracking with propagation. Requires a verified structure
// (ValidationError otherwise).
ColoringCount count_colorings(const ColoringProblem& problem, const VirtualTribracket& v,
                              bool materialize = false);
ColoringCount count_colorings(const Diagram& d, const VirtualTribracket& v,
                              const CountOptions& options = {});

// Exhaustive enumeration of all n^regions assignments. Throws ValidationError
// when n^regions exceeds kBruteForceLimit.
ColoringCount brute_force_count(const ColoringProblem& problem, const VirtualTribracket& v,
                                bool materialize = false);
ColoringCount brute_force_count(const Diagram& d, const VirtualTribracket& v,
                                const CountOptions& options = {});

// True when `coloring` (indexed by region) satisfies every crossing relation.
bool satisfies(const ColoringProblem& problem, const VirtualTribracket& v,
               std::span<const Element> coloring);

}  // namespace vtri
