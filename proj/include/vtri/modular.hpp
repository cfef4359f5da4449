#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vtri/alexander.hpp"
#include "vtri/coloring.hpp"
#include "vtri/diagram.hpp"
#include "vtri/faces.hpp"

namespace vtri {

// Homogeneous linear system over Z_m: one row per crossing, one column per
// region, entries in 0..m-1.
struct ModularSystem {
  int modulus = 0;
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> matrix;

  static ModularSystem from_rows(int modulus, int cols, std::vector<std::vector<int>> rows);
};

// Classical rows: x a - xy b + y c - d; virtual rows: v a - b + v^-1 c - d.
// Coefficients of a region occupying several roles are summed.
ModularSystem build_modular_system(const Diagram& d, const AlexanderParams& p,
                                   RoleConvention convention = kRoleConvention);

// Nonzero diagonal entries of the Smith normal form of the integer lift,
// each dividing the next.
std::vector<boost::multiprecision::cpp_int> smith_diagonal(const std::vector<std::vector<int>>& m);

// |{x in Z_m^cols : Mx = 0}| = m^(cols - r) * prod gcd(s_i, m) over the Smith
// diagonal. Throws std::overflow_error beyond 64 bits.
std::uint64_t kernel_size(const ModularSystem& system);

// Row reduction over F_p; requires a prime modulus.
std::uint64_t kernel_size_prime(const ModularSystem& system);

bool is_prime(int m);

// Linear path: validates the parameters and counts via kernel_size.
ColoringCount count_alexander(const Diagram& d, const AlexanderParams& p,
                              RoleConvention convention = kRoleConvention);

}  // namespace vtri
