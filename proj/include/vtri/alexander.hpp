#pragma once

#include "vtri/ternary_table.hpp"
#include "vtri/tribracket.hpp"

namespace vtri {

// Parameters of an Alexander structure over Z_m. Element i of the carrier
// encodes the residue i - 1.
struct AlexanderParams {
  int modulus = 0;
  int x = 0;
  int y = 0;
  int v = 0;  // only used by the virtual structure
};

// Multiplicative inverse of a mod m; throws ValidationError if a is not a unit.
int inverse_mod(int a, int m);

bool is_unit_mod(int a, int m);

// Throws ValidationError unless m >= 2 and x, y are units.
void check_classical_params(const AlexanderParams& p);

// Additionally requires v to be a unit and 1 + xy = v^-1 x + v y (mod m).
void check_virtual_params(const AlexanderParams& p);

// [a,b,c] = xa - xyb + yc over Z_m.
TernaryTable alexander_classical(int modulus, int x, int y);

// <a,b,c> = va - b + v^-1 c over Z_m.
TernaryTable alexander_virtual_table(int modulus, int v);

// Classical and virtual Alexander tables; the result is cross-checked with
// verify() and returned flagged verified.
VirtualTribracket virtual_alexander(int modulus, int x, int y, int v);

inline VirtualTribracket virtual_alexander(const AlexanderParams& p) {
  return virtual_alexander(p.modulus, p.x, p.y, p.v);
}

}  // namespace vtri
