#include "vtri/alexander.hpp"

#include <numeric>
#include <string>

#include "vtri/error.hpp"

namespace vtri {

namespace {

int mod(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void require_modulus(int m) {
  if (m < 2) throw ValidationError("modulus must be at least 2, got " + std::to_string(m));
}

void require_unit(const char* name, int a, int m) {
  if (!is_unit_mod(a, m))
    throw ValidationError(std::string(name) + "=" + std::to_string(a) + " is not a unit mod " +
                          std::to_string(m));
}

}  // namespace

bool is_unit_mod(int a, int m) { return m >= 2 && std::gcd(mod(a, m), m) == 1; }

int inverse_mod(int a, int m) {
  require_modulus(m);
  // Extended Euclid on (a mod m, m).
  long long old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1)
    throw ValidationError(std::to_string(a) + " is not a unit mod " + std::to_string(m));
  return mod(old_s, m);
}

void check_classical_params(const AlexanderParams& p) {
  require_modulus(p.modulus);
  require_unit("x", p.x, p.modulus);
  require_unit("y", p.y, p.modulus);
}

void check_virtual_params(const AlexanderParams& p) {
  check_classical_params(p);
  require_unit("v", p.v, p.modulus);
  const int m = p.modulus;
  const int lhs = mod(1 + static_cast<long long>(p.x) * p.y, m);
  const int rhs =
      mod(static_cast<long long>(inverse_mod(p.v, m)) * p.x + static_cast<long long>(p.v) * p.y, m);
  if (lhs != rhs)
    throw ValidationError("side condition 1+xy = v^-1 x + v y fails mod " + std::to_string(m) +
                          ": left side " + std::to_string(lhs) + ", right side " +
                          std::to_string(rhs));
}

TernaryTable alexander_classical(int modulus, int x, int y) {
  check_classical_params({modulus, x, y, 1});
  const long long cx = mod(x, modulus), cy = mod(y, modulus);
  // xa - xyb + yc: the first argument is scaled by x, not xy.
  const long long cb = mod(-cx * cy, modulus);
  return TernaryTable::from_function(modulus, [&](Element a, Element b, Element c) {
    return mod(cx * (a - 1) + cb * (b - 1) + cy * (c - 1), modulus) + 1;
  });
}

TernaryTable alexander_virtual_table(int modulus, int v) {
  require_modulus(modulus);
  require_unit("v", v, modulus);
  const long long cv = mod(v, modulus), cinv = inverse_mod(v, modulus);
  return TernaryTable::from_function(modulus, [&](Element a, Element b, Element c) {
    return mod(cv * (a - 1) - (b - 1) + cinv * (c - 1), modulus) + 1;
  });
}

VirtualTribracket virtual_alexander(int modulus, int x, int y, int v) {
  check_virtual_params({modulus, x, y, v});
  return VirtualTribracket(alexander_classical(modulus, x, y),
                           alexander_virtual_table(modulus, v))
      .verified();
}

}  // namespace vtri
