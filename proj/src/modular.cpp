#include "vtri/modular.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "vtri/error.hpp"

namespace vtri {

using boost::multiprecision::cpp_int;

namespace {

int mod(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::uint64_t checked_pow_mul(std::uint64_t acc, std::uint64_t base, long long exp) {
  for (long long i = 0; i < exp; ++i) {
    if (base != 0 && acc > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("kernel size exceeds 64 bits");
    acc *= base;
  }
  return acc;
}

}  // namespace

ModularSystem ModularSystem::from_rows(int modulus, int cols, std::vector<std::vector<int>> rows) {
  if (modulus < 2) throw ValidationError("modulus must be at least 2");
  ModularSystem s;
  s.modulus = modulus;
  s.cols = cols;
  s.rows = static_cast<int>(rows.size());
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != cols)
      throw ValidationError("matrix row has " + std::to_string(row.size()) + " entries, expected " +
                            std::to_string(cols));
    for (int& e : row) e = mod(e, modulus);
  }
  s.matrix = std::move(rows);
  return s;
}

ModularSystem build_modular_system(const Diagram& d, const AlexanderParams& p,
                                   RoleConvention convention) {
  check_virtual_params(p);
  const int m = p.modulus;
  const FaceSet f = faces(d);
  const auto roles = crossing_roles(d, f, convention);
  const int vinv = inverse_mod(p.v, m);
  std::vector<std::vector<int>> rows;
  for (const CrossingRoles& r : roles) {
    std::vector<long long> row(static_cast<std::size_t>(f.region_count), 0);
    if (r.is_virtual) {
      row[static_cast<std::size_t>(r.a)] += p.v;
      row[static_cast<std::size_t>(r.b)] -= 1;
      row[static_cast<std::size_t>(r.c)] += vinv;
    } else {
      row[static_cast<std::size_t>(r.a)] += p.x;
      row[static_cast<std::size_t>(r.b)] -= static_cast<long long>(p.x) * p.y;
      row[static_cast<std::size_t>(r.c)] += p.y;
    }
    row[static_cast<std::size_t>(r.d)] -= 1;
    std::vector<int> reduced;
    for (long long e : row) reduced.push_back(mod(e, m));
    rows.push_back(std::move(reduced));
  }
  return ModularSystem::from_rows(m, f.region_count, std::move(rows));
}

std::vector<cpp_int> smith_diagonal(const std::vector<std::vector<int>>& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows ? input.front().size() : 0;
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = input[i][j];

  std::vector<cpp_int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Repeatedly move the smallest nonzero entry of the trailing block to
    // (t, t) and clear its row and column by division.
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return diag;  // trailing block is zero
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const cpp_int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const cpp_int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any trailing entry not divisible by the pivot into
      // row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::uint64_t kernel_size(const ModularSystem& system) {
  const auto diag = smith_diagonal(system.matrix);
  const auto m = static_cast<std::uint64_t>(system.modulus);
  std::uint64_t count = checked_pow_mul(1, m, system.cols - static_cast<long long>(diag.size()));
  for (const cpp_int& s : diag) {
    const cpp_int g = boost::multiprecision::gcd(s, cpp_int(system.modulus));
    count = checked_pow_mul(count, g.convert_to<std::uint64_t>(), 1);
  }
  return count;
}

bool is_prime(int m) {
  if (m < 2) return false;
  for (int f = 2; f * f <= m; ++f)
    if (m % f == 0) return false;
  return true;
}

std::uint64_t kernel_size_prime(const ModularSystem& system) {
  const int p = system.modulus;
  if (!is_prime(p)) throw ValidationError("row reduction path needs a prime modulus");
  auto a = system.matrix;
  int rank = 0;
  for (int col = 0; col < system.cols && rank < system.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < system.rows; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        pivot = i;
        break;
      }
    if (pivot == -1) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
    auto& prow = a[static_cast<std::size_t>(rank)];
    const int inv = inverse_mod(prow[static_cast<std::size_t>(col)], p);
    for (int& e : prow) e = mod(static_cast<long long>(e) * inv, p);
    for (int i = 0; i < system.rows; ++i) {
      if (i == rank) continue;
      auto& row = a[static_cast<std::size_t>(i)];
      const int f = row[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j)
        row[j] = mod(row[j] - static_cast<long long>(f) * prow[j], p);
    }
    ++rank;
  }
  return checked_pow_mul(1, static_cast<std::uint64_t>(p), system.cols - rank);
}

ColoringCount count_alexander(const Diagram& d, const AlexanderParams& p,
                              RoleConvention convention) {
  return {kernel_size(build_modular_system(d, p, convention)), std::nullopt};
}

}  // namespace vtri
