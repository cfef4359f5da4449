#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "vtri/modular.hpp"

using namespace vtri;

namespace {

const std::vector<std::vector<int>> kPrinted = {{2, 2, 2, 2, 0, 0, 0},
                                                {0, 1, 2, 2, 1, 0, 0},
                                                {0, 1, 2, 0, 2, 1, 0},
                                                {0, 2, 2, 0, 0, 2, 2},
                                                {2, 1, 2, 0, 0, 0, 1}};

// Rows scaled so the first nonzero entry is 1 (mod 3).
std::vector<int> monic(std::vector<int> r) {
  for (int x : r)
    if (x) {
      if (x == 2)
        for (int& y : r) y = (2 * y) % 3;
      break;
    }
  return r;
}

bool same_up_to_permutation(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  if (a.size() != b.size() || a.empty() || a[0].size() != b[0].size()) return false;
  std::multiset<std::vector<int>> target;
  for (const auto& r : b) target.insert(monic(r));
  std::vector<std::size_t> perm(a[0].size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::multiset<std::vector<int>> rows;
    for (const auto& r : a) {
      std::vector<int> q(perm.size());
      for (std::size_t j = 0; j < perm.size(); ++j) q[j] = r[perm[j]];
      rows.insert(monic(q));
    }
    if (rows == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("kernel size examples") {
  CHECK(kernel_size(ModularSystem::from_rows(3, 1, {{0}})) == 3);
  CHECK(kernel_size(ModularSystem::from_rows(5, 2, {{1, 0}, {0, 1}})) == 1);
  CHECK(kernel_size(ModularSystem::from_rows(3, 7, kPrinted)) == 27);
  CHECK(kernel_size_prime(ModularSystem::from_rows(3, 7, kPrinted)) == 27);
  CHECK(oracle::kernel_by_search(kPrinted, 7, 3) == 27);
  // no rows: every vector
  CHECK(kernel_size(ModularSystem::from_rows(4, 3, {})) == 64);
  // 2x = 0 mod 6 has two solutions
  CHECK(kernel_size(ModularSystem::from_rows(6, 1, {{2}})) == 2);
}

TEST_CASE("smith diagonal divisibility") {
  auto s = smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 2);
  CHECK(s[1] == 6);
  CHECK(s[2] == 12);
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] % s[i - 1] == 0);
}

TEST_CASE("kernel size against exhaustive search") {
  std::mt19937 rng(17);
  for (int m : {2, 3, 4, 5, 6}) {
    for (int trial = 0; trial < 60; ++trial) {
      const int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
      std::vector<std::vector<int>> mat(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols)));
      for (auto& r : mat)
        for (int& x : r) x = static_cast<int>(rng() % static_cast<unsigned>(m));
      auto sys = ModularSystem::from_rows(m, cols, mat);
      CAPTURE(m);
      const auto want = oracle::kernel_by_search(mat, cols, m);
      CHECK(kernel_size(sys) == want);
      if (is_prime(m)) CHECK(kernel_size_prime(sys) == want);
    }
  }
  CHECK_THROWS(kernel_size_prime(ModularSystem::from_rows(6, 1, {{1}})));
}

TEST_CASE("modular systems of diagrams") {
  auto circle = build_modular_system(realize(parse_gauss("o")), {3, 1, 2, 2});
  CHECK(circle.rows == 0);
  CHECK(circle.cols == 2);
  CHECK(kernel_size(circle) == 9);

  auto kink = build_modular_system(realize(parse_gauss("O1+U1+")), {3, 1, 2, 2});
  CHECK(kink.rows == 1);
  CHECK(kink.cols == 3);
  CHECK(kernel_size(kink) == 9);
  CHECK(oracle::kernel_by_search(kink.matrix, 3, 3) == 9);

  std::ifstream in(oracle::data("diagrams/knot3_7.dia"));
  std::ostringstream text;
  text << in.rdbuf();
  auto sys = build_modular_system(parse_diagram(text.str()), {3, 1, 2, 2});
  CHECK(sys.rows == 5);
  CHECK(sys.cols == 7);
  CHECK(same_up_to_permutation(sys.matrix, kPrinted));
  CHECK(kernel_size(sys) == 27);

  auto realized = build_modular_system(realize(parse_gauss("O1-U2-O3+U1-O2-U3+")), {3, 1, 2, 2});
  CHECK(kernel_size(realized) == 27);
  CHECK(realized.cols == realized.rows + 2);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}
