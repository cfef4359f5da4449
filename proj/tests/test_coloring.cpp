#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vtri/alexander.hpp"
#include "vtri/coloring.hpp"
#include "vtri/error.hpp"
#include "vtri/knot_table.hpp"
#include "vtri/modular.hpp"

using namespace vtri;

namespace {

Diagram from_file(const std::string& rel) {
  std::ifstream in(oracle::data(rel));
  std::ostringstream s;
  s << in.rdbuf();
  return parse_diagram(s.str());
}

std::vector<Diagram> bundled_diagrams() {
  std::vector<Diagram> out;
  for (const char* t : {"knots.tsv", "links.tsv"})
    for (const auto& e : load_table(oracle::data(t)).entries) out.push_back(realize(e.code));
  out.push_back(from_file("diagrams/hopf.dia"));
  out.push_back(from_file("diagrams/knot3_7.dia"));
  out.push_back(realize(parse_gauss("O1+U1+")));
  return out;
}

std::vector<VirtualTribracket> order_four() {
  return {fixtures::tensor("table4"), fixtures::tensor("orient4")};
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("trivial values on unlinks") {
  std::vector<VirtualTribracket> all = fixtures::small_structures();
  for (auto& s : order_four()) all.push_back(s);
  for (int k = 1; k <= 3; ++k) {
    std::string code = "o";
    for (int i = 1; i < k; ++i) code += ",o";
    Diagram d = realize(parse_gauss(code));
    for (const auto& s : all) CHECK(count_colorings(d, s).count == ipow(static_cast<std::uint64_t>(s.order()), k + 1));
  }
  CHECK(count_colorings(realize(parse_gauss("o")), fixtures::tensor("example3")).count == 9);
  CHECK(count_colorings(realize(parse_gauss("o,o")), fixtures::tensor("hopf3")).count == 27);
  CHECK(brute_force_count(realize(parse_gauss("o")), fixtures::tensor("table4")).count == 16);
}

TEST_CASE("Hopf link has no colorings") {
  Diagram hopf = from_file("diagrams/hopf.dia");
  auto v = fixtures::tensor("hopf3");
  CHECK(count_colorings(hopf, v).count == 0);
  CHECK(brute_force_count(hopf, v).count == 0);
  // every orientation of the virtual Hopf link
  for (int c = 0; c < 2; ++c) CHECK(count_colorings(reverse_component(hopf, c), v).count == 0);
  // the classical Hopf link does have colorings
  CHECK(count_colorings(braid_closure(2, "s1 s1"), v).count == 27);
}

TEST_CASE("knot 3.7 over Z_3") {
  auto v = virtual_alexander(3, 1, 2, 2);
  Diagram code = realize(parse_gauss("O1-U2-O3+U1-O2-U3+"));
  Diagram fixed = from_file("diagrams/knot3_7.dia");
  for (const Diagram* d : {&code, &fixed}) {
    CHECK(count_colorings(*d, v).count == 27);
    CHECK(brute_force_count(*d, v).count == 27);
    CHECK(count_alexander(*d, {3, 1, 2, 2}).count == 27);
  }
  CHECK(count_alexander(realize(parse_gauss("o")), {3, 1, 2, 2}).count == 9);
}

TEST_CASE("propagation agrees with the oracles") {
  std::vector<VirtualTribracket> all = fixtures::small_structures();
  for (auto& s : order_four()) all.push_back(s);
  for (const Diagram& d : bundled_diagrams()) {
    auto problem = coloring_problem(d);
    for (const auto& s : all) {
      if (ipow(static_cast<std::uint64_t>(s.order()), problem.regions) > 2'000'000) continue;
      const auto fast = count_colorings(d, s).count;
      CHECK(fast == oracle::count_by_assignment(problem, s));
      CHECK(fast == brute_force_count(d, s).count);
    }
  }
}

TEST_CASE("materialized colorings satisfy every relation") {
  auto v = virtual_alexander(3, 1, 2, 2);
  Diagram d = realize(parse_gauss("O1-U2-O3+U1-O2-U3+"));
  auto problem = coloring_problem(d);
  auto res = count_colorings(d, v, {true, kRoleConvention});
  REQUIRE(res.colorings);
  CHECK(res.colorings->size() == res.count);
  std::set<std::vector<Element>> distinct(res.colorings->begin(), res.colorings->end());
  CHECK(distinct.size() == res.count);
  for (const auto& c : *res.colorings) {
    CHECK(c.size() == static_cast<std::size_t>(problem.regions));
    CHECK(satisfies(problem, v, c));
    for (const auto& r : problem.roles) {
      const auto at = [&](int region) { return c[static_cast<std::size_t>(region)]; };
      const auto& t = r.is_virtual ? v.virtual_table() : v.classical();
      CHECK(t(at(r.a), at(r.b), at(r.c)) == at(r.d));
    }
  }
}

TEST_CASE("unverified structures and the size guard") {
  auto raw = read_virtual_tribracket(oracle::data("tensors/example3.tri"));
  CHECK_THROWS_AS(count_colorings(realize(parse_gauss("o")), raw), ValidationError);

  // 3^17 assignments exceed the guard
  std::string code = "o";
  for (int i = 0; i < 16; ++i) code += ",o";
  CHECK_THROWS_AS(brute_force_count(realize(parse_gauss(code)), fixtures::tensor("example3")), ValidationError);
}

TEST_CASE("linear path agrees with the generic counter") {
  std::vector<std::array<int, 4>> params;
  for (int m = 2; m <= 5; ++m)
    for (int x = 1; x < m; ++x)
      for (int y = 1; y < m; ++y)
        for (int v = 1; v < m; ++v) {
          if (!is_unit_mod(x, m) || !is_unit_mod(y, m) || !is_unit_mod(v, m)) continue;
          if (oracle::mod(1 + x * y, m) != oracle::mod(oracle::inverse(v, m) * x + v * y, m)) continue;
          params.push_back({m, x, y, v});
        }
  for (const Diagram& d : bundled_diagrams())
    for (const auto& [m, x, y, v] : params) {
      const AlexanderParams p{m, x, y, v};
      CHECK(count_alexander(d, p).count == count_colorings(d, virtual_alexander(p)).count);
    }
  CHECK_THROWS_AS(count_alexander(realize(parse_gauss("o")), {3, 1, 1, 2}), ValidationError);
}
