#include <doctest.h>

#include <fstream>
#include <set>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vtri/coloring.hpp"
#include "vtri/diagram.hpp"
#include "vtri/error.hpp"
#include "vtri/faces.hpp"
#include "vtri/gauss_code.hpp"
#include "vtri/knot_table.hpp"

using namespace vtri;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void check_euler(const Diagram& d) {
  FaceSet f = faces(d);
  for (const auto& p : f.pieces) CHECK(p.crossings - p.edges + p.faces == 2);
  // every edge side lies in exactly one face
  std::vector<int> seen(static_cast<std::size_t>(2 * d.edge_count()), 0);
  for (const auto& face : f.faces)
    for (const EdgeSide& es : face)
      ++seen[static_cast<std::size_t>(2 * es.edge + (es.side == Side::Left ? 0 : 1))];
  for (int s : seen) CHECK(s == 1);
}

}  // namespace

TEST_CASE("gauss code parsing") {
  auto o = parse_gauss("o");
  REQUIRE(o.components.size() == 1);
  CHECK(o.components[0].empty());
  CHECK(o.crossing_count() == 0);

  auto kink = parse_gauss("O1+U1+");
  CHECK(kink.components.size() == 1);
  CHECK(kink.crossing_count() == 1);

  auto vt = parse_gauss("O1-O2+U1-U2+");
  CHECK(vt.crossing_count() == 2);
  CHECK(vt.to_string() == "O1-O2+U1-U2+");

  // renumbered by first appearance
  CHECK(parse_gauss("O7-U3+U7-O3+").to_string() == "O1-U2+U1-O2+");
  CHECK(parse_gauss(" O1+ U2- , U1+ O2- ").to_string() == "O1+U2-,U1+O2-");

  CHECK_THROWS_AS(parse_gauss("O1+O1+"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1+U1-"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1+"), ParseError);
  CHECK_THROWS_AS(parse_gauss("X1+U1+"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1U1"), ParseError);
  CHECK_THROWS_AS(parse_gauss(""), ParseError);
}

TEST_CASE("faces of small diagrams") {
  Diagram circle = realize(parse_gauss("o"));
  CHECK(circle.crossing_count() == 0);
  CHECK(circle.free_loop_count() == 1);
  CHECK(faces(circle).region_count == 2);
  CHECK(crossing_roles(circle, faces(circle)).empty());

  Diagram kink = realize(parse_gauss("O1+U1+"));
  CHECK(kink.crossing_count() == 1);
  FaceSet f = faces(kink);
  CHECK(f.region_count == 3);
  auto roles = crossing_roles(kink, f);
  REQUIRE(roles.size() == 1);
  std::set<int> distinct{roles[0].a, roles[0].b, roles[0].c, roles[0].d};
  CHECK(distinct.size() == 3);

  Diagram unlink3 = realize(parse_gauss("o,o,o"));
  CHECK(faces(unlink3).region_count == 4);

  Diagram hopf = parse_diagram(slurp(oracle::data("diagrams/hopf.dia")));
  CHECK(hopf.crossing_count() == 2);
  CHECK(hopf.edge_count() == 4);
  CHECK(faces(hopf).region_count == 4);
  CHECK(hopf.component_count() == 2);

  Diagram k37 = parse_diagram(slurp(oracle::data("diagrams/knot3_7.dia")));
  CHECK(k37.crossing_count() == 5);
  CHECK(faces(k37).region_count == 7);
}

TEST_CASE("realize round trip and Euler") {
  auto table = load_table(oracle::data("knots.tsv"));
  auto links = load_table(oracle::data("links.tsv"));
  std::vector<GaussCode> codes;
  for (const auto& e : table.entries) codes.push_back(e.code);
  for (const auto& e : links.entries) codes.push_back(e.code);
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) codes.push_back(fixtures::random_code(rng, 1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3)));

  for (const auto& g : codes) {
    CAPTURE(g.to_string());
    for (bool rev : {false, true}) {
      Diagram d = realize(g, {rev});
      CHECK(traverse(d) == g);
      CHECK(d.classical_count() == g.crossing_count());
      check_euler(d);
    }
  }
}

TEST_CASE("diagram file format") {
  Diagram hopf = parse_diagram(slurp(oracle::data("diagrams/hopf.dia")));
  CHECK(parse_diagram(format_diagram(hopf)) == hopf);

  Diagram d = realize(parse_gauss("O1-U2-O3+U1-O2-U3+,o"));
  CHECK(parse_diagram(format_diagram(d)) == d);

  const std::string good = "crossing 1 V\ncrossing 2 P\nedge 1 1.0 2.1\nedge 2 2.3 1.2\nedge 3 1.1 2.0\nedge 4 2.2 1.3\n";
  CHECK_NOTHROW(parse_diagram(good));
  // slot 2.1 referenced twice
  CHECK_THROWS_AS(parse_diagram("crossing 1 V\ncrossing 2 P\nedge 1 1.0 2.1\nedge 2 2.3 2.1\nedge 3 1.1 2.0\nedge 4 2.2 1.3\n"),
                  ParseError);
  // dangling slot
  CHECK_THROWS_AS(parse_diagram("crossing 1 V\ncrossing 2 P\nedge 1 1.0 2.1\nedge 2 2.3 1.2\nedge 3 1.1 2.0\n"), ParseError);
  // in/out inconsistency: both strand ends outbound at crossing 1
  CHECK_THROWS_AS(parse_diagram("crossing 1 V\ncrossing 2 P\nedge 1 1.0 2.1\nedge 2 1.2 2.3\nedge 3 2.0 1.1\nedge 4 2.2 1.3\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram("crossing 1 Q\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("edge 1 1.0 1.2\n"), ParseError);
  CHECK(faces(parse_diagram("loop\nloop\n")).region_count == 3);
}

TEST_CASE("reverse component") {
  Diagram d = realize(parse_gauss("O1+O2+,U1+O3+U2+U3+"));
  Diagram r = reverse_component(d, 1);
  CHECK_FALSE(r == d);
  CHECK(reverse_component(r, 1) == d);
  // crossings 1 and 2 join the two components and change sign; 3 is a self crossing
  CHECK(r.kind(0) == CrossingKind::Negative);
  CHECK(r.kind(1) == CrossingKind::Negative);
  CHECK(r.kind(2) == CrossingKind::Positive);
  CHECK_THROWS_AS(reverse_component(d, 2), ValidationError);

  Diagram circle = realize(parse_gauss("o"));
  Diagram rc = reverse_component(circle, 0);
  for (const auto& s : fixtures::small_structures())
    CHECK(count_colorings(rc, s).count == count_colorings(circle, s).count);
}

TEST_CASE("one all-inbound quadrant per crossing") {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    Diagram d = realize(fixtures::random_code(rng, 4, 2));
    FaceSet f = faces(d);
    auto roles = crossing_roles(d, f);
    for (int c = 0; c < d.crossing_count(); ++c) {
      const Crossing& x = d.crossing(c);
      int inbound = 0;
      for (int q = 0; q < 4; ++q)
        if (!x.outbound[static_cast<std::size_t>(q)] && !x.outbound[static_cast<std::size_t>((q + 1) % 4)]) ++inbound;
      CHECK(inbound == 1);
      // b sits in the all-inbound quadrant, d opposite
      const int q = roles[static_cast<std::size_t>(c)].inbound_quadrant;
      const auto& quad = f.quadrant_region[static_cast<std::size_t>(c)];
      const auto& r = roles[static_cast<std::size_t>(c)];
      if (d.kind(c) == CrossingKind::Negative) {
        CHECK(r.d == quad[static_cast<std::size_t>(q)]);
        CHECK(r.b == quad[static_cast<std::size_t>((q + 2) % 4)]);
      } else {
        CHECK(r.b == quad[static_cast<std::size_t>(q)]);
        CHECK(r.d == quad[static_cast<std::size_t>((q + 2) % 4)]);
      }
    }
  }
}

TEST_CASE("move invariance") {
  const auto& structures = fixtures::small_structures();
  REQUIRE(structures.size() == 29);
  for (const auto& m : fixtures::move_pairs()) {
    for (const auto& mask : fixtures::reversal_masks()) {
      CAPTURE(m.name);
      CAPTURE(m.before);
      CAPTURE(m.after);
      CAPTURE(mask.size());
      Diagram b = braid_closure(m.strands_before, m.before, mask);
      Diagram a = braid_closure(m.strands_after, m.after, mask);
      for (const auto& s : structures) CHECK(count_colorings(b, s).count == count_colorings(a, s).count);
    }
  }
}

TEST_CASE("Reidemeister I from a code") {
  Diagram kink = realize(parse_gauss("O1+U1+"));
  Diagram kink_neg = realize(parse_gauss("U1-O1-"));
  Diagram circle = realize(parse_gauss("o"));
  for (const auto& s : fixtures::small_structures()) {
    CHECK(count_colorings(kink, s).count == count_colorings(circle, s).count);
    CHECK(count_colorings(kink_neg, s).count == count_colorings(circle, s).count);
  }
}

TEST_CASE("realization independence") {
  std::mt19937 rng(5);
  auto table = load_table(oracle::data("knots.tsv"));
  std::vector<GaussCode> codes;
  for (const auto& e : table.entries) codes.push_back(e.code);
  for (int i = 0; i < 25; ++i) codes.push_back(fixtures::random_code(rng, 1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 2)));
  for (const auto& g : codes) {
    CAPTURE(g.to_string());
    Diagram fwd = realize(g), rev = realize(g, {true});
    for (const auto& s : fixtures::small_structures())
      CHECK(count_colorings(fwd, s).count == count_colorings(rev, s).count);
  }
}

TEST_CASE("braid closure") {
  Diagram d = braid_closure(2, "s1 v1");
  CHECK(d.crossing_count() == 2);
  CHECK(d.component_count() == 2);
  CHECK(braid_closure(3, "s1").free_loop_count() == 1);
  CHECK_THROWS_AS(braid_closure(2, "s2"), ParseError);
  CHECK_THROWS_AS(braid_closure(2, "x1"), ParseError);
  CHECK_THROWS_AS(braid_closure(0, ""), ValidationError);
}
