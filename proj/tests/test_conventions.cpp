#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vtri/coloring.hpp"
#include "vtri/error.hpp"
#include "vtri/faces.hpp"
#include "vtri/modular.hpp"

using namespace vtri;

namespace {

bool passes_moves(RoleConvention conv) {
  for (const auto& m : fixtures::move_pairs())
    for (const auto& mask : fixtures::reversal_masks()) {
      Diagram b = braid_closure(m.strands_before, m.before, mask);
      Diagram a = braid_closure(m.strands_after, m.after, mask);
      for (const auto& s : fixtures::small_structures())
        if (count_colorings(b, s, {false, conv}).count != count_colorings(a, s, {false, conv}).count)
          return false;
    }
  return true;
}

bool reproduces_numbers(RoleConvention conv) {
  std::ifstream in(oracle::data("diagrams/hopf.dia"));
  std::ostringstream text;
  text << in.rdbuf();
  Diagram hopf = parse_diagram(text.str());
  Diagram k37 = realize(parse_gauss("O1-U2-O3+U1-O2-U3+"));
  return count_colorings(hopf, fixtures::tensor("hopf3"), {false, conv}).count == 0 &&
         count_colorings(k37, virtual_alexander(3, 1, 2, 2), {false, conv}).count == 27 &&
         count_alexander(k37, {3, 1, 2, 2}, conv).count == 27 &&
         count_colorings(k37, fixtures::tensor("table3"), {false, conv}).count == 27;
}

}  // namespace

TEST_CASE("role convention selection") {
  std::vector<RoleConvention> survivors;
  for (RoleConvention c : kAllRoleConventions) {
    CAPTURE(to_string(c));
    if (passes_moves(c) && reproduces_numbers(c)) survivors.push_back(c);
  }
  // the two survivors are plane mirrors of each other
  REQUIRE(survivors.size() == 2);
  CHECK(survivors[0] == RoleConvention::InboundSecondCwFlip);
  CHECK(survivors[1] == RoleConvention::InboundSecondCcwFlip);
  CHECK(kRoleConvention == RoleConvention::InboundSecondCwFlip);
}

TEST_CASE("convention names") {
  for (RoleConvention c : kAllRoleConventions) CHECK(parse_role_convention(to_string(c)) == c);
  CHECK_THROWS_AS(parse_role_convention("sideways"), ValidationError);
}
