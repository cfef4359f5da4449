#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "vtri/diagram.hpp"

namespace vtri {

enum class Side { Left, Right };

struct EdgeSide {
  int edge;
  Side side;

  friend bool operator==(const EdgeSide&, const EdgeSide&) = default;
};

// Regions of the planar complement. Face tracing follows an edge to its head
// and turns to the clockwise-next slot, so each orbit keeps its face on the
// left. Disconnected pieces are traced on their own spheres and glued along
// their outer faces; each free loop contributes one extra region.
struct FaceSet {
  struct Piece {
    int crossings = 0;
    int edges = 0;
    int faces = 0;
  };

  int region_count = 0;
  // Boundary of each region; empty for regions bounded only by free loops.
  std::vector<std::vector<EdgeSide>> faces;
  // quadrant_region[c][q]: region between slots q and q+1 of crossing c.
  std::vector<std::array<int, 4>> quadrant_region;
  std::vector<Piece> pieces;

  int region_of(const Diagram& d, EdgeSide es) const;
};

// Throws ValidationError when the rotation system is not planar (a piece
// fails V - E + F = 2).
FaceSet faces(const Diagram& d);

// How the four quadrants around a crossing map to the arguments of the
// relation op(a, b, c) = d. Quadrants are named relative to the all-inbound
// quadrant I: its counterclockwise neighbour, the opposite quadrant O, and its
// clockwise neighbour.
//
// InboundFirst*: a = I, d = O, b is the ccw (Ccw*) or cw (Cw*) neighbour at
// positive and virtual crossings; *Swap exchanges b and c at negative ones.
//
// InboundSecond*: b = I, d = O, a is the cw (Cw*) or ccw (Ccw*) neighbour at
// positive and virtual crossings. At negative crossings b and d exchange
// (*Flip), and *FlipSwap also exchanges a and c.
enum class RoleConvention : std::uint8_t {
  InboundFirstCcwSwap,
  InboundFirstCwSwap,
  InboundFirstCcwSame,
  InboundFirstCwSame,
  InboundSecondCwFlip,
  InboundSecondCcwFlip,
  InboundSecondCwFlipSwap,
  InboundSecondCcwFlipSwap,
};

inline constexpr std::array<RoleConvention, 8> kAllRoleConventions = {
    RoleConvention::InboundFirstCcwSwap,     RoleConvention::InboundFirstCwSwap,
    RoleConvention::InboundFirstCcwSame,     RoleConvention::InboundFirstCwSame,
    RoleConvention::InboundSecondCwFlip,     RoleConvention::InboundSecondCcwFlip,
    RoleConvention::InboundSecondCwFlipSwap, RoleConvention::InboundSecondCcwFlipSwap};

// The convention used unless a caller overrides it.
inline constexpr RoleConvention kRoleConvention = RoleConvention::InboundSecondCwFlip;

std::string_view to_string(RoleConvention c);
RoleConvention parse_role_convention(std::string_view name);

struct CrossingRoles {
  bool is_virtual = false;
  // Region ids of the arguments of op(a, b, c) = d.
  int a = -1, b = -1, c = -1, d = -1;
  // Quadrant index (0..3) of the all-inbound quadrant.
  int inbound_quadrant = -1;
};

std::vector<CrossingRoles> crossing_roles(const Diagram& d, const FaceSet& f,
                                          RoleConvention convention = kRoleConvention);

}  // namespace vtri
