#include "vtri/faces.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vtri/error.hpp"

namespace vtri {

int FaceSet::region_of(const Diagram& d, EdgeSide es) const {
  const Edge& e = d.edge(es.edge);
  const SlotRef dart = es.side == Side::Left ? e.tail : e.head;
  return quadrant_region.at(static_cast<std::size_t>(dart.crossing))[static_cast<std::size_t>(dart.slot)];
}

FaceSet faces(const Diagram& d) {
  const int nc = d.crossing_count();
  const auto darts = static_cast<std::size_t>(4 * nc);
  auto next = [&](std::size_t dart) {
    const SlotRef to = d.across({static_cast<int>(dart / 4), static_cast<int>(dart % 4)});
    return static_cast<std::size_t>(4 * to.crossing + (to.slot + 3) % 4);
  };

  std::vector<int> raw(darts, -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < darts; ++start) {
    if (raw[start] != -1) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::size_t cur = start;
    while (raw[cur] == -1) {
      raw[cur] = id;
      orbits.back().push_back(cur);
      cur = next(cur);
    }
    if (cur != start) throw ValidationError("face tracing did not close; corrupt rotation system");
  }

  // Connected pieces over crossings.
  std::vector<int> parent(static_cast<std::size_t>(nc));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : d.edges()) {
    const int a = find(e.tail.crossing), b = find(e.head.crossing);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> piece_of_root(static_cast<std::size_t>(nc), -1);
  std::vector<int> piece_of(static_cast<std::size_t>(nc));
  FaceSet fs;
  for (int c = 0; c < nc; ++c) {
    const int r = find(c);
    if (piece_of_root[static_cast<std::size_t>(r)] == -1) {
      piece_of_root[static_cast<std::size_t>(r)] = static_cast<int>(fs.pieces.size());
      fs.pieces.emplace_back();
    }
    piece_of[static_cast<std::size_t>(c)] = piece_of_root[static_cast<std::size_t>(r)];
    fs.pieces[static_cast<std::size_t>(piece_of[static_cast<std::size_t>(c)])].crossings += 1;
  }
  for (const Edge& e : d.edges())
    fs.pieces[static_cast<std::size_t>(piece_of[static_cast<std::size_t>(e.tail.crossing)])].edges += 1;
  for (const auto& orbit : orbits)
    fs.pieces[static_cast<std::size_t>(piece_of[orbit.front() / 4])].faces += 1;
  for (std::size_t p = 0; p < fs.pieces.size(); ++p) {
    const auto& piece = fs.pieces[p];
    if (piece.crossings - piece.edges + piece.faces != 2)
      throw ValidationError("rotation system is not planar: piece " + std::to_string(p) +
                            " has V - E + F = " +
                            std::to_string(piece.crossings - piece.edges + piece.faces));
  }

  // Outer face of each piece: the first hint inside it, else quadrant 0 of
  // its lowest crossing.
  std::vector<int> outer(fs.pieces.size(), -1);
  for (const SlotRef& h : d.outer_hints()) {
    auto& o = outer[static_cast<std::size_t>(piece_of[static_cast<std::size_t>(h.crossing)])];
    if (o == -1) o = raw[static_cast<std::size_t>(4 * h.crossing + h.slot)];
  }
  for (int c = 0; c < nc; ++c) {
    auto& o = outer[static_cast<std::size_t>(piece_of[static_cast<std::size_t>(c)])];
    if (o == -1) o = raw[static_cast<std::size_t>(4 * c)];
  }

  std::vector<int> canonical(orbits.size());
  std::iota(canonical.begin(), canonical.end(), 0);
  for (int o : outer) canonical[static_cast<std::size_t>(o)] = outer.front();

  std::vector<int> region_of_canonical(orbits.size(), -1);
  fs.quadrant_region.assign(static_cast<std::size_t>(nc), {-1, -1, -1, -1});
  for (std::size_t dart = 0; dart < darts; ++dart) {
    const int canon = canonical[static_cast<std::size_t>(raw[dart])];
    auto& region = region_of_canonical[static_cast<std::size_t>(canon)];
    if (region == -1) {
      region = fs.region_count++;
      fs.faces.emplace_back();
    }
    fs.quadrant_region[dart / 4][dart % 4] = region;
  }
  // Boundaries in tracing order, one orbit after another.
  for (const auto& orbit : orbits) {
    const int region = fs.quadrant_region[orbit.front() / 4][orbit.front() % 4];
    for (std::size_t dart : orbit) {
      const Crossing& c = d.crossing(static_cast<int>(dart / 4));
      fs.faces[static_cast<std::size_t>(region)].push_back(
          {c.edge[dart % 4], c.outbound[dart % 4] ? Side::Left : Side::Right});
    }
  }

  int extra = d.free_loop_count();
  if (nc == 0) extra += 1;  // the background region
  for (int i = 0; i < extra; ++i) {
    fs.faces.emplace_back();
    ++fs.region_count;
  }
  return fs;
}

namespace {

// Quadrant offsets from the all-inbound quadrant for (a, b, c, d): 0 is I,
// 1 its ccw neighbour, 2 the opposite quadrant, 3 its cw neighbour.
struct RoleOffsets {
  std::array<int, 4> positive;
  std::array<int, 4> negative;
};

RoleOffsets offsets(RoleConvention c) {
  switch (c) {
    case RoleConvention::InboundFirstCcwSwap: return {{0, 1, 3, 2}, {0, 3, 1, 2}};
    case RoleConvention::InboundFirstCwSwap: return {{0, 3, 1, 2}, {0, 1, 3, 2}};
    case RoleConvention::InboundFirstCcwSame: return {{0, 1, 3, 2}, {0, 1, 3, 2}};
    case RoleConvention::InboundFirstCwSame: return {{0, 3, 1, 2}, {0, 3, 1, 2}};
    case RoleConvention::InboundSecondCwFlip: return {{3, 0, 1, 2}, {3, 2, 1, 0}};
    case RoleConvention::InboundSecondCcwFlip: return {{1, 0, 3, 2}, {1, 2, 3, 0}};
    case RoleConvention::InboundSecondCwFlipSwap: return {{3, 0, 1, 2}, {1, 2, 3, 0}};
    case RoleConvention::InboundSecondCcwFlipSwap: return {{1, 0, 3, 2}, {3, 2, 1, 0}};
  }
  return {};
}

}  // namespace

std::string_view to_string(RoleConvention c) {
  switch (c) {
    case RoleConvention::InboundFirstCcwSwap: return "first-ccw-swap";
    case RoleConvention::InboundFirstCwSwap: return "first-cw-swap";
    case RoleConvention::InboundFirstCcwSame: return "first-ccw-same";
    case RoleConvention::InboundFirstCwSame: return "first-cw-same";
    case RoleConvention::InboundSecondCwFlip: return "second-cw-flip";
    case RoleConvention::InboundSecondCcwFlip: return "second-ccw-flip";
    case RoleConvention::InboundSecondCwFlipSwap: return "second-cw-flip-swap";
    case RoleConvention::InboundSecondCcwFlipSwap: return "second-ccw-flip-swap";
  }
  return "?";
}

RoleConvention parse_role_convention(std::string_view name) {
  for (RoleConvention c : kAllRoleConventions)
    if (to_string(c) == name) return c;
  std::string known;
  for (RoleConvention c : kAllRoleConventions) known += (known.empty() ? "" : ", ") + std::string(to_string(c));
  throw ValidationError("unknown role convention '" + std::string(name) + "' (expected one of " +
                        known + ")");
}

std::vector<CrossingRoles> crossing_roles(const Diagram& d, const FaceSet& f,
                                          RoleConvention convention) {
  const RoleOffsets table = offsets(convention);
  std::vector<CrossingRoles> out;
  out.reserve(static_cast<std::size_t>(d.crossing_count()));
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& c = d.crossing(i);
    int inbound = -1;
    for (int q = 0; q < 4; ++q)
      if (!c.outbound[static_cast<std::size_t>(q)] && !c.outbound[static_cast<std::size_t>((q + 1) % 4)]) {
        if (inbound != -1)
          throw ValidationError("crossing " + std::to_string(i + 1) + " has two all-inbound quadrants");
        inbound = q;
      }
    if (inbound == -1)
      throw ValidationError("crossing " + std::to_string(i + 1) + " has no all-inbound quadrant");

    const auto& off = d.kind(i) == CrossingKind::Negative ? table.negative : table.positive;
    const auto& quad = f.quadrant_region[static_cast<std::size_t>(i)];
    auto region = [&](int k) { return quad[static_cast<std::size_t>((inbound + off[static_cast<std::size_t>(k)]) % 4)]; };
    CrossingRoles r;
    r.is_virtual = c.is_virtual;
    r.inbound_quadrant = inbound;
    r.a = region(0);
    r.b = region(1);
    r.c = region(2);
    r.d = region(3);
    out.push_back(r);
  }
  return out;
}

}  // namespace vtri
