#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vtri/gauss_code.hpp"

namespace vtri {

enum class CrossingKind { Positive, Negative, Virtual };

char to_char(CrossingKind kind);

// A half-edge position: slot 0..3 of a crossing, counterclockwise.
struct SlotRef {
  int crossing = -1;
  int slot = -1;

  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

// Slots 0/2 and 1/3 are the two strands through the crossing.
struct Crossing {
  bool is_virtual = false;
  int over_pair = 0;  // 0: slots 0/2 carry the over strand; 1: slots 1/3
  std::array<int, 4> edge{-1, -1, -1, -1};
  std::array<bool, 4> outbound{};
};

struct Edge {
  SlotRef tail;
  SlotRef head;
  int component = -1;
};

struct EdgeSpec {
  SlotRef tail;
  SlotRef head;
};

// A 4-valent plane graph given by its rotation system, plus crossingless
// circles. Immutable once built.
class Diagram {
 public:
  Diagram() = default;

  // Validates and builds. Classical over strands are derived from the kind and
  // the edge directions. Components carrying edges are numbered by their
  // smallest edge id; free loops take the indices in `loop_positions`
  // (defaulting to the end). `outer_hints` are darts (crossing, quadrant)
  // lying in the unbounded face; they steer the merge of disconnected pieces.
  // Throws ValidationError on slots used twice, dangling slots or in/out
  // inconsistency.
  static Diagram build(std::span<const CrossingKind> kinds, std::span<const EdgeSpec> edges,
                       int free_loops = 0, std::vector<int> loop_positions = {},
                       std::vector<SlotRef> outer_hints = {});

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int component_count() const noexcept { return static_cast<int>(is_loop_.size()); }
  int free_loop_count() const noexcept;
  int classical_count() const noexcept;
  int virtual_count() const noexcept { return crossing_count() - classical_count(); }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Crossing& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
  bool is_free_loop(int component) const { return is_loop_.at(static_cast<std::size_t>(component)); }
  const std::vector<SlotRef>& outer_hints() const noexcept { return outer_hints_; }

  CrossingKind kind(int crossing) const;

  // The other end of the edge attached at `at`.
  SlotRef across(SlotRef at) const;

  // Edge specs in the form accepted by build(), in edge order.
  std::vector<EdgeSpec> edge_specs() const;
  std::vector<CrossingKind> kinds() const;
  std::vector<int> loop_positions() const;

  friend bool operator==(const Diagram& l, const Diagram& r);

 private:
  std::vector<Crossing> crossings_;
  std::vector<Edge> edges_;
  std::vector<bool> is_loop_;
  std::vector<SlotRef> outer_hints_;
};

// Reverses every edge of one component; classical crossings where exactly one
// strand belongs to it change sign. Throws ValidationError on a bad index.
Diagram reverse_component(const Diagram& d, int component);

// Reads the classical crossings met along each component, starting from the
// smallest edge id whose tail is classical.
GaussCode traverse(const Diagram& d);

struct RealizeOptions {
  // Place classical crossings on the baseline in decreasing id order.
  bool reverse_order = false;
};

// Plane realization of a Gauss code. Classical crossings sit on a baseline;
// every arc of the code is a chord in the upper half-plane and every pair of
// interleaved chords meets in one virtual crossing.
Diagram realize(const GaussCode& code, const RealizeOptions& options = {});

// Closure of a braid on `strands` strands, all strands oriented upward.
// Letters: s<i> positive, S<i> negative, v<i> virtual generator between
// strands i and i+1 (1-based). Unused strands become free loops. Components
// through any position listed in `reversed` (0-based) are then reversed.
Diagram braid_closure(int strands, std::string_view word, std::span<const int> reversed = {});

// Line-oriented explicit format:
//   crossing <id> <P|N|V>
//   edge <id> <tail-crossing>.<slot> <head-crossing>.<slot>
//   loop
//   outer <crossing>.<quadrant>      (optional, quadrant in the unbounded face)
// '#' starts a comment. Throws ParseError on malformed lines and on structural
// problems (slot used twice, dangling slot, in/out inconsistency).
Diagram parse_diagram(std::string_view text);
std::string format_diagram(const Diagram& d);

}  // namespace vtri
