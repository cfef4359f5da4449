#include "vtri/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "vtri/error.hpp"

namespace vtri {

namespace {

// Classical crossing gadget: the vertex sits below four baseline ports
// p0 < p1 < p2 < p3, so counterclockwise from east the slots 0..3 reach the
// ports p3, p2, p1, p0. The over strand uses slots 2 -> 0; the under strand
// uses 3 -> 1 when positive and 1 -> 3 when negative.
constexpr int kOverIn = 2, kOverOut = 0;

int in_slot(const GaussSymbol& s) {
  if (s.passage == Passage::Over) return kOverIn;
  return s.sign == Sign::Positive ? 3 : 1;
}

int out_slot(const GaussSymbol& s) {
  if (s.passage == Passage::Over) return kOverOut;
  return s.sign == Sign::Positive ? 1 : 3;
}

struct Chord {
  SlotRef tail, head;
  int tail_port = 0, head_port = 0;
  int left() const { return std::min(tail_port, head_port); }
  int right() const { return std::max(tail_port, head_port); }
};

// x-coordinate of the meeting point of two upper semicircles with interleaved
// feet x1 < y1 < x2 < y2, as a fraction num / den with den > 0.
struct Coord {
  __int128 num, den;
  friend bool operator<(const Coord& l, const Coord& r) { return l.num * r.den < r.num * l.den; }
  friend bool operator==(const Coord& l, const Coord& r) { return l.num * r.den == r.num * l.den; }
};

Coord meeting_point(long long x1, long long x2, long long y1, long long y2) {
  return {static_cast<__int128>(y1) * y2 - static_cast<__int128>(x1) * x2,
          static_cast<__int128>(y1 + y2 - x1 - x2)};
}

// Port positions for a given perturbation scheme; scheme 0 is the identity.
long long port_position(int port, int scheme) {
  if (scheme == 0) return port;
  const long long p = port;
  return p * 1024 + (p * p * (2 * scheme + 1) + 7 * p) % 1013;
}

struct Meeting {
  int first, second;  // chord indices, first has the smaller left foot
  Coord at;
};

}  // namespace

Diagram realize(const GaussCode& code, const RealizeOptions& options) {
  const int k = code.crossing_count();
  std::vector<CrossingKind> kinds(static_cast<std::size_t>(k), CrossingKind::Positive);
  for (const auto& comp : code.components)
    for (const GaussSymbol& s : comp)
      kinds[static_cast<std::size_t>(s.crossing - 1)] =
          s.sign == Sign::Positive ? CrossingKind::Positive : CrossingKind::Negative;

  auto port = [&](SlotRef r) {
    const int place = options.reverse_order ? k - 1 - r.crossing : r.crossing;
    return 4 * place + (3 - r.slot);
  };

  std::vector<Chord> chords;
  std::vector<int> loop_positions;
  for (std::size_t ci = 0; ci < code.components.size(); ++ci) {
    const auto& comp = code.components[ci];
    if (comp.empty()) {
      loop_positions.push_back(static_cast<int>(ci));
      continue;
    }
    for (std::size_t t = 0; t < comp.size(); ++t) {
      const GaussSymbol& from = comp[t];
      const GaussSymbol& to = comp[(t + 1) % comp.size()];
      Chord ch;
      ch.tail = {from.crossing - 1, out_slot(from)};
      ch.head = {to.crossing - 1, in_slot(to)};
      ch.tail_port = port(ch.tail);
      ch.head_port = port(ch.head);
      chords.push_back(ch);
    }
  }

  // Meetings of interleaved chords, each chord's meetings sorted left to
  // right. A tie would be a triple point; perturb the ports until none remain.
  std::vector<Meeting> meetings;
  std::vector<std::vector<int>> along(chords.size());
  for (int scheme = 0;; ++scheme) {
    if (scheme > 64) throw ValidationError("could not place chords in general position");
    meetings.clear();
    for (auto& a : along) a.clear();
    for (std::size_t i = 0; i < chords.size(); ++i)
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        std::size_t x = i, y = j;
        if (chords[y].left() < chords[x].left()) std::swap(x, y);
        const Chord& cx = chords[x];
        const Chord& cy = chords[y];
        if (!(cx.left() < cy.left() && cy.left() < cx.right() && cx.right() < cy.right())) continue;
        meetings.push_back({static_cast<int>(x), static_cast<int>(y),
                            meeting_point(port_position(cx.left(), scheme),
                                          port_position(cx.right(), scheme),
                                          port_position(cy.left(), scheme),
                                          port_position(cy.right(), scheme))});
        along[x].push_back(static_cast<int>(meetings.size() - 1));
        along[y].push_back(static_cast<int>(meetings.size() - 1));
      }
    bool ties = false;
    for (auto& list : along) {
      std::sort(list.begin(), list.end(), [&](int l, int r) {
        return meetings[static_cast<std::size_t>(l)].at < meetings[static_cast<std::size_t>(r)].at;
      });
      for (std::size_t t = 1; t < list.size(); ++t)
        if (meetings[static_cast<std::size_t>(list[t - 1])].at ==
            meetings[static_cast<std::size_t>(list[t])].at)
          ties = true;
    }
    if (!ties) break;
  }

  // Virtual crossing for a meeting of chords X (left foot x1) and Y:
  // counterclockwise slots are X->x2, Y->y2, X->x1, Y->y1.
  for (std::size_t m = 0; m < meetings.size(); ++m) kinds.push_back(CrossingKind::Virtual);

  std::vector<EdgeSpec> edges;
  for (std::size_t ci = 0; ci < chords.size(); ++ci) {
    const Chord& ch = chords[ci];
    const bool rightward = ch.tail_port < ch.head_port;
    std::vector<int> order = along[ci];
    if (!rightward) std::reverse(order.begin(), order.end());
    SlotRef from = ch.tail;
    for (int m : order) {
      const Meeting& meet = meetings[static_cast<std::size_t>(m)];
      const int vc = k + m;
      const bool is_first = meet.first == static_cast<int>(ci);
      // Rightward travel enters from the left foot side.
      const int in = is_first ? (rightward ? 2 : 0) : (rightward ? 3 : 1);
      edges.push_back({from, {vc, in}});
      from = {vc, (in + 2) % 4};
    }
    edges.push_back({from, ch.head});
  }

  std::vector<SlotRef> hints;
  for (int i = 0; i < k; ++i) hints.push_back({i, 3});
  return Diagram::build(kinds, edges, static_cast<int>(loop_positions.size()), loop_positions,
                        hints);
}

Diagram braid_closure(int strands, std::string_view word, std::span<const int> reversed) {
  if (strands < 1) throw ValidationError("a braid needs at least one strand");
  struct Letter {
    CrossingKind kind;
    int index;
  };
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < word.size();) {
    const char ch = word[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    CrossingKind kind;
    if (ch == 's') kind = CrossingKind::Positive;
    else if (ch == 'S') kind = CrossingKind::Negative;
    else if (ch == 'v') kind = CrossingKind::Virtual;
    else throw ParseError(std::string("braid word: bad letter '") + ch + "'");
    std::size_t j = ++i;
    while (j < word.size() && std::isdigit(static_cast<unsigned char>(word[j]))) ++j;
    if (j == i || j - i > 4) throw ParseError("braid word: expected a generator index");
    const int index = std::stoi(std::string(word.substr(i, j - i)));
    if (index < 1 || index >= strands)
      throw ParseError("braid word: generator index " + std::to_string(index) + " out of range");
    letters.push_back({kind, index});
    i = j;
  }

  // Slots: 0 NE, 1 NW, 2 SW, 3 SE. The strand SW -> NE is over at a positive
  // generator.
  std::vector<CrossingKind> kinds;
  std::vector<EdgeSpec> edges;
  std::vector<std::optional<SlotRef>> first_in(static_cast<std::size_t>(strands));
  std::vector<std::optional<SlotRef>> pending(static_cast<std::size_t>(strands));
  std::vector<SlotRef> hints;
  auto feed = [&](std::size_t pos, SlotRef in) {
    if (pending[pos]) edges.push_back({*pending[pos], in});
    else first_in[pos] = in;
  };
  for (const Letter& l : letters) {
    const int c = static_cast<int>(kinds.size());
    kinds.push_back(l.kind);
    const auto left = static_cast<std::size_t>(l.index - 1), right = left + 1;
    feed(left, {c, 2});
    feed(right, {c, 3});
    pending[left] = SlotRef{c, 1};
    pending[right] = SlotRef{c, 0};
    if (left == 0) hints.push_back({c, 1});
  }
  int loops = 0;
  std::vector<int> closing(static_cast<std::size_t>(strands), -1);
  for (std::size_t pos = 0; pos < static_cast<std::size_t>(strands); ++pos) {
    if (pending[pos]) {
      closing[pos] = static_cast<int>(edges.size());
      edges.push_back({*pending[pos], *first_in[pos]});
    } else {
      ++loops;
    }
  }
  Diagram d = Diagram::build(kinds, edges, loops, {}, hints);
  std::vector<bool> flip(static_cast<std::size_t>(d.component_count()), false);
  for (int pos : reversed) {
    if (pos < 0 || pos >= strands)
      throw ValidationError("reversed strand position " + std::to_string(pos) + " out of range");
    const int e = closing[static_cast<std::size_t>(pos)];
    if (e != -1) flip[static_cast<std::size_t>(d.edge(e).component)] = true;
  }
  for (int comp = 0; comp < d.component_count(); ++comp)
    if (flip[static_cast<std::size_t>(comp)]) d = reverse_component(d, comp);
  return d;
}

}  // namespace vtri
