#include "vtri/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vtri/error.hpp"

namespace vtri {

char to_char(CrossingKind kind) {
  switch (kind) {
    case CrossingKind::Positive: return 'P';
    case CrossingKind::Negative: return 'N';
    case CrossingKind::Virtual: return 'V';
  }
  return '?';
}

namespace {

std::string where(SlotRef s) {
  return std::to_string(s.crossing + 1) + "." + std::to_string(s.slot);
}

int out_slot_of_pair(const Crossing& c, int pair) {
  return c.outbound[static_cast<std::size_t>(pair)] ? pair : pair + 2;
}

}  // namespace

Diagram Diagram::build(std::span<const CrossingKind> kinds, std::span<const EdgeSpec> edges,
                       int free_loops, std::vector<int> loop_positions,
                       std::vector<SlotRef> outer_hints) {
  Diagram d;
  const int nc = static_cast<int>(kinds.size());
  d.crossings_.resize(kinds.size());
  for (int i = 0; i < nc; ++i)
    d.crossings_[static_cast<std::size_t>(i)].is_virtual = kinds[static_cast<std::size_t>(i)] ==
                                                           CrossingKind::Virtual;

  auto attach = [&](SlotRef at, int e, bool out) {
    if (at.crossing < 0 || at.crossing >= nc)
      throw ValidationError("edge " + std::to_string(e + 1) + " refers to unknown crossing " +
                            std::to_string(at.crossing + 1));
    if (at.slot < 0 || at.slot > 3)
      throw ValidationError("edge " + std::to_string(e + 1) + " uses slot " +
                            std::to_string(at.slot) + " (slots are 0..3)");
    Crossing& c = d.crossings_[static_cast<std::size_t>(at.crossing)];
    auto& slot_edge = c.edge[static_cast<std::size_t>(at.slot)];
    if (slot_edge != -1)
      throw ValidationError("slot " + where(at) + " used by edges " + std::to_string(slot_edge + 1) +
                            " and " + std::to_string(e + 1));
    slot_edge = e;
    c.outbound[static_cast<std::size_t>(at.slot)] = out;
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    attach(edges[e].tail, static_cast<int>(e), true);
    attach(edges[e].head, static_cast<int>(e), false);
    d.edges_.push_back({edges[e].tail, edges[e].head, -1});
  }

  for (int i = 0; i < nc; ++i) {
    Crossing& c = d.crossings_[static_cast<std::size_t>(i)];
    for (int s = 0; s < 4; ++s)
      if (c.edge[static_cast<std::size_t>(s)] == -1)
        throw ValidationError("slot " + where({i, s}) + " is dangling (no edge)");
    for (int s = 0; s < 2; ++s)
      if (c.outbound[static_cast<std::size_t>(s)] == c.outbound[static_cast<std::size_t>(s + 2)])
        throw ValidationError("crossing " + std::to_string(i + 1) + ": slots " +
                              std::to_string(s) + " and " + std::to_string(s + 2) +
                              " must be one inbound and one outbound");
    if (!c.is_virtual) {
      const int o02 = out_slot_of_pair(c, 0), o13 = out_slot_of_pair(c, 1);
      const bool pair0_positive = o13 == (o02 + 1) % 4;
      const bool positive = kinds[static_cast<std::size_t>(i)] == CrossingKind::Positive;
      c.over_pair = pair0_positive == positive ? 0 : 1;
    }
  }

  // Strand components by smallest edge id.
  int strands = 0;
  for (std::size_t e = 0; e < d.edges_.size(); ++e) {
    if (d.edges_[e].component != -1) continue;
    int cur = static_cast<int>(e);
    while (d.edges_[static_cast<std::size_t>(cur)].component == -1) {
      d.edges_[static_cast<std::size_t>(cur)].component = strands;
      const SlotRef h = d.edges_[static_cast<std::size_t>(cur)].head;
      cur = d.crossings_[static_cast<std::size_t>(h.crossing)]
                .edge[static_cast<std::size_t>((h.slot + 2) % 4)];
    }
    ++strands;
  }

  if (free_loops < 0) throw ValidationError("negative free loop count");
  if (loop_positions.empty())
    for (int i = 0; i < free_loops; ++i) loop_positions.push_back(strands + i);
  if (static_cast<int>(loop_positions.size()) != free_loops)
    throw ValidationError("loop position list does not match the free loop count");
  const int total = strands + free_loops;
  d.is_loop_.assign(static_cast<std::size_t>(total), false);
  for (int p : loop_positions) {
    if (p < 0 || p >= total || d.is_loop_[static_cast<std::size_t>(p)])
      throw ValidationError("bad free loop position " + std::to_string(p));
    d.is_loop_[static_cast<std::size_t>(p)] = true;
  }
  // Map strand numbers onto the non-loop component indices.
  std::vector<int> strand_index;
  for (int i = 0; i < total; ++i)
    if (!d.is_loop_[static_cast<std::size_t>(i)]) strand_index.push_back(i);
  for (Edge& e : d.edges_) e.component = strand_index[static_cast<std::size_t>(e.component)];

  for (const SlotRef& h : outer_hints)
    if (h.crossing < 0 || h.crossing >= nc || h.slot < 0 || h.slot > 3)
      throw ValidationError("outer hint " + where(h) + " out of range");
  d.outer_hints_ = std::move(outer_hints);
  return d;
}

int Diagram::free_loop_count() const noexcept {
  return static_cast<int>(std::count(is_loop_.begin(), is_loop_.end(), true));
}

int Diagram::classical_count() const noexcept {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(),
                                        [](const Crossing& c) { return !c.is_virtual; }));
}

CrossingKind Diagram::kind(int i) const {
  const Crossing& c = crossing(i);
  if (c.is_virtual) return CrossingKind::Virtual;
  const int over_out = out_slot_of_pair(c, c.over_pair);
  const int under_out = out_slot_of_pair(c, 1 - c.over_pair);
  return under_out == (over_out + 1) % 4 ? CrossingKind::Positive : CrossingKind::Negative;
}

SlotRef Diagram::across(SlotRef at) const {
  const Edge& e = edge(crossing(at.crossing).edge[static_cast<std::size_t>(at.slot)]);
  return e.tail == at ? e.head : e.tail;
}

std::vector<EdgeSpec> Diagram::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back({e.tail, e.head});
  return out;
}

std::vector<CrossingKind> Diagram::kinds() const {
  std::vector<CrossingKind> out;
  for (int i = 0; i < crossing_count(); ++i) out.push_back(kind(i));
  return out;
}

std::vector<int> Diagram::loop_positions() const {
  std::vector<int> out;
  for (int i = 0; i < component_count(); ++i)
    if (is_loop_[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

bool operator==(const Diagram& l, const Diagram& r) {
  if (l.crossings_.size() != r.crossings_.size() || l.edges_.size() != r.edges_.size() ||
      l.is_loop_ != r.is_loop_ || l.outer_hints_ != r.outer_hints_)
    return false;
  for (std::size_t i = 0; i < l.crossings_.size(); ++i) {
    const Crossing& a = l.crossings_[i];
    const Crossing& b = r.crossings_[i];
    if (a.is_virtual != b.is_virtual || a.edge != b.edge || a.outbound != b.outbound ||
        (!a.is_virtual && a.over_pair != b.over_pair))
      return false;
  }
  for (std::size_t i = 0; i < l.edges_.size(); ++i)
    if (!(l.edges_[i].tail == r.edges_[i].tail) || !(l.edges_[i].head == r.edges_[i].head) ||
        l.edges_[i].component != r.edges_[i].component)
      return false;
  return true;
}

Diagram reverse_component(const Diagram& d, int component) {
  if (component < 0 || component >= d.component_count())
    throw ValidationError("component " + std::to_string(component) + " out of range 0.." +
                          std::to_string(d.component_count() - 1));
  std::vector<EdgeSpec> specs = d.edge_specs();
  for (std::size_t e = 0; e < specs.size(); ++e)
    if (d.edges()[e].component == component) std::swap(specs[e].tail, specs[e].head);

  // Over strands stay put; recompute kinds from the new directions.
  std::vector<CrossingKind> kinds = d.kinds();
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& c = d.crossing(i);
    if (c.is_virtual) continue;
    const bool pair0 = d.edge(c.edge[0]).component == component;
    const bool pair1 = d.edge(c.edge[1]).component == component;
    if (pair0 != pair1)
      kinds[static_cast<std::size_t>(i)] = kinds[static_cast<std::size_t>(i)] ==
                                                   CrossingKind::Positive
                                               ? CrossingKind::Negative
                                               : CrossingKind::Positive;
  }
  // Component numbering is by smallest edge id, which reversal keeps.
  return Diagram::build(kinds, specs, d.free_loop_count(), d.loop_positions(), d.outer_hints());
}

GaussCode traverse(const Diagram& d) {
  GaussCode code;
  code.components.resize(static_cast<std::size_t>(d.component_count()));
  std::vector<int> start(static_cast<std::size_t>(d.component_count()), -1);
  for (int e = 0; e < d.edge_count(); ++e) {
    const Edge& edge = d.edge(e);
    auto& s = start[static_cast<std::size_t>(edge.component)];
    if (s == -1 && !d.crossing(edge.tail.crossing).is_virtual) s = e;
  }
  for (int comp = 0; comp < d.component_count(); ++comp) {
    const int first = start[static_cast<std::size_t>(comp)];
    if (first == -1) continue;
    int e = first;
    do {
      const SlotRef tail = d.edge(e).tail;
      const Crossing& c = d.crossing(tail.crossing);
      if (!c.is_virtual) {
        GaussSymbol s;
        s.crossing = tail.crossing + 1;
        s.passage = tail.slot % 2 == c.over_pair ? Passage::Over : Passage::Under;
        s.sign = d.kind(tail.crossing) == CrossingKind::Positive ? Sign::Positive : Sign::Negative;
        code.components[static_cast<std::size_t>(comp)].push_back(s);
      }
      const SlotRef head = d.edge(e).head;
      e = d.crossing(head.crossing).edge[static_cast<std::size_t>((head.slot + 2) % 4)];
    } while (e != first);
  }
  return normalized(std::move(code));
}

namespace {

std::string strip(const std::string& line) {
  const auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty())
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::map<int, int> crossing_index;
  std::vector<CrossingKind> kinds;
  std::map<int, int> edge_ids;
  std::vector<EdgeSpec> edges;
  std::vector<SlotRef> hints;
  int loops = 0;

  // A slot reference is written before it is necessarily declared; resolve
  // crossing ids after all lines are read.
  struct PendingEdge {
    std::pair<int, int> tail, head;
    std::size_t line;
  };
  std::vector<PendingEdge> pending;
  std::vector<std::pair<std::pair<int, int>, std::size_t>> pending_hints;

  auto parse_slot = [&](const std::string& tok) {
    const auto dot = tok.find('.');
    if (dot == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected <crossing>.<slot>, got '" +
                       tok + "'");
    return std::pair<int, int>{parse_int(tok.substr(0, dot), line_no),
                               parse_int(tok.substr(dot + 1), line_no)};
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    const std::string at = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "crossing") {
      if (tok.size() != 3) throw ParseError(at + "expected 'crossing <id> <P|N|V>'");
      const int id = parse_int(tok[1], line_no);
      if (!crossing_index.emplace(id, static_cast<int>(kinds.size())).second)
        throw ParseError(at + "crossing " + tok[1] + " declared twice");
      if (tok[2] == "P") kinds.push_back(CrossingKind::Positive);
      else if (tok[2] == "N") kinds.push_back(CrossingKind::Negative);
      else if (tok[2] == "V") kinds.push_back(CrossingKind::Virtual);
      else throw ParseError(at + "crossing kind must be P, N or V");
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw ParseError(at + "expected 'edge <id> <c>.<s> <c>.<s>'");
      const int id = parse_int(tok[1], line_no);
      if (!edge_ids.emplace(id, static_cast<int>(pending.size())).second)
        throw ParseError(at + "edge " + tok[1] + " declared twice");
      pending.push_back({parse_slot(tok[2]), parse_slot(tok[3]), line_no});
    } else if (tok[0] == "loop") {
      if (tok.size() != 1) throw ParseError(at + "'loop' takes no arguments");
      ++loops;
    } else if (tok[0] == "outer") {
      if (tok.size() != 2) throw ParseError(at + "expected 'outer <c>.<quadrant>'");
      pending_hints.push_back({parse_slot(tok[1]), line_no});
    } else {
      throw ParseError(at + "unknown directive '" + tok[0] + "'");
    }
  }

  auto resolve = [&](std::pair<int, int> ref, std::size_t line) {
    const auto it = crossing_index.find(ref.first);
    if (it == crossing_index.end())
      throw ParseError("line " + std::to_string(line) + ": dangling edge end at undeclared crossing " +
                       std::to_string(ref.first));
    return SlotRef{it->second, ref.second};
  };
  for (const PendingEdge& p : pending) edges.push_back({resolve(p.tail, p.line), resolve(p.head, p.line)});
  for (const auto& [ref, line] : pending_hints) hints.push_back(resolve(ref, line));

  try {
    return Diagram::build(kinds, edges, loops, {}, hints);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("malformed diagram: ") + e.what());
  }
}

std::string format_diagram(const Diagram& d) {
  std::ostringstream os;
  for (int i = 0; i < d.crossing_count(); ++i)
    os << "crossing " << i + 1 << ' ' << to_char(d.kind(i)) << '\n';
  for (int e = 0; e < d.edge_count(); ++e) {
    const Edge& edge = d.edge(e);
    os << "edge " << e + 1 << ' ' << where(edge.tail) << ' ' << where(edge.head) << '\n';
  }
  for (int i = 0; i < d.free_loop_count(); ++i) os << "loop\n";
  for (const SlotRef& h : d.outer_hints()) os << "outer " << where(h) << '\n';
  return os.str();
}

}  // namespace vtri
