#include "vtri/knot_table.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "vtri/coloring.hpp"
#include "vtri/error.hpp"

namespace vtri {

const KnotEntry* KnotTable::find(std::string_view name) const {
  for (const KnotEntry& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

KnotTable parse_table(std::string_view text) {
  KnotTable table;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::string at = "line " + std::to_string(line_no) + ": ";
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(at + "expected name<TAB>gauss-code");
    KnotEntry entry;
    entry.name = line.substr(0, tab);
    std::string rest = line.substr(tab + 1);
    const auto tab2 = rest.find('\t');
    if (tab2 != std::string::npos) {
      entry.provenance = rest.substr(tab2 + 1);
      rest.resize(tab2);
    }
    if (entry.name.empty()) throw ParseError(at + "empty knot name");
    if (!names.insert(entry.name).second)
      throw ParseError(at + "duplicate name '" + entry.name + "'");
    try {
      entry.code = parse_gauss(rest);
    } catch (const ParseError& e) {
      throw ParseError(at + e.what());
    }
    table.entries.push_back(std::move(entry));
  }
  return table;
}

KnotTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open knot table " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_table(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

bool natural_less(std::string_view l, std::string_view r) {
  std::size_t i = 0, j = 0;
  while (i < l.size() && j < r.size()) {
    const bool dl = std::isdigit(static_cast<unsigned char>(l[i]));
    const bool dr = std::isdigit(static_cast<unsigned char>(r[j]));
    if (dl && dr) {
      std::size_t ei = i, ej = j;
      while (ei < l.size() && std::isdigit(static_cast<unsigned char>(l[ei]))) ++ei;
      while (ej < r.size() && std::isdigit(static_cast<unsigned char>(r[ej]))) ++ej;
      // Compare digit runs by value: strip leading zeros, then length, then text.
      std::string_view a = l.substr(i, ei - i), b = r.substr(j, ej - j);
      while (a.size() > 1 && a.front() == '0') a.remove_prefix(1);
      while (b.size() > 1 && b.front() == '0') b.remove_prefix(1);
      if (a.size() != b.size()) return a.size() < b.size();
      if (a != b) return a < b;
      i = ei;
      j = ej;
    } else {
      if (l[i] != r[j]) return l[i] < r[j];
      ++i;
      ++j;
    }
  }
  return l.size() - i < r.size() - j;
}

std::vector<InvariantRow> batch_invariants(const KnotTable& table,
                                           const std::vector<NamedStructure>& structures,
                                           const BatchOptions& options) {
  std::vector<InvariantRow> rows;
  for (const NamedStructure& s : structures)
    for (const KnotEntry& k : table.entries) rows.push_back({s.name, k.name, std::nullopt, {}});

  const std::size_t knots = table.entries.size();
  auto compute = [&](std::size_t i) {
    const NamedStructure& s = structures[i / knots];
    const KnotEntry& k = table.entries[i % knots];
    try {
      rows[i].count =
          count_colorings(realize(k.code), s.structure, CountOptions{false, options.convention})
              .count;
    } catch (const std::exception& e) {
      rows[i].error = e.what();
    }
  };

  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                    : options.jobs;
  if (jobs <= 1 || rows.size() < 2) {
    for (std::size_t i = 0; i < rows.size(); ++i) compute(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) compute(i);
      });
  }

  std::stable_sort(rows.begin(), rows.end(), [](const InvariantRow& l, const InvariantRow& r) {
    if (l.structure != r.structure) return natural_less(l.structure, r.structure);
    return natural_less(l.knot, r.knot);
  });
  return rows;
}

void write_csv(std::ostream& os, const std::vector<InvariantRow>& rows) {
  os << "structure,knot,count\n";
  for (const InvariantRow& r : rows) {
    os << r.structure << ',' << r.knot << ',';
    if (r.count) os << *r.count;
    os << '\n';
  }
}

}  // namespace vtri
