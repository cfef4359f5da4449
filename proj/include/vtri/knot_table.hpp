#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtri/faces.hpp"
#include "vtri/gauss_code.hpp"
#include "vtri/tribracket.hpp"

namespace vtri {

struct KnotEntry {
  std::string name;
  GaussCode code;
  std::string provenance;
};

// Lines `name<TAB>gauss-code[<TAB>provenance]`; blank lines and lines starting
// with '#' are skipped.
struct KnotTable {
  std::vector<KnotEntry> entries;

  const KnotEntry* find(std::string_view name) const;
};

// Throws ParseError (with the line number) on duplicate names, codes that do
// not parse and lines without a tab.
KnotTable parse_table(std::string_view text);
KnotTable load_table(const std::filesystem::path& path);

struct NamedStructure {
  std::string name;
  VirtualTribracket structure;
};

struct InvariantRow {
  std::string structure;
  std::string knot;
  std::optional<std::uint64_t> count;  // empty when the row failed
  std::string error;
};

struct BatchOptions {
  unsigned jobs = 1;  // 0: hardware concurrency
  RoleConvention convention = kRoleConvention;
};

// Orders names with embedded numbers numerically ("4.9" < "4.10").
bool natural_less(std::string_view l, std::string_view r);

// One row per (knot, structure), sorted by structure then knot name. A row
// that throws records its error and the batch continues.
std::vector<InvariantRow> batch_invariants(const KnotTable& table,
                                           const std::vector<NamedStructure>& structures,
                                           const BatchOptions& options = {});

// Header `structure,knot,count`, LF line endings; failed rows leave count empty.
void write_csv(std::ostream& os, const std::vector<InvariantRow>& rows);

}  // namespace vtri
