#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "vtri/ternary_table.hpp"
#include "vtri/tribracket.hpp"

namespace vtri {

// Tensor text format: first line n, then n blocks (one table) or 2n blocks
// (classical then virtual) of n rows of n integers. Blank lines and '#'
// comments are ignored.
struct TensorFile {
  TernaryTable classical;
  std::optional<TernaryTable> virtual_table;
};

TensorFile parse_tensor(std::string_view text);
TensorFile read_tensor_file(const std::filesystem::path& path);

// Requires both tables; throws ParseError for a single-table file.
VirtualTribracket read_virtual_tribracket(const std::filesystem::path& path);

void write_table(std::ostream& os, const TernaryTable& t);
void write_tensor(std::ostream& os, const VirtualTribracket& v);
std::string format_tensor(const VirtualTribracket& v);
std::string format_table(const TernaryTable& t);

}  // namespace vtri
