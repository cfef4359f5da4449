#include "vtri/tensor_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "vtri/error.hpp"

namespace vtri {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<long long> read_ints(const std::string& line, std::size_t line_no) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok +
                       "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

TensorFile parse_tensor(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  long long n = 0;
  std::vector<Element> entries;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    const auto ints = read_ints(line, line_no);
    if (n == 0) {
      if (ints.size() != 1 || ints[0] < 1 || ints[0] > 64)
        throw ParseError("line " + std::to_string(line_no) +
                         ": first line must hold the order n (1..64)");
      n = ints[0];
      continue;
    }
    if (static_cast<long long>(ints.size()) != n)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                       " entries, got " + std::to_string(ints.size()));
    for (long long v : ints) {
      if (v < 1 || v > n)
        throw ParseError("line " + std::to_string(line_no) + ": entry " + std::to_string(v) +
                         " outside 1.." + std::to_string(n));
      entries.push_back(static_cast<Element>(v));
    }
  }
  if (n == 0) throw ParseError("empty tensor file");
  const auto cube = static_cast<std::size_t>(n * n * n);
  if (entries.size() != cube && entries.size() != 2 * cube)
    throw ParseError("tensor of order " + std::to_string(n) + " needs " + std::to_string(n * n) +
                     " or " + std::to_string(2 * n * n) + " rows, got " +
                     std::to_string(entries.size() / static_cast<std::size_t>(n)));
  const int order = static_cast<int>(n);
  TensorFile file{TernaryTable(order, {entries.begin(), entries.begin() + static_cast<long>(cube)}),
                  std::nullopt};
  if (entries.size() == 2 * cube)
    file.virtual_table =
        TernaryTable(order, {entries.begin() + static_cast<long>(cube), entries.end()});
  return file;
}

TensorFile read_tensor_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tensor file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_tensor(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

VirtualTribracket read_virtual_tribracket(const std::filesystem::path& path) {
  TensorFile file = read_tensor_file(path);
  if (!file.virtual_table)
    throw ParseError(path.string() + ": holds a single table; a virtual table is required");
  return VirtualTribracket(std::move(file.classical), std::move(*file.virtual_table));
}

void write_table(std::ostream& os, const TernaryTable& t) {
  const int n = t.order();
  for (Element a = 1; a <= n; ++a) {
    for (Element b = 1; b <= n; ++b) {
      for (Element c = 1; c <= n; ++c) os << (c > 1 ? " " : "") << t(a, b, c);
      os << '\n';
    }
    if (a < n) os << '\n';
  }
}

std::string format_table(const TernaryTable& t) {
  std::ostringstream os;
  os << t.order() << "\n\n";
  write_table(os, t);
  return os.str();
}

void write_tensor(std::ostream& os, const VirtualTribracket& v) {
  os << v.order() << "\n\n";
  write_table(os, v.classical());
  os << '\n';
  write_table(os, v.virtual_table());
}

std::string format_tensor(const VirtualTribracket& v) {
  std::ostringstream os;
  write_tensor(os, v);
  return os.str();
}

}  // namespace vtri
