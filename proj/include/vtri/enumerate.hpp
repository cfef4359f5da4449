#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vtri/ternary_table.hpp"
#include "vtri/tribracket.hpp"

namespace vtri {

struct EnumerateOptions {
  std::optional<std::uint64_t> limit;
  // Orders above this are declined with a ValidationError ("search too large").
  int max_order = 4;
  // Worker threads for the pairing stage; 0 means hardware concurrency.
  unsigned jobs = 1;
};

// All three-determined tables of order n (Latin cubes) in lexicographic order
// of their entries.
std::vector<TernaryTable> enumerate_latin_cubes(int n);

// Tables passing the two classical identities, lexicographic order.
std::vector<TernaryTable> enumerate_tribrackets(int n);

// Emits every verified virtual tribracket of order n in lexicographic order of
// the concatenated (classical, virtual) entries. The callback returns false to
// stop early. Returns the number emitted.
std::uint64_t enumerate_virtual_tribrackets(
    int n, const EnumerateOptions& options,
    const std::function<bool(const VirtualTribracket&)>& emit);

std::vector<VirtualTribracket> enumerate_virtual_tribrackets(
    int n, const EnumerateOptions& options = {});

}  // namespace vtri
