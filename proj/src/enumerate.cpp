#include "vtri/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "vtri/error.hpp"

namespace vtri {

namespace {

// Fills entries in (a, b, c) lexicographic order; each of the three lines
// through a cell keeps a bitmask of values already used.
class LatinCubeSearch {
 public:
  explicit LatinCubeSearch(int n)
      : n_(n),
        cells_(static_cast<std::size_t>(n) * n * n, 0),
        ab_(static_cast<std::size_t>(n) * n, 0),
        ac_(static_cast<std::size_t>(n) * n, 0),
        bc_(static_cast<std::size_t>(n) * n, 0) {}

  template <typename Visit>
  void run(Visit&& visit) {
    step(0, visit);
  }

 private:
  template <typename Visit>
  void step(std::size_t pos, Visit& visit) {
    if (pos == cells_.size()) {
      visit(cells_);
      return;
    }
    const auto n = static_cast<std::size_t>(n_);
    const std::size_t a = pos / (n * n), b = (pos / n) % n, c = pos % n;
    const unsigned used = ab_[a * n + b] | ac_[a * n + c] | bc_[b * n + c];
    for (int value = 1; value <= n_; ++value) {
      const unsigned bit = 1u << value;
      if (used & bit) continue;
      cells_[pos] = value;
      ab_[a * n + b] |= bit;
      ac_[a * n + c] |= bit;
      bc_[b * n + c] |= bit;
      step(pos + 1, visit);
      ab_[a * n + b] &= ~bit;
      ac_[a * n + c] &= ~bit;
      bc_[b * n + c] &= ~bit;
    }
  }

  int n_;
  std::vector<Element> cells_;
  std::vector<unsigned> ab_, ac_, bc_;
};

bool pair_identities_hold(const TernaryTable& t) {
  const int n = t.order();
  for (Element a = 1; a <= n; ++a)
    for (Element b = 1; b <= n; ++b)
      for (Element c = 1; c <= n; ++c) {
        const Element abc = t(a, b, c);
        for (Element d = 1; d <= n; ++d) {
          const Element bcd = t(b, c, d);
          if (t(a, b, bcd) != t(a, abc, t(abc, c, d))) return false;
          if (t(abc, c, d) != t(t(a, b, bcd), bcd, d)) return false;
        }
      }
  return true;
}

bool involution_holds(const TernaryTable& w) {
  const int n = w.order();
  for (Element a = 1; a <= n; ++a)
    for (Element b = 1; b <= n; ++b)
      for (Element c = 1; c <= n; ++c)
        if (w(a, w(a, b, c), c) != b) return false;
  return true;
}

bool mixed_identities_hold(const TernaryTable& t, const TernaryTable& w) {
  const int n = t.order();
  for (Element a = 1; a <= n; ++a)
    for (Element b = 1; b <= n; ++b)
      for (Element c = 1; c <= n; ++c) {
        const Element abc = w(a, b, c);
        for (Element d = 1; d <= n; ++d) {
          const Element bcd = w(b, c, d);
          const Element left = t(a, b, bcd);
          if (left != w(a, abc, t(abc, c, d))) return false;
          if (t(abc, c, d) != w(left, bcd, d)) return false;
        }
      }
  return true;
}

template <typename Keep>
std::vector<TernaryTable> filtered_cubes(int n, Keep&& keep) {
  std::vector<TernaryTable> out;
  LatinCubeSearch(n).run([&](const std::vector<Element>& cells) {
    TernaryTable t(n, cells);
    if (keep(t)) out.push_back(std::move(t));
  });
  return out;
}

void require_order(int n, const EnumerateOptions& options) {
  if (n < 1) throw ValidationError("order must be positive");
  if (n > options.max_order)
    throw ValidationError("search too large: order " + std::to_string(n) +
                          " exceeds the work bound (max order " +
                          std::to_string(options.max_order) + ")");
}

}  // namespace

std::vector<TernaryTable> enumerate_latin_cubes(int n) {
  return filtered_cubes(n, [](const TernaryTable&) { return true; });
}

std::vector<TernaryTable> enumerate_tribrackets(int n) {
  return filtered_cubes(n, pair_identities_hold);
}

std::uint64_t enumerate_virtual_tribrackets(
    int n, const EnumerateOptions& options,
    const std::function<bool(const VirtualTribracket&)>& emit) {
  require_order(n, options);
  const std::vector<TernaryTable> classical = enumerate_tribrackets(n);
  const std::vector<TernaryTable> virtuals = filtered_cubes(
      n, [](const TernaryTable& w) { return involution_holds(w) && pair_identities_hold(w); });

  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                    : options.jobs;
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, classical.size())));

  // Per classical table, the indices of compatible virtual tables. Workers
  // take classical tables round-robin; emission below restores the order.
  std::vector<std::vector<std::uint32_t>> matches(classical.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < classical.size(); i += stride)
      for (std::size_t j = 0; j < virtuals.size(); ++j)
        if (mixed_identities_hold(classical[i], virtuals[j]))
          matches[i].push_back(static_cast<std::uint32_t>(j));
  };

  std::uint64_t emitted = 0;
  auto emit_row = [&](std::size_t i) {
    for (std::uint32_t j : matches[i]) {
      if (options.limit && emitted >= *options.limit) return false;
      VirtualTribracket v(classical[i], virtuals[j]);
      ++emitted;
      if (!emit(v.verified())) return false;
    }
    return true;
  };

  if (jobs <= 1 || options.limit) {
    // Sequential and lazy so that a small limit stops the search early.
    for (std::size_t i = 0; i < classical.size(); ++i) {
      for (std::size_t j = 0; j < virtuals.size(); ++j)
        if (mixed_identities_hold(classical[i], virtuals[j]))
          matches[i].push_back(static_cast<std::uint32_t>(j));
      if (!emit_row(i)) break;
      matches[i].clear();
    }
    return emitted;
  }

  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(work, w, jobs);
  workers.clear();
  for (std::size_t i = 0; i < classical.size(); ++i)
    if (!emit_row(i)) break;
  return emitted;
}

std::vector<VirtualTribracket> enumerate_virtual_tribrackets(int n,
                                                             const EnumerateOptions& options) {
  std::vector<VirtualTribracket> out;
  enumerate_virtual_tribrackets(n, options, [&](const VirtualTribracket& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

}  // namespace vtri
