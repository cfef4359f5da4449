#include "vtri/coloring.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "vtri/error.hpp"

namespace vtri {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("coloring count exceeds 64 bits");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw std::overflow_error("coloring count exceeds 64 bits");
  return a + b;
}

bool relation_holds(const CrossingRoles& r, const VirtualTribracket& v,
                    std::span<const Element> col) {
  const TernaryTable& t = r.is_virtual ? v.virtual_table() : v.classical();
  const auto at = [&](int region) { return col[static_cast<std::size_t>(region)]; };
  return t(at(r.a), at(r.b), at(r.c)) == at(r.d);
}

class Search {
 public:
  Search(const ColoringProblem& p, const VirtualTribracket& v, bool materialize)
      : p_(p),
        v_(v),
        n_(v.order()),
        classical_inv_(v.classical()),
        virtual_inv_(v.virtual_table()),
        color_(static_cast<std::size_t>(p.regions), 0),
        touching_(static_cast<std::size_t>(p.regions)),
        materialize_(materialize) {
    for (std::size_t k = 0; k < p.roles.size(); ++k) {
      const auto& r = p.roles[k];
      for (int region : {r.a, r.b, r.c, r.d}) {
        auto& list = touching_[static_cast<std::size_t>(region)];
        if (list.empty() || list.back() != static_cast<int>(k)) list.push_back(static_cast<int>(k));
      }
    }
    // Unconstrained regions contribute a free factor of n unless colorings are
    // listed explicitly.
    for (int region = 0; region < p.regions; ++region) {
      if (!touching_[static_cast<std::size_t>(region)].empty() || materialize_)
        branch_order_.push_back(region);
      else
        free_factor_ = checked_mul(free_factor_, static_cast<std::uint64_t>(n_));
    }
  }

  ColoringCount run() {
    ColoringCount result;
    if (materialize_) result.colorings.emplace();
    std::vector<int> queue;
    for (std::size_t k = 0; k < p_.roles.size(); ++k) queue.push_back(static_cast<int>(k));
    std::vector<int> trail;
    if (propagate(queue, trail)) descend(0, result);
    result.count = checked_mul(result.count, free_factor_);
    return result;
  }

 private:
  void assign(int region, Element value, std::vector<int>& trail, std::vector<int>& queue) {
    color_[static_cast<std::size_t>(region)] = value;
    trail.push_back(region);
    for (int k : touching_[static_cast<std::size_t>(region)]) queue.push_back(k);
  }

  void undo(std::vector<int>& trail) {
    for (int region : trail) color_[static_cast<std::size_t>(region)] = 0;
    trail.clear();
  }

  // Forces values at crossings with a single uncolored region; returns false
  // on contradiction.
  bool propagate(std::vector<int>& queue, std::vector<int>& trail) {
    while (!queue.empty()) {
      const int k = queue.back();
      queue.pop_back();
      const CrossingRoles& r = p_.roles[static_cast<std::size_t>(k)];
      const std::array<int, 4> regions{r.a, r.b, r.c, r.d};
      int open = -1, occurrences = 0;
      bool several = false;
      for (int region : regions) {
        if (color_[static_cast<std::size_t>(region)] != 0) continue;
        if (open == -1) open = region;
        else if (open != region) several = true;
        if (region == open) ++occurrences;
      }
      if (several) continue;
      const TernaryTable& t = r.is_virtual ? v_.virtual_table() : v_.classical();
      const InverseTables& inv = r.is_virtual ? virtual_inv_ : classical_inv_;
      const auto col = [&](int region) { return color_[static_cast<std::size_t>(region)]; };
      if (open == -1) {
        if (t(col(r.a), col(r.b), col(r.c)) != col(r.d)) return false;
        continue;
      }
      Element forced = 0;
      if (occurrences == 1) {
        if (open == r.d) forced = t(col(r.a), col(r.b), col(r.c));
        else if (open == r.a) forced = inv.slot1(col(r.b), col(r.c), col(r.d));
        else if (open == r.b) forced = inv.slot2(col(r.a), col(r.c), col(r.d));
        else forced = inv.slot3(col(r.a), col(r.b), col(r.d));
      } else {
        // The open region fills several roles: test every value.
        int solutions = 0;
        for (Element value = 1; value <= n_; ++value) {
          color_[static_cast<std::size_t>(open)] = value;
          if (t(col(r.a), col(r.b), col(r.c)) == col(r.d)) {
            ++solutions;
            forced = value;
          }
        }
        color_[static_cast<std::size_t>(open)] = 0;
        if (solutions == 0) return false;
        if (solutions > 1) continue;
      }
      assign(open, forced, trail, queue);
    }
    return true;
  }

  void descend(std::size_t pos, ColoringCount& result) {
    while (pos < branch_order_.size() &&
           color_[static_cast<std::size_t>(branch_order_[pos])] != 0)
      ++pos;
    if (pos == branch_order_.size()) {
      result.count = checked_add(result.count, 1);
      if (materialize_) result.colorings->push_back(color_);
      return;
    }
    const int region = branch_order_[pos];
    for (Element value = 1; value <= n_; ++value) {
      std::vector<int> trail, queue;
      assign(region, value, trail, queue);
      if (propagate(queue, trail)) descend(pos + 1, result);
      undo(trail);
    }
  }

  const ColoringProblem& p_;
  const VirtualTribracket& v_;
  int n_;
  InverseTables classical_inv_, virtual_inv_;
  std::vector<Element> color_;
  std::vector<std::vector<int>> touching_;
  std::vector<int> branch_order_;
  std::uint64_t free_factor_ = 1;
  bool materialize_;
};

void check_problem(const ColoringProblem& p) {
  for (const CrossingRoles& r : p.roles)
    for (int region : {r.a, r.b, r.c, r.d})
      if (region < 0 || region >= p.regions)
        throw ValidationError("crossing role refers to region " + std::to_string(region) +
                              " outside 0.." + std::to_string(p.regions - 1));
}

}  // namespace

ColoringProblem coloring_problem(const Diagram& d, RoleConvention convention) {
  const FaceSet f = faces(d);
  return {f.region_count, crossing_roles(d, f, convention)};
}

bool satisfies(const ColoringProblem& problem, const VirtualTribracket& v,
               std::span<const Element> coloring) {
  if (coloring.size() != static_cast<std::size_t>(problem.regions)) return false;
  for (Element e : coloring)
    if (e < 1 || e > v.order()) return false;
  for (const CrossingRoles& r : problem.roles)
    if (!relation_holds(r, v, coloring)) return false;
  return true;
}

ColoringCount count_colorings(const ColoringProblem& problem, const VirtualTribracket& v,
                              bool materialize) {
  if (!v.is_verified())
    throw ValidationError("count_colorings needs a verified virtual tribracket");
  check_problem(problem);
  return Search(problem, v, materialize).run();
}

ColoringCount count_colorings(const Diagram& d, const VirtualTribracket& v,
                              const CountOptions& options) {
  return count_colorings(coloring_problem(d, options.convention), v, options.materialize);
}

ColoringCount brute_force_count(const ColoringProblem& problem, const VirtualTribracket& v,
                                bool materialize) {
  check_problem(problem);
  const auto n = static_cast<std::uint64_t>(v.order());
  std::uint64_t total = 1;
  for (int i = 0; i < problem.regions; ++i) {
    total *= n;
    if (total > kBruteForceLimit)
      throw ValidationError("brute force needs " + std::to_string(v.order()) + "^" +
                            std::to_string(problem.regions) + " assignments, above the limit");
  }
  ColoringCount result;
  if (materialize) result.colorings.emplace();
  std::vector<Element> col(static_cast<std::size_t>(problem.regions), 1);
  for (std::uint64_t step = 0; step < total; ++step) {
    if (satisfies(problem, v, col)) {
      ++result.count;
      if (materialize) result.colorings->push_back(col);
    }
    // Odometer increment, last region fastest.
    for (std::size_t i = col.size(); i-- > 0;) {
      if (col[i] < v.order()) {
        ++col[i];
        break;
      }
      col[i] = 1;
    }
  }
  return result;
}

ColoringCount brute_force_count(const Diagram& d, const VirtualTribracket& v,
                                const CountOptions& options) {
  return brute_force_count(coloring_problem(d, options.convention), v, options.materialize);
}

}  // namespace vtri
