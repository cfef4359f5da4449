#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vtri/alexander.hpp"
#include "vtri/diagram.hpp"
#include "vtri/enumerate.hpp"
#include "vtri/gauss_code.hpp"
#include "vtri/tensor_io.hpp"

namespace fixtures {

// Every verified structure of order 1..3.
inline const std::vector<vtri::VirtualTribracket>& small_structures() {
  static const std::vector<vtri::VirtualTribracket> all = [] {
    std::vector<vtri::VirtualTribracket> v;
    for (int n = 1; n <= 3; ++n)
      for (auto& s : vtri::enumerate_virtual_tribrackets(n)) v.push_back(s);
    return v;
  }();
  return all;
}

inline vtri::VirtualTribracket tensor(const std::string& name) {
  return vtri::read_virtual_tribracket(oracle::data("tensors/" + name + ".tri")).verified();
}

// Random valid Gauss code with `k` crossings spread over `components`.
inline vtri::GaussCode random_code(std::mt19937& rng, int k, int components) {
  std::vector<vtri::GaussSymbol> seq;
  for (int c = 1; c <= k; ++c) {
    const vtri::Sign s = rng() % 2 ? vtri::Sign::Positive : vtri::Sign::Negative;
    seq.push_back({c, vtri::Passage::Over, s});
    seq.push_back({c, vtri::Passage::Under, s});
  }
  std::shuffle(seq.begin(), seq.end(), rng);
  vtri::GaussCode g;
  std::vector<std::size_t> cuts{0};
  for (int i = 1; i < components; ++i) cuts.push_back(rng() % (seq.size() + 1));
  cuts.push_back(seq.size());
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    g.components.emplace_back(seq.begin() + static_cast<long>(cuts[i]),
                              seq.begin() + static_cast<long>(cuts[i + 1]));
  return vtri::normalized(g);
}

struct MovePair {
  std::string name;
  int strands_before;
  std::string before;
  int strands_after;
  std::string after;
};

// One representative per generating move, as closed braids on 3 strands
// (4 for stabilization), with a fixed random context around the move.
inline std::vector<MovePair> move_pairs() {
  std::vector<MovePair> out;
  std::mt19937 rng(7);
  const char* letters[] = {"s", "S", "v"};
  auto word = [&](int len) {
    std::string w;
    for (int i = 0; i < len; ++i) w += std::string(letters[rng() % 3]) + std::to_string(1 + rng() % 2) + " ";
    return w;
  };
  for (int round = 0; round < 3; ++round) {
    const std::string p = word(2), q = word(2);
    out.push_back({"RII", 3, p + "s1 S1 " + q, 3, p + q});
    out.push_back({"RII reversed", 3, p + "S2 s2 " + q, 3, p + q});
    out.push_back({"RIII", 3, p + "s1 s2 s1 " + q, 3, p + "s2 s1 s2 " + q});
    out.push_back({"RIII mixed", 3, p + "s1 s2 S1 " + q, 3, p + "S2 s1 s2 " + q});
    out.push_back({"vII", 3, p + "v1 v1 " + q, 3, p + q});
    out.push_back({"vIII", 3, p + "v1 v2 v1 " + q, 3, p + "v2 v1 v2 " + q});
    out.push_back({"v", 3, p + "v1 s2 v1 " + q, 3, p + "v2 s1 v2 " + q});
    out.push_back({"v negative", 3, p + "v1 S2 v1 " + q, 3, p + "v2 S1 v2 " + q});
    out.push_back({"RI positive", 3, p + q, 4, p + q + "s3"});
    out.push_back({"RI negative", 3, p + q, 4, p + q + "S3"});
    out.push_back({"vI", 3, p + q, 4, p + q + "v3"});
  }
  return out;
}

// Strand subsets reversed before comparing a move pair.
inline std::vector<std::vector<int>> reversal_masks() {
  return {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
}

}  // namespace fixtures
