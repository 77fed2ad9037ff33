// Brute-force reference implementations shared by the unit tests and the
// acceptance run.  They avoid the library's own algorithms on purpose.
#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "wg/fseq.hpp"

namespace oracle {

using wg::Int;
using wg::fseq::FSeq;
using wg::fseq::PlaneCoord;
using Key = std::vector<std::pair<Int, Int>>;

inline Key key(const FSeq& s) {
  Key k;
  for (const auto& v : s) k.emplace_back(v.a1, v.a2);
  return k;
}

inline FSeq from_key(const Key& k) {
  FSeq s;
  for (auto [a, b] : k) s.push_back({a, b});
  return s;
}

// Nonnegative, from (0,1) to (1,0), and every consecutive pair spans Z^2 with
// positive orientation: a unimodular fan of the quadrant, which is always an
// iterated subdivision by sums.
inline bool unimodular_fan(const FSeq& s) {
  if (s.size() < 2 || s.front() != PlaneCoord{0, 1} || s.back() != PlaneCoord{1, 0}) return false;
  for (const auto& v : s)
    if (v.a1 < 0 || v.a2 < 0) return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1].a2 * s[i].a1 - s[i - 1].a1 * s[i].a2 != 1) return false;
  return true;
}

// All F-sequences of each length up to n, by repeated insertion of sums of
// neighbours.
inline std::vector<std::set<Key>> fseqs_by_length(std::size_t n) {
  std::vector<std::set<Key>> out(n + 1);
  std::vector<FSeq> layer{{{0, 1}, {1, 0}}};
  out[2].insert(key(layer[0]));
  for (std::size_t len = 3; len <= n; ++len) {
    std::vector<FSeq> next;
    for (const FSeq& s : layer) {
      for (std::size_t i = 1; i < s.size(); ++i) {
        FSeq t = s;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), PlaneCoord{s[i - 1].a1 + s[i].a1, s[i - 1].a2 + s[i].a2});
        if (out[len].insert(key(t)).second) next.push_back(t);
      }
    }
    layer = std::move(next);
  }
  return out;
}

// Every z in a box such that s with z added, sorted by slope, is a
// unimodular fan.
inline std::set<std::pair<Int, Int>> f_insertions(const FSeq& s) {
  Int box = 0;
  for (const auto& v : s) box = std::max({box, v.a1, v.a2});
  box *= 2;
  std::set<std::pair<Int, Int>> out;
  for (Int a1 = 0; a1 <= box; ++a1)
    for (Int a2 = 0; a2 <= box; ++a2) {
      if (a1 == 0 && a2 == 0) continue;
      const PlaneCoord z{a1, a2};
      bool dup = false;
      for (const auto& v : s) dup = dup || v == z;
      if (dup) continue;
      FSeq t = s;
      t.push_back(z);
      std::sort(t.begin(), t.end(), [](const PlaneCoord& u, const PlaneCoord& v) { return u.a1 * v.a2 < u.a2 * v.a1; });
      if (unimodular_fan(t)) out.insert({a1, a2});
    }
  return out;
}

}  // namespace oracle
