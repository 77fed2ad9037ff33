#include "wg/fseq.hpp"

#include <algorithm>

namespace wg::fseq {

PlaneCoord operator+(const PlaneCoord& u, const PlaneCoord& v) {
  return {checked_add(u.a1, v.a1), checked_add(u.a2, v.a2)};
}

bool qleq(const PlaneCoord& u, const PlaneCoord& v) {
  return checked_mul(u.a1, v.a2) <= checked_mul(u.a2, v.a1);
}

bool qless(const PlaneCoord& u, const PlaneCoord& v) {
  return checked_mul(u.a1, v.a2) < checked_mul(u.a2, v.a1);
}

bool is_fseq(std::span<const PlaneCoord> s) {
  if (s.size() < 2) return false;
  if (s.front() != PlaneCoord{0, 1} || s.back() != PlaneCoord{1, 0}) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!qless(s[i - 1], s[i])) return false;
  }
  std::vector<PlaneCoord> work(s.begin(), s.end());
  while (work.size() > 2) {
    bool removed = false;
    for (std::size_t i = 1; i + 1 < work.size(); ++i) {
      if (work[i] == work[i - 1] + work[i + 1]) {
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

std::optional<std::size_t> try_insert(std::span<const PlaneCoord> s, const PlaneCoord& zeta) {
  if (zeta.a1 == 0 && zeta.a2 == 0) throw LatticeError("cannot insert the zero vector");
  if (zeta.a1 < 0 || zeta.a2 < 0) return std::nullopt;
  // first element not <=_Q-below zeta
  const auto it = std::find_if(s.begin(), s.end(), [&](const PlaneCoord& v) { return !qless(v, zeta); });
  if (it == s.begin() || it == s.end()) return std::nullopt;
  if (!qless(zeta, *it)) return std::nullopt;  // collinear with an element
  const auto pos = static_cast<std::size_t>(it - s.begin());
  if (s[pos - 1] + s[pos] != zeta) return std::nullopt;
  return pos;
}

std::vector<PlaneCoord> candidates(std::span<const PlaneCoord> s) {
  std::vector<PlaneCoord> out;
  if (s.size() < 2) return out;
  out.reserve(s.size() - 1);
  for (std::size_t i = 1; i < s.size(); ++i) out.push_back(s[i - 1] + s[i]);
  return out;
}

std::vector<Int> characteristic_numbers(std::span<const PlaneCoord> s) {
  const std::size_t n = s.size();
  std::vector<Int> out(n, 0);
  if (n < 2) return out;
  auto neg = [](const PlaneCoord& v) { return PlaneCoord{-v.a1, -v.a2}; };
  for (std::size_t i = 0; i < n; ++i) {
    const PlaneCoord prev = i == 0 ? neg(s[n - 1]) : s[i - 1];
    const PlaneCoord next = i + 1 == n ? neg(s[0]) : s[i + 1];
    const PlaneCoord sum = prev + next;
    // sum is a multiple of s[i] in any F-sequence; read off the factor.
    const PlaneCoord& v = s[i];
    out[i] = v.a1 != 0 ? sum.a1 / v.a1 : sum.a2 / v.a2;
  }
  return out;
}

bool max_string(std::span<const PlaneCoord> s, Int bound) {
  const auto cs = characteristic_numbers(s);
  return std::all_of(cs.begin(), cs.end(), [bound](Int c) { return c <= bound; });
}

}  // namespace wg::fseq
