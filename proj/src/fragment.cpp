#include "wg/fragment.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace wg {

bool base_coords(const Root& p, const Root& q, const Root& x, fseq::PlaneCoord& out) {
  // x = s*p + t*q  =>  x cross q = s (p cross q),  p cross x = t (p cross q)
  const Root n = cross(p, q);
  const Root xq = cross(x, q);
  const Root px = cross(p, x);
  int k = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(n[i]) > std::abs(n[k])) k = i;
  }
  if (n[k] == 0) return false;
  if (xq[k] % n[k] != 0 || px[k] % n[k] != 0) return false;
  const Int s = xq[k] / n[k];
  const Int t = px[k] / n[k];
  if (s * p + t * q != x) return false;
  out = {t, s};
  return true;
}

Rsf Rsf::build(std::span<const Root> roots) {
  if (roots.size() > kMaxRoots) throw FragmentError("too many roots for a fragment");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i].is_positive()) throw FragmentError("fragment roots must be positive: " + to_string(roots[i]));
    if (i > 0 && !lex_less(roots[i - 1], roots[i])) throw FragmentError("fragment roots must be strictly lex-sorted");
  }

  // Group pairs by geometric plane, in order of first appearance.
  std::map<PlaneNormal, std::size_t> index;
  std::vector<std::vector<RootId>> groups;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (cross(roots[i], roots[j]).is_zero()) {
        throw FragmentError("collinear roots " + to_string(roots[i]) + " and " + to_string(roots[j]));
      }
      const PlaneNormal key = primitive_normal(roots[i], roots[j]);
      auto [it, fresh] = index.try_emplace(key, groups.size());
      if (fresh) groups.emplace_back();
      auto& g = groups[it->second];
      for (auto id : {static_cast<RootId>(i), static_cast<RootId>(j)}) {
        if (std::find(g.begin(), g.end(), id) == g.end()) g.push_back(id);
      }
    }
  }

  Rsf out;
  out.roots_.assign(roots.begin(), roots.end());
  for (auto& g : groups) {
    std::sort(g.begin(), g.end());  // ids are in lex order
    const Root& p = roots[g[0]];
    const Root& q = roots[g[1]];
    std::vector<std::pair<fseq::PlaneCoord, RootId>> keyed;
    for (RootId id : g) {
      fseq::PlaneCoord pc;
      if (!base_coords(p, q, roots[id], pc) || pc.a1 < 0 || pc.a2 < 0) {
        throw FragmentError("not base-compatible: " + to_string(roots[id]) + " on plane of " + to_string(p) +
                            ", " + to_string(q));
      }
      keyed.emplace_back(pc, id);
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return fseq::qless(a.first, b.first); });
    Plane plane;
    plane.normal = plane_normal(p, q);
    plane.offset = static_cast<std::uint32_t>(out.pool_.size());
    plane.size = static_cast<std::uint8_t>(keyed.size());
    for (const auto& [pc, id] : keyed) out.pool_.push_back(id);
    out.planes_.push_back(plane);
    out.s_r_ += plane.size;
  }
  return out;
}

Rsf Rsf::insert(const Root& alpha, std::span<const Insertion> on_planes) const {
  if (roots_.size() >= kMaxRoots) throw FragmentError("too many roots for a fragment");
  if (!roots_.empty() && !lex_less(roots_.back(), alpha)) {
    throw FragmentError("inserted root must exceed every root: " + to_string(alpha));
  }
  const auto new_id = static_cast<RootId>(roots_.size());

  // position per touched plane, -1 if untouched
  std::vector<int> at(planes_.size(), -1);
  std::vector<bool> covered(roots_.size(), false);
  for (const Insertion& ins : on_planes) {
    if (ins.plane >= planes_.size()) throw FragmentError("insertion into unknown plane");
    const Plane& pl = planes_[ins.plane];
    if (pl.finished) throw FragmentError("insertion into a finished plane");
    if (ins.position == 0 || ins.position >= pl.size) throw FragmentError("insertion position out of range");
    const auto m = members(ins.plane);
    if (roots_[m[ins.position - 1]] + roots_[m[ins.position]] != alpha) {
      throw FragmentError("insertion position does not yield an F-sequence");
    }
    if (at[ins.plane] != -1) throw FragmentError("plane listed twice");
    at[ins.plane] = static_cast<int>(ins.position);
    for (RootId id : m) covered[id] = true;
  }

  Rsf out;
  out.roots_.reserve(roots_.size() + 1);
  out.roots_.assign(roots_.begin(), roots_.end());
  out.roots_.push_back(alpha);

  std::size_t fresh = 0;
  for (bool c : covered) fresh += c ? 0 : 1;
  out.planes_.reserve(planes_.size() + fresh);
  out.pool_.reserve(pool_.size() + on_planes.size() + 2 * fresh);
  out.planes_.assign(planes_.begin(), planes_.end());
  for (std::size_t i = 0; i < planes_.size(); ++i) {
    Plane& pl = out.planes_[i];
    const auto m = members(i);
    pl.offset = static_cast<std::uint32_t>(out.pool_.size());
    if (at[i] < 0) {
      out.pool_.insert(out.pool_.end(), m.begin(), m.end());
    } else {
      const auto pos = static_cast<std::size_t>(at[i]);
      out.pool_.insert(out.pool_.end(), m.begin(), m.begin() + static_cast<std::ptrdiff_t>(pos));
      out.pool_.push_back(new_id);
      out.pool_.insert(out.pool_.end(), m.begin() + static_cast<std::ptrdiff_t>(pos), m.end());
      ++pl.size;
    }
  }
  out.s_r_ = s_r_ + static_cast<Int>(on_planes.size());

  for (std::size_t r = 0; r < roots_.size(); ++r) {
    if (covered[r]) continue;
    Plane pl;
    pl.normal = plane_normal(roots_[r], alpha);
    pl.offset = static_cast<std::uint32_t>(out.pool_.size());
    pl.size = 2;
    out.pool_.push_back(static_cast<RootId>(r));
    out.pool_.push_back(new_id);
    out.planes_.push_back(pl);
    out.s_r_ += 2;
  }
  return out;
}

Rsf Rsf::mark_finished(std::size_t plane) const {
  Rsf out = *this;
  out.set_finished(plane);
  return out;
}

fseq::FSeq Rsf::coords(std::size_t i) const {
  const auto m = members(i);
  const Root& p = roots_[m.front()];
  const Root& q = roots_[m.back()];
  fseq::FSeq out;
  out.reserve(m.size());
  for (RootId id : m) {
    fseq::PlaneCoord pc;
    if (!base_coords(p, q, roots_[id], pc)) throw FragmentError("plane member outside the base lattice");
    out.push_back(pc);
  }
  return out;
}

std::vector<std::size_t> Rsf::planes_of(std::size_t id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < planes_.size(); ++i) {
    const auto m = members(i);
    if (std::find(m.begin(), m.end(), static_cast<RootId>(id)) != m.end()) out.push_back(i);
  }
  return out;
}

bool Rsf::contains(const Root& r) const {
  return std::binary_search(roots_.begin(), roots_.end(), r, LexLess{});
}

Int plane_max_characteristic(const Rsf& rsf, std::size_t plane) {
  const auto m = rsf.members(plane);
  const std::size_t n = m.size();
  Int best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Root& v = rsf.root(m[i]);
    const Root prev = i == 0 ? -rsf.root(m[n - 1]) : rsf.root(m[i - 1]);
    const Root next = i + 1 == n ? -rsf.root(m[0]) : rsf.root(m[i + 1]);
    const Root sum = prev + next;
    int k = 0;
    while (v[k] == 0) ++k;
    best = std::max(best, sum[k] / v[k]);
  }
  return best;
}

}  // namespace wg
