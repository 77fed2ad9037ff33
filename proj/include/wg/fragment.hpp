// Root system fragment: a set of positive roots under construction together
// with every plane spanned by two of them, the roots on each plane in
// rank-two order, per-plane "finished" flags, and the running sum s_R of the
// plane sizes.
//
// An Rsf is a value.  insert() returns a new fragment and leaves the input
// untouched, so each branch of the search owns its state.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "wg/fseq.hpp"
#include "wg/lattice.hpp"

namespace wg {

struct FragmentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Rsf {
 public:
  using RootId = std::uint8_t;
  static constexpr std::size_t kMaxRoots = 255;

  struct Plane {
    /// Cross product of the base pair, sign-normalized, not reduced.
    PlaneNormal normal;
    std::uint32_t offset = 0;  // into the member pool
    std::uint8_t size = 0;
    bool finished = false;
  };

  /// Extend plane `plane` by inserting the new root at index `position` of
  /// its member list.
  struct Insertion {
    std::size_t plane = 0;
    std::size_t position = 0;
  };

  Rsf() = default;

  /// Groups `roots` (positive, lex-sorted, pairwise non-collinear) into
  /// maximal coplanar sets.  The base pair of each plane is its two
  /// lex-smallest members.
  static Rsf build(std::span<const Root> roots);

  /// New fragment with `alpha` appended.  `alpha` must be lex-greater than
  /// every root, and `on_planes` must list exactly the planes containing it;
  /// every other root r gets a fresh plane {r, alpha}.
  Rsf insert(const Root& alpha, std::span<const Insertion> on_planes) const;

  /// s_R == 3 (#planes - 1).
  bool completeness() const {
    return s_r_ == 3 * (static_cast<Int>(planes_.size()) - 1);
  }

  Rsf mark_finished(std::size_t plane) const;
  void set_finished(std::size_t plane) { planes_.at(plane).finished = true; }

  std::span<const Root> roots() const { return roots_; }
  std::size_t root_count() const { return roots_.size(); }
  const Root& root(std::size_t id) const { return roots_[id]; }

  std::size_t plane_count() const { return planes_.size(); }
  const Plane& plane(std::size_t i) const { return planes_[i]; }
  std::span<const Plane> planes() const { return planes_; }

  /// Root ids on plane i in rank-two order: first and last are the base pair.
  std::span<const RootId> members(std::size_t i) const {
    const Plane& p = planes_[i];
    return {pool_.data() + p.offset, p.size};
  }

  /// Members of plane i in base-pair coordinates.
  fseq::FSeq coords(std::size_t i) const;

  Int s_r() const { return s_r_; }

  /// Indices of the planes containing root `id`.
  std::vector<std::size_t> planes_of(std::size_t id) const;

  /// Binary search in the lex-sorted root list.
  bool contains(const Root& r) const;

 private:
  std::vector<Root> roots_;
  std::vector<Plane> planes_;
  std::vector<RootId> pool_;
  Int s_r_ = 0;
};

/// Coordinates of x with respect to the base pair (p, q): x = a2*p + a1*q.
/// Returns false if x is not an integral combination of p and q.
bool base_coords(const Root& p, const Root& q, const Root& x, fseq::PlaneCoord& out);

/// Largest characteristic number of one plane of a fragment, read off the
/// ambient roots.  Agrees with the maximum of fseq::characteristic_numbers
/// on coords(plane).
Int plane_max_characteristic(const Rsf& rsf, std::size_t plane);

}  // namespace wg
