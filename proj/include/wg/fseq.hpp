// Rank-two machinery on a plane, in coordinates relative to the plane's base
// pair (p, q): the pair (a1, a2) stands for a2*p + a1*q, so p is (0,1) and q
// is (1,0).
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wg/lattice.hpp"

namespace wg::fseq {

struct PlaneCoord {
  Int a1 = 0;
  Int a2 = 0;

  friend bool operator==(const PlaneCoord&, const PlaneCoord&) = default;
};

PlaneCoord operator+(const PlaneCoord& u, const PlaneCoord& v);

/// A sequence of plane coordinates; an FSeq proper when is_fseq holds.
using FSeq = std::vector<PlaneCoord>;

/// u <=_Q v  iff  u.a1 * v.a2 <= u.a2 * v.a1.
bool qleq(const PlaneCoord& u, const PlaneCoord& v);
bool qless(const PlaneCoord& u, const PlaneCoord& v);

/// Strictly <=_Q-increasing, from (0,1) to (1,0), and reducible to the base
/// pair by repeatedly deleting an interior element equal to the sum of its
/// neighbours.
bool is_fseq(std::span<const PlaneCoord> s);

/// Insertion index of zeta into the F-sequence s if the result is again an
/// F-sequence.  Throws LatticeError for zeta = (0,0).
std::optional<std::size_t> try_insert(std::span<const PlaneCoord> s, const PlaneCoord& zeta);

/// All single-element F-extensions of s.  Every such extension is the sum of
/// the two elements it is inserted between, so this is the list of sums of
/// consecutive elements, in sequence order.
std::vector<PlaneCoord> candidates(std::span<const PlaneCoord> s);

/// Characteristic numbers of s read cyclically (the neighbours of the first
/// element are -last and the second element, and symmetrically at the end):
/// c_i with v_{i-1} + v_{i+1} = c_i v_i.  For a complete rank-two positive
/// system these are the negated Cartan entries of all its objects.
std::vector<Int> characteristic_numbers(std::span<const PlaneCoord> s);

/// True iff no root string in s is longer than `bound`.  This covers the
/// strings (1,k) and (k,1) off the base pair as well as the strings at every
/// other base of the plane.  Characteristic numbers only grow under
/// insertion, so a false result on a partial sequence stays false.
bool max_string(std::span<const PlaneCoord> s, Int bound);

}  // namespace wg::fseq
