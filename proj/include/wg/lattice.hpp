// Exact integer linear algebra on Z^3.
//
// Roots are stored as coefficient triples (n1, n2, n3) with respect to the
// simple roots (alpha1, alpha2, alpha3).  All arithmetic is done in 64-bit
// integers and overflow raises wg::OverflowError; the classification never
// needs coefficients beyond a few dozen, so an overflow is a logic error.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace wg {

using Int = std::int64_t;

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct LatticeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

[[noreturn]] void throw_overflow(const char* what);

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("integer overflow in multiplication");
  return r;
}

/// Integer vector in Z^3, coefficients of (alpha1, alpha2, alpha3).
struct Root {
  std::array<Int, 3> c{};

  constexpr Root() = default;
  constexpr Root(Int n1, Int n2, Int n3) : c{n1, n2, n3} {}

  constexpr Int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  constexpr Int& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  constexpr Int n1() const { return c[0]; }
  constexpr Int n2() const { return c[1]; }
  constexpr Int n3() const { return c[2]; }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
  /// Nonzero with all coefficients >= 0.
  bool is_positive() const;
  Int height() const;

  static Root simple(int i);

  friend bool operator==(const Root& a, const Root& b) {
    return a.c[0] == b.c[0] && a.c[1] == b.c[1] && a.c[2] == b.c[2];
  }
  /// Agrees with lex_less.
  friend auto operator<=>(const Root&, const Root&) = default;
};

inline Root operator+(const Root& a, const Root& b) {
  return {checked_add(a.c[0], b.c[0]), checked_add(a.c[1], b.c[1]), checked_add(a.c[2], b.c[2])};
}

inline Root operator-(const Root& a, const Root& b) {
  return {checked_sub(a.c[0], b.c[0]), checked_sub(a.c[1], b.c[1]), checked_sub(a.c[2], b.c[2])};
}

inline Root operator-(const Root& a) { return Root{} - a; }
Root operator*(Int k, const Root& a);

std::ostream& operator<<(std::ostream& os, const Root& r);
std::string to_string(const Root& r);

/// Normal vector of a plane: the cross product of two roots spanning it,
/// sign-normalized so that the first nonzero entry is positive.  It is not
/// reduced to a primitive vector, so |dot(normal, x)| = vol3(x, a, b).
struct PlaneNormal {
  std::array<Int, 3> c{};

  constexpr Int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  friend bool operator==(const PlaneNormal&, const PlaneNormal&) = default;
  friend auto operator<=>(const PlaneNormal&, const PlaneNormal&) = default;
};

inline Int dot(const PlaneNormal& n, const Root& r) {
  return checked_add(checked_add(checked_mul(n.c[0], r.c[0]), checked_mul(n.c[1], r.c[1])),
                     checked_mul(n.c[2], r.c[2]));
}

/// Raw cross product a x b (no sign normalization).
inline Root cross(const Root& a, const Root& b) {
  return {checked_sub(checked_mul(a.c[1], b.c[2]), checked_mul(a.c[2], b.c[1])),
          checked_sub(checked_mul(a.c[2], b.c[0]), checked_mul(a.c[0], b.c[2])),
          checked_sub(checked_mul(a.c[0], b.c[1]), checked_mul(a.c[1], b.c[0]))};
}

/// gcd of |n1|, |n2|, |n3|.  Throws LatticeError("zero vector") on 0.
Int vol1(const Root& v);
/// gcd of the 2x2 minors of the 3x2 matrix (a b); 0 iff a, b are dependent.
Int vol2(const Root& a, const Root& b);
/// |det(a b c)|.
Int vol3(const Root& a, const Root& b, const Root& c);
/// Signed det(a b c).
Int det3(const Root& a, const Root& b, const Root& c);

/// Lexicographic order with alpha3 < alpha2 < alpha1: n1 decides first.
inline bool lex_less(const Root& a, const Root& b) {
  if (a.c[0] != b.c[0]) return a.c[0] < b.c[0];
  if (a.c[1] != b.c[1]) return a.c[1] < b.c[1];
  return a.c[2] < b.c[2];
}

struct LexLess {
  bool operator()(const Root& a, const Root& b) const { return lex_less(a, b); }
};

/// Height first, then lex_less.
bool height_lex_less(const Root& a, const Root& b);

/// Permutation of the index set {0, 1, 2}: position i of the input lands at
/// position p[i] of the output.
using Permutation = std::array<int, 3>;

bool is_permutation(const Permutation& p);
Root permute(const Root& v, const Permutation& p);
const std::array<Permutation, 6>& all_permutations();

/// Cross product a x b, sign-normalized.  Throws LatticeError when a, b are
/// linearly dependent.
PlaneNormal plane_normal(const Root& a, const Root& b);

/// plane_normal divided by its content; identifies the geometric plane.
PlaneNormal primitive_normal(const Root& a, const Root& b);

}  // namespace wg

template <>
struct std::hash<wg::Root> {
  std::size_t operator()(const wg::Root& r) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : r.c) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};
