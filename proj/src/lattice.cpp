#include "wg/lattice.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace wg {

void throw_overflow(const char* what) { throw OverflowError(what); }

namespace {

Int checked_abs(Int a) {
  if (a == std::numeric_limits<Int>::min()) throw OverflowError("integer overflow in abs");
  return a < 0 ? -a : a;
}

Int gcd3(Int a, Int b, Int c) {
  return std::gcd(std::gcd(checked_abs(a), checked_abs(b)), checked_abs(c));
}

}  // namespace

bool Root::is_positive() const {
  return c[0] >= 0 && c[1] >= 0 && c[2] >= 0 && !is_zero();
}

Int Root::height() const { return checked_add(checked_add(c[0], c[1]), c[2]); }

Root Root::simple(int i) {
  Root r;
  r[i] = 1;
  return r;
}

Root operator*(Int k, const Root& a) {
  return {checked_mul(k, a.c[0]), checked_mul(k, a.c[1]), checked_mul(k, a.c[2])};
}

std::ostream& operator<<(std::ostream& os, const Root& r) {
  return os << '(' << r.c[0] << ',' << r.c[1] << ',' << r.c[2] << ')';
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Int vol1(const Root& v) {
  if (v.is_zero()) throw LatticeError("zero vector");
  return gcd3(v.c[0], v.c[1], v.c[2]);
}

Int vol2(const Root& a, const Root& b) {
  const Root m = cross(a, b);
  return gcd3(m.c[0], m.c[1], m.c[2]);
}

Int det3(const Root& a, const Root& b, const Root& c) {
  const Root m = cross(b, c);
  return checked_add(checked_add(checked_mul(a.c[0], m.c[0]), checked_mul(a.c[1], m.c[1])),
                     checked_mul(a.c[2], m.c[2]));
}

Int vol3(const Root& a, const Root& b, const Root& c) { return checked_abs(det3(a, b, c)); }

bool height_lex_less(const Root& a, const Root& b) {
  const Int ha = a.height();
  const Int hb = b.height();
  if (ha != hb) return ha < hb;
  return lex_less(a, b);
}

bool is_permutation(const Permutation& p) {
  std::array<bool, 3> seen{};
  for (int x : p) {
    if (x < 0 || x > 2 || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

Root permute(const Root& v, const Permutation& p) {
  Root out;
  for (int i = 0; i < 3; ++i) out[p[static_cast<std::size_t>(i)]] = v[i];
  return out;
}

const std::array<Permutation, 6>& all_permutations() {
  static const std::array<Permutation, 6> perms{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  return perms;
}

namespace {

PlaneNormal sign_normalized(const Root& m) {
  PlaneNormal n{m.c};
  for (Int x : n.c) {
    if (x == 0) continue;
    if (x < 0) {
      for (Int& y : n.c) y = -y;
    }
    break;
  }
  return n;
}

}  // namespace

PlaneNormal plane_normal(const Root& a, const Root& b) {
  const Root m = cross(a, b);
  if (m.is_zero()) throw LatticeError("linearly dependent vectors have no plane normal");
  return sign_normalized(m);
}

PlaneNormal primitive_normal(const Root& a, const Root& b) {
  PlaneNormal n = plane_normal(a, b);
  const Int g = gcd3(n.c[0], n.c[1], n.c[2]);
  for (Int& x : n.c) x /= g;
  return n;
}

}  // namespace wg
