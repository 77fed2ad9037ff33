// Cartan matrices, simple reflections and the Weyl groupoid generated by a
// finite set of positive roots.
//
// A positive system is a lex-sorted list of positive roots containing the
// three simple roots.  Reflections act on coefficient vectors by
// sigma_i(alpha_j) = alpha_j - c_ij alpha_i.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wg/lattice.hpp"

namespace wg {

struct GroupoidError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using System = std::vector<Root>;
using Mat3 = std::array<std::array<Int, 3>, 3>;
using CartanMatrix = Mat3;

Mat3 identity3();
Mat3 operator*(const Mat3& a, const Mat3& b);
Root operator*(const Mat3& m, const Root& v);
Int det(const Mat3& m);
/// Inverse of a unimodular matrix.  Throws GroupoidError if det is not +-1.
Mat3 inverse_unimodular(const Mat3& m);

/// Sorts by lex_less and rejects duplicates, non-positive or collinear roots.
System make_system(std::vector<Root> roots);

/// c_ij = -max{k >= 0 : alpha_j + k alpha_i in R}.  Throws GroupoidError if a
/// simple root is missing, a string has a gap, or c_ij = 0 != c_ji.
CartanMatrix cartan_matrix(std::span<const Root> r);

/// Matrix of sigma_i for the Cartan matrix c, acting on column vectors.
Mat3 reflection_matrix(const CartanMatrix& c, int i);

/// Image of R under sigma_i with negative images negated, lex-sorted.
/// nullopt if some image has mixed signs or two roots collapse.
std::optional<System> reflect(std::span<const Root> r, int i, std::string* why = nullptr);

struct Orbit {
  std::vector<System> objects;  // objects[0] is the input
  std::vector<CartanMatrix> cartan;
  std::vector<std::array<std::size_t, 3>> next;  // next[a][i] = r_i(a)
};

struct OrbitFailure {
  std::size_t object = 0;  // index in BFS order of the offending object
  int reflection = -1;     // 0-based, -1 if the Cartan matrix itself failed
  System system;
  std::string reason;
};

struct OrbitResult {
  std::optional<Orbit> orbit;
  OrbitFailure failure;  // meaningful iff !orbit
  explicit operator bool() const { return orbit.has_value(); }
};

/// Closure of R under the three reflections.  Besides the reflections, every
/// edge is checked for c^a_ij = c^{r_i(a)}_ij and every object for its Cartan
/// matrix.  Gives up beyond max_objects.
OrbitResult orbit(std::span<const Root> r, std::size_t max_objects = 5000);

/// Morphism sigma_i^a : a -> r_i(a).
Mat3 edge_matrix(const Orbit& o, std::size_t a, int i);

struct HomGroup {
  std::vector<Mat3> elements;  // sorted
  std::size_t order() const { return elements.size(); }
  bool abelian = false;
  std::size_t max_element_order = 1;
  std::string name;
};

/// Hom(a, a) for the base object: closed walks through a spanning tree,
/// closed under multiplication.  Throws GroupoidError above 48 elements.
HomGroup hom_group(const Orbit& o, std::size_t base = 0);

/// Name from the table of groups occurring for rank three, or "?".
std::string hom_group_name(std::size_t order, bool abelian, std::size_t max_element_order);

/// The simply connected cover: vertices are (object, morphism from the base
/// object); edges follow the reflections.
struct Cover {
  std::vector<std::size_t> object;  // per vertex
  std::vector<Mat3> morphism;
  std::vector<std::array<std::size_t, 3>> next;
  std::size_t size() const { return object.size(); }
};

Cover cover(const Orbit& o, std::size_t max_vertices = 20000);

/// Maximal coplanar subsets of R with at least two elements: size -> count.
std::map<std::size_t, std::size_t> plane_census(std::span<const Root> r);
std::size_t plane_count(const std::map<std::size_t, std::size_t>& census);

/// sum over planes of #(V cap R) == 3 (#planes - 1).
bool sum_rank2_holds(std::span<const Root> r);

/// Every non-simple root is the sum of two roots of R.
bool roots_are_sums(std::span<const Root> r);

struct EulerData {
  std::size_t e = 0, k = 0, f = 0;
  /// Faces of the cover by half-length m (a face of type {i,j} has 2m edges).
  std::map<std::size_t, std::size_t> faces_by_half_length;
  bool holds = false;
};

/// Vertex, edge and face counts of the cover.  holds iff e - k + f = 2,
/// k = 3f - 6, f = 2 #M and the face half-lengths match twice the census.
EulerData euler_check(const Cover& c, const std::map<std::size_t, std::size_t>& census);

/// Key for comparing sorted root sequences when choosing the representative.
/// Lex reproduces the published lists; HeightLex is kept for comparison.
enum class CanonicalOrder : std::uint8_t { HeightLex, Lex };

bool canonical_less(const Root& a, const Root& b, CanonicalOrder order);
/// R sorted by the canonical key.
System canonical_sorted(std::span<const Root> r, CanonicalOrder order);
/// Minimum over all objects and all coordinate permutations of the sorted
/// root sequence.
System canonical_form(const Orbit& o, CanonicalOrder order = CanonicalOrder::Lex);

/// Listing order of the published tables: by height, then by the alpha3,
/// alpha2, alpha1 coefficients in decreasing order.
bool display_less(const Root& a, const Root& b);
System display_sorted(std::span<const Root> r);

/// Smallest Cartan entry over all objects.
Int min_cartan_entry(const Orbit& o);

/// Graphviz text.  Loops r_i(a) = a are omitted.
std::string quotient_dot(const Orbit& o);
std::string cover_dot(const Cover& c);

}  // namespace wg
