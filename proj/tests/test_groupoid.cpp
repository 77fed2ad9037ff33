#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "wg/catalog.hpp"
#include "wg/groupoid.hpp"

using namespace wg;

namespace {

const std::vector<GoldenEntry>& golden() {
  static const std::vector<GoldenEntry> g = load_golden();
  return g;
}

System lex_sorted(System r) {
  std::sort(r.begin(), r.end(), LexLess{});
  return r;
}

bool has(const System& r, const Root& x) { return std::find(r.begin(), r.end(), x) != r.end(); }

}  // namespace

TEST_CASE("Cartan matrix of type A3") {
  const System r = make_system({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
  const CartanMatrix want{{{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}}};
  CHECK(cartan_matrix(r) == want);
  const OrbitResult o = orbit(r);
  REQUIRE(o);
  CHECK(o.orbit->objects.size() == 1);
  // |W(A3)| = |S4|
  CHECK(hom_group(*o.orbit).order() == 24);
  CHECK(cover(*o.orbit).size() == 24);
}

TEST_CASE("published orbit sizes and Euler data") {
  const auto& g = golden();
  struct Row {
    int nr;
    std::size_t objects, hom, e, k, f;
  };
  for (const Row& row : {Row{15, 56, 2, 112, 168, 58}, Row{45, 420, 1, 420, 630, 212}, Row{55, 15, 48, 720, 1080, 362}}) {
    const OrbitResult o = orbit(lex_sorted(g[static_cast<std::size_t>(row.nr - 1)].roots));
    REQUIRE(o);
    CHECK(o.orbit->objects.size() == row.objects);
    CHECK(hom_group(*o.orbit).order() == row.hom);
    const Cover c = cover(*o.orbit);
    const EulerData e = euler_check(c, plane_census(o.orbit->objects[0]));
    CHECK(e.e == row.e);
    CHECK(e.k == row.k);
    CHECK(e.f == row.f);
    CHECK(e.holds);
  }
}

TEST_CASE("the seed is type A3 and fixed by the third reflection") {
  const System seed{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
  const OrbitResult o = orbit(seed);
  REQUIRE(o);
  CHECK(canonical_form(*o.orbit) == lex_sorted(golden()[0].roots));
  CHECK(reflect(lex_sorted(golden()[0].roots), 2) == lex_sorted(golden()[0].roots));
  const CartanMatrix diag{{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}};
  CHECK(cartan_matrix(make_system({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == diag);
  CHECK(plane_census(make_system({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == std::map<std::size_t, std::size_t>{{2, 3}});
}

TEST_CASE("a gap in a root string is rejected") {
  const System r = make_system({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 0}});
  CHECK_THROWS_AS(cartan_matrix(r), GroupoidError);
  const OrbitResult o = orbit(r);
  CHECK_FALSE(o);
  CHECK(o.failure.reflection == -1);
}

TEST_CASE("a mixed-sign reflection is invalid") {
  const System r = make_system({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  std::string why;
  CHECK_FALSE(reflect(r, 0, &why).has_value());
  CHECK(why.find("mixed") != std::string::npos);
  const OrbitResult o = orbit(r);
  CHECK_FALSE(o);
  CHECK(o.failure.reflection >= 0);
}

TEST_CASE("make_system input checks") {
  CHECK_THROWS_AS(make_system({{1, 0, 0}, {1, 0, 0}}), GroupoidError);
  CHECK_THROWS_AS(make_system({{1, 0, 0}, {-1, 1, 0}}), GroupoidError);
  CHECK_THROWS_AS(make_system({{1, 0, 0}, {2, 0, 0}}), GroupoidError);
  CHECK_THROWS_AS(cartan_matrix(make_system({{1, 0, 0}, {0, 1, 0}})), GroupoidError);
}

TEST_CASE("unimodular inverse") {
  std::mt19937 rng(5);
  const CartanMatrix c{{{2, 0, -1}, {0, 2, -3}, {-1, -1, 2}}};
  Mat3 m = identity3();
  for (int k = 0; k < 20; ++k) m = m * reflection_matrix(c, static_cast<int>(rng() % 3));
  CHECK((det(m) == 1 || det(m) == -1));
  CHECK(m * inverse_unimodular(m) == identity3());
  CHECK_THROWS_AS(inverse_unimodular(Mat3{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}), GroupoidError);
}

TEST_CASE("reflections are involutions and preserve Cartan rows on every catalogue system") {
  for (const GoldenEntry& g : golden()) {
    const OrbitResult o = orbit(lex_sorted(g.roots));
    REQUIRE(o);
    const Orbit& orb = *o.orbit;
    for (std::size_t a = 0; a < orb.objects.size(); ++a) {
      for (int i = 0; i < 3; ++i) {
        const std::size_t b = orb.next[a][static_cast<std::size_t>(i)];
        CHECK(orb.next[b][static_cast<std::size_t>(i)] == a);
        CHECK(reflect(*reflect(orb.objects[a], i), i) == orb.objects[a]);
        CHECK(orb.cartan[a][static_cast<std::size_t>(i)] == orb.cartan[b][static_cast<std::size_t>(i)]);
        const Mat3 s = edge_matrix(orb, a, i);
        CHECK(s * s == identity3());
      }
    }
  }
}

TEST_CASE("root strings are gap-free intervals and roots are sums, at every object") {
  for (const GoldenEntry& g : golden()) {
    const OrbitResult o = orbit(lex_sorted(g.roots));
    REQUIRE(o);
    for (std::size_t a = 0; a < o.orbit->objects.size(); ++a) {
      const System& r = o.orbit->objects[a];
      const CartanMatrix& c = o.orbit->cartan[a];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          const Int len = -c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          for (Int k = 0; k <= len + 1; ++k) {
            const Root x = Root::simple(j) + k * Root::simple(i);
            CHECK(has(r, x) == (k <= len));
          }
        }
      // every non-simple root minus some root is a root
      for (const Root& x : r) {
        if (x.height() == 1) continue;
        bool found = false;
        for (const Root& y : r)
          if (has(r, x - y)) found = true;
        CHECK(found);
      }
      CHECK(roots_are_sums(r));
    }
  }
}

TEST_CASE("the plane identity holds at every object of the small systems") {
  for (const GoldenEntry& g : golden()) {
    if (g.nr > 10) break;
    const OrbitResult o = orbit(lex_sorted(g.roots));
    REQUIRE(o);
    for (const System& r : o.orbit->objects) CHECK(sum_rank2_holds(r));
  }
}

TEST_CASE("canonical form recovers the catalogue list from any object and permutation") {
  std::mt19937 rng(3);
  for (const GoldenEntry& g : golden()) {
    const OrbitResult o = orbit(lex_sorted(g.roots));
    REQUIRE(o);
    const System& obj = o.orbit->objects[rng() % o.orbit->objects.size()];
    const Permutation& p = all_permutations()[rng() % 6];
    System moved;
    for (const Root& x : obj) moved.push_back(permute(x, p));
    const OrbitResult o2 = orbit(make_system(moved));
    REQUIRE(o2);
    CHECK(canonical_form(*o2.orbit) == lex_sorted(g.roots));
  }
}

TEST_CASE("listing order matches the catalogue") {
  for (const GoldenEntry& g : golden()) CHECK(display_sorted(g.roots) == g.roots);
}

TEST_CASE("Euler characteristic of every cover") {
  for (const GoldenEntry& g : golden()) {
    const OrbitResult o = orbit(lex_sorted(g.roots));
    REQUIRE(o);
    const Cover c = cover(*o.orbit);
    const auto census = plane_census(o.orbit->objects[0]);
    const EulerData e = euler_check(c, census);
    CHECK(e.holds);
    CHECK(e.e == c.size());
    CHECK(2 * e.k == 3 * e.e);
    CHECK(e.f == 2 * plane_count(census));
  }
}

TEST_CASE("Graphviz output") {
  const OrbitResult o = orbit(lex_sorted(golden()[1].roots));
  REQUIRE(o);
  const std::string dot = quotient_dot(*o.orbit);
  CHECK(dot.rfind("graph quotient {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '-') == 2 * 3);
  const std::string cd = cover_dot(cover(*o.orbit));
  // a cubic graph on 32 vertices has 48 edges
  CHECK(std::count(cd.begin(), cd.end(), '-') == 2 * 48);
}

TEST_CASE("group names") {
  CHECK(hom_group_name(48, false, 6) == "B3");
  CHECK(hom_group_name(1, true, 1) == "1");
  CHECK(hom_group_name(2, true, 2) == "A1");
  CHECK(hom_group_name(24, false, 6) == "G2×A1");
  CHECK(hom_group_name(24, false, 4) == "A3");
  CHECK(hom_group_name(8, false, 4) == "B2");
  CHECK(hom_group_name(5, true, 5) == "?");
}
