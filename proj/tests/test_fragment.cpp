#include <doctest.h>

#include <algorithm>
#include <set>

#include "wg/catalog.hpp"
#include "wg/fragment.hpp"

using namespace wg;

namespace {

using PlaneList = std::set<std::vector<Root>>;

PlaneList planes_of(const Rsf& b) {
  PlaneList out;
  for (std::size_t i = 0; i < b.plane_count(); ++i) {
    std::vector<Root> m;
    for (auto id : b.members(i)) m.push_back(b.root(id));
    out.insert(m);
  }
  return out;
}

Int det(const Root& a, const Root& b, const Root& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Maximal coplanar subsets with at least two elements, by brute force.
std::set<std::set<Root>> coplanar_sets(const std::vector<Root>& r) {
  std::set<std::set<Root>> out;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      std::set<Root> s;
      for (const Root& x : r)
        if (det(r[i], r[j], x) == 0) s.insert(x);
      out.insert(s);
    }
  return out;
}

std::vector<Root> lex_sorted(std::vector<Root> r) {
  std::sort(r.begin(), r.end(), LexLess{});
  return r;
}

}  // namespace

TEST_CASE("planes of every catalogue system match brute-force coplanar grouping") {
  for (const GoldenEntry& g : load_golden()) {
    const auto roots = lex_sorted(g.roots);
    const Rsf b = Rsf::build(roots);
    std::set<std::set<Root>> got;
    for (const auto& m : planes_of(b)) got.insert(std::set<Root>(m.begin(), m.end()));
    CHECK(got == coplanar_sets(roots));
    Int sum = 0;
    for (const auto& s : got) sum += static_cast<Int>(s.size());
    CHECK(b.s_r() == sum);
    CHECK(b.completeness());
  }
}

TEST_CASE("incremental insertion reproduces build on every lex prefix") {
  std::size_t inserts = 0, expected = 0;
  for (const GoldenEntry& g : load_golden()) {
    const auto roots = lex_sorted(g.roots);
    expected += roots.size() - 2;
    Rsf b = Rsf::build(std::span(roots).first(2));
    for (std::size_t n = 2; n < roots.size(); ++n) {
      const Root& alpha = roots[n];
      std::vector<Rsf::Insertion> on;
      for (std::size_t i = 0; i < b.plane_count(); ++i) {
        if (dot(b.plane(i).normal, alpha) != 0) continue;
        const auto m = b.members(i);
        for (std::size_t k = 1; k < m.size(); ++k)
          if (b.root(m[k - 1]) + b.root(m[k]) == alpha) on.push_back({i, k});
      }
      b = b.insert(alpha, on);
      ++inserts;
      const Rsf ref = Rsf::build(std::span(roots).first(n + 1));
      REQUIRE(planes_of(b) == planes_of(ref));
      CHECK(b.s_r() == ref.s_r());
      CHECK(b.completeness() == ref.completeness());
    }
  }
  CHECK(inserts == expected);
}

TEST_CASE("plane members are F-sequences and the characteristic maximum matches") {
  for (const GoldenEntry& g : load_golden()) {
    const Rsf b = Rsf::build(lex_sorted(g.roots));
    for (std::size_t i = 0; i < b.plane_count(); ++i) {
      const auto c = b.coords(i);
      CHECK(fseq::is_fseq(c));
      const auto ch = fseq::characteristic_numbers(c);
      CHECK(plane_max_characteristic(b, i) == *std::max_element(ch.begin(), ch.end()));
    }
  }
}

TEST_CASE("fragment preconditions") {
  CHECK_THROWS_AS(Rsf::build(std::vector<Root>{{0, 1, 0}, {0, 0, 1}}), FragmentError);
  CHECK_THROWS_AS(Rsf::build(std::vector<Root>{{0, 0, 1}, {0, 0, 2}}), FragmentError);
  CHECK_THROWS_AS(Rsf::build(std::vector<Root>{{0, 0, 1}, {1, -1, 0}}), FragmentError);
  const Rsf b = Rsf::build(std::vector<Root>{{0, 0, 1}, {0, 1, 0}});
  CHECK_THROWS_AS(b.insert(Root{0, 0, 1}, {}), FragmentError);
  const std::vector<Rsf::Insertion> wrong{{0, 1}};
  CHECK_THROWS_AS(b.insert(Root{0, 1, 2}, wrong), FragmentError);
  const std::vector<Rsf::Insertion> right{{0, 1}};
  const Rsf c = b.insert(Root{0, 1, 1}, right);
  CHECK(c.plane_count() == 1);
  CHECK(c.completeness() == false);
  CHECK(c.contains(Root{0, 1, 1}));
  CHECK_FALSE(c.contains(Root{1, 1, 1}));
  CHECK(c.mark_finished(0).plane(0).finished);
  CHECK_FALSE(c.plane(0).finished);
}

TEST_CASE("base coordinates") {
  fseq::PlaneCoord pc;
  REQUIRE(base_coords(Root{0, 0, 1}, Root{0, 1, 0}, Root{0, 2, 3}, pc));
  CHECK(pc == fseq::PlaneCoord{2, 3});
  CHECK_FALSE(base_coords(Root{0, 0, 1}, Root{0, 1, 0}, Root{1, 0, 0}, pc));
  CHECK_FALSE(base_coords(Root{0, 0, 2}, Root{0, 1, 0}, Root{0, 0, 1}, pc));
}
