#include <doctest.h>

#include <algorithm>
#include <set>

#include "wg/catalog.hpp"
#include "wg/groupoid.hpp"
#include "wg/search.hpp"

using namespace wg;

namespace {

std::set<System> golden_up_to(std::size_t n) {
  std::set<System> out;
  for (const GoldenEntry& g : load_golden())
    if (g.roots.size() <= n) out.insert(canonical_sorted(g.roots, CanonicalOrder::Lex));
  return out;
}

std::set<System> canonical_forms(const SearchOutput& s, std::size_t* invalid = nullptr) {
  std::set<System> out;
  for (const auto& c : s.candidates) {
    const OrbitResult o = orbit(c);
    if (!o) {
      if (invalid) ++*invalid;
      continue;
    }
    out.insert(canonical_form(*o.orbit));
  }
  return out;
}

}  // namespace

TEST_CASE("seed") {
  const Seed s = seed();
  CHECK(s.rsf.root_count() == 6);
  CHECK(s.hat == Root{1, 1, 1});
  CHECK(s.rsf.completeness());
  for (std::size_t i = 1; i < 6; ++i) CHECK(lex_less(s.rsf.root(i - 1), s.rsf.root(i)));
}

TEST_CASE("append_root preconditions") {
  const Seed s = seed();
  const SearchConfig cfg;
  CHECK_THROWS_AS(append_root(Root{1, -1, 2}, s.rsf, s.hat, cfg), SearchError);
  CHECK_THROWS_AS(append_root(Root{1, 1, 0}, s.rsf, s.hat, cfg), SearchError);
  CHECK_THROWS_AS(append_root(Root{2, 2, 2}, s.rsf, s.hat, cfg), SearchError);
}

TEST_CASE("append_root verdicts on the seed") {
  const Seed s = seed();
  const SearchConfig cfg;
  // 12^{2}3 = 2 + 123 extends the plane {2, 123} to type A2.
  const AppendResult a = append_root(Root{1, 2, 1}, s.rsf, s.hat, cfg);
  CHECK(a.verdict == Verdict::Accepted);
  REQUIRE(a.rsf.has_value());
  CHECK(a.rsf->root_count() == 7);
  CHECK(a.max_string == 1);
  // 1^{2}23 meets the plane {12, 3, 123} with volume one, so 13 or 1^{2}2
  // would have to be a root; both lie below hat and are missing.
  const AppendResult r = append_root(Root{1, 1, 2}, s.rsf, s.hat, cfg);
  CHECK(r.verdict == Verdict::Rejected);
  // 1^{2}2^{2}3 = 12 + 123 meets the alpha2, alpha3 plane with volume one,
  // but neither difference is known yet and both lie above hat.
  const AppendResult d = append_root(Root{1, 2, 2}, s.rsf, s.hat, cfg);
  CHECK(d.verdict == Verdict::Deferred);
  CHECK_FALSE(d.rsf.has_value());
}

TEST_CASE("a longest string above the bound is rejected") {
  // alpha2 + 2 alpha3 makes the alpha3-string through alpha2 of length two.
  const Rsf b = Rsf::build(std::vector<Root>{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}});
  SearchConfig cfg;
  cfg.cartan_bound = 1;
  const AppendResult r = append_root(Root{0, 1, 2}, b, Root{0, 1, 1}, cfg);
  CHECK(r.verdict == Verdict::Rejected);
  CHECK(r.max_string == 2);
  cfg.cartan_bound = 2;
  CHECK(append_root(Root{0, 1, 2}, b, Root{0, 1, 1}, cfg).verdict == Verdict::Accepted);
}

TEST_CASE("append_root hand traces") {
  const Seed s = seed();
  const SearchConfig cfg;
  // alpha1 + 2 alpha2 sits between alpha2 and alpha1 + alpha2.
  CHECK(append_root(Root{1, 2, 0}, s.rsf, s.hat, cfg).verdict == Verdict::Accepted);
  // 2 alpha1 + alpha2 + alpha3 needs (2,0,1) or alpha1 + alpha3 ... first.
  CHECK(append_root(Root{2, 1, 1}, s.rsf, s.hat, cfg).verdict == Verdict::Deferred);

  // The chain alpha1 + k alpha2, k = 0..7, cannot grow further.
  std::vector<Root> chain{{0, 1, 0}};
  for (Int k = 0; k <= 7; ++k) chain.push_back({1, k, 0});
  const Rsf b = Rsf::build(chain);
  const AppendResult r = append_root(Root{1, 8, 0}, b, Root{1, 7, 0}, cfg);
  CHECK(r.verdict == Verdict::Rejected);
  CHECK(r.max_string == 8);
}

TEST_CASE("required root hand traces") {
  const Seed s = seed();
  // the three two-member planes of the seed are pairwise disjoint
  CHECK(required_root(s.rsf, s.hat).kind == RequiredRoot::Kind::NotFound);

  const Rsf b = Rsf::build(std::vector<Root>{{0, 0, 1}, {0, 1, 0}, {1, 1, 0}});
  const RequiredRoot found = required_root(b, Root{1, 1, 0});
  CHECK(found.kind == RequiredRoot::Kind::Found);
  CHECK(found.root == Root{1, 1, 1});
  CHECK(required_root(b, Root{1, 1, 1}).kind == RequiredRoot::Kind::Impossible);
}

TEST_CASE("bounded search finds exactly the catalogue systems within the bound") {
  for (std::size_t n : {8, 11, 13}) {
    SearchConfig cfg;
    cfg.max_roots = n;
    const SearchOutput out = run_search(cfg);
    std::size_t invalid = 0;
    CHECK(canonical_forms(out, &invalid) == golden_up_to(n));
    CHECK(invalid == 0);
    CHECK(out.stats.max_string_seen <= cfg.cartan_bound);
    CHECK_FALSE(out.stats.timed_out);
    for (const auto& c : out.candidates) {
      CHECK(c.size() <= n);
      CHECK_NOTHROW(make_system(c));
      CHECK(roots_are_sums(c));
      CHECK(std::is_sorted(c.begin(), c.end(), LexLess{}));
    }
  }
}

TEST_CASE("required-root shortcut and threads do not change the result") {
  SearchConfig cfg;
  cfg.max_roots = 14;
  const SearchOutput base = run_search(cfg);
  cfg.use_required_root = false;
  const SearchOutput plain = run_search(cfg);
  CHECK(canonical_forms(plain) == canonical_forms(base));
  CHECK(plain.stats.required_found == 0);
  cfg.use_required_root = true;
  cfg.threads = 3;
  cfg.parallel_depth = 2;
  const SearchOutput par = run_search(cfg);
  CHECK(par.candidates == base.candidates);
  CHECK(par.stats.nodes == base.stats.nodes);
}

TEST_CASE("time limit stops the search") {
  SearchConfig cfg;
  cfg.time_limit_seconds = 1e-9;
  const SearchOutput out = run_search(cfg);
  CHECK(out.stats.timed_out);
}
