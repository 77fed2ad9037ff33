#include "wg/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace wg {

bool catalogue_less(const System& a, const System& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
}

ClassifyResult classify(const SearchConfig& cfg, CanonicalOrder order) {
  const auto t0 = std::chrono::steady_clock::now();
  ClassifyResult res;
  const SearchOutput found = run_search(cfg);
  res.stats = found.stats;
  res.search_seconds = found.seconds;
  res.candidates = found.candidates.size();

  // Objects of orbits already handled; candidates are lex-sorted like objects.
  // Candidates are verified by a small worker pool; a race only repeats an
  // orbit, the canonical form removes the duplicate.
  std::mutex mu;
  std::set<System> seen;
  std::set<System> canon_seen;
  std::vector<std::pair<System, Invariants>> distinct;
  std::atomic<std::size_t> next{0}, invalid{0};
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (std::size_t k = next++; k < found.candidates.size(); k = next++) {
        const System& cand = found.candidates[k];
        {
          const std::lock_guard lock(mu);
          if (seen.contains(cand)) continue;
        }
        const OrbitResult o = orbit(cand);
        if (!o) {
          ++invalid;
          continue;
        }
        const System canon = canonical_form(*o.orbit, order);
        {
          const std::lock_guard lock(mu);
          for (const System& obj : o.orbit->objects) seen.insert(obj);
          if (!canon_seen.insert(canon).second) continue;
        }
        Invariants inv = compute_invariants(canon, order);
        const std::lock_guard lock(mu);
        distinct.emplace_back(canon, std::move(inv));
      }
    } catch (...) {
      const std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      next = found.candidates.size();
    }
  };
  const std::size_t n_threads = std::max<std::size_t>(1, std::min(cfg.threads, found.candidates.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  res.invalid_candidates = invalid;
  std::sort(distinct.begin(), distinct.end(), [](const auto& a, const auto& b) { return catalogue_less(a.first, b.first); });

  res.min_cartan = 2;
  for (std::size_t k = 0; k < distinct.size(); ++k) {
    const int nr = static_cast<int>(k) + 1;
    const Invariants& inv = distinct[k].second;
    if (inv.min_cartan < res.min_cartan) {
      res.min_cartan = inv.min_cartan;
      res.min_cartan_systems.clear();
    }
    if (inv.min_cartan == res.min_cartan) res.min_cartan_systems.push_back(nr);
    res.systems.push_back({nr, inv});
  }
  res.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

GoldenComparison compare_with_golden(const std::vector<ClassifiedSystem>& systems, const std::vector<GoldenEntry>& golden) {
  GoldenComparison cmp;
  cmp.count_ok = systems.size() == golden.size();
  if (!cmp.count_ok)
    cmp.mismatches.push_back("found " + std::to_string(systems.size()) + " systems, expected " + std::to_string(golden.size()));
  cmp.roots_ok = cmp.count_ok;
  cmp.table_ok = cmp.count_ok;
  const std::size_t n = std::min(systems.size(), golden.size());
  for (std::size_t k = 0; k < n; ++k) {
    const Invariants& inv = systems[k].inv;
    const GoldenEntry& g = golden[k];
    const std::string tag = "Nr. " + std::to_string(g.nr) + ": ";
    const std::set<Root> got(inv.roots.begin(), inv.roots.end()), want(g.roots.begin(), g.roots.end());
    if (systems[k].nr != g.nr || got != want) {
      cmp.roots_ok = false;
      cmp.mismatches.push_back(tag + "root set differs");
    }
    auto check = [&](bool ok, const std::string& what) {
      if (ok) return;
      cmp.table_ok = false;
      cmp.mismatches.push_back(tag + what + " differs");
    };
    check(inv.orbit_size == g.orbit_size, "orbit size");
    check(inv.cover_size == g.cover_size, "cover size");
    check(inv.hom_name == g.hom_name, "Hom name");
    check(inv.hom_order == hom_order_from_name(g.hom_name), "Hom order");
    check(inv.cover_size == inv.orbit_size * inv.hom_order, "|A| = |O| |Hom|");
    check(inv.planes == g.planes, "plane census");
  }
  return cmp;
}

}  // namespace wg
