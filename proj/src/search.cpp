#include "wg/search.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

namespace wg {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  appends_tried += o.appends_tried;
  accepted += o.accepted;
  rejected += o.rejected;
  deferred += o.deferred;
  emitted += o.emitted;
  required_found += o.required_found;
  required_impossible += o.required_impossible;
  planes_finished += o.planes_finished;
  aborted_branches += o.aborted_branches;
  timed_out = timed_out || o.timed_out;
  max_depth = std::max(max_depth, o.max_depth);
  max_string_seen = std::max(max_string_seen, o.max_string_seen);
  return *this;
}

Seed seed() {
  const std::vector<Root> roots{
      {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1},
  };
  return {Rsf::build(roots), roots.back()};
}

namespace {

// A difference alpha - gamma that is not a root is known to stay absent if it
// is lex-below hat (all such roots are known) or has mixed signs.
bool decided_missing(const Root& delta, const Root& hat) {
  return !delta.is_positive() || !lex_less(hat, delta);
}

// Candidates produced by the search satisfy the preconditions by
// construction: sums of two roots on a plane, lex-above hat, never collinear
// with a known root.

AppendResult append_unchecked(const Root& alpha, const Rsf& b, const Root& hat, const SearchConfig& cfg) {
  thread_local std::vector<Rsf::Insertion> on;
  on.clear();
  const auto planes = b.planes();
  for (std::size_t i = 0; i < planes.size(); ++i) {
    const Int g = dot(planes[i].normal, alpha);
    if (g == 0) {
      if (planes[i].finished) return {Verdict::Deferred, std::nullopt};
      const auto m = b.members(i);
      std::size_t pos = 0;
      for (std::size_t k = 1; k < m.size(); ++k) {
        if (b.root(m[k - 1]) + b.root(m[k]) == alpha) {
          pos = k;
          break;
        }
      }
      if (pos == 0) return {Verdict::Deferred, std::nullopt};
      on.push_back({i, pos});
    } else if (g == 1 || g == -1) {
      // {gamma1, gamma2} is a base of the plane and vol3 = 1: either alpha
      // completes it to a base of Z^3 (alpha simple, impossible here) or one
      // of the differences is a root.
      const auto m = b.members(i);
      const Root d1 = alpha - b.root(m.front());
      const Root d2 = alpha - b.root(m.back());
      const bool in1 = d1.is_positive() && b.contains(d1);
      if (!in1 && !(d2.is_positive() && b.contains(d2))) {
        if (decided_missing(d1, hat) && decided_missing(d2, hat)) return {Verdict::Rejected, std::nullopt};
        return {Verdict::Deferred, std::nullopt};
      }
    }
  }

  AppendResult out;
  out.rsf = b.insert(alpha, on);
  for (const auto& ins : on) {
    const Int c = plane_max_characteristic(*out.rsf, ins.plane);
    out.max_string = std::max(out.max_string, c);
    if (c > cfg.cartan_bound) return {Verdict::Rejected, std::nullopt, c};
  }
  out.verdict = Verdict::Accepted;
  return out;
}

}  // namespace

AppendResult append_root(const Root& alpha, const Rsf& b, const Root& hat, const SearchConfig& cfg) {
  if (!alpha.is_positive()) throw SearchError("append_root: root must be positive: " + to_string(alpha));
  if (!lex_less(hat, alpha)) throw SearchError("append_root: root must exceed hat: " + to_string(alpha));
  for (const Root& r : b.roots()) {
    if (cross(r, alpha).is_zero()) throw SearchError("append_root: collinear with " + to_string(r));
  }
  return append_unchecked(alpha, b, hat, cfg);
}

RequiredRoot required_root(const Rsf& b, const Root& hat) {
  // (gamma1, plane, partner) for every two-member plane, grouped by gamma1
  struct Leg {
    Rsf::RootId root, partner;
    std::uint32_t plane;
  };
  thread_local std::vector<Leg> legs;
  thread_local std::vector<std::uint32_t> start;
  const std::size_t n = b.root_count();
  start.assign(n + 1, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < b.plane_count(); ++i) {
    if (b.plane(i).size != 2) continue;
    const auto m = b.members(i);
    ++start[m[0] + 1u];
    ++start[m[1] + 1u];
    total += 2;
  }
  for (std::size_t r = 0; r < n; ++r) start[r + 1] += start[r];
  legs.resize(total);
  for (std::size_t i = 0; i < b.plane_count(); ++i) {
    if (b.plane(i).size != 2) continue;
    const auto m = b.members(i);
    const auto pi = static_cast<std::uint32_t>(i);
    legs[start[m[0]]++] = {m[0], m[1], pi};
    legs[start[m[1]]++] = {m[1], m[0], pi};
  }

  RequiredRoot out;
  auto offer = [&](const Root& r) {
    if (out.kind == RequiredRoot::Kind::NotFound || lex_less(r, out.root)) {
      out.kind = RequiredRoot::Kind::Found;
      out.root = r;
    }
  };

  for (std::size_t lo = 0; lo < legs.size();) {
    std::size_t hi = lo;
    while (hi < legs.size() && legs[hi].root == legs[lo].root) ++hi;
    const Root& gamma1 = b.root(legs[lo].root);
    for (std::size_t x = lo; x < hi; ++x) {
      for (std::size_t y = lo; y < hi; ++y) {
        if (x == y) continue;
        const std::size_t pj = legs[x].plane, pk = legs[y].plane;
        const Root& gamma2 = b.root(legs[x].partner);
        const Root& gamma3 = b.root(legs[y].partner);
        const Int d = dot(b.plane(pj).normal, gamma3);  // +-det(gamma1, gamma2, gamma3)
        if (d != 1 && d != -1) continue;
        const Root xi2 = gamma1 + gamma2;
        const Root xi3 = gamma1 + gamma3;
        if (!lex_less(hat, xi2)) {
          if (!lex_less(hat, xi3) || b.plane(pk).finished) return {RequiredRoot::Kind::Impossible, {}};
          offer(xi3);
        } else if (!lex_less(hat, xi3)) {
          if (b.plane(pj).finished) return {RequiredRoot::Kind::Impossible, {}};
          offer(xi2);
        }
      }
    }
    lo = hi;
  }
  return out;
}

void Completer::descend(SearchNode&& child, const std::function<void(SearchNode&&)>* split) {
  if (split != nullptr && child.depth == cfg_.parallel_depth) {
    (*split)(std::move(child));
    return;
  }
  complete(std::move(child), split);
}

void Completer::complete(SearchNode node, const std::function<void(SearchNode&&)>* split) {
  if (stats_.timed_out) return;
  if (deadline_ && (stats_.nodes & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) {
    stats_.timed_out = true;
    return;
  }
  ++stats_.nodes;
  stats_.max_depth = std::max(stats_.max_depth, node.depth);
  Rsf& b = node.rsf;
  if (b.root_count() > cfg_.max_roots) {
    ++stats_.aborted_branches;  // reported by the caller
    return;
  }

  if (b.completeness()) {
    ++stats_.emitted;
    emit_(b.roots());
  }

  if (!node.has_required && cfg_.use_required_root) {
    const RequiredRoot rr = required_root(b, node.hat);
    if (rr.kind == RequiredRoot::Kind::Impossible) {
      ++stats_.required_impossible;
      return;
    }
    if (rr.kind == RequiredRoot::Kind::Found) {
      // Same node with a required root; the emission above already happened.
      ++stats_.required_found;
      node.has_required = true;
      node.required = rr.root;
    }
  }

  auto try_child = [&](const Root& zeta, bool has_required, const Root& required) {
    ++stats_.appends_tried;
    AppendResult res = append_unchecked(zeta, b, node.hat, cfg_);
    switch (res.verdict) {
      case Verdict::Accepted:
        ++stats_.accepted;
        assert(res.max_string <= cfg_.cartan_bound);
        stats_.max_string_seen = std::max(stats_.max_string_seen, res.max_string);
        descend(SearchNode{std::move(*res.rsf), zeta, has_required, required, node.depth + 1}, split);
        break;
      case Verdict::Rejected:
        ++stats_.rejected;
        break;
      case Verdict::Deferred:
        ++stats_.deferred;
        break;
    }
    return res.verdict;
  };

  std::vector<Root> seen;
  std::vector<Root> cands;
  const std::size_t plane_count = b.plane_count();
  for (std::size_t i = 0; i < plane_count; ++i) {
    if (b.plane(i).finished) continue;
    const auto m = b.members(i);
    cands.clear();
    for (std::size_t k = 1; k < m.size(); ++k) {
      Root zeta = b.root(m[k - 1]) + b.root(m[k]);
      if (lex_less(node.hat, zeta)) cands.push_back(zeta);
    }
    std::sort(cands.begin(), cands.end(), LexLess{});
    int nu = 0;
    for (const Root& zeta : cands) {
      ++nu;
      // Roots at or above the required one are never tried, so only tried
      // roots need to be remembered.
      if (node.has_required && !lex_less(zeta, node.required)) continue;
      if (std::find(seen.begin(), seen.end(), zeta) != seen.end()) continue;
      seen.push_back(zeta);
      if (try_child(zeta, node.has_required, node.required) == Verdict::Rejected) --nu;
    }
    if (nu == 0) {
      b.set_finished(i);
      ++stats_.planes_finished;
    }
  }

  if (node.has_required) try_child(node.required, false, node.required);
}

SearchOutput run_search(const SearchConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  auto cmp = [](const std::vector<Root>& a, const std::vector<Root>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
  };
  std::set<std::vector<Root>, decltype(cmp)> found(cmp);
  std::mutex mu;
  EmitFn emit = [&](std::span<const Root> roots) {
    std::vector<Root> v(roots.begin(), roots.end());
    std::lock_guard lock(mu);
    found.insert(std::move(v));
  };

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (cfg.time_limit_seconds > 0)
    deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(cfg.time_limit_seconds));
  auto make = [&] {
    Completer c(cfg, emit);
    if (deadline) c.set_deadline(*deadline);
    return c;
  };

  Seed s = seed();
  SearchNode root{std::move(s.rsf), s.hat, false, {}, 0};
  SearchOutput out;

  if (cfg.threads <= 1) {
    Completer c = make();
    c.complete(std::move(root));
    out.stats = c.stats();
  } else {
    std::vector<SearchNode> frontier;
    const std::function<void(SearchNode&&)> split = [&](SearchNode&& n) { frontier.push_back(std::move(n)); };
    Completer head = make();
    head.complete(std::move(root), &split);
    out.stats = head.stats();

    std::atomic<std::size_t> next{0};
    std::vector<SearchStats> per(cfg.threads);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < cfg.threads; ++t) {
      pool.emplace_back([&, t] {
        Completer c = make();
        for (std::size_t i = next++; i < frontier.size(); i = next++) c.complete(std::move(frontier[i]));
        per[t] = c.stats();
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& st : per) out.stats += st;
  }

  out.candidates.assign(found.begin(), found.end());
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace wg
