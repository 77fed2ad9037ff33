// Enumeration of candidate positive root systems of rank three.
//
// Roots are appended in strictly increasing lex order.  A search node is a
// fragment B together with the largest root so far (hat): every root of any
// completion that is lex-below or equal to hat is already in B.
#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wg/fragment.hpp"
#include "wg/lattice.hpp"

namespace wg {

struct SearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchConfig {
  /// Largest admissible root string length, i.e. minus the smallest
  /// admissible Cartan entry.
  Int cartan_bound = 7;
  /// Branches whose root count exceeds this are abandoned with a diagnostic.
  std::size_t max_roots = 64;
  bool use_required_root = true;
  /// Nodes at this depth become independent work items for the thread pool.
  std::size_t parallel_depth = 4;
  std::size_t threads = 1;
  /// Stop exploring after this many seconds; 0 means no limit.
  double time_limit_seconds = 0;
};

enum class Verdict : std::uint8_t {
  Accepted = 0,
  Rejected = 1,
  /// alpha can only be a root if some root strictly between hat and alpha is.
  Deferred = 2,
};

struct AppendResult {
  Verdict verdict = Verdict::Rejected;
  std::optional<Rsf> rsf;  // set iff Accepted
  /// Largest characteristic number on the planes alpha was inserted into.
  Int max_string = 0;
};

struct Seed {
  Rsf rsf;
  Root hat;
};

/// {a3, a2, a2+a3, a1, a1+a2, a1+a2+a3}: one object of every irreducible
/// system can be brought into this shape, and every further root is
/// lex-greater than a1+a2+a3.
Seed seed();

AppendResult append_root(const Root& alpha, const Rsf& b, const Root& hat, const SearchConfig& cfg);

struct RequiredRoot {
  enum class Kind : std::uint8_t { NotFound = 0, Found = 1, Impossible = 2 };
  Kind kind = Kind::NotFound;
  Root root;  // valid iff Found
};

RequiredRoot required_root(const Rsf& b, const Root& hat);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t appends_tried = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  std::uint64_t deferred = 0;
  std::uint64_t emitted = 0;
  std::uint64_t required_found = 0;
  std::uint64_t required_impossible = 0;
  std::uint64_t planes_finished = 0;
  std::uint64_t aborted_branches = 0;
  bool timed_out = false;
  std::size_t max_depth = 0;
  /// Largest characteristic number on any plane of an accepted fragment.
  Int max_string_seen = 0;

  SearchStats& operator+=(const SearchStats& o);
};

/// Receives each set found to satisfy the plane-count identity; the roots
/// are lex-sorted.  May be called from several threads at once.
using EmitFn = std::function<void(std::span<const Root>)>;

struct SearchNode {
  Rsf rsf;
  Root hat;
  bool has_required = false;
  Root required;
  std::size_t depth = 0;
};

/// The recursive completion procedure.  One instance per thread.
class Completer {
 public:
  Completer(const SearchConfig& cfg, EmitFn emit) : cfg_(cfg), emit_(std::move(emit)) {}

  /// Runs the full recursion below `node`.  When `split` is set, nodes at
  /// depth cfg.parallel_depth are handed to it instead of being explored.
  void complete(SearchNode node, const std::function<void(SearchNode&&)>* split = nullptr);

  void set_deadline(std::chrono::steady_clock::time_point t) { deadline_ = t; }

  const SearchStats& stats() const { return stats_; }

 private:
  void descend(SearchNode&& child, const std::function<void(SearchNode&&)>* split);

  const SearchConfig& cfg_;
  EmitFn emit_;
  SearchStats stats_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

struct SearchOutput {
  /// Distinct emitted sets, lex-sorted each, in ascending order.
  std::vector<std::vector<Root>> candidates;
  SearchStats stats;
  double seconds = 0;
};

/// Seed, complete, collect.  Deterministic output regardless of threads.
SearchOutput run_search(const SearchConfig& cfg);

}  // namespace wg
