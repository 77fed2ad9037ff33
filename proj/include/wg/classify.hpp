// Full classification: search, orbit verification, canonical forms,
// numbering, invariants and comparison with the reference catalogue.
#pragma once

#include <string>
#include <vector>

#include "wg/catalog.hpp"
#include "wg/search.hpp"

namespace wg {

struct ClassifiedSystem {
  int nr = 0;
  Invariants inv;
};

struct ClassifyResult {
  /// Numbered by root count, then by the lex-sorted canonical sequence.
  std::vector<ClassifiedSystem> systems;
  SearchStats stats;
  std::size_t candidates = 0;
  /// Candidates whose orbit computation failed.
  std::size_t invalid_candidates = 0;
  Int min_cartan = 0;
  std::vector<int> min_cartan_systems;
  double search_seconds = 0;
  double total_seconds = 0;
};

ClassifyResult classify(const SearchConfig& cfg, CanonicalOrder order = CanonicalOrder::Lex);

/// Numbering used by the catalogue.
bool catalogue_less(const System& a, const System& b);

struct GoldenComparison {
  bool count_ok = false;
  /// Same root sets (exactly, as sets of integer vectors) and same numbering.
  bool roots_ok = false;
  /// Orbit size, cover size, Hom order and name, plane census.
  bool table_ok = false;
  std::vector<std::string> mismatches;
  bool ok() const { return count_ok && roots_ok && table_ok; }
};

GoldenComparison compare_with_golden(const std::vector<ClassifiedSystem>& systems, const std::vector<GoldenEntry>& golden);

}  // namespace wg
