// The reference catalogue of the 55 systems, invariants of a single system,
// and the text and JSON renderings used by the command line tool.
#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wg/groupoid.hpp"

namespace wg {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GoldenEntry {
  int nr = 0;
  System roots;  // listing order
  std::size_t orbit_size = 0;
  std::size_t cover_size = 0;
  std::string hom_name;
  std::map<std::size_t, std::size_t> planes;
};

/// Directory holding golden.json and appendix.txt as configured at build time.
std::string default_data_dir();

std::vector<GoldenEntry> load_golden(const std::string& path);
std::vector<GoldenEntry> load_golden();

/// Order of a named automorphism group.  Throws CatalogError for unknown names.
std::size_t hom_order_from_name(const std::string& name);

struct Invariants {
  System roots;  // canonical object, listing order
  CartanMatrix cartan{};
  std::size_t orbit_size = 0;
  std::size_t cover_size = 0;
  std::size_t hom_order = 0;
  std::string hom_name;
  std::map<std::size_t, std::size_t> planes;
  EulerData euler;
  Int min_cartan = 0;
};

/// Invariants of the system generated by r, taken at its canonical object.
/// Throws GroupoidError if r does not generate a finite Weyl groupoid.
Invariants compute_invariants(std::span<const Root> r, CanonicalOrder order = CanonicalOrder::Lex);

/// One object of the documented JSON schema.
std::string invariants_json(int nr, const Invariants& inv);

/// "2^{3}, 3^{4}" as in the published table.
std::string planes_text(const std::map<std::size_t, std::size_t>& planes);

/// "Nr. N with M positive roots:" followed by the words on one line.
std::string render_appendix_entry(int nr, std::span<const Root> roots);

}  // namespace wg
