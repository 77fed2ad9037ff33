// wgclass: classification of rank three finite Weyl groupoids.
//
//   wgclass classify [--max-roots N] [--threads N] [--json FILE] ...
//   wgclass verify FILE
//   wgclass invariants NR|FILE [--json]
//   wgclass diagram NR|FILE (--cover | --quotient)
//   wgclass appendix [--from FILE]
//
// Exit codes: 0 success, 1 mismatch or invalid input, 2 usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wg/catalog.hpp"
#include "wg/classify.hpp"
#include "wg/groupoid.hpp"
#include "wg/notation.hpp"

using namespace wg;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CanonicalOrder parse_order(const std::string& s) {
  if (s == "lex") return CanonicalOrder::Lex;
  if (s == "height-lex") return CanonicalOrder::HeightLex;
  throw UsageError("--order must be lex or height-lex");
}

/// A catalogue number or a root-list file.
System load_system(const std::string& arg) {
  if (!arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos) {
    const int nr = std::stoi(arg);
    for (const GoldenEntry& g : load_golden())
      if (g.nr == nr) return g.roots;
    throw UsageError("no system with number " + arg);
  }
  return read_roots_file(arg);
}

void print_row(std::ostream& os, int nr, const Invariants& inv) {
  os << std::setw(3) << nr << "  |R+|=" << std::setw(2) << inv.roots.size() << "  |O|=" << std::setw(3) << inv.orbit_size
     << "  |A|=" << std::setw(3) << inv.cover_size << "  Hom=" << inv.hom_name << " (" << inv.hom_order << ")"
     << "  planes " << planes_text(inv.planes) << '\n';
}

void print_stats(std::ostream& os, const ClassifyResult& r) {
  const SearchStats& s = r.stats;
  os << "search: " << s.nodes << " nodes, " << s.appends_tried << " appends (" << s.accepted << " accepted, " << s.rejected
     << " rejected, " << s.deferred << " deferred), " << s.emitted << " emitted, " << r.candidates << " distinct candidates, "
     << s.required_found << "/" << s.required_impossible << " required found/impossible, " << s.aborted_branches
     << " branches over the root limit, longest string " << s.max_string_seen << ", " << std::fixed << std::setprecision(1)
     << r.search_seconds << " s\n";
  os << "classify: " << r.systems.size() << " systems, " << r.invalid_candidates << " invalid candidates, min Cartan entry "
     << r.min_cartan << " in Nr.";
  for (int nr : r.min_cartan_systems) os << ' ' << nr;
  os << ", " << r.total_seconds << " s total\n";
}

int cmd_classify(const SearchConfig& cfg, CanonicalOrder order, bool golden, const std::string& json_out) {
  const ClassifyResult r = classify(cfg, order);
  for (const ClassifiedSystem& s : r.systems) print_row(std::cout, s.nr, s.inv);
  print_stats(std::cout, r);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw std::runtime_error("cannot write " + json_out);
    out << "[\n";
    for (std::size_t k = 0; k < r.systems.size(); ++k)
      out << "  " << invariants_json(r.systems[k].nr, r.systems[k].inv) << (k + 1 < r.systems.size() ? ",\n" : "\n");
    out << "]\n";
  }
  if (r.stats.aborted_branches > 0)
    std::cerr << "warning: " << r.stats.aborted_branches << " branches abandoned beyond " << cfg.max_roots << " roots\n";
  if (!golden) return kOk;
  const GoldenComparison cmp = compare_with_golden(r.systems, load_golden());
  for (const std::string& m : cmp.mismatches) std::cout << "mismatch: " << m << '\n';
  std::cout << (cmp.ok() ? "golden: all systems agree\n" : "golden: MISMATCH\n");
  return cmp.ok() ? kOk : kMismatch;
}

int cmd_verify(const std::string& file) {
  const System sys = make_system(read_roots_file(file));
  const OrbitResult o = orbit(sys);
  if (!o) {
    std::cout << "invalid: object " << o.failure.object;
    if (o.failure.reflection >= 0) std::cout << ", reflection " << o.failure.reflection + 1;
    std::cout << ": " << o.failure.reason << '\n';
    return kMismatch;
  }
  std::cout << "valid: " << o.orbit->objects.size() << " objects\n";
  return kOk;
}

int cmd_invariants(const std::string& arg, bool as_json) {
  const Invariants inv = compute_invariants(load_system(arg));
  int nr = 0;
  for (const GoldenEntry& g : load_golden())
    if (std::set<Root>(g.roots.begin(), g.roots.end()) == std::set<Root>(inv.roots.begin(), inv.roots.end())) nr = g.nr;
  if (as_json)
    std::cout << invariants_json(nr, inv) << '\n';
  else
    print_row(std::cout, nr, inv);
  return kOk;
}

int cmd_diagram(const std::string& arg, bool want_cover) {
  const OrbitResult o = orbit(make_system(load_system(arg)));
  if (!o) {
    std::cerr << "invalid system: " << o.failure.reason << '\n';
    return kMismatch;
  }
  std::cout << (want_cover ? cover_dot(cover(*o.orbit)) : quotient_dot(*o.orbit));
  return kOk;
}

int cmd_appendix(const std::string& from) {
  if (from.empty()) {
    for (const GoldenEntry& g : load_golden()) std::cout << render_appendix_entry(g.nr, g.roots);
    return kOk;
  }
  std::ifstream in(from);
  if (!in) throw std::runtime_error("cannot open " + from);
  const nlohmann::json doc = nlohmann::json::parse(in);
  if (!doc.is_array()) throw std::runtime_error(from + ": expected a JSON array of systems");
  for (const auto& s : doc) {
    System roots;
    for (const auto& r : s.at("roots")) roots.emplace_back(r.at(0).get<Int>(), r.at(1).get<Int>(), r.at(2).get<Int>());
    std::cout << render_appendix_entry(s.at("nr").get<int>(), display_sorted(roots));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of finite Weyl groupoids of rank three"};
  app.require_subcommand(1);

  SearchConfig cfg;
  std::string order_name = "lex";
  bool no_required = false, no_golden = false;
  std::string json_out;
  auto* classify_cmd = app.add_subcommand("classify", "enumerate all systems and compare with the catalogue");
  classify_cmd->add_option("--cartan-bound", cfg.cartan_bound, "longest admissible root string")->check(CLI::Range(1, 64));
  classify_cmd->add_option("--max-roots", cfg.max_roots, "abandon branches with more roots")->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--no-required-root", no_required, "disable the required-root shortcut");
  classify_cmd->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--no-golden", no_golden, "skip the catalogue comparison");
  classify_cmd->add_option("--order", order_name, "canonical key: lex or height-lex");
  classify_cmd->add_option("--json", json_out, "write the systems as JSON");

  std::string file;
  auto* verify_cmd = app.add_subcommand("verify", "check that a root list generates a finite Weyl groupoid");
  verify_cmd->add_option("file", file, "root list")->required();

  std::string target;
  bool as_json = false;
  auto* inv_cmd = app.add_subcommand("invariants", "orbit, cover, Hom group and planes of one system");
  inv_cmd->add_option("system", target, "catalogue number or root list file")->required();
  inv_cmd->add_flag("--json", as_json, "JSON output");

  bool want_cover = false, want_quotient = false;
  auto* diag_cmd = app.add_subcommand("diagram", "object change diagram as Graphviz text");
  diag_cmd->add_option("system", target, "catalogue number or root list file")->required();
  auto* cover_flag = diag_cmd->add_flag("--cover", want_cover, "simply connected cover");
  auto* quot_flag = diag_cmd->add_flag("--quotient", want_quotient, "objects of the groupoid");
  cover_flag->excludes(quot_flag);

  std::string from;
  auto* app_cmd = app.add_subcommand("appendix", "all root lists in word notation");
  app_cmd->add_option("--from", from, "JSON written by classify --json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) {
      cfg.use_required_root = !no_required;
      return cmd_classify(cfg, parse_order(order_name), !no_golden, json_out);
    }
    if (*verify_cmd) return cmd_verify(file);
    if (*inv_cmd) return cmd_invariants(target, as_json);
    if (*diag_cmd) {
      if (!want_cover && !want_quotient) throw UsageError("diagram needs --cover or --quotient");
      return cmd_diagram(target, want_cover);
    }
    if (*app_cmd) return cmd_appendix(from);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
