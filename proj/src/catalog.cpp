#include "wg/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wg/notation.hpp"

#ifndef WG_DATA_DIR
#define WG_DATA_DIR "data"
#endif

namespace wg {

using json = nlohmann::ordered_json;

std::string default_data_dir() { return WG_DATA_DIR; }

std::vector<GoldenEntry> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open " + path);
  std::vector<GoldenEntry> out;
  try {
    const json doc = json::parse(in);
    for (const json& s : doc.at("systems")) {
      GoldenEntry g;
      g.nr = s.at("nr").get<int>();
      for (const json& r : s.at("roots")) g.roots.emplace_back(r.at(0).get<Int>(), r.at(1).get<Int>(), r.at(2).get<Int>());
      g.orbit_size = s.at("orbit_size").get<std::size_t>();
      g.cover_size = s.at("cover_size").get<std::size_t>();
      g.hom_name = s.at("hom").at("name").get<std::string>();
      for (const auto& [size, count] : s.at("planes").items()) g.planes[std::stoul(size)] = count.get<std::size_t>();
      out.push_back(std::move(g));
    }
  } catch (const json::exception& e) {
    throw CatalogError(path + ": " + e.what());
  }
  return out;
}

std::vector<GoldenEntry> load_golden() { return load_golden(default_data_dir() + "/golden.json"); }

std::size_t hom_order_from_name(const std::string& name) {
  static const std::map<std::string, std::size_t> orders = {
      {"1", 1},         {"A1", 2},          {"A1×A1", 4},  {"A2", 6},  {"A1×A1×A1", 8}, {"B2", 8},
      {"A1×A2", 12},    {"B2×A1", 16},      {"G2×A1", 24}, {"A3", 24}, {"B3", 48},
  };
  const auto it = orders.find(name);
  if (it == orders.end()) throw CatalogError("unknown group name " + name);
  return it->second;
}

Invariants compute_invariants(std::span<const Root> r, CanonicalOrder order) {
  const System sys = make_system(System(r.begin(), r.end()));
  const OrbitResult first = orbit(sys);
  if (!first) throw GroupoidError("object " + std::to_string(first.failure.object) + ": " + first.failure.reason);
  const System canon = canonical_form(*first.orbit, order);

  const OrbitResult at_canon = orbit(make_system(canon));
  if (!at_canon) throw GroupoidError("canonical object: " + at_canon.failure.reason);
  const Orbit& o = *at_canon.orbit;
  const HomGroup hom = hom_group(o);
  const Cover cov = cover(o);

  Invariants inv;
  inv.roots = display_sorted(canon);
  inv.cartan = o.cartan[0];
  inv.orbit_size = o.objects.size();
  inv.cover_size = cov.size();
  inv.hom_order = hom.order();
  inv.hom_name = hom.name;
  inv.planes = plane_census(o.objects[0]);
  inv.euler = euler_check(cov, inv.planes);
  inv.min_cartan = min_cartan_entry(o);
  return inv;
}

std::string invariants_json(int nr, const Invariants& inv) {
  json j;
  j["nr"] = nr;
  j["roots"] = json::array();
  for (const Root& x : inv.roots) j["roots"].push_back({x[0], x[1], x[2]});
  j["cartan"] = inv.cartan;
  j["orbit_size"] = inv.orbit_size;
  j["cover_size"] = inv.cover_size;
  j["hom"] = {{"order", inv.hom_order}, {"name", inv.hom_name}};
  j["planes"] = json::object();
  for (const auto& [size, count] : inv.planes) j["planes"][std::to_string(size)] = count;
  return j.dump();
}

std::string planes_text(const std::map<std::size_t, std::size_t>& planes) {
  std::string out;
  for (const auto& [size, count] : planes) {
    if (!out.empty()) out += ", ";
    out += std::to_string(size) + "^{" + std::to_string(count) + "}";
  }
  return out;
}

std::string render_appendix_entry(int nr, std::span<const Root> roots) {
  std::ostringstream os;
  os << "Nr. " << nr << " with " << roots.size() << " positive roots:\n";
  const char* sep = "";
  for (const Root& x : roots) {
    os << sep << emit_word(x);
    sep = ", ";
  }
  os << '\n';
  return os.str();
}

}  // namespace wg
