#include "wg/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace wg {

Mat3 identity3() {
  Mat3 m{};
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b[k][j]));
  return out;
}

Root operator*(const Mat3& m, const Root& v) {
  Root out;
  for (int i = 0; i < 3; ++i) {
    Int s = 0;
    for (int j = 0; j < 3; ++j) s = checked_add(s, checked_mul(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], v[j]));
    out[i] = s;
  }
  return out;
}

Int det(const Mat3& m) {
  const Root c0{m[0][0], m[1][0], m[2][0]};
  const Root c1{m[0][1], m[1][1], m[2][1]};
  const Root c2{m[0][2], m[1][2], m[2][2]};
  return det3(c0, c1, c2);
}

Mat3 inverse_unimodular(const Mat3& m) {
  const Int d = det(m);
  if (d != 1 && d != -1) throw GroupoidError("matrix is not unimodular");
  Mat3 out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // cofactor of m[j][i]
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      const Int cof = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
      out[i][j] = cof * d;
    }
  }
  return out;
}

System make_system(std::vector<Root> roots) {
  std::sort(roots.begin(), roots.end(), LexLess{});
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i].is_positive()) throw GroupoidError("not a positive root: " + to_string(roots[i]));
    if (i > 0 && roots[i - 1] == roots[i]) throw GroupoidError("duplicate root " + to_string(roots[i]));
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (cross(roots[i], roots[j]).is_zero())
        throw GroupoidError("collinear roots " + to_string(roots[i]) + " and " + to_string(roots[j]));
  return roots;
}

namespace {

bool has(std::span<const Root> r, const Root& x) { return std::binary_search(r.begin(), r.end(), x, LexLess{}); }

}  // namespace

CartanMatrix cartan_matrix(std::span<const Root> r) {
  for (int i = 0; i < 3; ++i) {
    if (!has(r, Root::simple(i))) throw GroupoidError("simple root alpha" + std::to_string(i + 1) + " missing");
  }
  CartanMatrix c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      if (i == j) {
        c[ui][uj] = 2;
        continue;
      }
      const Root ai = Root::simple(i);
      Root x = Root::simple(j);
      Int k = 0;
      while (has(r, x + ai)) {
        x = x + ai;
        ++k;
      }
      // nothing further along the string may be a root
      for (const Root& y : r) {
        const Root d = y - Root::simple(j);
        if (d.is_zero() || d[j] != 0) continue;
        bool on_string = true;
        for (int t = 0; t < 3; ++t)
          if (t != i && d[t] != 0) on_string = false;
        if (on_string && d[i] > k) {
          throw GroupoidError("gap in the alpha" + std::to_string(i + 1) + "-string through alpha" +
                              std::to_string(j + 1));
        }
      }
      c[ui][uj] = -k;
    }
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if ((c[i][j] == 0) != (c[j][i] == 0)) {
        throw GroupoidError("c" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + std::to_string(c[i][j]) +
                            " but c" + std::to_string(j + 1) + std::to_string(i + 1) + " = " +
                            std::to_string(c[j][i]));
      }
  return c;
}

Mat3 reflection_matrix(const CartanMatrix& c, int i) {
  // sigma_i(v) = v - (sum_j c_ij v_j) alpha_i
  Mat3 m = identity3();
  const auto ui = static_cast<std::size_t>(i);
  for (std::size_t j = 0; j < 3; ++j) m[ui][j] -= c[ui][j];
  return m;
}

std::optional<System> reflect(std::span<const Root> r, int i, std::string* why) {
  CartanMatrix c;
  try {
    c = cartan_matrix(r);
  } catch (const GroupoidError& e) {
    if (why) *why = e.what();
    return std::nullopt;
  }
  const Mat3 s = reflection_matrix(c, i);
  System out;
  out.reserve(r.size());
  for (const Root& x : r) {
    Root y = s * x;
    const bool nonneg = y[0] >= 0 && y[1] >= 0 && y[2] >= 0;
    const bool nonpos = y[0] <= 0 && y[1] <= 0 && y[2] <= 0;
    if (!nonneg && !nonpos) {
      if (why) *why = "sigma" + std::to_string(i + 1) + to_string(x) + " = " + to_string(y) + " has mixed signs";
      return std::nullopt;
    }
    if (!nonneg) y = -y;
    out.push_back(y);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    if (why) *why = "sigma" + std::to_string(i + 1) + " identifies two roots";
    return std::nullopt;
  }
  return out;
}

OrbitResult orbit(std::span<const Root> r, std::size_t max_objects) {
  auto cmp = [](const System& a, const System& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
  };
  std::map<System, std::size_t, decltype(cmp)> index(cmp);
  Orbit o;
  OrbitResult res;
  auto fail = [&](std::size_t a, int i, std::string reason) {
    res.failure = {a, i, o.objects[a], std::move(reason)};
    return res;
  };

  o.objects.emplace_back(r.begin(), r.end());
  index.emplace(o.objects[0], 0);
  for (std::size_t a = 0; a < o.objects.size(); ++a) {
    try {
      o.cartan.push_back(cartan_matrix(o.objects[a]));
    } catch (const GroupoidError& e) {
      return fail(a, -1, e.what());
    }
    std::array<std::size_t, 3> nb{};
    for (int i = 0; i < 3; ++i) {
      std::string why;
      auto img = reflect(o.objects[a], i, &why);
      if (!img) return fail(a, i, why);
      auto [it, fresh] = index.try_emplace(std::move(*img), o.objects.size());
      if (fresh) {
        if (o.objects.size() >= max_objects) return fail(a, i, "more than " + std::to_string(max_objects) + " objects");
        o.objects.push_back(it->first);
      }
      nb[static_cast<std::size_t>(i)] = it->second;
    }
    o.next.push_back(nb);
  }

  for (std::size_t a = 0; a < o.objects.size(); ++a) {
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t b = o.next[a][i];
      if (o.next[b][i] != a) return fail(a, static_cast<int>(i), "r_i is not an involution");
      for (std::size_t j = 0; j < 3; ++j) {
        if (o.cartan[a][i][j] != o.cartan[b][i][j]) {
          return fail(a, static_cast<int>(i),
                      "row " + std::to_string(i + 1) + " of the Cartan matrix changes across the edge");
        }
      }
    }
  }
  res.orbit = std::move(o);
  return res;
}

Mat3 edge_matrix(const Orbit& o, std::size_t a, int i) { return reflection_matrix(o.cartan[a], i); }

std::string hom_group_name(std::size_t order, bool abelian, std::size_t max_element_order) {
  switch (order) {
    case 1: return "1";
    case 2: return "A1";
    case 4: return abelian ? "A1×A1" : "?";
    case 6: return abelian ? "?" : "A2";
    case 8:
      if (abelian) return max_element_order == 2 ? "A1×A1×A1" : "?";
      return max_element_order == 4 ? "B2" : "?";
    case 12: return "A1×A2";
    case 16: return "B2×A1";
    case 24: return max_element_order == 6 ? "G2×A1" : "A3";
    case 48: return "B3";
    default: return "?";
  }
}

namespace {

std::size_t element_order(const Mat3& g) {
  const Mat3 id = identity3();
  Mat3 x = g;
  std::size_t n = 1;
  while (x != id) {
    x = x * g;
    if (++n > 48) throw GroupoidError("element of excessive order in Hom group");
  }
  return n;
}

}  // namespace

HomGroup hom_group(const Orbit& o, std::size_t base) {
  const std::size_t n = o.objects.size();
  // tree[a]: morphism base -> a along a BFS tree
  std::vector<std::optional<Mat3>> tree(n);
  tree[base] = identity3();
  std::deque<std::size_t> queue{base};
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (int i = 0; i < 3; ++i) {
      const std::size_t b = o.next[a][static_cast<std::size_t>(i)];
      if (!tree[b]) {
        tree[b] = edge_matrix(o, a, i) * *tree[a];
        queue.push_back(b);
      }
    }
  }

  std::set<Mat3> gens;
  for (std::size_t a = 0; a < n; ++a) {
    for (int i = 0; i < 3; ++i) {
      const std::size_t b = o.next[a][static_cast<std::size_t>(i)];
      const Mat3 loop = inverse_unimodular(*tree[b]) * edge_matrix(o, a, i) * *tree[a];
      if (loop != identity3()) gens.insert(loop);
    }
  }

  std::set<Mat3> group{identity3()};
  std::vector<Mat3> frontier{identity3()};
  while (!frontier.empty()) {
    std::vector<Mat3> fresh;
    for (const Mat3& x : frontier) {
      for (const Mat3& g : gens) {
        Mat3 y = g * x;
        if (group.insert(y).second) {
          if (group.size() > 48) throw GroupoidError("Hom group has more than 48 elements");
          fresh.push_back(y);
        }
      }
    }
    frontier = std::move(fresh);
  }

  HomGroup h;
  h.elements.assign(group.begin(), group.end());
  h.abelian = true;
  for (const Mat3& x : h.elements) {
    h.max_element_order = std::max(h.max_element_order, element_order(x));
    for (const Mat3& y : h.elements)
      if (x * y != y * x) h.abelian = false;
  }
  h.name = hom_group_name(h.order(), h.abelian, h.max_element_order);
  return h;
}

Cover cover(const Orbit& o, std::size_t max_vertices) {
  Cover c;
  std::map<std::pair<std::size_t, Mat3>, std::size_t> index;
  c.object.push_back(0);
  c.morphism.push_back(identity3());
  index.emplace(std::make_pair(std::size_t{0}, identity3()), 0);
  for (std::size_t v = 0; v < c.size(); ++v) {
    std::array<std::size_t, 3> nb{};
    for (int i = 0; i < 3; ++i) {
      const std::size_t a = c.object[v];
      const std::size_t b = o.next[a][static_cast<std::size_t>(i)];
      Mat3 m = edge_matrix(o, a, i) * c.morphism[v];
      auto [it, fresh] = index.try_emplace(std::make_pair(b, m), c.size());
      if (fresh) {
        if (c.size() >= max_vertices) throw GroupoidError("cover exceeds " + std::to_string(max_vertices) + " vertices");
        c.object.push_back(b);
        c.morphism.push_back(m);
      }
      nb[static_cast<std::size_t>(i)] = it->second;
    }
    c.next.push_back(nb);
  }
  return c;
}

std::map<std::size_t, std::size_t> plane_census(std::span<const Root> r) {
  std::map<PlaneNormal, std::set<std::size_t>> planes;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      auto& s = planes[primitive_normal(r[i], r[j])];
      s.insert(i);
      s.insert(j);
    }
  }
  std::map<std::size_t, std::size_t> out;
  for (const auto& [nrm, s] : planes) ++out[s.size()];
  return out;
}

std::size_t plane_count(const std::map<std::size_t, std::size_t>& census) {
  std::size_t n = 0;
  for (const auto& [size, count] : census) n += count;
  return n;
}

bool sum_rank2_holds(std::span<const Root> r) {
  const auto census = plane_census(r);
  std::size_t s = 0;
  for (const auto& [size, count] : census) s += size * count;
  return s == 3 * (plane_count(census) - 1);
}

bool roots_are_sums(std::span<const Root> r) {
  for (const Root& x : r) {
    if (x.height() == 1) continue;
    bool found = false;
    for (const Root& y : r) {
      const Root z = x - y;
      if (z.is_positive() && has(r, z)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

EulerData euler_check(const Cover& c, const std::map<std::size_t, std::size_t>& census) {
  EulerData d;
  d.e = c.size();
  if ((3 * d.e) % 2 != 0) throw GroupoidError("odd number of edge ends in the cover");
  d.k = 3 * d.e / 2;

  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      std::vector<bool> seen(c.size(), false);
      for (std::size_t v = 0; v < c.size(); ++v) {
        if (seen[v]) continue;
        std::size_t len = 0, w = v;
        do {
          seen[w] = true;
          w = c.next[w][len % 2 == 0 ? i : j];
          ++len;
        } while (w != v || len % 2 != 0);
        ++d.f;
        ++d.faces_by_half_length[len / 2];
      }
    }
  }

  std::map<std::size_t, std::size_t> twice;
  for (const auto& [size, count] : census) twice[size] = 2 * count;
  const auto e = static_cast<long long>(d.e), k = static_cast<long long>(d.k), f = static_cast<long long>(d.f);
  d.holds = e - k + f == 2 && k == 3 * f - 6 && d.f == 2 * plane_count(census) && d.faces_by_half_length == twice;
  return d;
}

bool canonical_less(const Root& a, const Root& b, CanonicalOrder order) {
  return order == CanonicalOrder::HeightLex ? height_lex_less(a, b) : lex_less(a, b);
}

System canonical_sorted(std::span<const Root> r, CanonicalOrder order) {
  System out(r.begin(), r.end());
  std::sort(out.begin(), out.end(), [order](const Root& a, const Root& b) { return canonical_less(a, b, order); });
  return out;
}

System canonical_form(const Orbit& o, CanonicalOrder order) {
  auto seq_less = [order](const System& a, const System& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [order](const Root& x, const Root& y) { return canonical_less(x, y, order); });
  };
  std::optional<System> best;
  System buf;
  for (const System& obj : o.objects) {
    for (const Permutation& p : all_permutations()) {
      buf.clear();
      for (const Root& x : obj) buf.push_back(permute(x, p));
      buf = canonical_sorted(buf, order);
      if (!best || seq_less(buf, *best)) best = buf;
    }
  }
  return *best;
}

bool display_less(const Root& a, const Root& b) {
  const Int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  for (int k = 2; k >= 0; --k)
    if (a[k] != b[k]) return a[k] > b[k];
  return false;
}

System display_sorted(std::span<const Root> r) {
  System out(r.begin(), r.end());
  std::sort(out.begin(), out.end(), display_less);
  return out;
}

Int min_cartan_entry(const Orbit& o) {
  Int m = 2;
  for (const auto& c : o.cartan)
    for (const auto& row : c)
      for (Int x : row) m = std::min(m, x);
  return m;
}

namespace {

std::string dot_graph(const std::string& name, std::size_t n, const std::vector<std::array<std::size_t, 3>>& next) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t a = 0; a < n; ++a) os << "  " << a << ";\n";
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t b = next[a][i];
      if (a < b) os << "  " << a << " -- " << b << " [label=" << i + 1 << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string quotient_dot(const Orbit& o) { return dot_graph("quotient", o.objects.size(), o.next); }

std::string cover_dot(const Cover& c) { return dot_graph("cover", c.size(), c.next); }

}  // namespace wg
