#include "psts/morphisms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace psts {

bool is_morphism(const IncidenceStructure& a, const IncidenceStructure& b, const PointMap& f) {
  if (static_cast<int>(f.size()) != a.v()) return false;
  std::vector<char> used(b.v(), 0);
  for (Point p = 0; p < a.v(); ++p) {
    if (f[p] < 0 || f[p] >= b.v() || used[f[p]]) return false;
    used[f[p]] = 1;
  }
  for (const Line& l : a.lines())
    if (!b.has_line({f[l[0]], f[l[1]], f[l[2]]})) return false;
  return true;
}

bool is_automorphism(const IncidenceStructure& s, const PointMap& f) {
  return is_morphism(s, s, f);
}

PointMap compose(const PointMap& f, const PointMap& g) {
  PointMap out(g.size());
  for (size_t i = 0; i < g.size(); ++i) out[i] = f.at(g[i]);
  return out;
}

PointMap inverse(const PointMap& f) {
  PointMap out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[f[i]] = static_cast<Point>(i);
  return out;
}

PointMap identity_map(int n) {
  PointMap out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::optional<PointMap> isomorphism(const IncidenceStructure& a, const IncidenceStructure& b,
                                    int workers) {
  SearchOptions opts;
  opts.iso_mode = true;
  opts.limit = 1;
  opts.workers = workers;
  auto maps = enumerate_monomorphisms(a, b, opts);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

std::optional<PointMap> embedding(const IncidenceStructure& a, const IncidenceStructure& b,
                                  int workers) {
  SearchOptions opts;
  opts.limit = 1;
  opts.workers = workers;
  auto maps = enumerate_monomorphisms(a, b, opts);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

AutGroup automorphism_group(const IncidenceStructure& s, int workers) {
  if (s.v() > 150) throw std::invalid_argument("structure too large for automorphism enumeration");
  SearchOptions opts;
  opts.iso_mode = true;
  opts.workers = workers;
  AutGroup out;
  out.elements = enumerate_monomorphisms(s, s, opts);
  std::sort(out.elements.begin(), out.elements.end());
  out.order = static_cast<long>(out.elements.size());
  // Greedy canonical generators: close under composition, add the first
  // element not yet generated.
  std::set<PointMap> generated{identity_map(s.v())};
  for (const PointMap& g : out.elements) {
    if (generated.count(g)) continue;
    out.generators.push_back(g);
    std::vector<PointMap> frontier(generated.begin(), generated.end());
    frontier.push_back(g);
    generated.insert(g);
    while (!frontier.empty()) {
      std::vector<PointMap> next;
      for (const PointMap& x : frontier)
        for (const PointMap& gen : out.generators) {
          PointMap y = compose(gen, x);
          if (generated.insert(y).second) next.push_back(std::move(y));
          PointMap z = compose(x, gen);
          if (generated.insert(z).second) next.push_back(std::move(z));
        }
      frontier = std::move(next);
    }
    if (static_cast<long>(generated.size()) == out.order) break;
  }
  return out;
}

PointMap product_automorphism(const ProductView& view, const PointMap& base_f, int shift) {
  if (!is_automorphism(view.base(), base_f))
    throw std::invalid_argument("map is not an automorphism of the base structure");
  const IncidenceStructure& s = view.host();
  int m = view.modulus();
  shift %= m;
  if (shift < 0) shift += m;
  PointMap out(s.v());
  for (Point p = 0; p < s.v(); ++p) {
    Point image = view.at(base_f[view.base_of(p)], view.cyclic_weight_of(p) + shift);
    if (image == kUndefined) throw std::invalid_argument("product structure has incomplete fibers");
    out[p] = image;
  }
  if (!is_automorphism(s, out))
    throw std::invalid_argument("product map is not an automorphism of the product");
  return out;
}

std::variant<ProductDecomposition, NotProduct> decompose_automorphism(const ProductView& view,
                                                                      const PointMap& f) {
  const IncidenceStructure& s = view.host();
  if (!is_automorphism(s, f)) throw std::invalid_argument("map is not an automorphism");
  int m = view.modulus();
  const IncidenceStructure& base = view.base();
  PointMap base_map(base.v(), kUndefined);
  std::optional<int> shift;
  for (Point p = 0; p < s.v(); ++p) {
    Point q = f[p];
    Point a = view.base_of(p), b = view.base_of(q);
    if (base_map[a] == kUndefined)
      base_map[a] = b;
    else if (base_map[a] != b)
      return NotProduct{};
    int u = ((view.cyclic_weight_of(q) - view.cyclic_weight_of(p)) % m + m) % m;
    if (!shift)
      shift = u;
    else if (*shift != u)
      return NotProduct{};
  }
  if (!is_automorphism(base, base_map)) return NotProduct{};
  return ProductDecomposition{std::move(base_map), *shift};
}

}  // namespace psts
