#include "inireg/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace inireg {

MonomialIdeal MonomialIdeal::zero(Ring ring) { return MonomialIdeal(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::from_generators(Ring ring, std::vector<Monomial> gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator set; use MonomialIdeal::zero");
  for (const auto& g : gens) {
    if (g.nvars() != ring.size()) throw std::invalid_argument("generator from a different ring");
    if (g.is_one()) throw std::invalid_argument("unit generator: ideal is not proper");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens) {
      if (&h == &g) continue;
      if (h.divides(g) && !(h == g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }
  return MonomialIdeal(std::move(ring), std::move(minimal));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(min_gens_.begin(), min_gens_.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(min_gens_.begin(), min_gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

int MonomialIdeal::var_degree(int v) const {
  int d = 0;
  for (const auto& g : min_gens_) d = std::max(d, g.exponent(v));
  return d;
}

std::vector<int> MonomialIdeal::free_variables() const {
  std::vector<int> free;
  for (int v = 0; v < ring_.size(); ++v)
    if (var_degree(v) == 0) free.push_back(v);
  return free;
}

std::vector<std::string> MonomialIdeal::generator_strings() const {
  std::vector<std::string> out;
  out.reserve(min_gens_.size());
  for (const auto& g : min_gens_) out.push_back(g.to_string(ring_));
  std::sort(out.begin(), out.end());
  return out;
}

std::string MonomialIdeal::to_string() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  bool first = true;
  for (const auto& g : generator_strings()) {
    if (!first) s += ", ";
    first = false;
    s += g;
  }
  return s + ")";
}

MonomialIdeal minimalize(Ring ring, std::vector<Monomial> gens) {
  return MonomialIdeal::from_generators(std::move(ring), std::move(gens));
}

Hypergraph hypergraph_view(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("hypergraph of the zero ideal");
  Hypergraph h;
  h.weight.assign(ideal.ring().size(), 0);
  for (int v = 0; v < ideal.ring().size(); ++v) {
    h.weight[v] = ideal.var_degree(v);
    if (h.weight[v] > 0) h.vertices.push_back(v);
  }
  for (const auto& g : ideal.min_gens()) h.edges.push_back({g, g.support()});
  return h;
}

namespace {

// Unique containing generator index per leaf variable, -1 when not a leaf.
std::vector<int> leaf_generator_index(const MonomialIdeal& ideal) {
  const int n = ideal.ring().size();
  std::vector<int> count(n, 0), where(n, -1);
  const auto& gens = ideal.min_gens();
  for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi)
    for (int v : gens[gi].support()) {
      ++count[v];
      where[v] = gi;
    }
  for (int v = 0; v < n; ++v)
    if (count[v] != 1) where[v] = -1;
  return where;
}

// Searches a witness split z*w = G over coprime variable splits of a minimal
// generator G, with z | m1, w | m2, x not dividing z, y not dividing w.
// Deterministic: generators in stored order, splits by ascending subset mask.
bool find_witness(const MonomialIdeal& ideal, int x, int y, const Monomial& m1,
                  const Monomial& m2, Monomial& z_out, Monomial& w_out) {
  const int n = ideal.ring().size();
  for (const auto& g : ideal.min_gens()) {
    auto sup = g.support();
    const int k = static_cast<int>(sup.size());
    for (std::uint32_t pick = 0; pick < (1u << k); ++pick) {
      Monomial z(n), w(n);
      for (int i = 0; i < k; ++i) {
        int v = sup[i];
        if (pick & (1u << i))
          z = z.with_exponent(v, g.exponent(v));
        else
          w = w.with_exponent(v, g.exponent(v));
      }
      if (z.exponent(x) > 0 || w.exponent(y) > 0) continue;
      if (!z.divides(m1) || !w.divides(m2)) continue;
      z_out = z;
      w_out = w;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<LeafPair> all_leaf_pairs(const MonomialIdeal& ideal) {
  std::vector<LeafPair> pairs;
  if (ideal.is_zero()) return pairs;
  auto where = leaf_generator_index(ideal);
  const int n = ideal.ring().size();
  for (int x = 0; x < n; ++x) {
    if (where[x] < 0) continue;
    for (int y = x + 1; y < n; ++y) {
      if (where[y] < 0 || where[x] == where[y]) continue;
      const Monomial& m1 = ideal.min_gens()[where[x]];
      const Monomial& m2 = ideal.min_gens()[where[y]];
      Monomial z(n), w(n);
      if (find_witness(ideal, x, y, m1, m2, z, w))
        pairs.push_back(LeafPair{x, y, m1, m2, z, w});
    }
  }
  return pairs;
}

std::vector<LeafPair> find_leaf_pairs(const MonomialIdeal& ideal) {
  auto candidates = all_leaf_pairs(ideal);
  std::vector<LeafPair> chosen;
  std::vector<char> used(ideal.ring().size(), 0);
  for (const auto& p : candidates) {
    if (used[p.x] || used[p.y]) continue;
    used[p.x] = used[p.y] = 1;
    chosen.push_back(p);
  }
  return chosen;
}

Monomial PolarizationMap::specialize(const Monomial& polarized_monomial) const {
  Monomial m(original.size());
  for (int u = 0; u < polarized_monomial.nvars(); ++u) {
    int e = polarized_monomial.exponent(u);
    if (e == 0) continue;
    int v = origin_of[u];
    m = m.with_exponent(v, m.exponent(v) + e);
  }
  return m;
}

std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& ideal) {
  const Ring& ring = ideal.ring();
  const int n = ring.size();

  std::vector<std::string> names = ring.variables();
  PolarizationMap map{ring, ring, {}, {}, 0};
  map.slots.assign(n, {});
  map.origin_of.resize(n);
  for (int v = 0; v < n; ++v) {
    map.slots[v].push_back(v);
    map.origin_of[v] = v;
  }
  for (int v = 0; v < n; ++v) {
    int d = ideal.var_degree(v);
    for (int j = 2; j <= d; ++j) {
      std::string name = ring.name(v) + "_p" + std::to_string(j);
      while (std::find(names.begin(), names.end(), name) != names.end()) name += "x";
      map.slots[v].push_back(static_cast<int>(names.size()));
      map.origin_of.push_back(v);
      names.push_back(name);
      ++map.new_variable_count;
    }
  }
  map.polarized = Ring(names);
  const int np = map.polarized.size();

  if (ideal.is_zero()) return {MonomialIdeal::zero(map.polarized), map};

  std::vector<Monomial> gens;
  for (const auto& g : ideal.min_gens()) {
    Monomial pg(np);
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < g.exponent(v); ++j) pg = pg.with_exponent(map.slots[v][j], 1);
    gens.push_back(pg);
  }
  return {MonomialIdeal::from_generators(map.polarized, std::move(gens)), map};
}

}  // namespace inireg
