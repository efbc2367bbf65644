#pragma once

#include <string>
#include <vector>

#include "inireg/monomial.hpp"
#include "inireg/ring.hpp"

namespace inireg {

/// A monomial ideal held by its unique minimal generating set (sorted,
/// pairwise non-dividing, never containing 1). The zero ideal is the empty
/// generator set.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(Ring ring);
  /// Minimalizes: discards generators divisible by another. Errors on a unit
  /// generator (1) or empty input.
  static MonomialIdeal from_generators(Ring ring, std::vector<Monomial> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& min_gens() const { return min_gens_; }
  bool is_zero() const { return min_gens_.empty(); }
  bool is_squarefree() const;

  /// True iff some minimal generator divides m.
  bool contains(const Monomial& m) const;
  /// Max exponent of variable v across minimal generators; 0 if absent.
  int var_degree(int v) const;
  /// Ring variables absent from every minimal generator.
  std::vector<int> free_variables() const;

  bool operator==(const MonomialIdeal& other) const {
    return ring_ == other.ring_ && min_gens_ == other.min_gens_;
  }

  std::string to_string() const;
  std::vector<std::string> generator_strings() const;  // sorted

 private:
  MonomialIdeal(Ring ring, std::vector<Monomial> gens)
      : ring_(std::move(ring)), min_gens_(std::move(gens)) {}

  Ring ring_;
  std::vector<Monomial> min_gens_;
};

/// Divisibility-minimal subset of `gens`, generating the same ideal.
MonomialIdeal minimalize(Ring ring, std::vector<Monomial> gens);

/// The vertex-weighted hypergraph of generator supports: vertices are the
/// variables occurring in min_gens weighted by d_x(I), edges are the supports.
struct Hypergraph {
  struct Edge {
    Monomial generator;
    std::vector<int> support;
  };
  std::vector<int> vertices;          // occurring variables, ascending
  std::vector<int> weight;            // indexed by ring variable; d_x(I)
  std::vector<Edge> edges;
};

Hypergraph hypergraph_view(const MonomialIdeal& ideal);

/// Two leaves x != y with unique containing generators M1 != M2 and witness
/// monomials z, w: x does not divide z, z | M1, y does not divide w, w | M2,
/// gcd(z, w) = 1 and z*w is a minimal generator.
struct LeafPair {
  int x;
  int y;
  Monomial m1;
  Monomial m2;
  Monomial z;
  Monomial w;
};

/// Greedy maximal selection of pairwise-disjoint leaf pairs, deterministic by
/// variable index. Witness search runs over minimal generators and their
/// coprime splits, first hit wins.
std::vector<LeafPair> find_leaf_pairs(const MonomialIdeal& ideal);

/// All valid leaf pairs (x < y), for exhaustive pipeline search.
std::vector<LeafPair> all_leaf_pairs(const MonomialIdeal& ideal);

/// Records how each original variable was split into polarizing variables.
struct PolarizationMap {
  Ring original;
  Ring polarized;
  /// slots[v] = polarized-ring indices of v = v_(1), v_p2, ..., v_pd.
  std::vector<std::vector<int>> slots;
  /// origin_of[u] = original variable of polarized variable u.
  std::vector<int> origin_of;
  int new_variable_count = 0;

  /// Sets every polarizing variable back to its original (test support for
  /// the polarize-then-specialize round trip).
  Monomial specialize(const Monomial& polarized_monomial) const;
};

/// Standard polarization: x^e in a generator becomes x * x_p2 * ... * x_pe.
/// The output is squarefree; new variables are appended after the originals
/// in ring order.
std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& ideal);

}  // namespace inireg
