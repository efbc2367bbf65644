#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "inireg/monomial_ideal.hpp"

namespace inireg {

/// Simplicial complex on vertices 0..nvertices-1, stored by its facets as
/// vertex bitmasks. Faces are the downward closure of the facets. The void
/// complex has no facets; the complex {()} has the single facet 0.
struct SimplicialComplex {
  int nvertices = 0;
  std::vector<std::uint32_t> facets;
};

/// Ranks of reduced simplicial homology over the rationals, dimensions -1 and
/// up.
struct HomologyProfile {
  std::vector<long long> ranks;  // ranks[d + 1] = rank in dimension d

  long long rank(int dim) const {
    int i = dim + 1;
    return (i >= 0 && i < static_cast<int>(ranks.size())) ? ranks[i] : 0;
  }
  int top_dimension() const { return static_cast<int>(ranks.size()) - 2; }
};

class SizeGuardError : public std::runtime_error {
 public:
  SizeGuardError(int vars, int limit)
      : std::runtime_error("polarized ring has " + std::to_string(vars) +
                           " variables, above the exhaustive-oracle guard of " +
                           std::to_string(limit) + " (rerun with --force to override)") {}
};

/// Faces are the squarefree monomials outside I: sigma is a face iff the
/// product of its variables is not in I. Requires a squarefree proper ideal.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

/// All faces of the complex (downward closure of the facets), including the
/// empty face when the complex is nonvoid.
std::vector<std::uint32_t> complex_faces(const SimplicialComplex& complex);

/// Exact homology ranks over the rationals via fraction-free integer
/// elimination of the boundary matrices.
HomologyProfile reduced_homology_ranks(const SimplicialComplex& complex);

struct OracleOptions {
  int max_vars = 16;  // exhaustive subset guard on the polarized ring
  bool force = false;
};

/// Brute-force depth of R/I for a monomial ideal: polarize when needed, then
/// recover the projective dimension from reduced homology of vertex-induced
/// subcomplexes of the Stanley-Reisner complex, exhaustively over all vertex
/// subsets, and apply depth = n - pd. Exact over the rationals
/// (characteristic 0). Zero ideal gives n; the guard rejects polarized rings
/// above max_vars unless forced.
int oracle_depth(const MonomialIdeal& ideal, const OracleOptions& options = {});

/// Exact rank of an integer matrix by fraction-free elimination. Runs in
/// 64-bit arithmetic with overflow detection and falls back to
/// arbitrary-precision integers when the fast path overflows.
int integer_matrix_rank(std::vector<std::vector<long long>> matrix);

}  // namespace inireg
