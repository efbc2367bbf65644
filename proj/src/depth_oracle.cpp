#include "inireg/depth_oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "inireg/rational.hpp"

namespace inireg {

namespace {

constexpr int kHardMaskLimit = 26;  // bitmask width / memory bound for 2^n tables

// face_table[m] = true iff the squarefree monomial with support m is outside
// the ideal, i.e. no generator support is a subset of m.
std::vector<char> face_table(const std::vector<std::uint32_t>& gen_supports, int n) {
  std::vector<char> nonface(std::size_t(1) << n, 0);
  for (auto g : gen_supports) nonface[g] = 1;
  for (std::uint32_t m = 1; m < (std::uint32_t(1) << n); ++m) {
    if (nonface[m]) continue;
    for (int v = 0; v < n; ++v)
      if ((m >> v) & 1u) {
        if (nonface[m & ~(1u << v)]) {
          nonface[m] = 1;
          break;
        }
      }
  }
  std::vector<char> face(nonface.size());
  for (std::size_t m = 0; m < nonface.size(); ++m) face[m] = !nonface[m];
  return face;
}

std::uint64_t abs64(long long x) { return x < 0 ? -static_cast<std::uint64_t>(x) : x; }

// Fraction-free (Bareiss) elimination in 64-bit arithmetic; returns the rank
// or -1 when an intermediate value leaves the 64-bit range. Pivots choose the
// smallest nonzero magnitude to slow entry growth.
int rank_int64(std::vector<std::vector<long long>>& m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      if (pivot < 0 || abs64(m[r][col]) < abs64(m[pivot][col])) pivot = r;
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const long long p = m[rank][col];
    for (int r = rank + 1; r < rows; ++r) {
      const long long factor = m[r][col];
      for (int c = col + 1; c < cols; ++c) {
        __int128 num = static_cast<__int128>(m[r][c]) * p -
                       static_cast<__int128>(factor) * m[rank][c];
        __int128 q = num / prev;
        if (q * prev != num) return -2;  // not expected: Bareiss division is exact
        if (q > std::numeric_limits<long long>::max() || q < std::numeric_limits<long long>::min())
          return -1;
        m[r][c] = static_cast<long long>(q);
      }
      m[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

int rank_bigint(const std::vector<std::vector<long long>>& input) {
  std::vector<std::vector<Integer>> m(input.size());
  for (std::size_t i = 0; i < input.size(); ++i)
    m[i].assign(input[i].begin(), input[i].end());
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  Integer prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      if (pivot < 0 || abs(m[r][col]) < abs(m[pivot][col])) pivot = r;
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Integer p = m[rank][col];
    for (int r = rank + 1; r < rows; ++r) {
      const Integer factor = m[r][col];
      for (int c = col + 1; c < cols; ++c) m[r][c] = (m[r][c] * p - factor * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

struct FacesByCard {
  // faces[k] = sorted masks of cardinality k; faces[0] = {0} when nonvoid
  std::vector<std::vector<std::uint32_t>> by_card;
};

FacesByCard group_by_cardinality(const std::vector<std::uint32_t>& faces) {
  FacesByCard out;
  for (auto f : faces) {
    int k = std::popcount(f);
    if (k >= static_cast<int>(out.by_card.size())) out.by_card.resize(k + 1);
    out.by_card[k].push_back(f);
  }
  for (auto& level : out.by_card) std::sort(level.begin(), level.end());
  return out;
}

HomologyProfile homology_from_faces(const std::vector<std::uint32_t>& faces) {
  HomologyProfile profile;
  if (faces.empty()) return profile;  // void complex: zero everywhere
  FacesByCard grouped = group_by_cardinality(faces);
  const int top_card = static_cast<int>(grouped.by_card.size()) - 1;

  // boundary_rank[k] = rank of the map from cardinality-k faces to
  // cardinality-(k-1) faces; the empty face is a genuine row, which makes the
  // homology reduced.
  std::vector<int> boundary_rank(top_card + 2, 0);
  for (int k = 1; k <= top_card; ++k) {
    const auto& rows_faces = grouped.by_card[k - 1];
    const auto& cols_faces = grouped.by_card[k];
    if (rows_faces.empty() || cols_faces.empty()) continue;
    std::vector<std::vector<long long>> matrix(rows_faces.size(),
                                               std::vector<long long>(cols_faces.size(), 0));
    for (std::size_t c = 0; c < cols_faces.size(); ++c) {
      std::uint32_t face = cols_faces[c];
      int position = 0;
      for (std::uint32_t rest = face; rest != 0; rest &= rest - 1) {
        std::uint32_t v = rest & (~rest + 1);  // lowest set bit
        std::uint32_t sub = face & ~v;
        auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
        matrix[it - rows_faces.begin()][c] = (position % 2 == 0) ? 1 : -1;
        ++position;
      }
    }
    boundary_rank[k] = integer_matrix_rank(std::move(matrix));
  }

  profile.ranks.assign(top_card + 1, 0);
  for (int k = 0; k <= top_card; ++k) {
    long long ck = static_cast<long long>(grouped.by_card[k].size());
    profile.ranks[k] = ck - boundary_rank[k] - boundary_rank[k + 1];
  }
  while (!profile.ranks.empty() && profile.ranks.back() == 0) profile.ranks.pop_back();
  return profile;
}

}  // namespace

int integer_matrix_rank(std::vector<std::vector<long long>> matrix) {
  auto copy = matrix;
  int r = rank_int64(copy);
  if (r >= 0) return r;
  return rank_bigint(matrix);
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw std::invalid_argument("Stanley-Reisner complex needs a squarefree ideal");
  const int n = ideal.ring().size();
  if (n > kHardMaskLimit) throw std::invalid_argument("ring too large for subset enumeration");
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.min_gens()) supports.push_back(g.support_mask());
  auto face = face_table(supports, n);

  SimplicialComplex complex;
  complex.nvertices = n;
  for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m) {
    if (!face[m]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!((m >> v) & 1u) && face[m | (1u << v)]) maximal = false;
    if (maximal) complex.facets.push_back(m);
  }
  return complex;
}

std::vector<std::uint32_t> complex_faces(const SimplicialComplex& complex) {
  std::vector<std::uint32_t> faces;
  std::vector<char> seen(std::size_t(1) << complex.nvertices, 0);
  for (auto facet : complex.facets) {
    for (std::uint32_t sub = facet;; sub = (sub - 1) & facet) {
      if (!seen[sub]) {
        seen[sub] = 1;
        faces.push_back(sub);
      }
      if (sub == 0) break;
    }
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

HomologyProfile reduced_homology_ranks(const SimplicialComplex& complex) {
  return homology_from_faces(complex_faces(complex));
}

int oracle_depth(const MonomialIdeal& ideal, const OracleOptions& options) {
  const int n = ideal.ring().size();
  if (ideal.is_zero()) return n;

  MonomialIdeal work = ideal;
  int new_vars = 0;
  if (!ideal.is_squarefree()) {
    auto [pol, map] = polarize(ideal);
    work = pol;
    new_vars = map.new_variable_count;
  }
  const int np = work.ring().size();
  if (np > options.max_vars && !options.force) throw SizeGuardError(np, options.max_vars);
  if (np > kHardMaskLimit)
    throw std::invalid_argument("polarized ring too large for subset enumeration");

  std::vector<std::uint32_t> supports;
  for (const auto& g : work.min_gens()) supports.push_back(g.support_mask());
  auto face = face_table(supports, np);

  int pd = 0;
  std::vector<std::uint32_t> faces;
  for (std::uint32_t sigma = 1; sigma < (std::uint32_t(1) << np); ++sigma) {
    // Restriction is a cone (hence exact) unless every vertex of sigma lies
    // in some generator support contained in sigma.
    std::uint32_t covered = 0;
    for (auto g : supports)
      if ((g & ~sigma) == 0) covered |= g;
    if (covered != sigma) continue;

    faces.clear();
    for (std::uint32_t sub = sigma;; sub = (sub - 1) & sigma) {
      if (face[sub]) faces.push_back(sub);
      if (sub == 0) break;
    }
    HomologyProfile profile = homology_from_faces(faces);
    const int cardinality = std::popcount(sigma);
    for (int d = -1; d <= profile.top_dimension(); ++d)
      if (profile.rank(d) > 0) pd = std::max(pd, cardinality - 1 - d);
  }
  const int depth_polarized = np - pd;
  return depth_polarized - new_vars;
}

}  // namespace inireg
