#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inireg/groebner.hpp"
#include "inireg/monomial_ideal.hpp"
#include "inireg/polynomial.hpp"
#include "inireg/term_order.hpp"

namespace inireg {

/// f = b0 + b1 + ... + bt: a sum of pairwise-distinct variables with a
/// designated leading variable b0 (t >= 0).
struct LinearSumForm {
  int leading;
  std::vector<int> tail;

  std::vector<int> variables() const;  // leading first
  Polynomial to_polynomial(int nvars) const;
  std::string to_string(const Ring& ring) const;
  bool operator==(const LinearSumForm&) const = default;
};

/// Reads a polynomial back as a variable sum; the leading variable is the
/// order-maximal one.
std::optional<LinearSumForm> as_linear_sum(const Polynomial& f, const TermOrder& order);

/// Pairs (u, v) meaning "u must exceed v" in the order to be built.
struct OrderConstraint {
  std::vector<std::pair<int, int>> pairs;

  void require(int u, int v) { pairs.emplace_back(u, v); }
  void merge(const OrderConstraint& other) {
    pairs.insert(pairs.end(), other.pairs.begin(), other.pairs.end());
  }
};

/// Topologically sorted priority satisfying every constraint, stable by
/// variable index; throws on cyclic constraints.
TermOrder build_term_order(const Ring& ring, const OrderConstraint& constraints, OrderKind kind);

struct SumConditionReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Conditions under which the variable sum is regular on R/I:
///  (a) every tail variable has degree <= 1 in I (relaxed: its nonzero
///      generator degrees all equal one per-variable constant), and
///  (b) every minimal generator divisible by the leading variable is
///      divisible by some tail variable.
SumConditionReport check_sum_conditions(const MonomialIdeal& ideal, const LinearSumForm& form,
                                        bool relaxed = false);

/// ini(I, x1+y1, ..., xl+yl) by the substitution closed form: adjoin each xi,
/// then replace xi by yi in the generators, iterated in order, minimalized.
/// Requires 2-variable forms with distinct leading variables and an order
/// with xi > yi, xi > xj for i < j (whence xi != yj for i <= j).
MonomialIdeal initial_after_linear_sums(const MonomialIdeal& ideal,
                                        const std::vector<LinearSumForm>& forms,
                                        const TermOrder& order);

enum class StepProvenance { FreeVariable, LeafPair, Chain, StarPack, Manual };
std::string to_string(StepProvenance provenance);

struct PipelineConfig {
  enum class Strategy { Greedy, Exhaustive, Auto };
  Strategy strategy = Strategy::Auto;
  int restarts = 8;
  unsigned long long seed = 0;
  bool relaxed_degrees = false;
  bool use_leaf_pairs = true;
  bool use_chains = true;
  /// Exact packing search runs when the ideal touches at most this many
  /// variables; greedy passes always run.
  int exhaustive_limit = 12;
};

/// Star packing: forms b0 + sum(B) where B consists of unused degree-<=1
/// variables meeting every generator divisible by b0, variables pairwise
/// distinct across forms. Constraints record b0 > b for each tail b.
std::pair<std::vector<LinearSumForm>, OrderConstraint> star_packing(
    const MonomialIdeal& ideal, const PipelineConfig& config = {});

/// A chain b0 > b1 > ... > b_{q-1} with a terminal block: forms
/// b0+b1, ..., b_{q-2}+b_{q-1}, b_{q-1}+sum(tail). Every consecutive step and
/// the terminal block satisfy the sum conditions, so the whole chain reuses
/// its middle variables soundly.
struct Chain {
  std::vector<int> heads;  // at least 2 forms' worth: heads.size() >= 2 or tail nonempty
  std::vector<int> tail;

  std::vector<LinearSumForm> forms() const;
  int form_count() const { return static_cast<int>(heads.size()); }
};

std::pair<std::vector<Chain>, OrderConstraint> find_chains(const MonomialIdeal& ideal,
                                                           const PipelineConfig& config = {});

/// One part of a merged sequence: a leaf-pair list, a chain, or a star block.
struct TaggedForms {
  StepProvenance kind;
  std::vector<LinearSumForm> forms;
};

struct PackedForm {
  LinearSumForm form;
  StepProvenance provenance;
  bool operator==(const PackedForm&) const = default;
};

class MergeError : public std::invalid_argument {
 public:
  MergeError(const std::string& rule, const std::string& detail)
      : std::invalid_argument(rule + ": " + detail), rule_(rule) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

/// Merges tagged parts into one form sequence: leaf pairs first, each chain's
/// internal order preserved, and variable sets of distinct parts pairwise
/// disjoint (reuse is allowed only inside a single chain). Violations raise
/// MergeError with the broken rule named ("disjoint-variables",
/// "chain-order", "acyclic-order").
std::pair<std::vector<PackedForm>, OrderConstraint> merge_certificates(
    const MonomialIdeal& ideal, const std::vector<TaggedForms>& parts);

struct CertificateStep {
  Polynomial form;
  TermOrder order;  // the order that produced this step's intermediate ideal
  StepProvenance provenance;
  MonomialIdeal ideal;  // I_i, the ideal the form is tested against
  bool regular = false;
};

struct IniRegCertificate {
  std::optional<PolyIdeal> base;
  std::vector<CertificateStep> steps;
  bool verified = false;
  std::vector<std::string> notes;

  int length() const { return static_cast<int>(steps.size()); }
};

struct VerifyStep {
  Polynomial form;
  TermOrder order;
  StepProvenance provenance = StepProvenance::Manual;
};

/// Checks the defining property step by step: I_1 = ini(I) under the first
/// step's order, each form must be regular on R/I_i, and
/// I_{i+1} = ini(I_i, f_i) under the next step's order. Intermediate ideals
/// are recorded; verified is true iff every step passes. Two-variable sums
/// additionally run the substitution closed form and the computation aborts
/// if it ever disagrees with the Buchberger route.
IniRegCertificate verify_initially_regular(const PolyIdeal& ideal,
                                           const std::vector<VerifyStep>& steps);

struct PolarizationAdjustment {
  int bound_polarized = 0;
  int new_variables = 0;
  int bound_original = 0;
};

struct DepthReport {
  int lower_bound = 0;
  IniRegCertificate certificate;
  std::optional<int> oracle_depth;
  bool squarefree_equality = false;
  std::optional<PolarizationAdjustment> polarization;
  std::vector<std::string> notes;
};

/// The full pipeline: initial ideal, free variables prepended as regular
/// steps, leaf pairs, chains, star packing on what remains, merge, and
/// verification. Candidates are searched greedily under seeded restarts plus
/// an exact packer on small rings; the longest verified certificate wins.
/// Throws UnitIdealError on the unit ideal.
DepthReport depth_lower_bound(const PolyIdeal& ideal, const TermOrder& order,
                              const PipelineConfig& config = {});

/// Polarize, bound the polarization, and transfer: the bound on the original
/// ideal is the polarized bound minus the number of new variables. The
/// polarized bound never drops below the new-variable count (the polarization
/// chains alone supply that many steps).
DepthReport polarized_bound(const MonomialIdeal& ideal, const PipelineConfig& config = {});

}  // namespace inireg
