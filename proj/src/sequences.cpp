#include "inireg/sequences.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "inireg/depth_oracle.hpp"

namespace inireg {

std::vector<int> LinearSumForm::variables() const {
  std::vector<int> vars{leading};
  vars.insert(vars.end(), tail.begin(), tail.end());
  return vars;
}

Polynomial LinearSumForm::to_polynomial(int nvars) const {
  return Polynomial::variable_sum(nvars, variables());
}

std::string LinearSumForm::to_string(const Ring& ring) const {
  std::string s = ring.name(leading);
  for (int v : tail) s += " + " + ring.name(v);
  return s;
}

std::optional<LinearSumForm> as_linear_sum(const Polynomial& f, const TermOrder& order) {
  std::vector<int> vars;
  for (const auto& [m, c] : f.terms()) {
    if (c != 1 || m.total_degree() != 1) return std::nullopt;
    vars.push_back(m.support()[0]);
  }
  if (vars.empty()) return std::nullopt;
  std::sort(vars.begin(), vars.end(),
            [&](int a, int b) { return order.position_of(a) < order.position_of(b); });
  LinearSumForm form{vars[0], {vars.begin() + 1, vars.end()}};
  return form;
}

TermOrder build_term_order(const Ring& ring, const OrderConstraint& constraints, OrderKind kind) {
  const int n = ring.size();
  std::vector<std::set<int>> below(n);
  std::vector<int> indegree(n, 0);
  for (auto [u, v] : constraints.pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("constraint variable out of range");
    if (u == v) throw std::invalid_argument("cyclic order constraints");
    if (below[u].insert(v).second) ++indegree[v];
  }
  // Kahn, always taking the smallest available variable index.
  std::vector<int> priority;
  std::vector<char> done(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && indegree[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) throw std::invalid_argument("cyclic order constraints");
    done[pick] = 1;
    priority.push_back(pick);
    for (int w : below[pick]) --indegree[w];
  }
  return TermOrder(kind, std::move(priority));
}

SumConditionReport check_sum_conditions(const MonomialIdeal& ideal, const LinearSumForm& form,
                                        bool relaxed) {
  const int n = ideal.ring().size();
  SumConditionReport report;
  for (int v : form.variables())
    if (v < 0 || v >= n) throw std::invalid_argument("form variable outside the ring");

  for (int v : form.tail) {
    if (relaxed) {
      std::set<int> degrees;
      for (const auto& g : ideal.min_gens())
        if (g.exponent(v) > 0) degrees.insert(g.exponent(v));
      if (degrees.size() > 1) {
        report.ok = false;
        report.violations.push_back("tail variable " + ideal.ring().name(v) +
                                    " has mixed nonzero degrees across generators");
      }
    } else if (ideal.var_degree(v) > 1) {
      report.ok = false;
      report.violations.push_back("tail variable " + ideal.ring().name(v) +
                                  " has degree " + std::to_string(ideal.var_degree(v)));
    }
  }
  for (const auto& g : ideal.min_gens()) {
    if (g.exponent(form.leading) == 0) continue;
    bool hit = std::any_of(form.tail.begin(), form.tail.end(),
                           [&](int v) { return g.exponent(v) > 0; });
    if (!hit) {
      report.ok = false;
      report.violations.push_back("generator " + g.to_string(ideal.ring()) +
                                  " contains the leading variable but no tail variable");
    }
  }
  return report;
}

MonomialIdeal initial_after_linear_sums(const MonomialIdeal& ideal,
                                        const std::vector<LinearSumForm>& forms,
                                        const TermOrder& order) {
  if (forms.empty()) return ideal;
  const int n = ideal.ring().size();
  for (size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].tail.size() != 1)
      throw std::invalid_argument("closed form needs two-variable sums");
    if (!order.var_greater(forms[i].leading, forms[i].tail[0]))
      throw std::invalid_argument("order must place each leading variable above its partner");
    for (size_t j = 0; j < i; ++j)
      if (!order.var_greater(forms[j].leading, forms[i].leading))
        throw std::invalid_argument("order must sort the leading variables descending");
    for (size_t j = i; j < forms.size(); ++j)
      if (forms[i].leading == forms[j].tail[0])
        throw std::invalid_argument("leading variable reappears as a later partner");
  }

  std::vector<Monomial> gens;
  for (const auto& f : forms) gens.push_back(Monomial::variable(n, f.leading));
  for (const auto& g : ideal.min_gens()) {
    Monomial m = g;
    for (const auto& f : forms) {
      int x = f.leading, y = f.tail[0];
      if (m.exponent(x) > 0) {
        m = m.with_exponent(y, m.exponent(y) + m.exponent(x)).with_exponent(x, 0);
      }
    }
    gens.push_back(m);
  }
  return MonomialIdeal::from_generators(ideal.ring(), std::move(gens));
}

std::string to_string(StepProvenance provenance) {
  switch (provenance) {
    case StepProvenance::FreeVariable: return "free-variable";
    case StepProvenance::LeafPair: return "leaf-pair";
    case StepProvenance::Chain: return "chain";
    case StepProvenance::StarPack: return "star-pack";
    case StepProvenance::Manual: return "manual";
  }
  return "?";
}

std::vector<LinearSumForm> Chain::forms() const {
  std::vector<LinearSumForm> out;
  for (size_t i = 0; i + 1 < heads.size(); ++i)
    out.push_back(LinearSumForm{heads[i], {heads[i + 1]}});
  out.push_back(LinearSumForm{heads.back(), tail});
  return out;
}

namespace {

// Covering combinatorics of a monomial ideal, shared by the greedy passes and
// the exact packer. Generator-index sets are bitmasks, so at most 64 minimal
// generators and 32 variables.
struct Combinatorics {
  const MonomialIdeal* ideal = nullptr;
  int n = 0;
  std::vector<std::uint64_t> gens_at;  // per variable: generators it divides
  std::vector<int> weight;
  std::vector<char> tail_ok;
  std::vector<int> active;  // variables occurring in some generator

  bool covers(int u, int v) const { return (gens_at[u] & ~gens_at[v]) == 0; }
};

Combinatorics build_combinatorics(const MonomialIdeal& ideal, bool relaxed) {
  Combinatorics comb;
  comb.ideal = &ideal;
  comb.n = ideal.ring().size();
  if (comb.n > 32) throw std::invalid_argument("pipeline supports at most 32 variables");
  if (ideal.min_gens().size() > 64)
    throw std::invalid_argument("pipeline supports at most 64 minimal generators");
  comb.gens_at.assign(comb.n, 0);
  comb.weight.assign(comb.n, 0);
  comb.tail_ok.assign(comb.n, 0);
  const auto& gens = ideal.min_gens();
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (int v = 0; v < comb.n; ++v)
      if (gens[gi].exponent(v) > 0) {
        comb.gens_at[v] |= (std::uint64_t(1) << gi);
        comb.weight[v] = std::max(comb.weight[v], gens[gi].exponent(v));
      }
  for (int v = 0; v < comb.n; ++v) {
    if (comb.gens_at[v] == 0) continue;
    comb.active.push_back(v);
    if (relaxed) {
      std::set<int> degrees;
      for (const auto& g : gens)
        if (g.exponent(v) > 0) degrees.insert(g.exponent(v));
      comb.tail_ok[v] = degrees.size() == 1;
    } else {
      comb.tail_ok[v] = comb.weight[v] == 1;
    }
  }
  return comb;
}

// Greedy minimal cover of the generators containing b0, drawn from unused
// eligible variables. Ties go to the earlier permutation position.
std::optional<std::vector<int>> star_tail(const Combinatorics& comb, int b0,
                                          const std::vector<char>& used,
                                          const std::vector<int>& pos) {
  std::uint64_t edges = comb.gens_at[b0];
  if (edges == 0) return std::nullopt;
  std::vector<int> candidates;
  for (int v : comb.active)
    if (v != b0 && !used[v] && comb.tail_ok[v] && (comb.gens_at[v] & edges)) candidates.push_back(v);

  std::vector<int> tail;
  std::uint64_t remaining = edges;
  while (remaining != 0) {
    int best = -1;
    int best_cover = 0;
    for (int v : candidates) {
      int c = std::popcount(comb.gens_at[v] & remaining);
      if (c > best_cover || (c == best_cover && c > 0 && pos[v] < pos[best])) {
        best = v;
        best_cover = c;
      }
    }
    if (best < 0) return std::nullopt;
    tail.push_back(best);
    remaining &= ~comb.gens_at[best];
  }
  // Prune to an inclusion-minimal cover, dropping earlier positions first.
  std::sort(tail.begin(), tail.end(), [&](int a, int b) { return pos[a] < pos[b]; });
  for (size_t i = 0; i < tail.size();) {
    std::uint64_t rest = 0;
    for (size_t j = 0; j < tail.size(); ++j)
      if (j != i) rest |= comb.gens_at[tail[j]];
    if ((edges & ~rest) == 0)
      tail.erase(tail.begin() + i);
    else
      ++i;
  }
  std::sort(tail.begin(), tail.end());
  return tail;
}

std::optional<Chain> greedy_chain_from(const Combinatorics& comb, int start,
                                       const std::vector<char>& used,
                                       const std::vector<int>& pos) {
  std::vector<int> heads{start};
  std::vector<char> taken = used;
  taken[start] = 1;
  while (true) {
    int h = heads.back();
    int next = -1;
    for (int v : comb.active)
      if (!taken[v] && comb.tail_ok[v] && comb.covers(h, v))
        if (next < 0 || pos[v] < pos[next]) next = v;
    if (next < 0) break;
    heads.push_back(next);
    taken[next] = 1;
  }
  while (heads.size() >= 2) {
    auto tail = star_tail(comb, heads.back(), taken, pos);
    if (tail) return Chain{heads, *tail};
    // Retire the last head; it stays available as the terminal tail of the
    // shortened chain, which always covers by construction.
    taken[heads.back()] = 0;
    heads.pop_back();
  }
  return std::nullopt;
}

std::vector<Chain> greedy_chains(const Combinatorics& comb, std::vector<char>& used,
                                 const std::vector<int>& pos) {
  std::vector<Chain> chains;
  while (true) {
    std::optional<Chain> best;
    std::vector<int> starts = comb.active;
    std::sort(starts.begin(), starts.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    for (int u : starts) {
      if (used[u]) continue;
      auto c = greedy_chain_from(comb, u, used, pos);
      if (c && c->form_count() >= 2 && (!best || c->form_count() > best->form_count())) best = c;
    }
    if (!best) break;
    for (int v : best->heads) used[v] = 1;
    for (int v : best->tail) used[v] = 1;
    chains.push_back(std::move(*best));
  }
  return chains;
}

std::vector<LinearSumForm> greedy_stars(const Combinatorics& comb, std::vector<char>& used,
                                        const std::vector<int>& pos) {
  std::vector<int> centers = comb.active;
  // Fewest incident generators first: cheap stars leave room for more stars.
  std::sort(centers.begin(), centers.end(), [&](int a, int b) {
    int ea = std::popcount(comb.gens_at[a]), eb = std::popcount(comb.gens_at[b]);
    return ea != eb ? ea < eb : pos[a] < pos[b];
  });
  std::vector<LinearSumForm> forms;
  for (int b0 : centers) {
    if (used[b0]) continue;
    auto tail = star_tail(comb, b0, used, pos);
    if (!tail) continue;
    used[b0] = 1;
    for (int v : *tail) used[v] = 1;
    forms.push_back(LinearSumForm{b0, *tail});
  }
  return forms;
}

std::vector<std::vector<int>> minimal_covers(const Combinatorics& comb, int b0,
                                             const std::vector<char>& used, size_t cap) {
  std::uint64_t edges = comb.gens_at[b0];
  std::vector<int> candidates;
  for (int v : comb.active)
    if (v != b0 && !used[v] && comb.tail_ok[v] && (comb.gens_at[v] & edges)) candidates.push_back(v);

  std::set<std::vector<int>> found;
  std::vector<int> chosen;
  auto minimal = [&](const std::vector<int>& cover) {
    for (size_t i = 0; i < cover.size(); ++i) {
      std::uint64_t rest = 0;
      for (size_t j = 0; j < cover.size(); ++j)
        if (j != i) rest |= comb.gens_at[cover[j]];
      if ((edges & ~rest) == 0) return false;
    }
    return true;
  };
  std::function<void(std::uint64_t)> recurse = [&](std::uint64_t remaining) {
    if (found.size() >= cap) return;
    if (remaining == 0) {
      std::vector<int> cover = chosen;
      std::sort(cover.begin(), cover.end());
      if (minimal(cover)) found.insert(cover);
      return;
    }
    int lowest = std::countr_zero(remaining);
    for (int v : candidates) {
      if ((comb.gens_at[v] >> lowest) & 1u) {
        if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
        chosen.push_back(v);
        recurse(remaining & ~comb.gens_at[v]);
        chosen.pop_back();
      }
    }
  };
  recurse(edges);
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Exact packer: dynamic program over (used-variable mask, open chain head)
// maximizing the number of emitted forms. Moves: take a leaf pair, open a
// chain at an unused variable, extend the open chain by a covering variable,
// close it with a minimal cover, or seal it after its last pair form.
// Deterministic: strict improvements only, moves enumerated in a fixed order.
// ---------------------------------------------------------------------------

struct PackStructures {
  std::vector<LeafPair> pairs;
  std::vector<Chain> chains;
  std::vector<LinearSumForm> stars;

  int form_count() const {
    int c = static_cast<int>(pairs.size()) + static_cast<int>(stars.size());
    for (const auto& ch : chains) c += ch.form_count();
    return c;
  }
};

class ExactPacker {
 public:
  ExactPacker(const Combinatorics& comb, const std::vector<LeafPair>& pairs, bool use_chains)
      : comb_(comb), pairs_(pairs), use_chains_(use_chains) {
    slots_ = comb_.active;
    slot_of_.assign(comb_.n, -1);
    for (size_t s = 0; s < slots_.size(); ++s) slot_of_[slots_[s]] = static_cast<int>(s);
  }

  PackStructures run() {
    PackStructures out;
    std::uint32_t mask = 0;
    int head = -1;
    std::vector<int> open_heads;
    auto emit = [&out](std::vector<int> heads, std::vector<int> tail) {
      if (heads.empty()) return;
      if (heads.size() == 1)
        out.stars.push_back(LinearSumForm{heads[0], std::move(tail)});
      else
        out.chains.push_back(Chain{std::move(heads), std::move(tail)});
    };
    auto emit_unclosed = [&emit](const std::vector<int>& heads) {
      // A chain that ends on its last pair form: the final head serves as the
      // terminal tail.
      if (heads.size() >= 2)
        emit({heads.begin(), heads.end() - 1}, {heads.back()});
    };
    while (true) {
      Move m = best_move(mask, head);
      switch (m.kind) {
        case Move::Stop:
          emit_unclosed(open_heads);
          return out;
        case Move::Pair:
          out.pairs.push_back(pairs_[m.index]);
          mask |= bit(pairs_[m.index].x) | bit(pairs_[m.index].y);
          break;
        case Move::Open:
          open_heads = {m.var};
          mask |= bit(m.var);
          head = m.var;
          break;
        case Move::Link:
          open_heads.push_back(m.var);
          mask |= bit(m.var);
          head = m.var;
          break;
        case Move::Close:
          for (int v : m.tail) mask |= bit(v);
          emit(open_heads, m.tail);
          open_heads.clear();
          head = -1;
          break;
        case Move::Seal:
          emit_unclosed(open_heads);
          open_heads.clear();
          head = -1;
          break;
      }
    }
  }

 private:
  struct Move {
    enum Kind { Stop, Pair, Open, Link, Close, Seal } kind = Stop;
    int index = -1;  // pair index
    int var = -1;    // open/link variable
    std::vector<int> tail;
  };

  std::uint32_t bit(int var) const { return std::uint32_t(1) << slot_of_[var]; }

  bool in_mask(std::uint32_t mask, int var) const { return (mask >> slot_of_[var]) & 1u; }

  std::vector<char> used_from_mask(std::uint32_t mask) const {
    std::vector<char> used(comb_.n, 0);
    for (size_t s = 0; s < slots_.size(); ++s)
      if ((mask >> s) & 1u) used[slots_[s]] = 1;
    return used;
  }

  long long key(std::uint32_t mask, int head) const {
    int head_slot = head < 0 ? 0 : slot_of_[head] + 1;
    return (static_cast<long long>(mask) << 6) | head_slot;
  }

  int value(std::uint32_t mask, int head) {
    auto k = key(mask, head);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    int best = 0;  // stopping is always allowed
    Move best_move{};
    if (head < 0) {
      for (size_t i = 0; i < pairs_.size(); ++i) {
        const auto& p = pairs_[i];
        if (in_mask(mask, p.x) || in_mask(mask, p.y)) continue;
        int v = 1 + value(mask | bit(p.x) | bit(p.y), -1);
        if (v > best) {
          best = v;
          best_move = Move{Move::Pair, static_cast<int>(i), -1, {}};
        }
      }
      for (int var : slots_) {
        if (in_mask(mask, var)) continue;
        int v = value(mask | bit(var), var);
        if (v > best) {
          best = v;
          best_move = Move{Move::Open, -1, var, {}};
        }
      }
    } else {
      {
        int v = value(mask, -1);
        if (v > best) {
          best = v;
          best_move = Move{Move::Seal, -1, -1, {}};
        }
      }
      if (use_chains_) {
        for (int var : slots_) {
          if (in_mask(mask, var) || !comb_.tail_ok[var] || !comb_.covers(head, var)) continue;
          int v = 1 + value(mask | bit(var), var);
          if (v > best) {
            best = v;
            best_move = Move{Move::Link, -1, var, {}};
          }
        }
      }
      auto used = used_from_mask(mask);
      for (const auto& cover : minimal_covers(comb_, head, used, 128)) {
        std::uint32_t next = mask;
        for (int v : cover) next |= bit(v);
        int v = 1 + value(next, -1);
        if (v > best) {
          best = v;
          best_move = Move{Move::Close, -1, -1, cover};
        }
      }
    }
    memo_[k] = best;
    moves_[k] = std::move(best_move);
    return best;
  }

  Move best_move(std::uint32_t mask, int head) {
    value(mask, head);
    return moves_[key(mask, head)];
  }

  const Combinatorics& comb_;
  std::vector<LeafPair> pairs_;
  bool use_chains_;
  std::vector<int> slots_;
  std::vector<int> slot_of_;
  std::unordered_map<long long, int> memo_;
  std::unordered_map<long long, Move> moves_;
};

OrderConstraint constraints_for(const std::vector<PackedForm>& forms) {
  OrderConstraint c;
  for (size_t i = 0; i < forms.size(); ++i) {
    const auto& f = forms[i].form;
    if (forms[i].provenance == StepProvenance::Chain && i + 1 < forms.size() &&
        forms[i + 1].provenance == StepProvenance::Chain && f.tail.size() == 1 &&
        forms[i + 1].form.leading == f.tail[0]) {
      c.require(f.leading, f.tail[0]);  // consecutive chain heads
      continue;
    }
    for (size_t t = 0; t < f.tail.size(); ++t)
      c.require(t == 0 ? f.leading : f.tail[t - 1], f.tail[t]);
  }
  return c;
}

}  // namespace

std::pair<std::vector<LinearSumForm>, OrderConstraint> star_packing(const MonomialIdeal& ideal,
                                                                    const PipelineConfig& config) {
  Combinatorics comb = build_combinatorics(ideal, config.relaxed_degrees);
  std::vector<LinearSumForm> forms;
  if (config.strategy != PipelineConfig::Strategy::Greedy &&
      static_cast<int>(comb.active.size()) <= config.exhaustive_limit) {
    ExactPacker packer(comb, {}, /*use_chains=*/false);
    forms = packer.run().stars;
  } else {
    std::vector<char> used(comb.n, 0);
    std::vector<int> pos(comb.n);
    std::iota(pos.begin(), pos.end(), 0);
    forms = greedy_stars(comb, used, pos);
  }
  OrderConstraint constraints;
  for (const auto& f : forms)
    for (int v : f.tail) constraints.require(f.leading, v);
  return {forms, constraints};
}

std::pair<std::vector<Chain>, OrderConstraint> find_chains(const MonomialIdeal& ideal,
                                                           const PipelineConfig& config) {
  Combinatorics comb = build_combinatorics(ideal, config.relaxed_degrees);
  std::vector<char> used(comb.n, 0);
  std::vector<int> pos(comb.n);
  std::iota(pos.begin(), pos.end(), 0);
  auto chains = greedy_chains(comb, used, pos);
  OrderConstraint constraints;
  for (const auto& ch : chains) {
    for (size_t i = 0; i + 1 < ch.heads.size(); ++i) constraints.require(ch.heads[i], ch.heads[i + 1]);
    int prev = ch.heads.back();
    for (int v : ch.tail) {
      constraints.require(prev, v);
      prev = v;
    }
  }
  return {chains, constraints};
}

std::pair<std::vector<PackedForm>, OrderConstraint> merge_certificates(
    const MonomialIdeal& ideal, const std::vector<TaggedForms>& parts) {
  const int n = ideal.ring().size();
  std::vector<std::uint64_t> part_vars;
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    const auto& part = parts[pi];
    if (part.forms.empty()) throw MergeError("empty-part", "part " + std::to_string(pi));
    std::uint64_t vars = 0;
    for (const auto& f : part.forms) {
      for (int v : f.variables()) {
        if (v < 0 || v >= n) throw MergeError("unknown-variable", "part " + std::to_string(pi));
        vars |= std::uint64_t(1) << v;
      }
    }
    switch (part.kind) {
      case StepProvenance::LeafPair: {
        std::uint64_t seen = 0;
        for (const auto& f : part.forms) {
          if (f.tail.size() != 1)
            throw MergeError("leaf-pair-shape", "a leaf pair is a sum of two variables");
          std::uint64_t fv = (std::uint64_t(1) << f.leading) | (std::uint64_t(1) << f.tail[0]);
          if (seen & fv) throw MergeError("disjoint-variables", "leaf pairs overlap");
          seen |= fv;
        }
        break;
      }
      case StepProvenance::Chain: {
        for (size_t i = 0; i + 1 < part.forms.size(); ++i) {
          if (part.forms[i].tail.size() != 1 ||
              part.forms[i + 1].leading != part.forms[i].tail[0])
            throw MergeError("chain-order",
                             "chain forms must link head to the previous partner in order");
        }
        for (const auto& f : part.forms) {
          auto check = check_sum_conditions(ideal, f, /*relaxed=*/true);
          if (!check.ok)
            throw MergeError("sum-conditions", f.to_string(ideal.ring()) + ": " +
                                                   check.violations.front());
        }
        break;
      }
      case StepProvenance::StarPack: {
        std::uint64_t seen = 0;
        for (const auto& f : part.forms) {
          for (int v : f.variables()) {
            if (seen & (std::uint64_t(1) << v))
              throw MergeError("disjoint-variables", "star block reuses " + ideal.ring().name(v));
            seen |= std::uint64_t(1) << v;
          }
          auto check = check_sum_conditions(ideal, f, /*relaxed=*/true);
          if (!check.ok)
            throw MergeError("sum-conditions", f.to_string(ideal.ring()) + ": " +
                                                   check.violations.front());
        }
        break;
      }
      default:
        throw MergeError("part-kind", "parts must be leaf pairs, chains, or star blocks");
    }
    for (size_t pj = 0; pj < pi; ++pj)
      if (part_vars[pj] & vars) {
        int v = std::countr_zero(part_vars[pj] & vars);
        throw MergeError("disjoint-variables", "parts " + std::to_string(pj) + " and " +
                                                   std::to_string(pi) + " share " +
                                                   ideal.ring().name(v));
      }
    part_vars.push_back(vars);
  }

  std::vector<PackedForm> merged;
  for (const auto& part : parts)
    if (part.kind == StepProvenance::LeafPair)
      for (const auto& f : part.forms) merged.push_back({f, StepProvenance::LeafPair});
  for (const auto& part : parts)
    if (part.kind != StepProvenance::LeafPair)
      for (const auto& f : part.forms) merged.push_back({f, part.kind});

  OrderConstraint constraints = constraints_for(merged);
  try {
    build_term_order(ideal.ring(), constraints, OrderKind::GrevLex);
  } catch (const std::invalid_argument&) {
    throw MergeError("acyclic-order", "combined constraints contain a cycle");
  }
  return {merged, constraints};
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

namespace {

bool monomial_ideal_member(const MonomialIdeal& ideal, const Polynomial& f) {
  for (const auto& [m, c] : f.terms())
    if (!ideal.contains(m)) return false;
  return true;
}

MonomialIdeal next_initial_ideal(const MonomialIdeal& current, const Polynomial& form,
                                 const TermOrder& order) {
  std::vector<Polynomial> gens;
  for (const auto& m : current.min_gens()) gens.push_back(Polynomial::from_monomial(m));
  gens.push_back(form);
  MonomialIdeal via_buchberger =
      initial_ideal(PolyIdeal(current.ring(), std::move(gens)), order);

  auto sum = as_linear_sum(form, order);
  if (sum && sum->tail.size() == 1 && !current.is_zero()) {
    MonomialIdeal closed = initial_after_linear_sums(current, {*sum}, order);
    if (!(closed == via_buchberger))
      throw std::logic_error("substitution closed form disagrees with the Buchberger route");
  } else if (sum && sum->tail.empty()) {
    std::vector<Monomial> gens2 = current.min_gens();
    gens2.push_back(Monomial::variable(current.ring().size(), sum->leading));
    MonomialIdeal closed = MonomialIdeal::from_generators(current.ring(), std::move(gens2));
    if (!(closed == via_buchberger))
      throw std::logic_error("substitution closed form disagrees with the Buchberger route");
  }
  return via_buchberger;
}

IniRegCertificate verify_impl(const PolyIdeal& ideal, const std::vector<VerifyStep>& steps,
                              bool stop_at_failure) {
  IniRegCertificate cert;
  cert.base = ideal;
  cert.verified = true;

  MonomialIdeal current = MonomialIdeal::zero(ideal.ring);
  Polynomial previous_form(ideal.ring.size());
  for (size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    if (step.form.is_constant())
      throw std::invalid_argument("constant step polynomial in position " + std::to_string(i + 1));
    if (i == 0)
      current = initial_ideal(ideal, step.order);
    else
      current = next_initial_ideal(current, previous_form, step.order);

    bool regular;
    if (monomial_ideal_member(current, step.form)) {
      regular = false;  // the form lies in the ideal, so it kills 1
    } else {
      regular = is_regular_element(PolyIdeal::from_monomial_ideal(current), step.form, step.order);
    }
    cert.steps.push_back(CertificateStep{step.form, step.order, step.provenance, current, regular});
    cert.verified = cert.verified && regular;
    if (!regular && stop_at_failure) {
      cert.steps.pop_back();
      cert.verified = true;
      return cert;
    }
    previous_form = step.form;
  }

  // Variable reuse outside chain steps is not covered by the construction
  // rules; the certificate then rests on the step-by-step verification alone.
  std::map<int, std::vector<size_t>> users;
  for (size_t i = 0; i < cert.steps.size(); ++i)
    for (std::uint32_t m = cert.steps[i].form.support_mask(); m; m &= m - 1)
      users[std::countr_zero(m)].push_back(i);
  for (const auto& [v, where] : users) {
    if (where.size() < 2) continue;
    bool chain_internal = true;
    for (size_t k = 0; k + 1 < where.size(); ++k)
      if (where[k + 1] != where[k] + 1 ||
          cert.steps[where[k]].provenance != StepProvenance::Chain ||
          cert.steps[where[k + 1]].provenance != StepProvenance::Chain)
        chain_internal = false;
    if (!chain_internal) {
      cert.notes.push_back("variable " + ideal.ring.name(v) +
                           " is reused across steps; the certificate rests on verification alone");
    }
  }
  return cert;
}

}  // namespace

IniRegCertificate verify_initially_regular(const PolyIdeal& ideal,
                                           const std::vector<VerifyStep>& steps) {
  return verify_impl(ideal, steps, /*stop_at_failure=*/false);
}

// ---------------------------------------------------------------------------
// The bound pipeline
// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  std::vector<TaggedForms> parts;
  int form_count = 0;
};

std::string candidate_key(const Candidate& c) {
  std::string key;
  for (const auto& part : c.parts) {
    key += std::to_string(static_cast<int>(part.kind)) + ":";
    for (const auto& f : part.forms) {
      key += std::to_string(f.leading);
      for (int v : f.tail) key += "," + std::to_string(v);
      key += ";";
    }
    key += "|";
  }
  return key;
}

Candidate candidate_from_structures(const std::vector<LeafPair>& pairs,
                                    const std::vector<Chain>& chains,
                                    const std::vector<LinearSumForm>& stars) {
  Candidate cand;
  if (!pairs.empty()) {
    TaggedForms part{StepProvenance::LeafPair, {}};
    for (const auto& p : pairs) part.forms.push_back(LinearSumForm{p.x, {p.y}});
    cand.parts.push_back(std::move(part));
  }
  for (const auto& ch : chains) cand.parts.push_back(TaggedForms{StepProvenance::Chain, ch.forms()});
  if (!stars.empty()) cand.parts.push_back(TaggedForms{StepProvenance::StarPack, stars});
  for (const auto& part : cand.parts) cand.form_count += static_cast<int>(part.forms.size());
  return cand;
}

std::vector<Candidate> generate_candidates(const MonomialIdeal& ideal, const PipelineConfig& cfg,
                                           const std::vector<Candidate>& extra) {
  Combinatorics comb = build_combinatorics(ideal, cfg.relaxed_degrees);
  std::vector<LeafPair> pair_pool = cfg.use_leaf_pairs ? all_leaf_pairs(ideal) : std::vector<LeafPair>{};

  std::vector<Candidate> candidates;
  std::set<std::string> seen;
  auto push = [&](Candidate c) {
    auto key = candidate_key(c);
    if (seen.insert(key).second) candidates.push_back(std::move(c));
  };

  if (cfg.strategy != PipelineConfig::Strategy::Greedy &&
      static_cast<int>(comb.active.size()) <= cfg.exhaustive_limit) {
    ExactPacker packer(comb, pair_pool, cfg.use_chains);
    PackStructures s = packer.run();
    push(candidate_from_structures(s.pairs, s.chains, s.stars));
  }
  for (const auto& c : extra) push(c);

  const int runs = std::max(0, cfg.restarts) + 1;
  for (int r = 0; r < runs; ++r) {
    std::vector<int> pos(comb.n);
    std::iota(pos.begin(), pos.end(), 0);
    if (r > 0) {
      std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + static_cast<unsigned>(r));
      std::shuffle(pos.begin(), pos.end(), rng);
    }

    std::vector<LeafPair> pairs_sorted = pair_pool;
    std::sort(pairs_sorted.begin(), pairs_sorted.end(), [&](const LeafPair& a, const LeafPair& b) {
      auto ka = std::minmax(pos[a.x], pos[a.y]);
      auto kb = std::minmax(pos[b.x], pos[b.y]);
      return ka != kb ? ka < kb : std::pair(pos[a.x], pos[a.y]) < std::pair(pos[b.x], pos[b.y]);
    });
    std::vector<LeafPair> pairs_greedy;
    {
      std::vector<char> taken(comb.n, 0);
      for (const auto& p : pairs_sorted) {
        if (taken[p.x] || taken[p.y]) continue;
        taken[p.x] = taken[p.y] = 1;
        pairs_greedy.push_back(p);
      }
    }

    for (size_t prefix = 0; prefix <= pairs_greedy.size(); ++prefix) {
      std::vector<LeafPair> pairs(pairs_greedy.begin(), pairs_greedy.begin() + prefix);
      std::vector<char> used(comb.n, 0);
      for (const auto& p : pairs) used[p.x] = used[p.y] = 1;
      std::vector<Chain> chains;
      if (cfg.use_chains) chains = greedy_chains(comb, used, pos);
      std::vector<LinearSumForm> stars = greedy_stars(comb, used, pos);
      push(candidate_from_structures(pairs, chains, stars));
    }
  }
  return candidates;
}

DepthReport zero_ideal_report(const Ring& ring) {
  DepthReport report;
  report.lower_bound = ring.size();
  report.certificate.verified = true;
  report.squarefree_equality = true;
  report.notes.push_back("zero ideal: depth equals the ring dimension");
  return report;
}

DepthReport bound_monomial(const MonomialIdeal& initial, const PolyIdeal& base,
                           const TermOrder& first_order, const PipelineConfig& cfg,
                           const std::vector<Candidate>& extra) {
  const Ring& ring = initial.ring();
  std::vector<int> free_vars = initial.free_variables();

  std::vector<Candidate> candidates = generate_candidates(initial, cfg, extra);
  candidates.push_back(Candidate{});  // free variables only
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.form_count > b.form_count; });

  DepthReport report;
  int best_q = -1;
  for (const auto& cand : candidates) {
    int potential = cand.form_count + static_cast<int>(free_vars.size());
    if (potential <= best_q) break;

    auto [packed, constraints] = merge_certificates(initial, cand.parts);
    TermOrder later = build_term_order(ring, constraints, first_order.kind());

    std::vector<VerifyStep> steps;
    for (int v : free_vars)
      steps.push_back(VerifyStep{Polynomial::variable(ring.size(), v),
                                 steps.empty() ? first_order : later,
                                 StepProvenance::FreeVariable});
    for (const auto& pf : packed)
      steps.push_back(VerifyStep{pf.form.to_polynomial(ring.size()),
                                 steps.empty() ? first_order : later, pf.provenance});

    IniRegCertificate cert =
        steps.empty() ? IniRegCertificate{base, {}, true, {}} : verify_impl(base, steps, true);
    int q = cert.length();
    if (q > best_q) {
      best_q = q;
      report.certificate = std::move(cert);
    }
  }

  report.lower_bound = best_q;
  report.squarefree_equality = initial.is_squarefree();
  if (report.squarefree_equality)
    report.notes.push_back(
        "initial ideal is squarefree: depth R/I equals depth R/ini(I); the reported bound is "
        "still the certified lower bound");
  return report;
}

}  // namespace

DepthReport depth_lower_bound(const PolyIdeal& ideal, const TermOrder& order,
                              const PipelineConfig& config) {
  if (ideal.is_zero()) {
    DepthReport report = zero_ideal_report(ideal.ring);
    report.certificate.base = ideal;
    return report;
  }
  GroebnerBasis gb = reduced_groebner_basis(ideal, order);
  if (gb.is_unit()) throw UnitIdealError();
  MonomialIdeal initial = initial_ideal(gb, ideal.ring);
  return bound_monomial(initial, ideal, order, config, {});
}

DepthReport polarized_bound(const MonomialIdeal& ideal, const PipelineConfig& config) {
  if (ideal.is_zero()) {
    DepthReport report = zero_ideal_report(ideal.ring());
    report.certificate.base = PolyIdeal(ideal.ring(), {});
    report.polarization = PolarizationAdjustment{ideal.ring().size(), 0, ideal.ring().size()};
    return report;
  }
  auto [pol, map] = polarize(ideal);

  // The polarization chains x_pd + x_p(d-1), ..., x_p2 + x are always a valid
  // candidate and alone account for every new variable.
  Candidate chains_candidate;
  for (int v = 0; v < ideal.ring().size(); ++v) {
    const auto& slots = map.slots[v];
    if (slots.size() < 2) continue;
    Chain chain;
    for (auto it = slots.rbegin(); it != std::prev(slots.rend()); ++it) chain.heads.push_back(*it);
    chain.tail = {slots.front()};
    chains_candidate.parts.push_back(TaggedForms{StepProvenance::Chain, chain.forms()});
    chains_candidate.form_count += chain.form_count();
  }
  std::vector<Candidate> extra;
  if (chains_candidate.form_count > 0) extra.push_back(chains_candidate);

  PolyIdeal base = PolyIdeal::from_monomial_ideal(pol);
  TermOrder order = TermOrder::grevlex(pol.ring().size());
  DepthReport report = bound_monomial(pol, base, order, config, extra);

  const int bound_pol = report.lower_bound;
  if (bound_pol < map.new_variable_count)
    throw std::logic_error("polarized bound fell below the polarizing-variable count");
  report.polarization = PolarizationAdjustment{bound_pol, map.new_variable_count,
                                               bound_pol - map.new_variable_count};
  report.lower_bound = bound_pol - map.new_variable_count;
  report.squarefree_equality = ideal.is_squarefree();
  report.notes.push_back("bound transferred through polarization: " + std::to_string(bound_pol) +
                         " - " + std::to_string(map.new_variable_count) + " new variables");
  return report;
}

}  // namespace inireg
