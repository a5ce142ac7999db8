#include "smw/sms.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "smw/ar_quiver.hpp"
#include "smw/error.hpp"
#include "smw/hom_ext.hpp"

namespace smw {

namespace {

FactorCounts combined(const FactorCounts& a, const FactorCounts& b) {
  FactorCounts out = a;
  for (const auto& [simple, count] : b) out[simple] += count;
  return out;
}

// a - b, or nullopt when b is not contained in a.
std::optional<FactorCounts> difference(const FactorCounts& a, const FactorCounts& b) {
  FactorCounts out = a;
  for (const auto& [simple, count] : b) {
    auto it = out.find(simple);
    if (it == out.end() || it->second < count) return std::nullopt;
    if ((it->second -= count) == 0) out.erase(it);
  }
  return out;
}

bool contains(std::span<const Diagonal> sorted, Diagonal d) {
  return std::binary_search(sorted.begin(), sorted.end(), d);
}

std::vector<Diagonal> sorted_copy(std::span<const Diagonal> ds) {
  std::vector<Diagonal> out(ds.begin(), ds.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SmsCheck is_sms(std::span<const Diagonal> simples, const CategoryParams& p) {
  auto fail = [](std::string why) { return SmsCheck{false, std::move(why)}; };
  if (static_cast<int>(simples.size()) != p.rank) {
    return fail("expected " + std::to_string(p.rank) + " diagonals, got " +
                std::to_string(simples.size()));
  }
  for (const auto& d : simples) {
    if (!is_admissible(d, p)) return fail(to_string(d) + " is not admissible");
  }
  for (std::size_t i = 0; i < simples.size(); ++i) {
    for (std::size_t j = i + 1; j < simples.size(); ++j) {
      if (simples[i] == simples[j]) return fail(to_string(simples[i]) + " appears twice");
      if (crosses(simples[i], simples[j])) {
        return fail(to_string(simples[i]) + " crosses " + to_string(simples[j]));
      }
      if (shares_endpoint(simples[i], simples[j])) {
        return fail(to_string(simples[i]) + " shares an endpoint with " + to_string(simples[j]));
      }
    }
  }
  return SmsCheck{};
}

SimpleMindedSystem make_sms(std::vector<Diagonal> simples, const CategoryParams& p) {
  std::sort(simples.begin(), simples.end());
  if (const SmsCheck check = is_sms(simples, p); !check) {
    throw Error(ErrorCode::not_sms, "not a simple minded system: " + check.violation);
  }
  return SimpleMindedSystem{std::move(simples), p};
}

std::vector<SimpleMindedSystem> enumerate_sms(const CategoryParams& p) {
  const std::vector<Diagonal> pool = enumerate_indecomposables(p);
  std::vector<SimpleMindedSystem> out;
  std::vector<Diagonal> chosen;
  auto extend = [&](auto&& self, std::size_t next) -> void {
    if (static_cast<int>(chosen.size()) == p.rank) {
      out.push_back(SimpleMindedSystem{chosen, p});
      return;
    }
    for (std::size_t i = next; i < pool.size(); ++i) {
      const Diagonal cand = pool[i];
      const bool compatible = std::none_of(chosen.begin(), chosen.end(), [&](Diagonal d) {
        return crosses(d, cand) || shares_endpoint(d, cand);
      });
      if (!compatible) continue;
      chosen.push_back(cand);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

OrthogonalityReport orthogonality_report(std::span<const Diagonal> collection,
                                         const CategoryParams& p) {
  require_theorem_weight(p);
  OrthogonalityReport report;
  for (const auto& d : collection) {
    if (!is_admissible(d, p)) {
      report.ok = false;
      report.violations.push_back(to_string(d) + " is not admissible");
    }
  }
  if (!report.ok) return report;
  for (const auto& a : collection) {
    for (const auto& b : collection) {
      const int expected = a == b ? 1 : 0;
      if (const int got = hom_dim(a, 0, b, p); got != expected) {
        report.ok = false;
        std::ostringstream msg;
        msg << "dim C(" << to_string(a) << ", " << to_string(b) << ") = " << got;
        report.violations.push_back(msg.str());
      }
      for (int l = -p.weight + 1; l <= -1; ++l) {
        if (hom_dim(a, l, b, p) != 0) {
          report.ok = false;
          std::ostringstream msg;
          msg << "C(" << to_string(a) << ", S^" << l << " " << to_string(b) << ") != 0";
          report.violations.push_back(msg.str());
        }
      }
    }
  }
  return report;
}

bool check_orthogonality(std::span<const Diagonal> collection, const CategoryParams& p) {
  return orthogonality_report(collection, p).ok;
}

bool ClosureResult::contains(Diagonal d) const {
  return std::binary_search(members.begin(), members.end(), d);
}

ClosureResult extension_closure(std::span<const Diagonal> seed, const CategoryParams& p) {
  require_theorem_weight(p);
  ClosureResult result;
  result.params = p;
  result.seed = sorted_copy(seed);
  if (std::adjacent_find(result.seed.begin(), result.seed.end()) != result.seed.end()) {
    throw Error(ErrorCode::not_sms, "seed contains a repeated diagonal");
  }
  if (const auto report = orthogonality_report(result.seed, p); !report.ok) {
    throw Error(ErrorCode::not_sms, "seed is not w-orthogonal: " + report.violations.front());
  }

  std::vector<Diagonal> discovered = result.seed;  // discovery order
  for (const auto& s : result.seed) {
    result.records[s] = std::nullopt;
    result.factors[s] = FactorCounts{{s, 1}};
    result.depth[s] = 0;
  }
  // Two-term middle terms: factors(e1) + factors(e2) = total.
  struct PendingSplit {
    Diagonal first;
    Diagonal second;
    FactorCounts total;
  };
  std::vector<PendingSplit> pending;

  auto learn_factors = [&](Diagonal m, const FactorCounts& counts) {
    auto [it, inserted] = result.factors.emplace(m, counts);
    if (!inserted && it->second != counts) {
      throw std::logic_error("composition factors of " + to_string(m) +
                             " differ between discoveries");
    }
  };

  for (int level = 1;; ++level) {
    std::vector<Diagonal> found;
    const std::size_t known = discovered.size();
    for (std::size_t i = 0; i < known; ++i) {
      for (std::size_t j = 0; j < known; ++j) {
        const Diagonal sub = discovered[i];
        const Diagonal quotient = discovered[j];
        if (hom_dim_neg1(quotient, sub, p) == 0) continue;
        const std::vector<Diagonal> middle = middle_term(quotient, sub, p);
        const bool both_known = result.factors.count(sub) && result.factors.count(quotient);
        for (const auto& m : middle) {
          if (result.depth.count(m)) continue;
          result.depth[m] = level;
          result.records[m] = std::nullopt;
          found.push_back(m);
        }
        if (middle.size() == 1 && both_known) {
          const Diagonal m = middle.front();
          const FactorCounts counts = combined(result.factors[sub], result.factors[quotient]);
          if (!result.records[m] && !result.factors.count(m)) {
            result.records[m] = Filtration{sub, quotient};
          }
          learn_factors(m, counts);
        } else if (middle.size() == 2 && both_known) {
          pending.push_back(PendingSplit{middle[0], middle[1],
                                         combined(result.factors[sub], result.factors[quotient])});
        }
      }
    }
    // Resolve two-term middle terms whose other summand is now known.
    for (bool progress = true; progress;) {
      progress = false;
      for (const auto& split : pending) {
        const bool has_first = result.factors.count(split.first) > 0;
        const bool has_second = result.factors.count(split.second) > 0;
        if (has_first == has_second) continue;
        const Diagonal known_part = has_first ? split.first : split.second;
        const Diagonal unknown_part = has_first ? split.second : split.first;
        if (auto rest = difference(split.total, result.factors[known_part])) {
          learn_factors(unknown_part, *rest);
          progress = true;
        } else {
          throw std::logic_error("inconsistent composition factors around " +
                                 to_string(unknown_part));
        }
      }
    }
    if (found.empty()) {
      bool all_known = true;
      for (const auto& m : discovered) all_known = all_known && result.factors.count(m);
      if (all_known) break;
      if (level > static_cast<int>(discovered.size()) + 2) {
        throw std::logic_error("could not determine composition factors of every member");
      }
    }
    discovered.insert(discovered.end(), found.begin(), found.end());
  }

  // Fixpoint soundness: every extension between members stays inside.
  result.members = sorted_copy(discovered);
  for (const auto& x : result.members) {
    for (const auto& y : result.members) {
      if (hom_dim_neg1(y, x, p) == 0) continue;
      for (const auto& m : middle_term(y, x, p)) {
        if (!contains(result.members, m)) {
          throw std::logic_error("closure is not a fixpoint at " + to_string(m));
        }
      }
    }
  }
  return result;
}

std::vector<Diagonal> simples_of_closure(const ClosureResult& closure) {
  std::vector<Diagonal> out;
  for (const auto& m : closure.members) {
    const FactorCounts& f = closure.factors.at(m);
    if (f.size() == 1 && f.begin()->second == 1) out.push_back(m);
  }
  return out;
}

std::vector<Diagonal> sub_closure(const ClosureResult& closure,
                                  std::span<const Diagonal> sub_seed) {
  for (const auto& s : sub_seed) {
    if (!contains(closure.seed, s)) {
      throw Error(ErrorCode::parameter_error,
                  to_string(s) + " is not one of the simples of the closure");
    }
  }
  const std::vector<Diagonal> subset = sorted_copy(sub_seed);
  std::vector<Diagonal> out;
  if (subset.empty()) return out;
  for (const auto& m : closure.members) {
    const FactorCounts& f = closure.factors.at(m);
    const bool supported = std::all_of(f.begin(), f.end(), [&](const auto& entry) {
      return contains(subset, entry.first);
    });
    if (supported) out.push_back(m);
  }
  return out;
}

TorsionSplit torsion_pair(const ClosureResult& closure, std::span<const Diagonal> sub_seed) {
  const CategoryParams& p = closure.params;
  require_theorem_weight(p);
  TorsionSplit split;
  split.torsion = sub_closure(closure, sub_seed);
  for (const auto& m : closure.members) {
    if (contains(split.torsion, m)) continue;
    const bool orthogonal = std::all_of(split.torsion.begin(), split.torsion.end(),
                                        [&](Diagonal t) { return hom_dim(t, 0, m, p) == 0; });
    if (orthogonal) split.torsion_free.push_back(m);
  }
  for (const auto& m : closure.members) {
    if (contains(split.torsion, m) || contains(split.torsion_free, m)) continue;
    MixedMember mixed{m, std::nullopt};
    const auto& record = closure.records.at(m);
    if (record && contains(split.torsion, record->sub) &&
        contains(split.torsion_free, record->quotient)) {
      mixed.sequence = *record;
    } else {
      for (const auto& t : split.torsion) {
        for (const auto& f : split.torsion_free) {
          if (mixed.sequence || hom_dim_neg1(f, t, p) == 0) continue;
          if (middle_term(f, t, p) == std::vector<Diagonal>{m}) mixed.sequence = Filtration{t, f};
        }
      }
    }
    split.mixed.push_back(mixed);
  }
  return split;
}

}  // namespace smw
