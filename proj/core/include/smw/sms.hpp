#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smw/polygon.hpp"

namespace smw {

/// A w-simple minded system: rank-many admissible diagonals, pairwise
/// non-crossing and endpoint-disjoint. Construct through make_sms.
struct SimpleMindedSystem {
  std::vector<Diagonal> simples;  // sorted
  CategoryParams params;

  friend bool operator==(const SimpleMindedSystem&, const SimpleMindedSystem&) = default;
};

struct SmsCheck {
  bool ok = true;
  std::string violation;  // first violation found, empty when ok

  explicit operator bool() const { return ok; }
};

SmsCheck is_sms(std::span<const Diagonal> simples, const CategoryParams& p);

/// Sorts, validates and wraps; throws not_sms with the violation otherwise.
SimpleMindedSystem make_sms(std::vector<Diagonal> simples, const CategoryParams& p);

/// Every simple minded system, in lexicographic order of the sorted lists.
std::vector<SimpleMindedSystem> enumerate_sms(const CategoryParams& p);

struct OrthogonalityReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// dim C(s_i, s_j) = delta_ij and C(s_i, Sigma^l s_j) = 0 for l in [-w+1, -1],
/// over exactly the pairs given. Throws unsupported_weight when w < 2.
OrthogonalityReport orthogonality_report(std::span<const Diagonal> collection,
                                         const CategoryParams& p);
bool check_orthogonality(std::span<const Diagonal> collection, const CategoryParams& p);

/// Composition factor multiplicities, keyed by simple.
using FactorCounts = std::map<Diagonal, int>;

/// Short exact sequence sub -> member -> quotient inside the closure.
struct Filtration {
  Diagonal sub;
  Diagonal quotient;

  friend bool operator==(const Filtration&, const Filtration&) = default;
};

struct ClosureResult {
  CategoryParams params;
  std::vector<Diagonal> seed;     // sorted
  std::vector<Diagonal> members;  // sorted
  /// Filtration that produced each member; nullopt for seed members and for
  /// summands of two-term middle terms.
  std::map<Diagonal, std::optional<Filtration>> records;
  std::map<Diagonal, FactorCounts> factors;
  /// Smallest n with the member in (S)_n, counting the seed as depth 0.
  std::map<Diagonal, int> depth;

  bool contains(Diagonal d) const;
};

/// Indecomposables of the extension closure of a w-orthogonal collection.
/// Throws not_sms for a non-orthogonal seed.
ClosureResult extension_closure(std::span<const Diagonal> seed, const CategoryParams& p);
inline ClosureResult extension_closure(const SimpleMindedSystem& s) {
  return extension_closure(s.simples, s.params);
}

/// Members with exactly one composition factor.
std::vector<Diagonal> simples_of_closure(const ClosureResult& closure);

/// Members whose composition factors all lie in `sub_seed`; throws
/// parameter_error when sub_seed is not a subset of the seed.
std::vector<Diagonal> sub_closure(const ClosureResult& closure, std::span<const Diagonal> sub_seed);

struct MixedMember {
  Diagonal member;
  /// t -> member -> f with t torsion and f torsion-free; nullopt = unresolved.
  std::optional<Filtration> sequence;
};

struct TorsionSplit {
  std::vector<Diagonal> torsion;       // T = <S'>
  std::vector<Diagonal> torsion_free;  // F = T^perp within the closure
  std::vector<MixedMember> mixed;
};

TorsionSplit torsion_pair(const ClosureResult& closure, std::span<const Diagonal> sub_seed);

}  // namespace smw
