#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "smw/polygon.hpp"
#include "smw/sms.hpp"

namespace smw {

enum class TiltDirection { left, right };

const char* to_string(TiltDirection direction);
TiltDirection opposite(TiltDirection direction);

enum class SimpleAction { unchanged, shifted, replaced };

const char* to_string(SimpleAction action);

/// What happened to one simple during a tilt.
struct TiltStep {
  Diagonal before;
  Diagonal after;
  SimpleAction action = SimpleAction::unchanged;
  /// For replaced simples: (old endpoint, new endpoint, member of <pivot> it abutted).
  struct Replacement {
    int old_endpoint;
    int new_endpoint;
    Diagonal via;
  };
  std::vector<Replacement> replacements;
};

struct TiltMove {
  TiltDirection direction = TiltDirection::left;
  std::vector<Diagonal> pivot;  // sorted
  SimpleMindedSystem source;
  SimpleMindedSystem result;
  std::vector<TiltStep> log;  // one per source simple, in source order
};

/// Left tilt at a subset: pivot simples move to Sigma^{-1}; a remaining simple
/// with an endpoint x - 1 (x an endpoint of a member t of <pivot>) trades that
/// endpoint for the other endpoint of t. For a single pivot, <pivot> is just the
/// pivot. The result is checked to be a simple minded system that right-tilts
/// back; otherwise tilt_rule_incomplete is thrown.
TiltMove left_tilt(const SimpleMindedSystem& system, std::span<const Diagonal> pivot);
/// Mirror image of left_tilt: Sigma on the pivot, endpoints x + 1 replaced.
TiltMove right_tilt(const SimpleMindedSystem& system, std::span<const Diagonal> pivot);
TiltMove tilt(const SimpleMindedSystem& system, std::span<const Diagonal> pivot,
              TiltDirection direction);

/// Torsion-pair bookkeeping for one tilt.
struct TiltTheoremReport {
  TiltMove move;
  ClosureResult source_closure;
  ClosureResult tilted_closure;
  TorsionSplit split;                   // of the source closure at the pivot (left tilts)
  std::vector<Diagonal> torsion_class;  // F (left) or Sigma G (right) in the tilted closure
  std::vector<Diagonal> torsion_free;   // Sigma^{-1} T (left) or U (right)
  /// Tilted members that are a single extension 0 -> f -> m -> t -> 0 across the pair.
  std::map<Diagonal, Filtration> extensions;
  std::vector<Diagonal> unaccounted;  // tilted members not generated by the pair
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

TiltTheoremReport verify_tilt_theorem(const SimpleMindedSystem& system,
                                      std::span<const Diagonal> pivot, TiltDirection direction);

/// a[i][j] = number of arrows s_i -> s_j = dim C(s_j, Sigma s_i), indexed by
/// the sorted simples.
std::vector<std::vector<int>> gabriel_quiver(const SimpleMindedSystem& system);

struct TiltEdge {
  int source = 0;
  int target = 0;
  TiltDirection direction = TiltDirection::left;
  Diagonal pivot;
};

struct TiltingGraph {
  CategoryParams params;
  std::vector<SimpleMindedSystem> nodes;  // enumerate_sms order
  std::vector<TiltEdge> edges;            // left tilts at single simples

  int index_of(const SimpleMindedSystem& system) const;  // -1 when absent
};

TiltingGraph tilting_graph(const CategoryParams& p);

/// Node sets of the weakly connected components, each sorted.
std::vector<std::vector<int>> weakly_connected_components(const TiltingGraph& graph);

}  // namespace smw
