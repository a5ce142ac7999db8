#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "smw/polygon.hpp"

/// Brute-force model of C_{-w}(A_e) built from representations of the
/// linearly oriented quiver 1 -> 2 -> ... -> e. Nothing in here consults the
/// polygon calculus; it is used to certify it.
namespace smw::oracle {

/// Interval module [first, last] with 1 <= first <= last <= rank.
struct IntervalModule {
  int first = 1;
  int last = 1;
  auto operator<=>(const IntervalModule&) const = default;
};

/// M[shift] in D^b(mod kQ).
struct DerivedIndec {
  IntervalModule module;
  int shift = 0;
  auto operator<=>(const DerivedIndec&) const = default;
};

std::string to_string(IntervalModule m);
std::string to_string(const DerivedIndec& x);

/// Dense matrix over F_p, row-major.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> entries;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}
  std::int64_t& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

/// Finite-dimensional representation over F_p: dims per vertex and the
/// matrix of each arrow k -> k+1 (rows = dims[k+1], cols = dims[k]).
struct Representation {
  std::vector<int> dims;
  std::vector<Matrix> arrows;
};

class LinearQuiver {
 public:
  explicit LinearQuiver(int rank);

  int rank() const { return rank_; }
  std::vector<IntervalModule> modules() const;
  Representation representation(IntervalModule m) const;

  /// dim Hom(M, N), by solving the commuting-square system.
  int hom_mod(IntervalModule m, IntervalModule n) const;
  /// dim Ext^1(M, N) from the projective resolution 0 -> P1 -> P0 -> M -> 0.
  int ext1_mod(IntervalModule m, IntervalModule n) const;
  /// dim Ext^1(M, N) as cocycles modulo coboundaries; second route for tests.
  int ext1_mod_cocycles(IntervalModule m, IntervalModule n) const;
  /// Interval multiplicities of an arbitrary representation.
  std::map<IntervalModule, int> decompose(const Representation& rep) const;

  int derived_hom(const DerivedIndec& x, const DerivedIndec& y) const;
  DerivedIndec tau(const DerivedIndec& x) const;
  DerivedIndec tau_inverse(const DerivedIndec& x) const;

  /// Summands of the cone of the (unique up to scalar) nonzero morphism
  /// x -> y. Throws if derived_hom(x, y) != 1.
  std::vector<DerivedIndec> cone(const DerivedIndec& x, const DerivedIndec& y) const;

 private:
  int rank_;
};

/// D^b(mod kQ) / F with F = tau Sigma^{w+1}, realized on a fundamental domain.
class OrbitCategory {
 public:
  explicit OrbitCategory(const CategoryParams& params);

  const CategoryParams& params() const { return params_; }
  const LinearQuiver& quiver() const { return quiver_; }
  /// One representative per F-orbit, sorted.
  const std::vector<DerivedIndec>& domain() const { return domain_; }

  DerivedIndec apply_orbit_functor(DerivedIndec x, int power) const;
  DerivedIndec canonical(DerivedIndec x) const;
  DerivedIndec suspend(const DerivedIndec& x, int steps) const;

  /// sum_n Hom_D(x, F^n y); x and y need not lie in the domain.
  int orbit_hom(const DerivedIndec& x, const DerivedIndec& y) const;
  /// Canonicalized cone summands of the nonzero morphism x -> y; requires
  /// orbit_hom(x, y) == 1.
  std::vector<DerivedIndec> cone(const DerivedIndec& x, const DerivedIndec& y) const;

 private:
  CategoryParams params_;
  LinearQuiver quiver_;
  std::vector<DerivedIndec> domain_;
  std::map<DerivedIndec, DerivedIndec> representative_;
};

/// Hom dimension dim C(x, Sigma^shift y) on the polygon side.
using DiagonalHom = std::function<int(Diagonal, int, Diagonal)>;
/// Middle term of Sigma^{-1} s' -> s -> e -> s' on the polygon side.
using DiagonalMiddleTerm = std::function<std::vector<Diagonal>(Diagonal, Diagonal)>;

struct DiagonalMatching {
  std::map<DerivedIndec, Diagonal> to_diagonal;
  std::map<Diagonal, DerivedIndec> to_object;
};

struct AgreementReport {
  long checked = 0;
  long mismatches = 0;
  std::vector<std::string> samples;  // first few mismatches, human readable

  bool ok() const { return mismatches == 0; }
};

/// Compares orbit_hom(x, Sigma^l y) with `hom` for every pair and every
/// l in [-max_shift, max_shift].
AgreementReport check_hom_agreement(const OrbitCategory& cat, const DiagonalMatching& match,
                                    const DiagonalHom& hom, int max_shift);

/// For every pair with a nonzero morphism Sigma^{-1}s' -> s, compares the
/// oracle cone with `middle`.
AgreementReport check_middle_term_agreement(const OrbitCategory& cat,
                                            const DiagonalMatching& match,
                                            const DiagonalMiddleTerm& middle);

/// orbit_hom(x, Sigma^{-w} y) == orbit_hom(y, x) over the whole domain.
AgreementReport check_calabi_yau(const OrbitCategory& cat);

struct MatchSearch {
  std::vector<DiagonalMatching> validated;
  long candidates_tried = 0;
};

/// Searches Sigma-equivariant bijections domain <-> admissible diagonals:
/// each Sigma-orbit of the domain is anchored on a Sigma-orbit of diagonals
/// of equal size at each possible rotation. A candidate is kept only if the
/// Hom tables (shifts in [-w-1, w+1]) and all middle terms agree.
MatchSearch match_to_diagonals(const OrbitCategory& cat, const DiagonalHom& hom,
                               const DiagonalMiddleTerm& middle);

}  // namespace smw::oracle
