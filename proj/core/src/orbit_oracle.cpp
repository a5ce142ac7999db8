#include "smw/orbit_oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace smw::oracle {

namespace {

constexpr std::int64_t kPrime = 1'000'000'007;

std::int64_t reduce(std::int64_t v) {
  v %= kPrime;
  return v < 0 ? v + kPrime : v;
}

std::int64_t power(std::int64_t base, std::int64_t exp) {
  std::int64_t result = 1;
  base = reduce(base);
  while (exp > 0) {
    if (exp & 1) result = result * base % kPrime;
    base = base * base % kPrime;
    exp >>= 1;
  }
  return result;
}

std::int64_t inverse(std::int64_t v) { return power(v, kPrime - 2); }

// Gauss-Jordan elimination in place; returns the pivot column of each pivot row.
std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int found = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != row) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(found, c));
    }
    const std::int64_t inv = inverse(m.at(row, col));
    for (int c = 0; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv % kPrime;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const std::int64_t factor = m.at(r, col);
      for (int c = 0; c < m.cols; ++c) {
        m.at(r, c) = reduce(m.at(r, c) - factor * m.at(row, c));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int matrix_rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

// Basis of {x : m x = 0}.
std::vector<std::vector<std::int64_t>> nullspace(Matrix m) {
  const std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::int64_t>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = reduce(-m.at(static_cast<int>(r), free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  assert(a.cols == b.rows);
  Matrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const std::int64_t x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) = (out.at(i, j) + x * b.at(k, j)) % kPrime;
    }
  }
  return out;
}

Matrix identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  assert(a.rows == b.rows);
  Matrix out(a.rows, a.cols + b.cols);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) out.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols; ++c) out.at(r, a.cols + c) = b.at(r, c);
  }
  return out;
}

// Matrix of the composite V_from -> V_to (0-based vertices, from <= to).
Matrix composite(const Representation& rep, int from, int to) {
  Matrix m = identity(rep.dims[from]);
  for (int k = from; k < to; ++k) m = multiply(rep.arrows[k], m);
  return m;
}

// All morphisms V -> W as lists of per-vertex matrices.
std::vector<std::vector<Matrix>> hom_basis(const Representation& v, const Representation& w) {
  const int n = static_cast<int>(v.dims.size());
  std::vector<int> offset(n + 1, 0);
  for (int k = 0; k < n; ++k) offset[k + 1] = offset[k] + w.dims[k] * v.dims[k];
  const int unknowns = offset[n];
  int equations = 0;
  for (int k = 0; k + 1 < n; ++k) equations += w.dims[k + 1] * v.dims[k];

  // f_k is w.dims[k] x v.dims[k]; entry (r, c) lives at offset[k] + r * v.dims[k] + c.
  Matrix system(equations, unknowns);
  int row = 0;
  for (int k = 0; k + 1 < n; ++k) {
    const Matrix& wa = w.arrows[k];
    const Matrix& va = v.arrows[k];
    for (int r = 0; r < w.dims[k + 1]; ++r) {
      for (int c = 0; c < v.dims[k]; ++c) {
        // (W_a f_k - f_{k+1} V_a)(r, c) = 0
        for (int t = 0; t < w.dims[k]; ++t) {
          auto& cell = system.at(row, offset[k] + t * v.dims[k] + c);
          cell = reduce(cell + wa.at(r, t));
        }
        for (int t = 0; t < v.dims[k + 1]; ++t) {
          auto& cell = system.at(row, offset[k + 1] + r * v.dims[k + 1] + t);
          cell = reduce(cell - va.at(t, c));
        }
        ++row;
      }
    }
  }

  std::vector<std::vector<Matrix>> out;
  for (const auto& vec : nullspace(system)) {
    std::vector<Matrix> f;
    for (int k = 0; k < n; ++k) {
      Matrix fk(w.dims[k], v.dims[k]);
      for (int r = 0; r < w.dims[k]; ++r) {
        for (int c = 0; c < v.dims[k]; ++c) fk.at(r, c) = vec[offset[k] + r * v.dims[k] + c];
      }
      f.push_back(std::move(fk));
    }
    out.push_back(std::move(f));
  }
  return out;
}

// Coboundary map from (+)_k Hom(M_k, N_k) into cocycles (+)_a Hom(M_k, N_{k+1}),
// h |-> N_a h_k - h_{k+1} M_a. Rows index cocycle coordinates.
Matrix coboundary(const Representation& m, const Representation& n) {
  const int verts = static_cast<int>(m.dims.size());
  std::vector<int> h_offset(verts + 1, 0);
  for (int k = 0; k < verts; ++k) h_offset[k + 1] = h_offset[k] + n.dims[k] * m.dims[k];
  int cocycle_dim = 0;
  for (int k = 0; k + 1 < verts; ++k) cocycle_dim += n.dims[k + 1] * m.dims[k];

  Matrix d(cocycle_dim, h_offset[verts]);
  int row = 0;
  for (int k = 0; k + 1 < verts; ++k) {
    for (int r = 0; r < n.dims[k + 1]; ++r) {
      for (int c = 0; c < m.dims[k]; ++c) {
        for (int t = 0; t < n.dims[k]; ++t) {
          auto& cell = d.at(row, h_offset[k] + t * m.dims[k] + c);
          cell = reduce(cell + n.arrows[k].at(r, t));
        }
        for (int t = 0; t < m.dims[k + 1]; ++t) {
          auto& cell = d.at(row, h_offset[k + 1] + r * m.dims[k + 1] + t);
          cell = reduce(cell - m.arrows[k].at(t, c));
        }
        ++row;
      }
    }
  }
  return d;
}

template <typename RankFn>
std::map<IntervalModule, int> decompose_by_ranks(int rank_e, RankFn&& r) {
  auto ranks = [&](int a, int b) {
    if (a < 1 || b > rank_e) return 0;
    return r(a, b);
  };
  std::map<IntervalModule, int> out;
  for (int a = 1; a <= rank_e; ++a) {
    for (int b = a; b <= rank_e; ++b) {
      const int mult = ranks(a, b) - ranks(a - 1, b) - ranks(a, b + 1) + ranks(a - 1, b + 1);
      if (mult < 0) throw std::logic_error("negative interval multiplicity");
      if (mult > 0) out[IntervalModule{a, b}] = mult;
    }
  }
  return out;
}

void append_shifted(std::vector<DerivedIndec>& out, const std::map<IntervalModule, int>& parts,
                    int shift) {
  for (const auto& [module, mult] : parts) {
    for (int i = 0; i < mult; ++i) out.push_back(DerivedIndec{module, shift});
  }
}

}  // namespace

std::string to_string(IntervalModule m) {
  return "[" + std::to_string(m.first) + "," + std::to_string(m.last) + "]";
}

std::string to_string(const DerivedIndec& x) {
  return to_string(x.module) + "<" + std::to_string(x.shift) + ">";
}

LinearQuiver::LinearQuiver(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("quiver rank must be >= 1");
}

std::vector<IntervalModule> LinearQuiver::modules() const {
  std::vector<IntervalModule> out;
  for (int a = 1; a <= rank_; ++a) {
    for (int b = a; b <= rank_; ++b) out.push_back(IntervalModule{a, b});
  }
  return out;
}

Representation LinearQuiver::representation(IntervalModule m) const {
  Representation rep;
  rep.dims.assign(rank_, 0);
  for (int k = m.first; k <= m.last; ++k) rep.dims[k - 1] = 1;
  for (int k = 0; k + 1 < rank_; ++k) {
    Matrix a(rep.dims[k + 1], rep.dims[k]);
    if (rep.dims[k] == 1 && rep.dims[k + 1] == 1) a.at(0, 0) = 1;
    rep.arrows.push_back(std::move(a));
  }
  return rep;
}

int LinearQuiver::hom_mod(IntervalModule m, IntervalModule n) const {
  return static_cast<int>(hom_basis(representation(m), representation(n)).size());
}

int LinearQuiver::ext1_mod(IntervalModule m, IntervalModule n) const {
  const Representation rm = representation(m);
  const Representation rn = representation(n);
  // Hom(P0, N) with P0 = (+)_k P_k^{m_k}; Hom(P1, N) with P1 = (+)_{k->k+1} P_{k+1}^{m_k}.
  int hom_p0 = 0;
  int hom_p1 = 0;
  for (int k = 0; k < rank_; ++k) hom_p0 += rm.dims[k] * rn.dims[k];
  for (int k = 0; k + 1 < rank_; ++k) hom_p1 += rm.dims[k] * rn.dims[k + 1];
  return hom_mod(m, n) - hom_p0 + hom_p1;
}

int LinearQuiver::ext1_mod_cocycles(IntervalModule m, IntervalModule n) const {
  const Matrix d = coboundary(representation(m), representation(n));
  return d.rows - matrix_rank(d);
}

std::map<IntervalModule, int> LinearQuiver::decompose(const Representation& rep) const {
  return decompose_by_ranks(rank_, [&](int a, int b) { return matrix_rank(composite(rep, a - 1, b - 1)); });
}

int LinearQuiver::derived_hom(const DerivedIndec& x, const DerivedIndec& y) const {
  if (y.shift == x.shift) return hom_mod(x.module, y.module);
  if (y.shift == x.shift + 1) return ext1_mod(x.module, y.module);
  return 0;
}

DerivedIndec LinearQuiver::tau(const DerivedIndec& x) const {
  const IntervalModule m = x.module;
  if (m.last < rank_) return DerivedIndec{{m.first + 1, m.last + 1}, x.shift};
  // tau P_i = I_i[-1], with P_i = [i, e] and I_i = [1, i].
  return DerivedIndec{{1, m.first}, x.shift - 1};
}

DerivedIndec LinearQuiver::tau_inverse(const DerivedIndec& x) const {
  const IntervalModule m = x.module;
  if (m.first > 1) return DerivedIndec{{m.first - 1, m.last - 1}, x.shift};
  return DerivedIndec{{m.last, rank_}, x.shift + 1};
}

std::vector<DerivedIndec> LinearQuiver::cone(const DerivedIndec& x, const DerivedIndec& y) const {
  if (derived_hom(x, y) != 1) {
    throw std::invalid_argument("cone needs a one-dimensional Hom space: " + to_string(x) +
                                " -> " + to_string(y));
  }
  const Representation m = representation(x.module);
  const Representation n = representation(y.module);
  std::vector<DerivedIndec> out;

  if (y.shift == x.shift) {
    const std::vector<Matrix> f = hom_basis(m, n).front();
    // cone(f) = coker f [i] (+) ker f [i+1]
    std::vector<Matrix> kernels;
    for (int k = 0; k < rank_; ++k) {
      const auto basis = nullspace(f[k]);
      Matrix kmat(m.dims[k], static_cast<int>(basis.size()));
      for (std::size_t c = 0; c < basis.size(); ++c) {
        for (int r = 0; r < m.dims[k]; ++r) kmat.at(r, static_cast<int>(c)) = basis[c][r];
      }
      kernels.push_back(std::move(kmat));
    }
    const auto ker = decompose_by_ranks(rank_, [&](int a, int b) {
      return matrix_rank(multiply(composite(m, a - 1, b - 1), kernels[a - 1]));
    });
    const auto coker = decompose_by_ranks(rank_, [&](int a, int b) {
      const Matrix& image_b = f[b - 1];
      return matrix_rank(hconcat(composite(n, a - 1, b - 1), image_b)) - matrix_rank(image_b);
    });
    append_shifted(out, coker, x.shift);
    append_shifted(out, ker, x.shift + 1);
    return out;
  }

  // x -> y[1] is a class in Ext^1(M, N); its cone is E[i+1] for the extension
  // 0 -> N -> E -> M -> 0 it classifies.
  const Matrix d = coboundary(m, n);
  const int base_rank = matrix_rank(d);
  std::vector<std::int64_t> cocycle;
  for (int i = 0; i < d.rows; ++i) {
    Matrix probe(d.rows, 1);
    probe.at(i, 0) = 1;
    if (matrix_rank(hconcat(d, probe)) > base_rank) {
      cocycle.assign(d.rows, 0);
      cocycle[i] = 1;
      break;
    }
  }
  if (cocycle.empty()) throw std::logic_error("no non-split extension found");

  Representation ext;
  for (int k = 0; k < rank_; ++k) ext.dims.push_back(n.dims[k] + m.dims[k]);
  int pos = 0;
  for (int k = 0; k + 1 < rank_; ++k) {
    Matrix a(ext.dims[k + 1], ext.dims[k]);
    for (int r = 0; r < n.dims[k + 1]; ++r) {
      for (int c = 0; c < n.dims[k]; ++c) a.at(r, c) = n.arrows[k].at(r, c);
    }
    for (int r = 0; r < m.dims[k + 1]; ++r) {
      for (int c = 0; c < m.dims[k]; ++c) {
        a.at(n.dims[k + 1] + r, n.dims[k] + c) = m.arrows[k].at(r, c);
      }
    }
    // cocycle block N_{k+1} x M_k, same coordinate order as coboundary()
    for (int r = 0; r < n.dims[k + 1]; ++r) {
      for (int c = 0; c < m.dims[k]; ++c) a.at(r, n.dims[k] + c) = cocycle[pos++];
    }
    ext.arrows.push_back(std::move(a));
  }
  append_shifted(out, decompose(ext), x.shift + 1);
  return out;
}

OrbitCategory::OrbitCategory(const CategoryParams& params)
    : params_(params), quiver_(params.rank) {
  const int w = params_.weight;
  std::vector<DerivedIndec> window;
  for (int s = 0; s <= w; ++s) {
    for (const auto& m : quiver_.modules()) window.push_back(DerivedIndec{m, s});
  }
  std::map<DerivedIndec, DerivedIndec> parent;
  for (const auto& x : window) parent[x] = x;
  auto find = [&](DerivedIndec x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& x : window) {
    const DerivedIndec fx = apply_orbit_functor(x, 1);
    if (fx.shift > w) continue;
    DerivedIndec a = find(x);
    DerivedIndec b = find(fx);
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  for (const auto& x : window) {
    const DerivedIndec rep = find(x);
    representative_[x] = rep;
    if (rep == x) domain_.push_back(x);
  }
  std::sort(domain_.begin(), domain_.end());
}

DerivedIndec OrbitCategory::apply_orbit_functor(DerivedIndec x, int power) const {
  const int w = params_.weight;
  for (; power > 0; --power) {
    x = quiver_.tau(x);
    x.shift += w + 1;
  }
  for (; power < 0; ++power) {
    x = quiver_.tau_inverse(x);
    x.shift -= w + 1;
  }
  return x;
}

DerivedIndec OrbitCategory::canonical(DerivedIndec x) const {
  while (x.shift > params_.weight) x = apply_orbit_functor(x, -1);
  while (x.shift < 0) x = apply_orbit_functor(x, 1);
  return representative_.at(x);
}

DerivedIndec OrbitCategory::suspend(const DerivedIndec& x, int steps) const {
  return canonical(DerivedIndec{x.module, x.shift + steps});
}

int OrbitCategory::orbit_hom(const DerivedIndec& x, const DerivedIndec& y) const {
  int total = 0;
  // F raises the shift by w or w+1, so only finitely many terms can be nonzero.
  for (DerivedIndec fy = y; fy.shift <= x.shift + 1; fy = apply_orbit_functor(fy, 1)) {
    total += quiver_.derived_hom(x, fy);
  }
  for (DerivedIndec fy = apply_orbit_functor(y, -1); fy.shift >= x.shift;
       fy = apply_orbit_functor(fy, -1)) {
    total += quiver_.derived_hom(x, fy);
  }
  return total;
}

std::vector<DerivedIndec> OrbitCategory::cone(const DerivedIndec& x, const DerivedIndec& y) const {
  if (orbit_hom(x, y) != 1) {
    throw std::invalid_argument("orbit cone needs a one-dimensional Hom space");
  }
  auto cone_of = [&](const DerivedIndec& lift) {
    std::vector<DerivedIndec> out;
    for (const auto& part : quiver_.cone(x, lift)) out.push_back(canonical(part));
    std::sort(out.begin(), out.end());
    return out;
  };
  for (DerivedIndec fy = y; fy.shift <= x.shift + 1; fy = apply_orbit_functor(fy, 1)) {
    if (quiver_.derived_hom(x, fy) == 1) return cone_of(fy);
  }
  for (DerivedIndec fy = apply_orbit_functor(y, -1); fy.shift >= x.shift;
       fy = apply_orbit_functor(fy, -1)) {
    if (quiver_.derived_hom(x, fy) == 1) return cone_of(fy);
  }
  throw std::logic_error("nonzero orbit morphism has no lift");
}

namespace {

std::vector<Diagonal> admissible_diagonals(const CategoryParams& p) {
  std::vector<Diagonal> out;
  for (int lo = 0; lo < p.polygon_size; ++lo) {
    for (int hi = lo + 1; hi < p.polygon_size; ++hi) {
      if (is_admissible(Diagonal{lo, hi}, p)) out.push_back(Diagonal{lo, hi});
    }
  }
  return out;
}

template <typename T, typename Step>
std::vector<std::vector<T>> orbits_under(const std::vector<T>& items, Step step) {
  std::vector<std::vector<T>> out;
  std::map<T, bool> seen;
  for (const auto& start : items) {
    if (seen[start]) continue;
    std::vector<T> orbit;
    T cur = start;
    do {
      seen[cur] = true;
      orbit.push_back(cur);
      cur = step(cur);
    } while (cur != start);
    out.push_back(std::move(orbit));
  }
  return out;
}

void note_mismatch(AgreementReport& report, const std::string& what) {
  ++report.mismatches;
  if (report.samples.size() < 8) report.samples.push_back(what);
}

}  // namespace

AgreementReport check_hom_agreement(const OrbitCategory& cat, const DiagonalMatching& match,
                                    const DiagonalHom& hom, int max_shift) {
  AgreementReport report;
  for (const auto& x : cat.domain()) {
    for (const auto& y : cat.domain()) {
      for (int l = -max_shift; l <= max_shift; ++l) {
        const int expected = cat.orbit_hom(x, DerivedIndec{y.module, y.shift + l});
        const int got = hom(match.to_diagonal.at(x), l, match.to_diagonal.at(y));
        ++report.checked;
        if (expected != got) {
          std::ostringstream msg;
          msg << "Hom(" << to_string(match.to_diagonal.at(x)) << ", S^" << l << " "
              << to_string(match.to_diagonal.at(y)) << "): oracle " << expected << ", calculus "
              << got;
          note_mismatch(report, msg.str());
        }
      }
    }
  }
  return report;
}

AgreementReport check_middle_term_agreement(const OrbitCategory& cat,
                                            const DiagonalMatching& match,
                                            const DiagonalMiddleTerm& middle) {
  AgreementReport report;
  for (const auto& [target, target_obj] : match.to_object) {
    for (const auto& [through, through_obj] : match.to_object) {
      const DerivedIndec source = cat.suspend(target_obj, -1);
      if (cat.orbit_hom(source, through_obj) != 1) continue;
      ++report.checked;
      std::vector<Diagonal> expected;
      for (const auto& part : cat.cone(source, through_obj)) {
        expected.push_back(match.to_diagonal.at(part));
      }
      std::sort(expected.begin(), expected.end());
      std::vector<Diagonal> got;
      try {
        got = middle(target, through);
      } catch (const std::exception& ex) {
        note_mismatch(report, "middle term of " + to_string(target) + ", " + to_string(through) +
                                  " threw: " + ex.what());
        continue;
      }
      std::sort(got.begin(), got.end());
      if (got != expected) {
        std::ostringstream msg;
        msg << "middle term of S^-1 " << to_string(target) << " -> " << to_string(through)
            << ": oracle [";
        for (const auto& d : expected) msg << to_string(d);
        msg << "], calculus [";
        for (const auto& d : got) msg << to_string(d);
        msg << "]";
        note_mismatch(report, msg.str());
      }
    }
  }
  return report;
}

AgreementReport check_calabi_yau(const OrbitCategory& cat) {
  AgreementReport report;
  const int w = cat.params().weight;
  for (const auto& x : cat.domain()) {
    for (const auto& y : cat.domain()) {
      const int lhs = cat.orbit_hom(x, DerivedIndec{y.module, y.shift - w});
      const int rhs = cat.orbit_hom(y, x);
      ++report.checked;
      if (lhs != rhs) {
        note_mismatch(report, "CY pairing of " + to_string(x) + ", " + to_string(y) + ": " +
                                  std::to_string(lhs) + " vs " + std::to_string(rhs));
      }
    }
  }
  return report;
}

MatchSearch match_to_diagonals(const OrbitCategory& cat, const DiagonalHom& hom,
                               const DiagonalMiddleTerm& middle) {
  const CategoryParams& p = cat.params();
  const int max_shift = p.weight + 1;
  const auto& domain = cat.domain();
  const auto diagonals = admissible_diagonals(p);
  MatchSearch search;
  if (domain.size() != diagonals.size()) return search;

  const auto object_orbits =
      orbits_under(domain, [&](const DerivedIndec& x) { return cat.suspend(x, 1); });
  const auto diagonal_orbits =
      orbits_under(diagonals, [&](const Diagonal& d) { return smw::suspend(d, 1, p); });

  // Oracle table: index -> shift -> index.
  std::map<DerivedIndec, int> index;
  for (std::size_t i = 0; i < domain.size(); ++i) index[domain[i]] = static_cast<int>(i);
  const int span = 2 * max_shift + 1;
  std::vector<int> table(domain.size() * domain.size() * span);
  auto cell = [&](int i, int j, int l) -> int& {
    return table[(static_cast<std::size_t>(i) * domain.size() + j) * span + (l + max_shift)];
  };
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = 0; j < domain.size(); ++j) {
      for (int l = -max_shift; l <= max_shift; ++l) {
        cell(static_cast<int>(i), static_cast<int>(j), l) =
            cat.orbit_hom(domain[i], DerivedIndec{domain[j].module, domain[j].shift + l});
      }
    }
  }

  DiagonalMatching current;
  std::vector<bool> used(diagonal_orbits.size(), false);
  std::vector<int> assigned;

  auto consistent = [&](const std::vector<DerivedIndec>& fresh) {
    for (const auto& x : fresh) {
      for (int j : assigned) {
        const DerivedIndec& y = domain[j];
        const int i = index.at(x);
        for (int l = -max_shift; l <= max_shift; ++l) {
          if (cell(i, j, l) != hom(current.to_diagonal.at(x), l, current.to_diagonal.at(y))) {
            return false;
          }
          if (cell(j, i, l) != hom(current.to_diagonal.at(y), l, current.to_diagonal.at(x))) {
            return false;
          }
        }
      }
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t orbit_index) -> void {
    if (orbit_index == object_orbits.size()) {
      if (check_middle_term_agreement(cat, current, middle).ok()) {
        search.validated.push_back(current);
      }
      return;
    }
    const auto& objects = object_orbits[orbit_index];
    for (std::size_t t = 0; t < diagonal_orbits.size(); ++t) {
      const auto& targets = diagonal_orbits[t];
      if (used[t] || targets.size() != objects.size()) continue;
      for (std::size_t offset = 0; offset < targets.size(); ++offset) {
        ++search.candidates_tried;
        for (std::size_t k = 0; k < objects.size(); ++k) {
          const Diagonal& d = targets[(k + offset) % targets.size()];
          current.to_diagonal[objects[k]] = d;
          current.to_object[d] = objects[k];
        }
        const std::size_t before = assigned.size();
        for (const auto& x : objects) assigned.push_back(index.at(x));
        if (consistent(objects)) {
          used[t] = true;
          self(self, orbit_index + 1);
          used[t] = false;
        }
        assigned.resize(before);
        for (std::size_t k = 0; k < objects.size(); ++k) {
          current.to_object.erase(targets[(k + offset) % targets.size()]);
          current.to_diagonal.erase(objects[k]);
        }
      }
    }
  };
  recurse(recurse, 0);
  return search;
}

}  // namespace smw::oracle
