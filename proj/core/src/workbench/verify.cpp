#include "smw/workbench/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "smw/ar_quiver.hpp"
#include "smw/error.hpp"
#include "smw/hom_ext.hpp"
#include "smw/orbit_oracle.hpp"
#include "smw/sms.hpp"
#include "smw/tilting.hpp"

namespace smw {

namespace {

constexpr std::size_t kSamples = 5;

struct Tally {
  SuiteResult& r;
  void check(bool ok, const std::string& what) {
    ++r.checked;
    if (ok) return;
    ++r.failures;
    if (r.samples.size() < kSamples) r.samples.push_back(what);
  }
  void absorb(const oracle::AgreementReport& report, const std::string& prefix) {
    r.checked += report.checked;
    r.failures += report.mismatches;
    for (const auto& s : report.samples) {
      if (r.samples.size() < kSamples) r.samples.push_back(prefix + ": " + s);
    }
  }
};

std::string label(std::span<const Diagonal> ds) {
  std::string out = "{";
  for (const auto& d : ds) out += (out.size() > 1 ? " " : "") + to_string(d);
  return out + "}";
}

void orthogonality(Tally& t, const CategoryParams& p) {
  for (const auto& s : enumerate_sms(p)) {
    const auto report = orthogonality_report(s.simples, p);
    t.check(report.ok, label(s.simples) + ": " +
                           (report.violations.empty() ? "" : report.violations.front()));
  }
}

void cy_duality(Tally& t, const CategoryParams& p) {
  const auto all = enumerate_indecomposables(p);
  for (const auto& x : all) {
    for (const auto& y : all) {
      const auto [lhs, rhs] = cy_pairing_dims(x, y, p);
      t.check(lhs == rhs, "polygon: C(" + to_string(x) + ", S^-w " + to_string(y) + ") = " +
                              std::to_string(lhs) + " but C(" + to_string(y) + ", " +
                              to_string(x) + ") = " + std::to_string(rhs));
    }
  }
  const oracle::OrbitCategory cat(p);
  t.absorb(oracle::check_calabi_yau(cat), "oracle");
}

// Closure by saturation under middle terms only, without composition data.
std::vector<Diagonal> saturate(std::vector<Diagonal> set, const CategoryParams& p) {
  std::set<Diagonal> members(set.begin(), set.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Diagonal> snapshot(members.begin(), members.end());
    for (const auto& x : snapshot) {
      for (const auto& y : snapshot) {
        if (hom_dim_neg1(y, x, p) == 0) continue;
        for (const auto& m : middle_term(y, x, p)) grew |= members.insert(m).second;
      }
    }
  }
  return {members.begin(), members.end()};
}

void closure_golden(Tally& t, const CategoryParams& p) {
  if (p.rank == 3 && p.weight == 2) {
    const std::vector<Diagonal> seed = {{1, 6}, {3, 5}, {7, 9}};
    const std::vector<Diagonal> golden = {{1, 3}, {1, 6}, {1, 9}, {3, 5}, {7, 9}};
    t.check(extension_closure(seed, p).members == golden,
            "closure of {1,6} {3,5} {7,9} differs from the figure");
  }
  for (const auto& s : enumerate_sms(p)) {
    const ClosureResult closure = extension_closure(s);
    t.check(closure.members == saturate(s.simples, p),
            label(s.simples) + ": closure differs from middle-term saturation");
    t.check(simples_of_closure(closure) == s.simples,
            label(s.simples) + ": simples of the closure are not the seed");
  }
}

void tilt_round_trip(Tally& t, const CategoryParams& p) {
  for (const auto& s : enumerate_sms(p)) {
    const int e = static_cast<int>(s.simples.size());
    for (int mask = 1; mask < (1 << e); ++mask) {
      std::vector<Diagonal> pivot;
      for (int i = 0; i < e; ++i) {
        if (mask >> i & 1) pivot.push_back(s.simples[i]);
      }
      for (TiltDirection dir : {TiltDirection::left, TiltDirection::right}) {
        const std::string what = std::string(to_string(dir)) + " tilt of " + label(s.simples) +
                                 " at " + label(pivot);
        try {
          const TiltMove there = tilt(s, pivot, dir);
          std::vector<Diagonal> back_pivot;
          for (const auto& d : there.pivot) {
            back_pivot.push_back(suspend(d, dir == TiltDirection::left ? -1 : 1, p));
          }
          const TiltMove back = tilt(there.result, back_pivot, opposite(dir));
          t.check(back.result == s, what + " does not return");
        } catch (const Error& err) {
          t.check(false, what + ": " + err.what());
        }
      }
    }
  }
}

void oracle_agreement(Tally& t, const CategoryParams& p) {
  const oracle::OrbitCategory cat(p);
  const oracle::DiagonalHom hom = [&](Diagonal x, int l, Diagonal y) { return hom_dim(x, l, y, p); };
  const oracle::DiagonalMiddleTerm middle = [&](Diagonal a, Diagonal b) {
    return middle_term(a, b, p);
  };
  const oracle::MatchSearch search = oracle::match_to_diagonals(cat, hom, middle);
  t.check(!search.validated.empty(), "no validated matching of oracle objects to diagonals");
  if (search.validated.empty()) return;
  const auto& match = search.validated.front();
  t.absorb(oracle::check_hom_agreement(cat, match, hom, p.weight + 1), "hom");
  t.absorb(oracle::check_middle_term_agreement(cat, match, middle), "middle term");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "orthogonality", "cy-duality", "closure-golden", "tilt-round-trip", "oracle-agreement"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const CategoryParams& p) {
  if (!is_suite_name(name)) throw Error(ErrorCode::parameter_error, "unknown suite '" + name + "'");
  require_theorem_weight(p);
  SuiteResult r;
  r.name = name;
  Tally t{r};
  const auto start = std::chrono::steady_clock::now();
  if (name == "orthogonality") orthogonality(t, p);
  else if (name == "cy-duality") cy_duality(t, p);
  else if (name == "closure-golden") closure_golden(t, p);
  else if (name == "tilt-round-trip") tilt_round_trip(t, p);
  else oracle_agreement(t, p);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = r.failures == 0;
  return r;
}

std::vector<SuiteResult> run_suites(const std::string& selector, const CategoryParams& p) {
  std::vector<SuiteResult> out;
  if (selector == "all") {
    for (const auto& name : suite_names()) out.push_back(run_suite(name, p));
  } else {
    out.push_back(run_suite(selector, p));
  }
  return out;
}

wire::Json to_json(const SuiteResult& r) {
  return wire::Json{{"suite", r.name},
                    {"passed", r.passed},
                    {"checked", r.checked},
                    {"failures", r.failures},
                    {"samples", r.samples}};
}

}  // namespace smw
