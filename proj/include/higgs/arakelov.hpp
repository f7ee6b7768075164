#pragma once

#include <optional>
#include <string>
#include <vector>

#include "higgs/bundle.hpp"
#include "higgs/errors.hpp"

namespace higgs {

// One level of the degree bound: the degree of E^{k-nu,nu} against
// (k-2nu)/2 * (h - h0) * (2g-2+s), with slack = bound - degree.
struct LevelBound {
  int level = 0;
  Rational lhs;
  Rational bound;
  Rational slack;

  friend bool operator==(const LevelBound&, const LevelBound&) = default;
};

inline LevelBound level_bound(const GradedHiggsBundle& e, int level) {
  if (level < 0 || 2 * level > e.weight)
    throw LevelOutOfRange("level " + std::to_string(level) + " outside 0..floor(weight/2) for weight " +
                          std::to_string(e.weight));
  int p = e.weight - level;
  Int free_rank = e.rank_at(p) - e.kernel_rank_at(p);
  Rational lhs = e.degree_at(p);
  Rational bound = Rational(Int(e.weight - 2 * level) * free_rank * log_canonical_degree(e.base), 2);
  return LevelBound{level, lhs, bound, bound - lhs};
}

enum class Verdict { ZeroHiggs, StrictlyMaximal, NotMaximal, NotRealizable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ZeroHiggs: return "ZeroHiggs";
    case Verdict::StrictlyMaximal: return "StrictlyMaximal";
    case Verdict::NotMaximal: return "NotMaximal";
    case Verdict::NotRealizable: return "NotRealizable";
  }
  return "?";
}

struct AuditReport {
  int weight = 0;
  std::vector<LevelBound> levels;
  Rational total_lhs;
  Rational total_bound;
  std::optional<int> first_active_level;

  // the three ingredients of the maximality test, computed independently:
  // degree equality per level against the kernel-free bound, the same in
  // total, and vanishing kernels above the middle
  bool per_level_equality = false;
  bool total_equality = false;
  bool kernel_vanishing = false;

  // realizability diagnostics: degrees within their bounds and non-negative
  // in total, and a positive degree at the first active level
  bool within_bounds = false;
  bool positivity_ok = false;

  Verdict verdict = Verdict::ZeroHiggs;
  std::vector<int> witnesses;  // levels breaking equality, for NotMaximal
  std::string note;
};

// Degree audit of a valid self-dual bundle.  The verdict comes from the
// equality predicates; when they cannot belong to one bundle (total equality
// with unequal levels, or equalities with kernels above the middle) the
// verdict is NotRealizable instead of a guess.  Throws PositivityViolation
// when a nonzero Higgs field is claimed over a base with non-positive
// log-canonical degree; every other inconsistency is reported in the flags.
inline AuditReport audit(const GradedHiggsBundle& e) {
  {
    auto issues = validate(e);
    if (!issues.empty()) {
      std::string joined = "bundle fails validation:";
      for (const auto& s : issues) joined += " [" + s + "]";
      throw ValidationError(joined);
    }
  }
  if (!e.self_dual) throw ValidationError("audit requires a self-dual bundle");

  AuditReport r;
  r.weight = e.weight;
  int k = e.weight;
  int logdeg = log_canonical_degree(e.base);

  bool zero_higgs = true;
  for (const auto& c : e.components)
    if (c.kernel_rank != c.rank) zero_higgs = false;

  if (!zero_higgs && logdeg <= 0)
    throw PositivityViolation("nonzero Higgs field over a base with log-canonical degree " +
                              std::to_string(logdeg));

  for (const auto& c : e.components) {
    if (c.kernel_rank != c.rank) {
      r.first_active_level = k - c.p;  // components are sorted by decreasing p
      break;
    }
  }

  r.per_level_equality = true;
  r.total_equality = true;
  r.kernel_vanishing = true;
  r.within_bounds = true;
  Rational total_free_bound = 0;
  for (int nu = 0; 2 * nu <= k; ++nu) {
    LevelBound lb = level_bound(e, nu);
    int p = k - nu;
    Rational free_bound = Rational(Int(k - 2 * nu) * e.rank_at(p) * logdeg, 2);
    total_free_bound += free_bound;
    if (lb.lhs != free_bound) {
      r.per_level_equality = false;
      r.witnesses.push_back(nu);
    }
    if (2 * nu < k && e.kernel_rank_at(p) != 0) r.kernel_vanishing = false;
    if (lb.slack < Rational(0)) r.within_bounds = false;
    r.total_lhs += lb.lhs;
    r.total_bound += lb.bound;
    r.levels.push_back(std::move(lb));
  }
  r.total_equality = (r.total_lhs == total_free_bound);
  if (r.total_lhs < Rational(0)) r.within_bounds = false;

  r.positivity_ok =
      !r.first_active_level || e.degree_at(k - *r.first_active_level) > Rational(0);

  if (zero_higgs) {
    r.verdict = Verdict::ZeroHiggs;
    r.witnesses.clear();
  } else if (r.per_level_equality && r.total_equality && r.kernel_vanishing) {
    r.verdict = Verdict::StrictlyMaximal;
  } else if (!r.per_level_equality && !r.total_equality) {
    r.verdict = Verdict::NotMaximal;
  } else {
    r.verdict = Verdict::NotRealizable;
    if (r.total_equality && !r.per_level_equality)
      r.note = "total degree matches the maximal value while single levels deviate; "
               "no bundle realizes compensating levels";
    else
      r.note = "level degrees are maximal while kernels above the middle do not vanish; "
               "the claimed Higgs kernels exceed their bound";
    r.witnesses.clear();
  }
  if (r.verdict != Verdict::NotMaximal) r.witnesses.clear();
  return r;
}

}  // namespace higgs
