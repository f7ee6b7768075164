#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "higgs/arakelov.hpp"
#include "higgs/bundle.hpp"
#include "higgs/curve.hpp"
#include "higgs/errors.hpp"
#include "higgs/rep.hpp"
#include "higgs/sl2.hpp"

namespace higgs {

// Multiset of widths with multiplicities; every width must share the parity
// of the weight.
struct WidthDecomposition {
  int weight = 0;
  std::map<int, Int> multiplicities;

  friend bool operator==(const WidthDecomposition&, const WidthDecomposition&) = default;
};

// Numerical model of S^width(L)(-(weight-width)/2) tensored with a unitary
/// piece: components at p = (weight+width)/2 - mu of rank unitary_rank and
// degree (width-2mu) * unitary_rank * deg(L), full kernel only at the bottom.
inline GradedHiggsBundle build_pure_component(int width, int weight, const BaseCurve& base,
                                              const Int& unitary_rank) {
  if (width < 0 || width > weight)
    throw WidthOutOfRange("width " + std::to_string(width) + " outside 0..weight for weight " +
                          std::to_string(weight));
  if ((weight - width) % 2 != 0)
    throw WidthParityError("width " + std::to_string(width) + " and weight " +
                           std::to_string(weight) + " differ in parity");
  if (unitary_rank < 1) throw ValidationError("unitary rank must be at least 1");
  if (base.punctures % 2 != 0)
    throw ParityError("no theta characteristic: puncture count " +
                      std::to_string(base.punctures) + " is odd");
  Rational theta = theta_characteristic_degree(base).degree;

  GradedHiggsBundle e;
  e.weight = weight;
  e.base = base;
  e.self_dual = true;
  for (int mu = 0; mu <= width; ++mu) {
    HodgeComponent c;
    c.p = (weight + width) / 2 - mu;
    c.q = weight - c.p;
    c.rank = unitary_rank;
    c.degree = Rational(width - 2 * mu) * Rational(unitary_rank) * theta;
    c.kernel_rank = (mu == width) ? unitary_rank : Int(0);
    e.components.push_back(std::move(c));
  }
  return e;
}

// Direct sum of pure components, one per width, with optional unitary ranks
// (default 1); ranks, degrees and kernels add level by level.
inline GradedHiggsBundle assemble(const WidthDecomposition& d, const BaseCurve& base,
                                  const std::map<int, Int>& unitary_ranks = {}) {
  GradedHiggsBundle e;
  e.weight = d.weight;
  e.base = base;
  e.self_dual = true;
  for (const auto& [width, mult] : d.multiplicities) {
    if (mult < 0) throw ValidationError("negative multiplicity for width " + std::to_string(width));
    if (mult == 0) continue;
    Int urank = 1;
    if (auto it = unitary_ranks.find(width); it != unitary_ranks.end()) {
      if (it->second < 1) throw ValidationError("unitary rank must be at least 1");
      urank = it->second;
    }
    GradedHiggsBundle piece = build_pure_component(width, d.weight, base, mult * urank);
    for (auto& c : piece.components) e.components.push_back(std::move(c));
  }
  e.canonicalize();
  return e;
}

// Invert the cumulative Hodge numbers of a strictly maximal shape:
// m_{k-2i} = h^{k-i,i} - h^{k-i+1,i-1}.  The list runs from h^{k,0} to the
// middle and must weakly increase.
inline WidthDecomposition width_multiplicities_from_hodge_numbers(int weight,
                                                                  const std::vector<Int>& h) {
  if (weight < 0) throw ValidationError("weight is negative");
  std::size_t expect = static_cast<std::size_t>(weight / 2) + 1;
  if (h.size() != expect)
    throw ValidationError("expected " + std::to_string(expect) + " Hodge numbers for weight " +
                          std::to_string(weight) + ", got " + std::to_string(h.size()));
  WidthDecomposition d;
  d.weight = weight;
  Int prev = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 0) throw ValidationError("negative Hodge number at position " + std::to_string(i));
    if (h[i] < prev)
      throw NotMaximalShape("Hodge numbers must weakly increase toward the middle; h[" +
                            std::to_string(i) + "] = " + h[i].str() + " drops below " + prev.str());
    Int m = h[i] - prev;
    if (m != 0) d.multiplicities[weight - 2 * static_cast<int>(i)] = m;
    prev = h[i];
  }
  return d;
}

// Rep object with the twists that place each width symmetrically in the
// given weight, multiplicities from the decomposition.
inline RepObject rep_from_decomposition(const WidthDecomposition& d) {
  RepObject x;
  for (const auto& [width, mult] : d.multiplicities) {
    if ((d.weight - width) % 2 != 0)
      throw WidthParityError("width " + std::to_string(width) + " and weight " +
                             std::to_string(d.weight) + " differ in parity");
    if (mult != 0) x.terms.push_back(TwistedRep{width, (d.weight - width) / 2, mult, 1});
  }
  return canonicalized(x);
}

inline bool degree_zero_check(const GradedHiggsBundle& e) {
  return e.total_degree() == Rational(0);
}

struct SlopeComparison {
  Rational sub_slope;
  Rational ambient_slope;
  int relation = 0;  // -1, 0, 1 as sub slope compares to ambient slope
  bool semistable_ok = false;

  friend bool operator==(const SlopeComparison&, const SlopeComparison&) = default;
};

// Compare the slope of a subsheaf, both sides given as (rank, degree) lists.
inline SlopeComparison slope_check(
    const std::vector<std::pair<Int, Rational>>& component_ranks_degrees,
    const std::vector<std::pair<Int, Rational>>& sub_ranks_degrees) {
  auto total = [](const std::vector<std::pair<Int, Rational>>& v, const char* side) {
    Int rank = 0;
    Rational deg = 0;
    for (const auto& [r, d] : v) {
      if (r < 0) throw ValidationError(std::string(side) + " list has a negative rank");
      rank += r;
      deg += d;
    }
    if (rank == 0) throw ZeroRank(std::string(side) + " has rank zero, slope undefined");
    return std::pair<Int, Rational>{rank, deg};
  };
  auto [ar, ad] = total(component_ranks_degrees, "ambient");
  auto [sr, sd] = total(sub_ranks_degrees, "sub");
  if (sr > ar) throw ValidationError("sub rank exceeds ambient rank");
  SlopeComparison out;
  out.sub_slope = sd / Rational(sr);
  out.ambient_slope = ad / Rational(ar);
  out.relation = out.sub_slope < out.ambient_slope ? -1 : (out.sub_slope == out.ambient_slope ? 0 : 1);
  out.semistable_ok = out.relation <= 0;
  return out;
}

struct BidegreeReport {
  int declared_weight = 0;
  int tensor_weight = 0;
  Int width_zero_multiplicity;
  Rational expected_p;  // width-zero terms must sit at (expected_p, expected_p)
  bool concentrated = false;
  std::vector<int> offending_twists;

  friend bool operator==(const BidegreeReport&, const BidegreeReport&) = default;
};

// Width-zero summands of (tensor^m X) tensor (tensor^m' X-dual) must all sit
// at the single bidegree (k(m-m')/2, k(m-m')/2).
inline BidegreeReport invariant_bidegree_check(const RepObject& x, int m, int m_prime) {
  if (m < 0 || m_prime < 0) throw ValidationError("tensor exponents must be non-negative");
  RepObject d = canonicalized(x);
  int k = 0;
  if (!d.terms.empty()) {
    auto w = homogeneous_weight(d);
    if (!w) throw WeightMismatch("rep object mixes weights, no declared weight to check against");
    k = *w;
  }
  RepObject v = sym_power(0);
  for (int i = 0; i < m; ++i) v = tensor(v, d);
  RepObject dd = dual(d);
  for (int i = 0; i < m_prime; ++i) v = tensor(v, dd);

  BidegreeReport r;
  r.declared_weight = k;
  r.tensor_weight = k * (m - m_prime);
  r.expected_p = Rational(r.tensor_weight, 2);
  r.width_zero_multiplicity = 0;
  for (const auto& t : v.terms) {
    if (t.width != 0) continue;
    r.width_zero_multiplicity += t.multiplicity * t.unitary_rank;
    if (Rational(t.twist) != r.expected_p) r.offending_twists.push_back(t.twist);
  }
  r.concentrated = r.offending_twists.empty();
  return r;
}

enum class Feasibility { Feasible, Infeasible, Unknown };

inline const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible: return "Feasible";
    case Feasibility::Infeasible: return "Infeasible";
    case Feasibility::Unknown: return "Unknown";
  }
  return "?";
}

struct FeasibilityVerdict {
  Feasibility status = Feasibility::Unknown;
  std::string rule;  // identifier of the rule that fired, empty for Unknown
  std::string detail;

  friend bool operator==(const FeasibilityVerdict&, const FeasibilityVerdict&) = default;
};

// Rule table for the existence question.  Obstructions fire before witnesses;
// anything not covered stays Unknown, existence is never invented.
inline FeasibilityVerdict feasibility(int weight, const BaseCurve& base, const Int& h_top,
                                      bool wants_strictly_maximal) {
  if (weight < 0) throw ValidationError("weight is negative");
  if (h_top < 0) throw ValidationError("top Hodge number is negative");
  int s = base.punctures;
  int logdeg = log_canonical_degree(base);

  if (wants_strictly_maximal && weight % 2 == 1 && s == 0 && h_top == 1)
    return {Feasibility::Infeasible, "Cor 6.2",
            "no non-constant polarized variation of odd weight with top Hodge number 1 and a "
            "strictly maximal Higgs field exists over a projective curve"};
  if (wants_strictly_maximal && weight % 2 == 1 && base.genus == 0 && s % 2 == 1)
    return {Feasibility::Infeasible, "Remark 3.2 a",
            "odd weight and strict maximality over the projective line force an even number of "
            "punctures"};
  if (wants_strictly_maximal && logdeg <= 0)
    return {Feasibility::Infeasible, "Prop 2.1 c",
            "a nonzero Higgs field needs positive log-canonical degree, here " +
                std::to_string(logdeg)};

  if (weight == 1 && s > 0 && s % 2 == 0)
    return {Feasibility::Feasible, "modular family",
            "the weight-one variation of a modular family of elliptic curves over the punctured "
            "line is strictly maximal"};
  if (weight % 2 == 0 && s == 0)
    return {Feasibility::Feasible, "Example 7.5",
            "a smooth even-weight family over a compact base realizes a strictly maximal Higgs "
            "field with top Hodge number 1; its fibres are not Calabi-Yau for weight above 2"};
  if (s > 0 && s % 2 == 0)
    return {Feasibility::Feasible, "Example 7.1",
            "quotients of self-products of a maximal elliptic family realize strictly maximal "
            "variations of every weight over a base with evenly many punctures"};

  return {Feasibility::Unknown, "", "no obstruction or construction in the rule table applies"};
}

}  // namespace higgs
