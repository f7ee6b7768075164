#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "higgs/curve.hpp"
#include "higgs/errors.hpp"
#include "higgs/rational.hpp"

namespace higgs {

// One summand E^{p,q} of a graded Higgs bundle, carrying its numerical data:
// rank, degree, and the rank of the kernel of the Higgs map leaving it.
struct HodgeComponent {
  int p = 0;
  int q = 0;
  Int rank = 0;
  Rational degree;
  Int kernel_rank = 0;

  friend bool operator==(const HodgeComponent&, const HodgeComponent&) = default;
};

struct GradedHiggsBundle {
  int weight = 0;
  BaseCurve base;
  bool self_dual = false;
  std::vector<HodgeComponent> components;  // strictly decreasing p once canonical

  const HodgeComponent* find(int p) const {
    for (const auto& c : components)
      if (c.p == p) return &c;
    return nullptr;
  }
  Int rank_at(int p) const {
    const auto* c = find(p);
    return c ? c->rank : Int(0);
  }
  Rational degree_at(int p) const {
    const auto* c = find(p);
    return c ? c->degree : Rational(0);
  }
  Int kernel_rank_at(int p) const {
    const auto* c = find(p);
    return c ? c->kernel_rank : Int(0);
  }
  Int total_rank() const {
    Int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
  }
  Rational total_degree() const {
    Rational d = 0;
    for (const auto& c : components) d += c.degree;
    return d;
  }

  // merge duplicate p levels, drop rank-zero summands, sort by decreasing p
  void canonicalize() {
    std::map<int, HodgeComponent> by_p;
    for (const auto& c : components) {
      auto [it, fresh] = by_p.try_emplace(c.p, c);
      if (!fresh) {
        it->second.rank += c.rank;
        it->second.degree += c.degree;
        it->second.kernel_rank += c.kernel_rank;
      }
    }
    components.clear();
    for (auto it = by_p.rbegin(); it != by_p.rend(); ++it)
      if (it->second.rank != 0) components.push_back(it->second);
  }

  friend bool operator==(const GradedHiggsBundle&, const GradedHiggsBundle&) = default;
};

// Report-valued validation; empty means well formed.  Checks bidegrees,
// ordering, kernel bounds, the denominator restriction on degrees, the forced
// full kernel at the lowest level, and the self-duality symmetry when claimed.
inline std::vector<std::string> validate(const GradedHiggsBundle& e) {
  std::vector<std::string> issues;
  auto flag = [&issues](std::string s) { issues.push_back(std::move(s)); };

  if (e.weight < 0) flag("weight is negative");
  if (e.base.genus < 0) flag("genus is negative");
  if (e.base.punctures < 0) flag("puncture count is negative");

  int prev_p = -1;
  bool ordered = true;
  for (std::size_t i = 0; i < e.components.size(); ++i) {
    const auto& c = e.components[i];
    std::string tag = "component (" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
    if (c.p < 0 || c.q < 0) flag(tag + ": negative bidegree");
    if (c.p + c.q != e.weight) flag(tag + ": p+q differs from the weight");
    if (c.rank < 0) flag(tag + ": negative rank");
    if (c.kernel_rank < 0 || c.kernel_rank > c.rank) flag(tag + ": kernel rank outside [0, rank]");
    if (c.degree.den() != 1 && c.degree.den() != 2)
      flag(tag + ": degree denominator must be 1 or 2");
    if (i > 0 && c.p >= prev_p) ordered = false;
    prev_p = c.p;
  }
  if (!ordered) flag("components are not in strictly decreasing p order");

  if (!e.components.empty()) {
    const auto& lowest = e.components.back();
    // ordered or not, take the true minimum
    const HodgeComponent* min_c = &lowest;
    for (const auto& c : e.components)
      if (c.p < min_c->p) min_c = &c;
    if (min_c->kernel_rank != min_c->rank)
      flag("lowest component (p=" + std::to_string(min_c->p) +
           ") must have full kernel, nothing lies below it");
  }

  if (e.self_dual) {
    for (const auto& c : e.components) {
      const auto* dual_c = e.find(c.q);
      Int dual_rank = dual_c ? dual_c->rank : Int(0);
      Rational dual_deg = dual_c ? dual_c->degree : Rational(0);
      if (c.rank != dual_rank)
        flag("self-duality broken: rank at (" + std::to_string(c.p) + "," + std::to_string(c.q) +
             ") differs from rank at (" + std::to_string(c.q) + "," + std::to_string(c.p) + ")");
      if (c.degree != -dual_deg)
        flag("self-duality broken: degree at (" + std::to_string(c.p) + "," +
             std::to_string(c.q) + ") is not minus the degree at (" + std::to_string(c.q) + "," +
             std::to_string(c.p) + ")");
    }
  }
  return issues;
}

inline bool is_valid(const GradedHiggsBundle& e) { return validate(e).empty(); }

}  // namespace higgs
