#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "higgs/errors.hpp"
#include "higgs/rational.hpp"

namespace higgs {

// S^width(L)(-twist) tensored with a unitary piece of the given rank, taken
// with a multiplicity.  Twisting by -t shifts every bidegree up by (t,t), so
// the term occupies (mu+twist, width-mu+twist) for mu = 0..width and carries
// weight width + 2*twist.
struct TwistedRep {
  int width = 0;
  int twist = 0;
  Int multiplicity = 1;
  Int unitary_rank = 1;

  friend bool operator==(const TwistedRep&, const TwistedRep&) = default;
};

// Formal direct sum of twisted symmetric powers.
struct RepObject {
  std::vector<TwistedRep> terms;

  friend bool operator==(const RepObject&, const RepObject&) = default;
};

// Canonical form: merge equal (width, twist) pairs, folding multiplicity and
// unitary rank into a single multiplicity; drop empty terms; sort by
// decreasing width, then increasing twist.
inline RepObject canonicalized(const RepObject& x) {
  std::map<std::pair<int, int>, Int> acc;
  for (const auto& t : x.terms) {
    if (t.width < 0) throw ValidationError("negative width in rep object");
    if (t.multiplicity < 0) throw ValidationError("negative multiplicity in rep object");
    if (t.unitary_rank < 1) throw ValidationError("unitary rank must be at least 1");
    acc[{-t.width, t.twist}] += t.multiplicity * t.unitary_rank;
  }
  RepObject out;
  for (const auto& [key, mult] : acc)
    if (mult != 0) out.terms.push_back(TwistedRep{-key.first, key.second, mult, 1});
  return out;
}

inline Int dimension(const RepObject& x) {
  Int d = 0;
  for (const auto& t : x.terms) d += Int(t.width + 1) * t.multiplicity * t.unitary_rank;
  return d;
}

// Common weight of all terms, if there is one.  Empty objects have no weight.
inline std::optional<int> homogeneous_weight(const RepObject& x) {
  std::optional<int> w;
  for (const auto& t : x.terms) {
    int tw = t.width + 2 * t.twist;
    if (!w)
      w = tw;
    else if (*w != tw)
      return std::nullopt;
  }
  return w;
}

}  // namespace higgs
