#pragma once

#include <string>

#include "higgs/errors.hpp"
#include "higgs/rational.hpp"

namespace higgs {

// smooth projective curve of the given genus with a finite set of punctures
struct BaseCurve {
  int genus = 0;
  int punctures = 0;

  friend bool operator==(const BaseCurve&, const BaseCurve&) = default;
};

// degree of the log canonical sheaf, 2g - 2 + s
inline int log_canonical_degree(const BaseCurve& b) {
  return 2 * b.genus - 2 + b.punctures;
}

struct ThetaCharacteristic {
  Rational degree;
  // a square root of the log canonical sheaf exists as a line bundle only
  // for an even puncture count; callers decide whether to insist
  bool parity_ok = false;
};

inline ThetaCharacteristic theta_characteristic_degree(const BaseCurve& b) {
  int d = log_canonical_degree(b);
  if (d <= 0)
    throw NonPositiveBase("log-canonical degree " + std::to_string(d) +
                          " is not positive for genus " + std::to_string(b.genus) + ", " +
                          std::to_string(b.punctures) + " punctures");
  return ThetaCharacteristic{Rational(d, 2), b.punctures % 2 == 0};
}

}  // namespace higgs
