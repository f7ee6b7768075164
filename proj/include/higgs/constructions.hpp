#pragma once

#include <string>

#include "higgs/errors.hpp"
#include "higgs/rep.hpp"
#include "higgs/sl2.hpp"

namespace higgs {

// Names one family from the catalogue in this header: the n-th power of the
// elliptic modular family with deck involutions, the weight-n involution
// quotient, or a Kummer-type abelian family over a degree-d totally real
// field in quaternionic case i, ii.a or ii.b.
struct FamilyDescriptor {
  enum class Kind { Borcea, InvolutionQuotient, KummerShimura };
  Kind kind = Kind::Borcea;
  int n = 0;               // power for Borcea and InvolutionQuotient
  int d = 0;               // field degree for KummerShimura
  std::string case_label;  // KummerShimura case

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

inline void validate(const FamilyDescriptor& f) {
  switch (f.kind) {
    case FamilyDescriptor::Kind::Borcea:
    case FamilyDescriptor::Kind::InvolutionQuotient:
      if (f.n < 1) throw ValidationError("power must be at least 1");
      return;
    case FamilyDescriptor::Kind::KummerShimura:
      if (f.d < 1) throw ValidationError("field degree must be at least 1");
      if (f.case_label == "i") {
        if (f.d % 2 == 0)
          throw CaseParityError("case i needs odd field degree, got " + std::to_string(f.d));
        if (f.d == 1) throw CaseParityError("case i needs field degree above 1");
      } else if (f.case_label == "ii.a") {
        if (f.d % 2 == 0)
          throw CaseParityError("case ii.a needs odd field degree, got " + std::to_string(f.d));
      } else if (f.case_label == "ii.b") {
        if (f.d % 2 == 1)
          throw CaseParityError("case ii.b needs even field degree, got " + std::to_string(f.d));
      } else {
        throw ValidationError("unknown case label: " + f.case_label + " (expected i, ii.a or ii.b)");
      }
      return;
  }
}

// Numerical shadow of the n-fold self-product of a maximal elliptic family:
// the part anti-invariant under the deck involutions, as a weight-n object.
struct BorceaDescriptor {
  int n = 0;
  RepObject anti_invariant;
  std::string invariant_note;

  friend bool operator==(const BorceaDescriptor&, const BorceaDescriptor&) = default;
};

inline BorceaDescriptor borcea_vhs(int n) {
  validate(FamilyDescriptor{FamilyDescriptor::Kind::Borcea, n, 0, ""});
  BorceaDescriptor b;
  b.n = n;
  b.anti_invariant = retwisted_to_weight(tensor_power_decompose(n), n);
  b.invariant_note = n % 2 == 1 ? "zero"
                                : "unitary at (" + std::to_string(n / 2) + "," +
                                      std::to_string(n / 2) + ")";
  return b;
}

// Involution quotient in weight k: odd k dies, even k keeps the input and
// gains a trivial unitary summand at the middle bidegree.  The summand is
// recorded with multiplicity 1; its true rank comes from resolution geometry
// and is outside the numerical bookkeeping here.
inline RepObject involution_quotient_vhs(int weight_k, const RepObject& input) {
  if (weight_k < 0) throw ValidationError("weight is negative");
  if (weight_k % 2 == 1) return RepObject{};
  RepObject out = canonicalized(input);
  if (!out.terms.empty()) {
    auto w = homogeneous_weight(out);
    if (!w || *w != weight_k)
      throw WeightMismatch("input must be homogeneous of weight " + std::to_string(weight_k));
  }
  out.terms.push_back(TwistedRep{0, weight_k / 2, 1, 1});
  return canonicalized(out);
}

// One line of the classification of maximal abelian-variety families.  The
// input quaternion algebra lives over a totally real field of degree d; the
// minimal matrix embedding of its corestriction has size 2^m with m = d
// (case i, d odd and above 1) or m = d+1 (case ii.a for d odd, ii.b for d
// even), and the case fixes fibre dimension and endomorphism algebra.
struct KummerDescriptor {
  std::string case_label;
  int d = 0;
  int m = 0;  // generic Mumford-Tate rank parameter for the case
  Int fiber_dimension;
  std::string endomorphisms;

  friend bool operator==(const KummerDescriptor&, const KummerDescriptor&) = default;
};

inline Int pow2(int e) {
  Int v = 1;
  return v << e;
}

inline KummerDescriptor kummer_table(int d, const std::string& case_label) {
  validate(FamilyDescriptor{FamilyDescriptor::Kind::KummerShimura, 0, d, case_label});
  KummerDescriptor k;
  k.case_label = case_label;
  k.d = d;
  if (case_label == "i") {
    k.m = d;
    k.fiber_dimension = pow2(d - 1);
    k.endomorphisms = "Q";
  } else if (case_label == "ii.a") {
    k.m = d + 1;
    k.fiber_dimension = pow2(d);
    k.endomorphisms = "totally indefinite quaternion algebra over Q";
  } else {
    k.m = d + 1;
    k.fiber_dimension = pow2(d);
    k.endomorphisms = "totally definite quaternion algebra over Q";
  }
  return k;
}

}  // namespace higgs
