#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "higgs/errors.hpp"
#include "higgs/rational.hpp"
#include "higgs/rep.hpp"

namespace higgs {

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;  // exact at every step
  }
  return c;
}

// S^a tensor S^b = S^{a+b} + S^{a+b-2} + ... + S^{|a-b|}, untwisted
inline RepObject clebsch_gordan(int a, int b) {
  if (a < 0 || b < 0) throw ValidationError("symmetric power index must be non-negative");
  RepObject out;
  for (int w = a + b; w >= (a > b ? a - b : b - a); w -= 2)
    out.terms.push_back(TwistedRep{w, 0, 1, 1});
  return out;
}

inline RepObject sym_power(int n) {
  if (n < 0) throw ValidationError("symmetric power index must be non-negative");
  return RepObject{{TwistedRep{n, 0, 1, 1}}};
}

// (width, twist) goes to (width, -twist-width): bidegrees are negated
inline RepObject dual(const RepObject& x) {
  RepObject out;
  for (const auto& t : canonicalized(x).terms)
    out.terms.push_back(TwistedRep{t.width, -t.twist - t.width, t.multiplicity, t.unitary_rank});
  return canonicalized(out);
}

// Bilinear product.  Each step of width a+b-2m in the product of widths a and
// b picks up an extra twist of m on top of the sum of the factors' twists,
// which keeps the weight additive.
inline RepObject tensor(const RepObject& x, const RepObject& y) {
  RepObject out;
  for (const auto& s : canonicalized(x).terms) {
    for (const auto& t : canonicalized(y).terms) {
      Int mult = s.multiplicity * s.unitary_rank * t.multiplicity * t.unitary_rank;
      int lo = s.width > t.width ? s.width - t.width : t.width - s.width;
      for (int w = s.width + t.width; w >= lo; w -= 2) {
        int extra = (s.width + t.width - w) / 2;
        out.terms.push_back(TwistedRep{w, s.twist + t.twist + extra, mult, 1});
      }
    }
  }
  return canonicalized(out);
}

// Widths of the n-th tensor power of S^1 with ballot-number multiplicities,
// all twists zero.  Equivalent to iterating tensor(S^1, .) and forgetting the
// twists; the test suite pins that equivalence.
inline RepObject tensor_power_decompose(int n) {
  if (n < 0) throw ValidationError("tensor power index must be non-negative");
  RepObject out;
  for (int j = 0; 2 * j <= n; ++j) {
    Int m = binomial(n, j) - binomial(n, j - 1);
    if (m != 0) out.terms.push_back(TwistedRep{n - 2 * j, 0, m, 1});
  }
  return out;
}

// Reassign twists so every term has the given weight, keeping widths.
inline RepObject retwisted_to_weight(const RepObject& x, int weight) {
  RepObject out;
  for (const auto& t : canonicalized(x).terms) {
    if ((weight - t.width) % 2 != 0)
      throw WeightMismatch("width " + std::to_string(t.width) +
                           " cannot sit in weight " + std::to_string(weight));
    out.terms.push_back(TwistedRep{t.width, (weight - t.width) / 2, t.multiplicity, 1});
  }
  return canonicalized(out);
}

struct HodgeNumber {
  int p = 0;
  int q = 0;
  Int rank = 0;

  friend bool operator==(const HodgeNumber&, const HodgeNumber&) = default;
};

// Hodge numbers of a rep object of the declared weight, decreasing p.
// Twists may push bidegrees negative (duals), so (p,q) are unrestricted ints.
inline std::vector<HodgeNumber> hodge_numbers(const RepObject& x, int declared_weight) {
  std::map<int, Int> by_p;
  for (const auto& t : canonicalized(x).terms) {
    if (t.width + 2 * t.twist != declared_weight)
      throw WeightMismatch("term of width " + std::to_string(t.width) + ", twist " +
                           std::to_string(t.twist) + " has weight " +
                           std::to_string(t.width + 2 * t.twist) + ", declared " +
                           std::to_string(declared_weight));
    for (int mu = 0; mu <= t.width; ++mu) by_p[mu + t.twist] += t.multiplicity;
  }
  std::vector<HodgeNumber> out;
  for (auto it = by_p.rbegin(); it != by_p.rend(); ++it)
    out.push_back(HodgeNumber{it->first, declared_weight - it->first, it->second});
  return out;
}

// Monic integer polynomial, coefficients lowest degree first.
struct TracePolynomial {
  std::vector<Int> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Int operator()(const Int& t) const {
    Int v = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * t + *it;
    return v;
  }

  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;
};

// p_n with tr Sym^n(M) = p_n(tr M) for M in SL_2.  Built by expanding
// (y + 1/y)^n into the basis of symmetric Laurent sums y^m + ... + y^-m and
// peeling from the top: each lower sum is the trace of a lower symmetric
// power, so p_n(t) = t^n minus the peeled multiples of earlier p_j.
inline TracePolynomial trace_polynomial(int n) {
  if (n < 0) throw ValidationError("trace polynomial index must be non-negative");
  std::vector<std::vector<Int>> p(static_cast<std::size_t>(n) + 1);
  p[0] = {Int(1)};
  for (int m = 1; m <= n; ++m) {
    // c[j]: coefficient of y^j in (y + 1/y)^m, for j >= 0
    std::vector<Int> c(static_cast<std::size_t>(m) + 1, Int(0));
    for (int j = m; j >= 0; j -= 2) c[j] = binomial(m, (m - j) / 2);
    // peel multiples e[j] of y^j + y^{j-2} + ... + y^{-j}, top down
    std::vector<Int> e(static_cast<std::size_t>(m) + 1, Int(0));
    for (int j = m; j >= 0; j -= 2) {
      e[j] = c[j];
      for (int i = j; i >= 0; i -= 2) c[i] -= e[j];
    }
    std::vector<Int> poly(static_cast<std::size_t>(m) + 1, Int(0));
    poly[m] = 1;  // e[m] is 1, the peeled remainder gives the lower terms
    for (int j = m - 2; j >= 0; j -= 2)
      for (std::size_t i = 0; i < p[j].size(); ++i) poly[i] -= e[j] * p[j][i];
    p[m] = std::move(poly);
  }
  return TracePolynomial{std::move(p[n])};
}

struct IntegerMatrix2 {
  Int a, b, c, d;  // rows (a b) / (c d)

  IntegerMatrix2(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1) throw ValidationError("matrix determinant must be 1");
  }
  Int trace() const { return a + d; }
};

// Matrix of Sym^n on the monomial basis x^n, x^{n-1}y, ..., y^n, acting by
// x -> ax + cy, y -> bx + dy.  Column mu holds the image of x^{n-mu} y^mu;
// entries are indexed by the y-exponent of the target monomial.
inline std::vector<std::vector<Int>> sym_power_matrix(const IntegerMatrix2& m, int n) {
  if (n < 0) throw ValidationError("symmetric power index must be non-negative");
  std::size_t sz = static_cast<std::size_t>(n) + 1;
  // powers of the two linear images, coefficients by y-exponent
  std::vector<std::vector<Int>> px(sz), py(sz);
  px[0] = {Int(1)};
  py[0] = {Int(1)};
  for (std::size_t i = 1; i < sz; ++i) {
    px[i].assign(i + 1, Int(0));
    py[i].assign(i + 1, Int(0));
    for (std::size_t j = 0; j < i; ++j) {
      px[i][j] += px[i - 1][j] * m.a;
      px[i][j + 1] += px[i - 1][j] * m.c;
      py[i][j] += py[i - 1][j] * m.b;
      py[i][j + 1] += py[i - 1][j] * m.d;
    }
  }
  std::vector<std::vector<Int>> mat(sz, std::vector<Int>(sz, Int(0)));
  for (std::size_t mu = 0; mu < sz; ++mu) {
    const auto& f = px[sz - 1 - mu];
    const auto& g = py[mu];
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) mat[i + j][mu] += f[i] * g[j];
  }
  return mat;
}

// Independent route to tr Sym^n(M): build the matrix and sum the diagonal.
inline Int sym_power_trace_oracle(const IntegerMatrix2& m, int n) {
  auto mat = sym_power_matrix(m, n);
  Int tr = 0;
  for (std::size_t i = 0; i < mat.size(); ++i) tr += mat[i][i];
  return tr;
}

}  // namespace higgs
