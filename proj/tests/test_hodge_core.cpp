#include "catch_amalgamated.hpp"

#include <random>

#include "higgs/bundle.hpp"
#include "higgs/curve.hpp"
#include "higgs/rational.hpp"
#include "higgs/rep.hpp"

using namespace higgs;

TEST_CASE("rationals normalize to lowest terms with positive denominator", "[rational]") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4).num() == -3);
  CHECK(Rational(6, -4).num() == -3);
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(0, 7).num() == 0);
  CHECK_THROWS_AS(Rational(1, 0), ValidationError);
}

TEST_CASE("rational arithmetic and order", "[rational]") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
  CHECK(Rational(3, 4) / Rational(9, 2) == Rational(1, 6));
  CHECK_THROWS_AS(Rational(1) / Rational(0), ValidationError);
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1, 2) > Rational(-2, 3));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(7, 2).sign() == 1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(5).is_integer());
  CHECK_FALSE(Rational(5, 2).is_integer());
}

TEST_CASE("rational field laws on random input", "[rational][property]") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<long long> num(-1'000'000'000'000LL, 1'000'000'000'000LL);
  std::uniform_int_distribution<long long> den(1, 1'000'000'000LL);
  for (int i = 0; i < 300; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    if (a.sign() != 0) CHECK(a / a == Rational(1));
  }
}

TEST_CASE("rational text round-trip is exact", "[rational]") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long long> num(-1'000'000'000'000LL, 1'000'000'000'000LL);
  std::uniform_int_distribution<long long> den(1, 1'000'000'000LL);
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng));
    Rational back = Rational::from_string(a.str());
    CHECK(back == a);
    CHECK(back.str() == a.str());
  }
  CHECK(Rational::from_string("3/2").num() == 3);
  CHECK(Rational::from_string("-7").den() == 1);
  CHECK_THROWS_AS(Rational::from_string("x/2"), ValidationError);
}

TEST_CASE("log canonical degree of the punctured base", "[curve]") {
  CHECK(log_canonical_degree({0, 4}) == 2);
  CHECK(log_canonical_degree({1, 0}) == 0);
  CHECK(log_canonical_degree({2, 0}) == 2);
  CHECK(log_canonical_degree({0, 0}) == -2);
  CHECK(log_canonical_degree({3, 6}) == 10);
}

TEST_CASE("theta characteristic degree and parity", "[curve]") {
  auto t = theta_characteristic_degree({0, 4});
  CHECK(t.degree == Rational(1));
  CHECK(t.parity_ok);

  t = theta_characteristic_degree({1, 1});
  CHECK(t.degree == Rational(1, 2));
  CHECK_FALSE(t.parity_ok);

  t = theta_characteristic_degree({2, 0});
  CHECK(t.degree == Rational(1));
  CHECK(t.parity_ok);

  CHECK_THROWS_AS(theta_characteristic_degree({1, 0}), NonPositiveBase);
  CHECK_THROWS_AS(theta_characteristic_degree({0, 1}), NonPositiveBase);
  CHECK_THROWS_AS(theta_characteristic_degree({0, 0}), NonPositiveBase);
}

namespace {

GradedHiggsBundle weight_one_model() {
  GradedHiggsBundle e;
  e.weight = 1;
  e.base = {0, 4};
  e.self_dual = true;
  e.components = {
      {1, 0, 1, Rational(1, 2), 0},
      {0, 1, 1, Rational(-1, 2), 1},
  };
  return e;
}

}  // namespace

TEST_CASE("bundle validation accepts a symmetric weight-one model", "[bundle]") {
  CHECK(validate(weight_one_model()).empty());
}

TEST_CASE("bundle validation flags structural defects one by one", "[bundle]") {
  SECTION("bidegree off the weight diagonal") {
    auto e = weight_one_model();
    e.components[0].q = 1;
    CHECK_FALSE(validate(e).empty());
  }
  SECTION("kernel rank above rank") {
    auto e = weight_one_model();
    e.components[0].kernel_rank = 2;
    CHECK_FALSE(validate(e).empty());
  }
  SECTION("degree denominator outside 1 and 2") {
    auto e = weight_one_model();
    e.components[0].degree = Rational(1, 4);
    e.components[1].degree = Rational(-1, 4);
    CHECK_FALSE(validate(e).empty());
  }
  SECTION("lowest level must carry a full kernel") {
    auto e = weight_one_model();
    e.components[1].kernel_rank = 0;
    CHECK_FALSE(validate(e).empty());
  }
  SECTION("self-dual rank symmetry") {
    auto e = weight_one_model();
    e.components[0].rank = 2;
    CHECK_FALSE(validate(e).empty());
  }
  SECTION("self-dual degree antisymmetry") {
    auto e = weight_one_model();
    e.components[1].degree = Rational(1, 2);
    CHECK_FALSE(validate(e).empty());
  }
  SECTION("break of the self-dual checks is tolerated without the flag") {
    auto e = weight_one_model();
    e.self_dual = false;
    e.components[0].rank = 2;
    e.components[0].kernel_rank = 0;
    CHECK(validate(e).empty());
  }
  SECTION("duplicate levels are rejected") {
    auto e = weight_one_model();
    e.components.push_back(e.components[0]);
    CHECK_FALSE(validate(e).empty());
  }
  SECTION("middle level of even weight must have degree zero when self-dual") {
    GradedHiggsBundle e;
    e.weight = 2;
    e.base = {2, 0};
    e.self_dual = true;
    e.components = {{1, 1, 2, Rational(1), 2}};
    CHECK_FALSE(validate(e).empty());
    e.components[0].degree = Rational(0);
    CHECK(validate(e).empty());
  }
}

TEST_CASE("bundle canonicalization merges levels and drops empty ones", "[bundle]") {
  GradedHiggsBundle e;
  e.weight = 2;
  e.base = {2, 0};
  e.components = {
      {0, 2, 1, Rational(-2), 1},
      {2, 0, 1, Rational(1), 0},
      {2, 0, 1, Rational(1), 0},
      {1, 1, 0, Rational(0), 0},
  };
  e.canonicalize();
  REQUIRE(e.components.size() == 2);
  CHECK(e.components[0].p == 2);
  CHECK(e.components[0].rank == 2);
  CHECK(e.components[0].degree == Rational(2));
  CHECK(e.components[1].p == 0);
}

TEST_CASE("rep objects canonicalize by merging equal width and twist", "[rep]") {
  RepObject x;
  x.terms = {
      {2, -1, 2, 3},
      {0, 0, 1, 1},
      {2, -1, 1, 1},
      {4, 0, 0, 5},
  };
  RepObject c = canonicalized(x);
  REQUIRE(c.terms.size() == 2);
  CHECK(c.terms[0].width == 2);
  CHECK(c.terms[0].twist == -1);
  CHECK(c.terms[0].multiplicity == 7);
  CHECK(c.terms[0].unitary_rank == 1);
  CHECK(c.terms[1].width == 0);
  CHECK(dimension(c) == 3 * 7 + 1);
}

TEST_CASE("rep canonical order is width descending then twist ascending", "[rep]") {
  RepObject x;
  x.terms = {{1, 5, 1, 1}, {3, 0, 1, 1}, {1, -2, 1, 1}, {3, -4, 1, 1}};
  RepObject c = canonicalized(x);
  REQUIRE(c.terms.size() == 4);
  CHECK(c.terms[0].width == 3);
  CHECK(c.terms[0].twist == -4);
  CHECK(c.terms[1].width == 3);
  CHECK(c.terms[1].twist == 0);
  CHECK(c.terms[2].width == 1);
  CHECK(c.terms[2].twist == -2);
  CHECK(c.terms[3].width == 1);
  CHECK(c.terms[3].twist == 5);
}

TEST_CASE("rep canonicalization is idempotent on random objects", "[rep][property]") {
  std::mt19937_64 rng(3141);
  std::uniform_int_distribution<int> width(0, 6), twist(-3, 3), mult(0, 4), urank(1, 3), len(0, 8);
  for (int trial = 0; trial < 100; ++trial) {
    RepObject x;
    int n = len(rng);
    for (int i = 0; i < n; ++i)
      x.terms.push_back(TwistedRep{width(rng), twist(rng), mult(rng), urank(rng)});
    RepObject once = canonicalized(x);
    CHECK(canonicalized(once) == once);
    CHECK(dimension(once) == dimension(x));
  }
}

TEST_CASE("rep validation inside canonicalization", "[rep]") {
  RepObject bad_width{{TwistedRep{-1, 0, 1, 1}}};
  CHECK_THROWS_AS(canonicalized(bad_width), ValidationError);
  RepObject bad_mult{{TwistedRep{1, 0, -1, 1}}};
  CHECK_THROWS_AS(canonicalized(bad_mult), ValidationError);
  RepObject bad_urank{{TwistedRep{1, 0, 1, 0}}};
  CHECK_THROWS_AS(canonicalized(bad_urank), ValidationError);
}

TEST_CASE("homogeneous weight detection", "[rep]") {
  RepObject x{{TwistedRep{3, 0, 1, 1}, TwistedRep{1, 1, 2, 1}}};
  CHECK(homogeneous_weight(x) == 3);
  RepObject mixed{{TwistedRep{3, 0, 1, 1}, TwistedRep{1, 0, 1, 1}}};
  CHECK_FALSE(homogeneous_weight(mixed).has_value());
  CHECK_FALSE(homogeneous_weight(RepObject{}).has_value());
}
