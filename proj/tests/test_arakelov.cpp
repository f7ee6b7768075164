#include "catch_amalgamated.hpp"

#include <random>

#include "higgs/arakelov.hpp"
#include "higgs/structure.hpp"

using namespace higgs;

namespace {

GradedHiggsBundle pure(int width, int weight, BaseCurve base, long long urank = 1) {
  return build_pure_component(width, weight, base, Int(urank));
}

// shift the degree at level nu by delta and fix the mirror level to keep the
// bundle self-dual
GradedHiggsBundle perturbed(GradedHiggsBundle e, int nu, const Rational& delta) {
  int p = e.weight - nu;
  for (auto& c : e.components) {
    if (c.p == p) c.degree += delta;
    if (c.p == nu && nu != p) c.degree -= delta;
  }
  return e;
}

}  // namespace

TEST_CASE("per level degree bounds on a pure model", "[arakelov]") {
  GradedHiggsBundle e = pure(3, 3, {2, 0});
  auto lb = level_bound(e, 0);
  CHECK(lb.lhs == Rational(3));
  CHECK(lb.bound == Rational(3));  // 3/2 * 1 * 2
  CHECK(lb.slack == Rational(0));
  lb = level_bound(e, 1);
  CHECK(lb.lhs == Rational(1));
  CHECK(lb.bound == Rational(1));
  CHECK(lb.slack == Rational(0));

  GradedHiggsBundle f = pure(1, 1, {0, 4});
  lb = level_bound(f, 0);
  CHECK(lb.lhs == Rational(1));
  CHECK(lb.bound == Rational(1));

  CHECK_THROWS_AS(level_bound(e, 2), LevelOutOfRange);
  CHECK_THROWS_AS(level_bound(e, -1), LevelOutOfRange);
}

TEST_CASE("kernels shrink the bound", "[arakelov]") {
  GradedHiggsBundle e = pure(3, 3, {2, 0});
  e.components[0].kernel_rank = 1;
  auto lb = level_bound(e, 0);
  CHECK(lb.bound == Rational(0));
  CHECK(lb.slack == Rational(-3));
}

TEST_CASE("middle level of even weight is bounded by zero", "[arakelov]") {
  GradedHiggsBundle e = pure(2, 2, {2, 0});
  auto lb = level_bound(e, 1);
  CHECK(lb.lhs == Rational(0));
  CHECK(lb.bound == Rational(0));
  CHECK(lb.slack == Rational(0));
}

TEST_CASE("audit of a pure model is strictly maximal with zero slack", "[arakelov]") {
  GradedHiggsBundle e = pure(3, 3, {2, 0});
  AuditReport r = audit(e);
  CHECK(r.verdict == Verdict::StrictlyMaximal);
  CHECK(r.per_level_equality);
  CHECK(r.total_equality);
  CHECK(r.kernel_vanishing);
  CHECK(r.within_bounds);
  CHECK(r.positivity_ok);
  REQUIRE(r.first_active_level.has_value());
  CHECK(*r.first_active_level == 0);
  REQUIRE(r.levels.size() == 2);
  for (const auto& lb : r.levels) CHECK(lb.slack == Rational(0));
  CHECK(r.total_lhs == Rational(4));
  CHECK(r.total_bound == Rational(4));
  CHECK(r.witnesses.empty());
}

TEST_CASE("audit flags a degree drop as not maximal with witnesses", "[arakelov]") {
  GradedHiggsBundle e = perturbed(pure(3, 3, {2, 0}), 0, Rational(-1));
  REQUIRE(is_valid(e));
  AuditReport r = audit(e);
  CHECK(r.verdict == Verdict::NotMaximal);
  CHECK_FALSE(r.per_level_equality);
  CHECK_FALSE(r.total_equality);
  CHECK(r.within_bounds);  // below the bound is fine, just not maximal
  CHECK(r.witnesses == std::vector<int>{0});
}

TEST_CASE("audit flags a degree excess as not maximal and out of bounds", "[arakelov]") {
  GradedHiggsBundle e = perturbed(pure(3, 3, {2, 0}), 1, Rational(1));
  REQUIRE(is_valid(e));
  AuditReport r = audit(e);
  CHECK(r.verdict == Verdict::NotMaximal);
  CHECK_FALSE(r.within_bounds);
  CHECK(r.witnesses == std::vector<int>{1});
}

TEST_CASE("unitary bundles audit as zero Higgs", "[arakelov]") {
  WidthDecomposition d;
  d.weight = 2;
  d.multiplicities[0] = 2;
  GradedHiggsBundle e = assemble(d, {2, 0});
  AuditReport r = audit(e);
  CHECK(r.verdict == Verdict::ZeroHiggs);
  CHECK_FALSE(r.first_active_level.has_value());
  CHECK(r.positivity_ok);
  CHECK(r.witnesses.empty());
}

TEST_CASE("zero Higgs wins even over a degenerate base", "[arakelov]") {
  GradedHiggsBundle e;
  e.weight = 1;
  e.base = {0, 0};
  e.self_dual = true;
  e.components = {{1, 0, 1, Rational(0), 1}, {0, 1, 1, Rational(0), 1}};
  REQUIRE(is_valid(e));
  CHECK(audit(e).verdict == Verdict::ZeroHiggs);
}

TEST_CASE("nonzero Higgs field over a non-positive base throws", "[arakelov]") {
  GradedHiggsBundle e;
  e.weight = 1;
  e.base = {1, 0};
  e.self_dual = true;
  e.components = {{1, 0, 1, Rational(0), 0}, {0, 1, 1, Rational(0), 1}};
  REQUIRE(is_valid(e));
  CHECK_THROWS_AS(audit(e), PositivityViolation);
}

TEST_CASE("vanishing degree at the first active level is reported in band", "[arakelov]") {
  GradedHiggsBundle e = perturbed(pure(1, 1, {0, 4}), 0, Rational(-1));
  REQUIRE(is_valid(e));
  AuditReport r = audit(e);
  CHECK(r.verdict == Verdict::NotMaximal);
  CHECK_FALSE(r.positivity_ok);
  REQUIRE(r.first_active_level.has_value());
  CHECK(*r.first_active_level == 0);
}

TEST_CASE("audit rejects invalid or non self-dual input", "[arakelov]") {
  GradedHiggsBundle e = pure(3, 3, {2, 0});
  e.self_dual = false;
  CHECK_THROWS_AS(audit(e), ValidationError);

  GradedHiggsBundle bad = pure(3, 3, {2, 0});
  bad.components[0].q = 5;
  CHECK_THROWS_AS(audit(bad), ValidationError);
}

TEST_CASE("compensating levels are recognized as unrealizable", "[arakelov]") {
  GradedHiggsBundle e = perturbed(perturbed(pure(3, 3, {2, 0}), 0, Rational(1)), 1, Rational(-1));
  REQUIRE(is_valid(e));
  AuditReport r = audit(e);
  CHECK(r.verdict == Verdict::NotRealizable);
  CHECK_FALSE(r.per_level_equality);
  CHECK(r.total_equality);
  CHECK(r.witnesses.empty());
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("maximal degrees with a kernel above the middle are unrealizable", "[arakelov]") {
  GradedHiggsBundle e = pure(3, 3, {2, 0});
  e.components[1].kernel_rank = 1;  // p = 2, above the middle
  REQUIRE(is_valid(e));
  AuditReport r = audit(e);
  CHECK(r.verdict == Verdict::NotRealizable);
  CHECK(r.per_level_equality);
  CHECK(r.total_equality);
  CHECK_FALSE(r.kernel_vanishing);
  CHECK_FALSE(r.within_bounds);
}

TEST_CASE("assembled decompositions audit as strictly maximal", "[arakelov][property]") {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<int> weight(1, 6), mult(0, 3);
  int nontrivial = 0;
  for (int trial = 0; trial < 60; ++trial) {
    WidthDecomposition d;
    d.weight = weight(rng);
    bool any_positive_width = false;
    for (int w = d.weight; w >= 0; w -= 2) {
      int m = mult(rng);
      if (m > 0) {
        d.multiplicities[w] = m;
        if (w > 0) any_positive_width = true;
      }
    }
    if (d.multiplicities.empty()) continue;
    GradedHiggsBundle e = assemble(d, {0, 4});
    AuditReport r = audit(e);
    if (!any_positive_width) {
      CHECK(r.verdict == Verdict::ZeroHiggs);
      continue;
    }
    ++nontrivial;
    CHECK(r.verdict == Verdict::StrictlyMaximal);
    CHECK(degree_zero_check(e));
    for (const auto& lb : r.levels) CHECK(lb.slack == Rational(0));
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("slack responds linearly to degree shifts at a single level", "[arakelov][property]") {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> pick_width(1, 5), delta(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    int w = pick_width(rng);
    GradedHiggsBundle base_bundle = pure(w, w, {1, 4});
    AuditReport before = audit(base_bundle);
    int nu = std::uniform_int_distribution<int>(0, (w - 1) / 2)(rng);
    Rational shift(delta(rng));
    AuditReport after = audit(perturbed(base_bundle, nu, -shift));
    REQUIRE(after.levels.size() == before.levels.size());
    // the mirror level w - nu sits below the middle, so only level nu moves
    for (std::size_t i = 0; i < before.levels.size(); ++i) {
      Rational expect = before.levels[i].slack;
      if (static_cast<int>(i) == nu) expect += shift;
      CHECK(after.levels[i].slack == expect);
    }
  }
}
