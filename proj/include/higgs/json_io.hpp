#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "higgs/arakelov.hpp"
#include "higgs/bundle.hpp"
#include "higgs/constructions.hpp"
#include "higgs/curve.hpp"
#include "higgs/errors.hpp"
#include "higgs/rational.hpp"
#include "higgs/rep.hpp"
#include "higgs/sl2.hpp"
#include "higgs/structure.hpp"

namespace higgs {

// insertion order preserved, so rendered documents are byte stable
using Json = nlohmann::ordered_json;

// integers ride as JSON numbers while they fit 64 bits, as decimal strings
// beyond that; parsers accept both spellings
inline Json json_of(const Int& v) {
  if (fits_int64(v)) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

inline Json json_of(const Rational& r) {
  Json j = Json::object();
  j["num"] = json_of(r.num());
  j["den"] = json_of(r.den());
  return j;
}

inline Json json_of(const BaseCurve& b) {
  Json j = Json::object();
  j["genus"] = b.genus;
  j["punctures"] = b.punctures;
  return j;
}

inline Json json_of(const HodgeComponent& c) {
  Json j = Json::object();
  j["p"] = c.p;
  j["q"] = c.q;
  j["rank"] = json_of(c.rank);
  j["degree"] = json_of(c.degree);
  j["kernel_rank"] = json_of(c.kernel_rank);
  return j;
}

inline Json json_of(const GradedHiggsBundle& e) {
  Json j = Json::object();
  j["weight"] = e.weight;
  j["base"] = json_of(e.base);
  j["self_dual"] = e.self_dual;
  j["components"] = Json::array();
  for (const auto& c : e.components) j["components"].push_back(json_of(c));
  return j;
}

inline Json json_of(const TwistedRep& t) {
  Json j = Json::object();
  j["width"] = t.width;
  j["twist"] = t.twist;
  j["multiplicity"] = json_of(t.multiplicity);
  j["unitary_rank"] = json_of(t.unitary_rank);
  return j;
}

inline Json json_of(const RepObject& x) {
  Json j = Json::object();
  j["terms"] = Json::array();
  for (const auto& t : x.terms) j["terms"].push_back(json_of(t));
  return j;
}

inline Json json_of(const std::vector<HodgeNumber>& hs) {
  Json j = Json::array();
  for (const auto& h : hs) {
    Json one = Json::object();
    one["p"] = h.p;
    one["q"] = h.q;
    one["rank"] = json_of(h.rank);
    j.push_back(std::move(one));
  }
  return j;
}

inline Json json_of(const LevelBound& lb) {
  Json j = Json::object();
  j["level"] = lb.level;
  j["lhs"] = json_of(lb.lhs);
  j["bound"] = json_of(lb.bound);
  j["slack"] = json_of(lb.slack);
  return j;
}

inline Json json_of(const AuditReport& r) {
  Json j = Json::object();
  j["weight"] = r.weight;
  j["levels"] = Json::array();
  for (const auto& lb : r.levels) j["levels"].push_back(json_of(lb));
  j["total_lhs"] = json_of(r.total_lhs);
  j["total_bound"] = json_of(r.total_bound);
  j["first_active_level"] = r.first_active_level ? Json(*r.first_active_level) : Json(nullptr);
  j["per_level_equality"] = r.per_level_equality;
  j["total_equality"] = r.total_equality;
  j["kernel_vanishing"] = r.kernel_vanishing;
  j["within_bounds"] = r.within_bounds;
  j["positivity_ok"] = r.positivity_ok;
  j["verdict"] = to_string(r.verdict);
  j["witnesses"] = r.witnesses;
  j["note"] = r.note;
  return j;
}

inline Json json_of(const WidthDecomposition& d) {
  Json j = Json::object();
  j["weight"] = d.weight;
  Json m = Json::object();
  for (const auto& [w, mult] : d.multiplicities) m[std::to_string(w)] = json_of(mult);
  j["multiplicities"] = std::move(m);
  return j;
}

inline Json json_of(const SlopeComparison& s) {
  Json j = Json::object();
  j["sub_slope"] = json_of(s.sub_slope);
  j["ambient_slope"] = json_of(s.ambient_slope);
  j["relation"] = s.relation;
  j["semistable_ok"] = s.semistable_ok;
  return j;
}

inline Json json_of(const BidegreeReport& r) {
  Json j = Json::object();
  j["declared_weight"] = r.declared_weight;
  j["tensor_weight"] = r.tensor_weight;
  j["width_zero_multiplicity"] = json_of(r.width_zero_multiplicity);
  j["expected_bidegree"] = Json::array({json_of(r.expected_p), json_of(r.expected_p)});
  j["concentrated"] = r.concentrated;
  j["offending_twists"] = r.offending_twists;
  return j;
}

inline Json json_of(const FeasibilityVerdict& v) {
  Json j = Json::object();
  j["status"] = to_string(v.status);
  j["rule"] = v.rule;
  j["detail"] = v.detail;
  return j;
}

inline Json json_of(const KummerDescriptor& k) {
  Json j = Json::object();
  j["case"] = k.case_label;
  j["d"] = k.d;
  j["m"] = k.m;
  j["fiber_dimension"] = json_of(k.fiber_dimension);
  j["endomorphisms"] = k.endomorphisms;
  return j;
}

inline Json json_of(const BorceaDescriptor& b) {
  Json j = Json::object();
  j["n"] = b.n;
  j["anti_invariant"] = json_of(b.anti_invariant);
  j["invariant_note"] = b.invariant_note;
  return j;
}

inline Json json_of(const TracePolynomial& p) {
  Json j = Json::array();
  for (const auto& c : p.coefficients) j.push_back(json_of(c));
  return j;
}

// ---- strict parsing ------------------------------------------------------

inline void expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError("expected an object at " + path, path);
}

// unknown keys are rejected so typos in Hodge data cannot pass silently
inline void check_keys(const Json& j, const std::string& path,
                       std::initializer_list<const char*> allowed,
                       std::initializer_list<const char*> required) {
  expect_object(j, path);
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!ok.count(key)) throw SchemaError("unknown field \"" + key + "\" at " + path, path + "." + key);
  }
  for (const char* req : required)
    if (!j.contains(req)) throw SchemaError("missing field \"" + std::string(req) + "\" at " + path, path);
}

inline Int parse_bigint(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw SchemaError("not an integer literal at " + path, path);
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw SchemaError("not an integer literal at " + path, path);
    return s[0] == '+' ? Int(s.substr(1)) : Int(s);  // the bignum parser dislikes a plus sign
  }
  throw SchemaError("expected an integer (number or decimal string) at " + path, path);
}

inline int parse_int(const Json& j, const std::string& path) {
  Int v = parse_bigint(j, path);
  if (v < INT32_MIN || v > INT32_MAX) throw SchemaError("integer out of range at " + path, path);
  return v.convert_to<int>();
}

inline int parse_nonneg_int(const Json& j, const std::string& path) {
  int v = parse_int(j, path);
  if (v < 0) throw SchemaError("expected a non-negative integer at " + path, path);
  return v;
}

inline bool parse_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError("expected a boolean at " + path, path);
  return j.get<bool>();
}

inline std::string parse_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError("expected a string at " + path, path);
  return j.get<std::string>();
}

inline Rational parse_rational(const Json& j, const std::string& path) {
  check_keys(j, path, {"num", "den"}, {"num"});
  Int num = parse_bigint(j.at("num"), path + ".num");
  Int den = j.contains("den") ? parse_bigint(j.at("den"), path + ".den") : Int(1);
  if (den == 0) throw SchemaError("zero denominator at " + path, path);
  return Rational(std::move(num), std::move(den));
}

inline BaseCurve parse_base_curve(const Json& j, const std::string& path) {
  check_keys(j, path, {"genus", "punctures"}, {"genus", "punctures"});
  BaseCurve b;
  b.genus = parse_nonneg_int(j.at("genus"), path + ".genus");
  b.punctures = parse_nonneg_int(j.at("punctures"), path + ".punctures");
  return b;
}

inline HodgeComponent parse_component(const Json& j, const std::string& path) {
  check_keys(j, path, {"p", "q", "rank", "degree", "kernel_rank"},
             {"p", "q", "rank", "degree", "kernel_rank"});
  HodgeComponent c;
  c.p = parse_int(j.at("p"), path + ".p");
  c.q = parse_int(j.at("q"), path + ".q");
  c.rank = parse_bigint(j.at("rank"), path + ".rank");
  c.degree = parse_rational(j.at("degree"), path + ".degree");
  c.kernel_rank = parse_bigint(j.at("kernel_rank"), path + ".kernel_rank");
  return c;
}

inline GradedHiggsBundle parse_bundle(const Json& j, const std::string& path) {
  check_keys(j, path, {"weight", "base", "self_dual", "components"},
             {"weight", "base", "self_dual", "components"});
  GradedHiggsBundle e;
  e.weight = parse_int(j.at("weight"), path + ".weight");
  e.base = parse_base_curve(j.at("base"), path + ".base");
  e.self_dual = parse_bool(j.at("self_dual"), path + ".self_dual");
  const Json& comps = j.at("components");
  if (!comps.is_array()) throw SchemaError("expected an array at " + path + ".components", path + ".components");
  for (std::size_t i = 0; i < comps.size(); ++i)
    e.components.push_back(parse_component(comps[i], path + ".components[" + std::to_string(i) + "]"));
  return e;
}

inline TwistedRep parse_rep_term(const Json& j, const std::string& path) {
  check_keys(j, path, {"width", "twist", "multiplicity", "unitary_rank"}, {"width"});
  TwistedRep t;
  t.width = parse_nonneg_int(j.at("width"), path + ".width");
  t.twist = j.contains("twist") ? parse_int(j.at("twist"), path + ".twist") : 0;
  t.multiplicity =
      j.contains("multiplicity") ? parse_bigint(j.at("multiplicity"), path + ".multiplicity") : Int(1);
  t.unitary_rank =
      j.contains("unitary_rank") ? parse_bigint(j.at("unitary_rank"), path + ".unitary_rank") : Int(1);
  return t;
}

inline RepObject parse_rep_object(const Json& j, const std::string& path) {
  check_keys(j, path, {"terms"}, {"terms"});
  const Json& terms = j.at("terms");
  if (!terms.is_array()) throw SchemaError("expected an array at " + path + ".terms", path + ".terms");
  RepObject x;
  for (std::size_t i = 0; i < terms.size(); ++i)
    x.terms.push_back(parse_rep_term(terms[i], path + ".terms[" + std::to_string(i) + "]"));
  return x;
}

}  // namespace higgs
