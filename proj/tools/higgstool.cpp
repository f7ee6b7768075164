// Task runner for the graded Higgs bundle toolkit.  Reads one JSON task
// document, executes its command, renders the report as text or JSON.
// Exit codes: 0 success, 2 malformed input, 3 negative mathematical verdict.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "higgs/arakelov.hpp"
#include "higgs/constructions.hpp"
#include "higgs/json_io.hpp"
#include "higgs/structure.hpp"

namespace {

using higgs::Int;
using higgs::Json;
using higgs::Rational;

constexpr int kSchemaVersion = 1;

struct TaskDocument {
  std::string command;
  Json payload;
};

struct Outcome {
  Json result;
  std::string text;
  int exit_code = 0;
};

TaskDocument parse_task(const std::string& bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw higgs::ParseError(e.what(), e.byte);
  }
  higgs::check_keys(j, "$", {"schema_version", "command", "payload"}, {"command", "payload"});
  if (j.contains("schema_version") &&
      higgs::parse_int(j.at("schema_version"), "$.schema_version") != kSchemaVersion)
    throw higgs::SchemaError("unsupported schema_version, expected 1", "$.schema_version");
  TaskDocument doc;
  doc.command = higgs::parse_string(j.at("command"), "$.command");
  doc.payload = j.at("payload");
  higgs::expect_object(doc.payload, "$.payload");
  return doc;
}

std::string rep_text(const higgs::RepObject& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  for (const auto& t : x.terms) {
    if (!out.empty()) out += " + ";
    Int count = t.multiplicity * t.unitary_rank;
    if (count != 1) out += count.str() + " x ";
    out += "S^" + std::to_string(t.width);
    if (t.twist != 0) out += "(" + std::to_string(-t.twist) + ")";
  }
  return out;
}

std::string hodge_text(const std::vector<higgs::HodgeNumber>& hs) {
  std::string out;
  for (const auto& h : hs)
    out += "h[" + std::to_string(h.p) + "," + std::to_string(h.q) + "] = " + h.rank.str() + "\n";
  return out;
}

std::string bundle_text(const higgs::GradedHiggsBundle& e) {
  std::ostringstream os;
  os << "weight " << e.weight << " bundle over genus " << e.base.genus << " with "
     << e.base.punctures << " punctures" << (e.self_dual ? ", self-dual" : "") << "\n";
  for (const auto& c : e.components)
    os << "  E[" << c.p << "," << c.q << "]: rank " << c.rank.str() << ", degree "
       << c.degree.str() << ", kernel " << c.kernel_rank.str() << "\n";
  return os.str();
}

Outcome run_audit(const Json& payload) {
  higgs::check_keys(payload, "$.payload", {"bundle"}, {"bundle"});
  auto bundle = higgs::parse_bundle(payload.at("bundle"), "$.payload.bundle");
  higgs::AuditReport r = higgs::audit(bundle);
  Outcome out;
  out.result = higgs::json_of(r);
  std::ostringstream os;
  os << "audit of a weight " << r.weight << " bundle, log-canonical degree "
     << higgs::log_canonical_degree(bundle.base) << "\n";
  for (const auto& lb : r.levels)
    os << "  level " << lb.level << ": degree " << lb.lhs.str() << ", bound " << lb.bound.str()
       << ", slack " << lb.slack.str() << "\n";
  os << "  total degree " << r.total_lhs.str() << ", total bound " << r.total_bound.str() << "\n";
  if (r.first_active_level) os << "  first active level: " << *r.first_active_level << "\n";
  os << "verdict: " << higgs::to_string(r.verdict);
  if (!r.witnesses.empty()) {
    os << " at level";
    if (r.witnesses.size() > 1) os << "s";
    for (int w : r.witnesses) os << " " << w;
  }
  os << "\n";
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  out.text = os.str();
  bool negative = r.verdict == higgs::Verdict::NotMaximal || r.verdict == higgs::Verdict::NotRealizable;
  out.exit_code = negative ? 3 : 0;
  return out;
}

Outcome run_decompose(const Json& payload) {
  higgs::check_keys(payload, "$.payload", {"weight", "hodge_numbers"}, {"weight", "hodge_numbers"});
  int weight = higgs::parse_nonneg_int(payload.at("weight"), "$.payload.weight");
  const Json& arr = payload.at("hodge_numbers");
  if (!arr.is_array())
    throw higgs::SchemaError("expected an array at $.payload.hodge_numbers", "$.payload.hodge_numbers");
  std::vector<Int> h;
  for (std::size_t i = 0; i < arr.size(); ++i)
    h.push_back(higgs::parse_bigint(arr[i], "$.payload.hodge_numbers[" + std::to_string(i) + "]"));
  auto d = higgs::width_multiplicities_from_hodge_numbers(weight, h);
  Outcome out;
  out.result = higgs::json_of(d);
  std::ostringstream os;
  os << "weight " << d.weight << " decomposition: " << rep_text(higgs::rep_from_decomposition(d))
     << "\n";
  out.text = os.str();
  return out;
}

Outcome run_build(const Json& payload) {
  higgs::check_keys(payload, "$.payload",
                    {"weight", "base", "width", "unitary_rank", "multiplicities", "unitary_ranks"},
                    {"weight", "base"});
  int weight = higgs::parse_nonneg_int(payload.at("weight"), "$.payload.weight");
  auto base = higgs::parse_base_curve(payload.at("base"), "$.payload.base");
  bool pure = payload.contains("width");
  bool assembled = payload.contains("multiplicities");
  if (pure == assembled)
    throw higgs::SchemaError("provide exactly one of \"width\" or \"multiplicities\"", "$.payload");

  higgs::GradedHiggsBundle e;
  if (pure) {
    int width = higgs::parse_nonneg_int(payload.at("width"), "$.payload.width");
    Int urank = payload.contains("unitary_rank")
                    ? higgs::parse_bigint(payload.at("unitary_rank"), "$.payload.unitary_rank")
                    : Int(1);
    e = higgs::build_pure_component(width, weight, base, urank);
  } else {
    if (payload.contains("unitary_rank"))
      throw higgs::SchemaError("\"unitary_rank\" belongs to the pure form, use \"unitary_ranks\"",
                               "$.payload.unitary_rank");
    auto parse_width_map = [](const Json& j, const std::string& path) {
      higgs::expect_object(j, path);
      std::map<int, Int> m;
      for (const auto& [key, value] : j.items()) {
        std::size_t pos = 0;
        int w = 0;
        try {
          w = std::stoi(key, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != key.size() || w < 0)
          throw higgs::SchemaError("width keys must be non-negative integers, got \"" + key + "\"",
                                   path + "." + key);
        m[w] = higgs::parse_bigint(value, path + "." + key);
      }
      return m;
    };
    higgs::WidthDecomposition d;
    d.weight = weight;
    d.multiplicities = parse_width_map(payload.at("multiplicities"), "$.payload.multiplicities");
    std::map<int, Int> uranks;
    if (payload.contains("unitary_ranks"))
      uranks = parse_width_map(payload.at("unitary_ranks"), "$.payload.unitary_ranks");
    e = higgs::assemble(d, base, uranks);
  }
  Outcome out;
  out.result = higgs::json_of(e);
  out.text = bundle_text(e);
  return out;
}

Outcome run_cg(const Json& payload) {
  higgs::check_keys(payload, "$.payload", {"a", "b"}, {"a", "b"});
  int a = higgs::parse_nonneg_int(payload.at("a"), "$.payload.a");
  int b = higgs::parse_nonneg_int(payload.at("b"), "$.payload.b");
  auto x = higgs::clebsch_gordan(a, b);
  Outcome out;
  out.result = higgs::json_of(x);
  out.text = "S^" + std::to_string(a) + " x S^" + std::to_string(b) + " = " + rep_text(x) + "\n";
  return out;
}

Outcome run_tensorpower(const Json& payload) {
  higgs::check_keys(payload, "$.payload", {"n"}, {"n"});
  int n = higgs::parse_nonneg_int(payload.at("n"), "$.payload.n");
  auto x = higgs::tensor_power_decompose(n);
  Outcome out;
  out.result = higgs::json_of(x);
  out.text = rep_text(x) + "\n";
  return out;
}

Outcome run_tracepoly(const Json& payload) {
  higgs::check_keys(payload, "$.payload", {"n"}, {"n"});
  int n = higgs::parse_nonneg_int(payload.at("n"), "$.payload.n");
  auto p = higgs::trace_polynomial(n);
  Outcome out;
  Json res = Json::object();
  res["n"] = n;
  res["coefficients"] = higgs::json_of(p);
  out.result = std::move(res);
  out.text = higgs::json_of(p).dump() + "\n";
  return out;
}

Outcome run_borcea(const Json& payload) {
  higgs::check_keys(payload, "$.payload", {"n"}, {"n"});
  int n = higgs::parse_nonneg_int(payload.at("n"), "$.payload.n");
  auto b = higgs::borcea_vhs(n);
  auto hs = higgs::hodge_numbers(b.anti_invariant, n);
  Outcome out;
  Json res = higgs::json_of(b);
  res["hodge_numbers"] = higgs::json_of(hs);
  out.result = std::move(res);
  out.text = "anti-invariant part: " + rep_text(b.anti_invariant) + "\ninvariant part: " +
             b.invariant_note + "\n" + hodge_text(hs);
  return out;
}

Outcome run_kummer(const Json& payload) {
  higgs::check_keys(payload, "$.payload", {"d", "case"}, {"d", "case"});
  int d = higgs::parse_nonneg_int(payload.at("d"), "$.payload.d");
  std::string label = higgs::parse_string(payload.at("case"), "$.payload.case");
  auto k = higgs::kummer_table(d, label);
  Outcome out;
  out.result = higgs::json_of(k);
  out.text = "case " + k.case_label + ", field degree " + std::to_string(k.d) + ", m = " +
             std::to_string(k.m) + "\nfiber dimension " + k.fiber_dimension.str() +
             "\nendomorphisms: " + k.endomorphisms + "\n";
  return out;
}

Outcome run_feasibility(const Json& payload) {
  higgs::check_keys(payload, "$.payload", {"weight", "base", "h_top", "strictly_maximal"},
                    {"weight", "base", "h_top", "strictly_maximal"});
  int weight = higgs::parse_nonneg_int(payload.at("weight"), "$.payload.weight");
  auto base = higgs::parse_base_curve(payload.at("base"), "$.payload.base");
  Int h_top = higgs::parse_bigint(payload.at("h_top"), "$.payload.h_top");
  bool sm = higgs::parse_bool(payload.at("strictly_maximal"), "$.payload.strictly_maximal");
  auto v = higgs::feasibility(weight, base, h_top, sm);
  Outcome out;
  out.result = higgs::json_of(v);
  std::string head = higgs::to_string(v.status);
  if (!v.rule.empty()) head += " (" + v.rule + ")";
  out.text = head + ": " + v.detail + "\n";
  out.exit_code = v.status == higgs::Feasibility::Infeasible ? 3 : 0;
  return out;
}

Outcome run_bidegree_check(const Json& payload) {
  higgs::check_keys(payload, "$.payload", {"object", "m", "m_prime"}, {"object", "m", "m_prime"});
  auto x = higgs::parse_rep_object(payload.at("object"), "$.payload.object");
  int m = higgs::parse_nonneg_int(payload.at("m"), "$.payload.m");
  int mp = higgs::parse_nonneg_int(payload.at("m_prime"), "$.payload.m_prime");
  auto r = higgs::invariant_bidegree_check(x, m, mp);
  Outcome out;
  out.result = higgs::json_of(r);
  std::ostringstream os;
  os << "tensor weight " << r.tensor_weight << ", width-zero multiplicity "
     << r.width_zero_multiplicity.str() << "\n";
  os << (r.concentrated ? "all width-zero summands sit at the middle bidegree ("
                        : "width-zero summands stray from the middle bidegree (")
     << r.expected_p.str() << "," << r.expected_p.str() << ")\n";
  out.text = os.str();
  out.exit_code = r.concentrated ? 0 : 3;
  return out;
}

Outcome dispatch(const TaskDocument& doc) {
  if (doc.command == "audit") return run_audit(doc.payload);
  if (doc.command == "decompose") return run_decompose(doc.payload);
  if (doc.command == "build") return run_build(doc.payload);
  if (doc.command == "cg") return run_cg(doc.payload);
  if (doc.command == "tensorpower") return run_tensorpower(doc.payload);
  if (doc.command == "tracepoly") return run_tracepoly(doc.payload);
  if (doc.command == "borcea") return run_borcea(doc.payload);
  if (doc.command == "kummer") return run_kummer(doc.payload);
  if (doc.command == "feasibility") return run_feasibility(doc.payload);
  if (doc.command == "bidegree-check") return run_bidegree_check(doc.payload);
  throw higgs::SchemaError("unknown command \"" + doc.command + "\"", "$.command");
}

struct Rendered {
  std::string output;
  int exit_code;
};

// execute one parsed task and render the report, either as the json envelope
// or as plain text
Rendered run(const TaskDocument& doc, bool json_output) {
  Outcome out = dispatch(doc);
  if (json_output) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["command"] = doc.command;
    j["result"] = std::move(out.result);
    return {j.dump(2) + "\n", out.exit_code};
  }
  return {std::move(out.text), out.exit_code};
}

Json error_json(const std::string& kind, const std::string& message) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  Json e = Json::object();
  e["kind"] = kind;
  e["message"] = message;
  j["error"] = std::move(e);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical toolkit for graded Higgs bundles over punctured curves"};
  std::string input = "-";
  bool json_mode = false;
  app.add_option("input,--input", input, "task document path, - for stdin");
  app.add_flag("--json", json_mode, "machine-readable output");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string bytes;
  if (input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    bytes = ss.str();
  } else {
    std::ifstream f(input, std::ios::binary);
    if (!f) {
      Json j = error_json("IOError", "cannot open " + input);
      if (json_mode)
        std::cout << j.dump(2) << "\n";
      else
        std::cout << "error: cannot open " << input << "\n";
      return 2;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    bytes = ss.str();
  }

  try {
    TaskDocument doc = parse_task(bytes);
    Rendered r = run(doc, json_mode);
    std::cout << r.output;
    return r.exit_code;
  } catch (const higgs::ParseError& e) {
    Json j = error_json("ParseError", e.what());
    j["error"]["byte_offset"] = static_cast<std::int64_t>(e.byte_offset);
    if (json_mode)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << "error: ParseError at byte " << e.byte_offset << ": " << e.what() << "\n";
    return 2;
  } catch (const higgs::SchemaError& e) {
    Json j = error_json("SchemaError", e.what());
    j["error"]["path"] = e.path;
    if (json_mode)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << "error: SchemaError at " << e.path << ": " << e.what() << "\n";
    return 2;
  } catch (const higgs::InputError& e) {
    Json j = error_json(e.kind(), e.what());
    if (json_mode)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const higgs::MathError& e) {
    Json j = error_json(e.kind(), e.what());
    if (json_mode)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << e.kind() << ": " << e.what() << "\n";
    return 3;
  }
}
