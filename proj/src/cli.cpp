#include "hyperinv/cli.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>

namespace hyperinv::cli {

using codec::encode;
using codec::field;
using codec::int_field;

namespace {

std::string string_field(const json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j[key];
  if (!v.is_string()) throw ParseError(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

ModelVariant variant_field(const json& p) {
  const std::string v = string_field(p, "variant", "derived");
  if (v == "derived") return ModelVariant::Derived;
  if (v == "printed") return ModelVariant::Printed;
  throw ParseError("'variant' must be \"derived\" or \"printed\"");
}

std::vector<Rational> rational_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(codec::decode_rational(x));
  return out;
}

json cmd_invariants(const json& p, const LocusTable&) {
  return std::visit(
      [](const auto& f) {
        using R = std::decay_t<decltype(f)>;
        CovariantCatalogue<typename R::Ring> cat(f);
        return json{{"degree", f.degree()},
                    {"invariants", codec::encode_invariants(cat.invariant_set())},
                    {"absolute", codec::encode_absolute(absolute_invariants(cat))}};
      },
      codec::decode_form(p));
}

json cmd_classify(const json& p, const LocusTable&) {
  const int g = int_field(p, "genus");
  return std::visit([g](const auto& f) { return codec::encode_point(classify_point(f, g)); }, codec::decode_form(p));
}

json cmd_vanishing(const json& p, const LocusTable&) {
  const int g = int_field(p, "genus");
  return std::visit(
      [g](const auto& f) {
        json profile = json::object();
        bool all = true;
        for (const auto& [name, zero] : vanishing_profile(f, g)) {
          profile[std::string(invariant_key(name))] = zero;
          all = all && zero;
        }
        return json{{"genus", g}, {"vanishes", profile}, {"all_vanish", all}};
      },
      codec::decode_form(p));
}

json cmd_dihedral(const json& p, const LocusTable&) {
  const auto nf = codec::decode_normal_form(p);
  const auto values = dihedral_invariants(nf);
  json u = json::array();
  for (const auto& x : values) u.push_back(encode(x));
  json out = {{"u", u}};
  if (nf.kase == 1 && nf.n == 2) {
    const Rational residual = extra_involution_residual(nf.kase, nf.n, values);
    out["extra_involution"] = is_zero(residual);
    out["extra_involution_residual"] = encode(residual);
  }
  return out;
}

json cmd_reconstruct(const json& p, const LocusTable&) {
  const auto u = rational_list(p, "u");
  const int kase = int_field(p, "case");
  const int n = int_field(p, "n");
  const int g = int_field(p, "genus");
  const std::string field_name = string_field(p, "field", "Q");
  if (field_name == "Qi_sqrt3") {
    json fiber = json::array();
    for (const auto& nf : dihedral_fiber(u, kase, n, g)) {
      json coeffs = json::array();
      for (const auto& c : nf.a) coeffs.push_back(encode(c));
      fiber.push_back(coeffs);
    }
    return {{"case", kase}, {"n", n}, {"genus", g}, {"fiber", fiber}};
  }
  if (field_name != "Q") throw ParseError("'field' must be \"Q\" or \"Qi_sqrt3\"");
  const Reconstruction r = reconstruct_from_u(u, kase, n, g);
  if (r.form) return codec::encode_normal_form(*r.form);
  return {{"case", kase},
          {"n", n},
          {"genus", g},
          {"obstruction", encode(*r.obstruction)},
          {"variable", r.obstruction_variable}};
}

json encode_locus_value(const LocusValue& v) {
  json out = {{"branch", v.branch}};
  if (v.point) out["point"] = codec::encode_point(*v.point);
  if (v.relation) out["relation"] = encode(*v.relation);
  if (v.transcribed) {
    json t = json::array();
    for (const auto& x : *v.transcribed) t.push_back(encode(x));
    out["printed"] = t;
  }
  return out;
}

json cmd_model(const json& p, const LocusTable& table) {
  const int g = int_field(p, "genus");
  if (p.contains("lambdas")) {
    std::vector<Cyclo> lambdas;
    const json& l = field(p, "lambdas");
    if (!l.is_array()) throw ParseError("'lambdas' must be an array");
    for (const auto& x : l) lambdas.push_back(codec::decode_cyclo(x));
    return {{"form", codec::encode_form(table2_model(g, lambdas), g)}};
  }
  const ModelVariant v = variant_field(p);
  if (!p.contains("mu")) {
    return {{"form", codec::encode_form(rational_model<QPoly>(g, QPoly::variable(), v), g)}};
  }
  const Rational mu = codec::decode_rational(p["mu"]);
  json out = {{"form", codec::encode_form(rational_model<Rational>(g, mu, v), g)}};
  if (p.contains("locus") && p["locus"].is_boolean() && p["locus"].get<bool>()) {
    out["locus"] = encode_locus_value(locus_parametrization(table, g, mu));
  }
  return out;
}

json cmd_recover(const json& p, const LocusTable& table) {
  const int g = int_field(p, "genus");
  ModuliPoint<Rational> point;
  if (p.contains("form")) {
    const auto form = codec::decode_form(field(p, "form"));
    const auto* f = std::get_if<BinaryForm<Rational>>(&form);
    if (!f) throw ParseError("'form' must be over Q");
    point = classify_point(*f, g);
  } else {
    point = codec::decode_point(p, g);
  }
  const MuRecovery r = recover_mu(table, g, point);
  json out = {{"genus", g}, {"point", codec::encode_point(point)}};
  if (r.obstruction) {
    out["obstruction"] = encode(*r.obstruction);
    return out;
  }
  json mus = json::array();
  json models = json::array();
  for (const auto& mu : r.mu) {
    mus.push_back(encode(mu));
    models.push_back(codec::encode_form(rational_model<Rational>(g, mu), g));
  }
  out["mu"] = mus;
  out["models"] = models;
  return out;
}

json cmd_verify_locus(const json& p, const LocusTable& table) {
  const int g = int_field(p, "genus");
  json checks = json::array();
  bool all = true;
  for (const auto& c : verify_locus(table, g)) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
    all = all && (c.passed || c.skipped);
  }
  return {{"genus", g}, {"checks", checks}, {"all_passed", all}};
}

json cmd_catalogue(const json& p, const LocusTable&) {
  const int g = int_field(p, "genus");
  if (!p.contains("group")) {
    const Lemma41Branch b = lemma41_branch(g);
    return {{"genus", g}, {"v_cap_w", b.v_cap_w}, {"group", b.group}, {"residue", b.residue}, {"delta", b.delta}};
  }
  const std::string group = string_field(p, "group", "");
  const int n = p.contains("n") ? int_field(p, "n") : 0;
  const Table1Row r = table1_catalogue(group, n, g);
  return {{"row", r.row},
          {"group", r.group},
          {"reduced_group", r.reduced_group},
          {"delta", r.delta},
          {"signature", r.signature},
          {"involutions", r.involutions}};
}

using Handler = std::function<json(const json&, const LocusTable&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"invariants", cmd_invariants}, {"classify", cmd_classify},         {"vanishing", cmd_vanishing},
      {"dihedral", cmd_dihedral},     {"reconstruct", cmd_reconstruct},   {"model", cmd_model},
      {"recover", cmd_recover},       {"verify-locus", cmd_verify_locus}, {"catalogue", cmd_catalogue},
  };
  return h;
}

json error_body(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

}  // namespace

Outcome run(const json& request, const LocusTable& table) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  json report = {{"status", "ok"}};
  try {
    if (!request.is_object()) throw ParseError("a request must be a JSON object");
    const std::string command = string_field(request, "command", "");
    report["command"] = command;
    auto it = handlers().find(command);
    if (it == handlers().end()) throw ParseError("unknown command '" + command + "'");
    static const json empty = json::object();
    const json& payload = request.contains("payload") ? request["payload"] : empty;
    if (!payload.is_object()) throw ParseError("'payload' must be a JSON object");
    report["result"] = it->second(payload, table);
  } catch (const ParseError& e) {
    report["status"] = "error";
    report["error"] = error_body("parse_error", e.what());
    out.exit_code = kMalformed;
  } catch (const json::exception& e) {
    report["status"] = "error";
    report["error"] = error_body("parse_error", e.what());
    out.exit_code = kMalformed;
  } catch (const DomainError& e) {
    report["status"] = "error";
    report["error"] = error_body(e.kind(), e.what());
    out.exit_code = kDomainError;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report["provenance"] = {{"kernel_version", kKernelVersion},
                          {"fixture_version", table.version},
                          {"wall_time_ms", static_cast<long>(ms)}};
  out.report = std::move(report);
  return out;
}

Outcome run_text(const std::string& text, const LocusTable& table, bool batch) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    json report = {{"status", "error"},
                   {"error", {{"kind", "parse_error"}, {"message", e.what()}, {"position", e.byte}}},
                   {"provenance", {{"kernel_version", kKernelVersion}, {"fixture_version", table.version}}}};
    return {report, kMalformed};
  }
  if (!batch) return run(parsed, table);
  if (!parsed.is_array()) {
    json report = {{"status", "error"},
                   {"error", error_body("parse_error", "--batch expects a JSON array of requests")},
                   {"provenance", {{"kernel_version", kKernelVersion}, {"fixture_version", table.version}}}};
    return {report, kMalformed};
  }
  std::vector<std::future<Outcome>> pending;
  for (const auto& request : parsed) {
    pending.push_back(std::async(std::launch::async, [&table, request] { return run(request, table); }));
  }
  Outcome out{json::array(), kOk};
  for (auto& f : pending) {
    Outcome one = f.get();
    out.exit_code = std::max(out.exit_code, one.exit_code);
    out.report.push_back(std::move(one.report));
  }
  return out;
}

std::string summary(const json& report) {
  if (report.is_array()) {
    std::string s;
    for (const auto& r : report) s += summary(r);
    return s;
  }
  std::string line = report.value("command", std::string("request")) + ": " + report.value("status", "");
  if (report.contains("error")) {
    line += " [" + report["error"].value("kind", "") + "] " + report["error"].value("message", "");
  } else if (report.contains("result")) {
    const json& r = report["result"];
    if (r.contains("all_passed")) {
      int passed = 0;
      for (const auto& c : r["checks"]) passed += c["passed"].get<bool>() ? 1 : 0;
      line += ", " + std::to_string(passed) + "/" + std::to_string(r["checks"].size()) + " checks passed";
    } else if (r.contains("p")) {
      line += ", p = " + r["p"].dump();
    } else if (r.contains("u")) {
      line += ", u = " + r["u"].dump();
    } else if (r.contains("mu")) {
      line += ", mu = " + r["mu"].dump();
    }
  }
  return line + "\n";
}

}  // namespace hyperinv::cli
