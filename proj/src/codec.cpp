#include "hyperinv/codec.hpp"

#include <fstream>

namespace hyperinv::codec {

namespace {

std::string describe(const json& j) {
  std::string s = j.dump();
  if (s.size() > 60) s = s.substr(0, 57) + "...";
  return s;
}

template <class R>
BinaryForm<R> form_from(const json& coeffs, int degree, R (*decode)(const json&)) {
  std::vector<R> c;
  for (const auto& x : coeffs) c.push_back(decode(x));
  try {
    return BinaryForm<R>(degree, std::move(c));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

AbsoluteName absolute_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("'") + key + "' must be a string");
  auto n = absolute_from_key(v.get<std::string>());
  if (!n) throw ParseError("unknown absolute invariant '" + v.get<std::string>() + "'");
  return *n;
}

std::string string_or_empty(const json& j, const char* key) {
  return j.contains(key) && j[key].is_string() ? j[key].get<std::string>() : std::string();
}

}  // namespace

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j[key];
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

json encode(const Rational& q) { return q.to_string(); }

json encode(const Cyclo& x) {
  return json::array({x[0].to_string(), x[1].to_string(), x[2].to_string(), x[3].to_string()});
}

json encode(const QFunc& f) { return {{"num", encode(f.num())}, {"den", encode(f.den())}}; }

Rational decode_rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string, got " + describe(j));
}

Cyclo decode_cyclo(const json& j) {
  if (j.is_array() && j.size() == 4) {
    return Cyclo(decode_rational(j[0]), decode_rational(j[1]), decode_rational(j[2]), decode_rational(j[3]));
  }
  return Cyclo(decode_rational(j));
}

QPoly decode_qpoly(const json& j) {
  if (!j.is_array()) return QPoly(decode_rational(j));
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(decode_rational(x));
  return QPoly(std::move(c));
}

QFunc decode_qfunc(const json& j) {
  try {
    return QFunc(decode_qpoly(field(j, "num")), decode_qpoly(field(j, "den")));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

AnyForm decode_form(const json& j) {
  if (!j.is_object()) throw ParseError("a form must be a JSON object");
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw ParseError("'coeffs' must be an array");
  int degree = static_cast<int>(coeffs.size()) - 1;
  if (j.contains("degree")) {
    degree = int_field(j, "degree");
  } else if (j.contains("genus")) {
    degree = 2 * int_field(j, "genus") + 2;
  }
  if (j.contains("genus") && degree != 2 * int_field(j, "genus") + 2) {
    throw ParseError("degree " + std::to_string(degree) + " does not match genus " +
                     std::to_string(int_field(j, "genus")));
  }
  // A curve given by fewer coefficients than its degree has a root at infinity.
  json padded = coeffs;
  while (static_cast<int>(padded.size()) < degree + 1) padded.push_back("0");
  const std::string ring = j.contains("ring") ? field(j, "ring").get<std::string>() : "Q";
  if (ring == "Q") return form_from<Rational>(padded, degree, &decode_rational);
  if (ring == "Qi_sqrt3") return form_from<Cyclo>(padded, degree, &decode_cyclo);
  if (ring == "Q[mu]") return form_from<QPoly>(padded, degree, &decode_qpoly);
  throw ParseError("unknown ring '" + ring + "' (expected Q, Qi_sqrt3 or Q[mu])");
}

template <class R>
json encode_form(const BinaryForm<R>& f, std::optional<int> genus) {
  json coeffs = json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(encode(c));
  const char* ring = std::is_same_v<R, Rational> ? "Q" : (std::is_same_v<R, Cyclo> ? "Qi_sqrt3" : "Q[mu]");
  json out = {{"degree", f.degree()}, {"ring", ring}, {"coeffs", coeffs}};
  if (genus) out["genus"] = *genus;
  return out;
}
template json encode_form(const BinaryForm<Rational>&, std::optional<int>);
template json encode_form(const BinaryForm<Cyclo>&, std::optional<int>);
template json encode_form(const BinaryForm<QPoly>&, std::optional<int>);

ModuliPoint<Rational> decode_point(const json& j, int genus) {
  ModuliPoint<Rational> p;
  p.genus = genus;
  const json& values = j.is_object() ? field(j, "p") : j;
  if (!values.is_array()) throw ParseError("'p' must be an array of rationals");
  for (const auto& v : values) p.values.push_back(decode_rational(v));
  if (p.values.empty() || p.values.size() > 2) throw ParseError("'p' must have one or two coordinates");
  return p;
}

json encode_normal_form(const CyclicNormalForm<Rational>& nf) {
  json coeffs = json::array();
  for (const auto& c : nf.a) coeffs.push_back(encode(c));
  return {{"case", nf.kase}, {"n", nf.n}, {"genus", nf.genus}, {"coeffs", coeffs}};
}

CyclicNormalForm<Rational> decode_normal_form(const json& j) {
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw ParseError("'coeffs' must be an array");
  std::vector<Rational> a;
  for (const auto& c : coeffs) a.push_back(decode_rational(c));
  return make_normal_form(int_field(j, "case"), int_field(j, "n"), int_field(j, "genus"), std::move(a));
}

json encode_locus_table(const LocusTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) {
    json je = {{"genus", e.genus}};
    if (e.constant) {
      je["constant"] = {{"name", "v1"}, {"transcribed", encode(*e.constant)}, {"status", e.constant_status}};
    }
    json comps = json::array();
    for (const auto& c : e.components) {
      json jc = {{"name", absolute_key(c.name)}, {"transcribed", encode(c.transcribed)}, {"status", c.status}};
      if (c.recomputed) jc["recomputed"] = encode(*c.recomputed);
      comps.push_back(jc);
    }
    je["components"] = comps;
    json specials = json::array();
    for (const auto& s : e.specials) {
      json js = {{"mu", encode(s.mu)}, {"name", absolute_key(s.name)}, {"transcribed", encode(s.transcribed)},
                 {"status", s.status}};
      if (s.recomputed) js["recomputed"] = encode(*s.recomputed);
      specials.push_back(js);
    }
    je["specials"] = specials;
    json degenerate = json::array();
    for (const auto& d : e.degenerate) {
      json jd = {{"name", absolute_key(d.name)},
                 {"condition_transcribed", encode(d.condition_transcribed)},
                 {"condition_status", d.condition_status},
                 {"status", d.status}};
      if (d.condition_recomputed) jd["condition_recomputed"] = encode(*d.condition_recomputed);
      if (d.relation_transcribed) jd["relation_transcribed"] = encode(*d.relation_transcribed);
      if (d.relation_recomputed) jd["relation_recomputed"] = encode(*d.relation_recomputed);
      if (d.value_recomputed) jd["value_recomputed"] = encode(*d.value_recomputed);
      if (!d.text.empty()) jd["text"] = d.text;
      degenerate.push_back(jd);
    }
    je["degenerate"] = degenerate;
    entries.push_back(je);
  }
  return {{"version", t.version}, {"entries", entries}};
}

LocusTable decode_locus_table(const json& j) {
  LocusTable t;
  const json& version = field(j, "version");
  if (!version.is_string()) throw ParseError("'version' must be a string");
  t.version = version.get<std::string>();
  for (const auto& je : field(j, "entries")) {
    LocusEntry e;
    e.genus = int_field(je, "genus");
    if (je.contains("constant")) {
      e.constant = decode_rational(field(je["constant"], "transcribed"));
      e.constant_status = string_or_empty(je["constant"], "status");
    }
    for (const auto& jc : field(je, "components")) {
      LocusComponent c{absolute_field(jc, "name"), decode_qfunc(field(jc, "transcribed")), {},
                       string_or_empty(jc, "status")};
      if (jc.contains("recomputed")) c.recomputed = decode_qfunc(jc["recomputed"]);
      e.components.push_back(std::move(c));
    }
    for (const auto& js : field(je, "specials")) {
      LocusSpecial s{decode_rational(field(js, "mu")), absolute_field(js, "name"),
                     decode_rational(field(js, "transcribed")), {}, string_or_empty(js, "status")};
      if (js.contains("recomputed")) s.recomputed = decode_rational(js["recomputed"]);
      e.specials.push_back(std::move(s));
    }
    for (const auto& jd : field(je, "degenerate")) {
      LocusDegenerate d;
      d.name = absolute_field(jd, "name");
      d.condition_transcribed = decode_qpoly(field(jd, "condition_transcribed"));
      d.condition_status = string_or_empty(jd, "condition_status");
      d.status = string_or_empty(jd, "status");
      d.text = string_or_empty(jd, "text");
      if (jd.contains("condition_recomputed")) d.condition_recomputed = decode_qpoly(jd["condition_recomputed"]);
      if (jd.contains("relation_transcribed")) d.relation_transcribed = decode_qpoly(jd["relation_transcribed"]);
      if (jd.contains("relation_recomputed")) d.relation_recomputed = decode_qpoly(jd["relation_recomputed"]);
      if (jd.contains("value_recomputed")) d.value_recomputed = decode_qfunc(jd["value_recomputed"]);
      e.degenerate.push_back(std::move(d));
    }
    t.entries.push_back(std::move(e));
  }
  return t;
}

LocusTable load_locus_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open locus table '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("locus table '" + path + "': " + e.what());
  }
  return decode_locus_table(j);
}

}  // namespace hyperinv::codec
