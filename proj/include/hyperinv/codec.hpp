#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "hyperinv/a4.hpp"
#include "hyperinv/cyclic.hpp"

namespace hyperinv::codec {

using json = nlohmann::json;

// Scalars: Rational as "p/q" or "p"; Q(i, sqrt 3) as [c0, c1, c2, c3];
// polynomials as arrays lowest degree first; rational functions as {num, den}.
json encode(const Rational& q);
json encode(const Cyclo& x);
json encode(const QFunc& f);
template <class R>
json encode(const UniPoly<R>& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(encode(c));
  return out;
}

Rational decode_rational(const json& j);
Cyclo decode_cyclo(const json& j);
QPoly decode_qpoly(const json& j);
QFunc decode_qfunc(const json& j);

/// Form over one of the supported coefficient rings.
using AnyForm = std::variant<BinaryForm<Rational>, BinaryForm<Cyclo>, BinaryForm<QPoly>>;

/// {"genus"?, "degree", "ring": "Q" | "Qi_sqrt3" | "Q[mu]", "coeffs": [...]}.
/// "degree" may be omitted when "genus" is given (degree 2g+2) or inferred
/// from the number of coefficients.
AnyForm decode_form(const json& j);
template <class R>
json encode_form(const BinaryForm<R>& f, std::optional<int> genus = std::nullopt);

template <class K>
json encode_point(const ModuliPoint<K>& p) {
  json names = json::array();
  json values = json::array();
  for (auto n : p.names) names.push_back(std::string(absolute_key(n)));
  for (const auto& v : p.values) values.push_back(encode(v));
  return {{"genus", p.genus}, {"case", p.case_tag}, {"names", names}, {"p", values}};
}
ModuliPoint<Rational> decode_point(const json& j, int genus);

template <class R>
json encode_invariants(const InvariantSet<R>& s) {
  json out = json::object();
  for (std::size_t k = 0; k < kInvariantNames.size(); ++k) {
    out[std::string(invariant_key(kInvariantNames[k]))] = s[k] ? encode(*s[k]) : json(nullptr);
  }
  return out;
}
template <class K>
json encode_absolute(const AbsoluteSet<K>& s) {
  json out = json::object();
  for (std::size_t k = 0; k < kAbsoluteNames.size(); ++k) {
    out[std::string(absolute_key(kAbsoluteNames[k]))] = s[k] ? encode(*s[k]) : json(nullptr);
  }
  return out;
}

json encode_normal_form(const CyclicNormalForm<Rational>& nf);
CyclicNormalForm<Rational> decode_normal_form(const json& j);

json encode_locus_table(const LocusTable& t);
LocusTable decode_locus_table(const json& j);
LocusTable load_locus_table(const std::string& path);

/// Typed field access that turns schema violations into ParseError.
const json& field(const json& j, const char* key);
int int_field(const json& j, const char* key);

}  // namespace hyperinv::codec
