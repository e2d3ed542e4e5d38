#include <doctest.h>

#include <fstream>

#include "hyperinv/cli.hpp"
#include "support.hpp"

using namespace testsupport;
using hyperinv::cli::json;

namespace {

const LocusTable& fixture() {
  static const LocusTable t = codec::load_locus_table(HYPERINV_DATA_DIR "/locus_table.json");
  return t;
}

cli::Outcome run(const std::string& command, json payload) {
  return cli::run({{"command", command}, {"payload", std::move(payload)}}, fixture());
}

json without_time(json report) {
  if (report.contains("provenance")) report["provenance"].erase("wall_time_ms");
  return report;
}

}  // namespace

TEST_CASE("shipped fixture equals a fresh recomputation") {
  const LocusTable fresh = recompute_locus_table(transcribed_locus_table());
  CHECK(codec::encode_locus_table(fixture()) == codec::encode_locus_table(fresh));
  CHECK(fixture().version == "1");
}

TEST_CASE("codec round trips") {
  CHECK(codec::decode_rational(codec::encode(Rational(-7, 3))) == Rational(-7, 3));
  CHECK(codec::decode_rational(json(12)) == Rational(12));
  CHECK_THROWS_AS(codec::decode_rational(json(1.5)), ParseError);
  const Cyclo x(Rational(1, 2), 3, Rational(-5, 7), 0);
  CHECK(codec::decode_cyclo(codec::encode(x)) == x);
  const QFunc f(qpoly({1, 2}), qpoly({3, 0, 1}));
  CHECK(codec::decode_qfunc(codec::encode(f)) == f);
  CHECK(codec::decode_locus_table(codec::encode_locus_table(fixture())).entries.size() == 7);

  const auto form = codec::decode_form({{"genus", 2}, {"coeffs", {"1", "0", "0", "0", "0", "0", "1"}}});
  REQUIRE(std::holds_alternative<BinaryForm<Rational>>(form));
  CHECK(std::get<BinaryForm<Rational>>(form).degree() == 6);
  // Fewer coefficients than the degree: the top ones are zero.
  const auto padded = codec::decode_form({{"genus", 4}, {"coeffs", {"0", "-1", "0", "6"}}});
  CHECK(std::get<BinaryForm<Rational>>(padded).degree() == 10);
  CHECK_THROWS_AS(codec::decode_form({{"genus", 2}, {"degree", 8}, {"coeffs", {"1"}}}), ParseError);
  CHECK_THROWS_AS(codec::decode_form({{"ring", "Z"}, {"coeffs", {"1"}}}), ParseError);
  const auto over_mu = codec::decode_form({{"ring", "Q[mu]"}, {"degree", 6}, {"coeffs", {{"0", "1"}, "1"}}});
  CHECK(std::holds_alternative<BinaryForm<QPoly>>(over_mu));
}

TEST_CASE("dihedral command on the genus 5 A4 curve") {
  const auto out = run("dihedral", {{"case", 1}, {"n", 2}, {"genus", 5}, {"coeffs", {"-1", "-33", "2", "-33", "-1"}}});
  CHECK(out.exit_code == 0);
  CHECK(out.report["status"] == "ok");
  CHECK(out.report["result"]["u"] == json({"2", "-66", "-4", "-66", "2"}));
  CHECK(out.report["result"]["extra_involution"] == true);
}

TEST_CASE("invariants on an odd degree form is a domain error") {
  const auto out = run("invariants", {{"degree", 5}, {"coeffs", {"1", "0", "0", "0", "0", "1"}}});
  CHECK(out.exit_code == 1);
  CHECK(out.report["status"] == "error");
  CHECK(out.report["error"]["kind"] == "unsupported_degree");
  CHECK(out.report["error"]["message"].get<std::string>().find("unsupported degree") != std::string::npos);
}

TEST_CASE("invariants report defined and undefined entries") {
  const auto out = run("invariants", {{"degree", 6}, {"coeffs", {"1", "0", "0", "0", "0", "0", "1"}}});
  CHECK(out.exit_code == 0);
  CHECK(out.report["result"]["invariants"]["I2"] == "2");
  CHECK(out.report["result"]["invariants"]["I3"].is_null());
}

TEST_CASE("classify on the genus 4 curve") {
  const auto model = run("model", {{"genus", 4}});
  REQUIRE(model.exit_code == 0);
  const auto out = run("classify", model.report["result"]["form"]);
  // v1 needs an invariant that degree 10 does not have.
  CHECK(out.exit_code == 1);
  CHECK(out.report["error"]["kind"] == "undefined_invariant");
}

TEST_CASE("classify and recover on genus 8") {
  const auto model = run("model", {{"genus", 8}, {"mu", "5"}, {"locus", true}});
  REQUIRE(model.exit_code == 0);
  const json form = model.report["result"]["form"];
  const auto point = run("classify", form);
  REQUIRE(point.exit_code == 0);
  CHECK(point.report["result"]["p"] == model.report["result"]["locus"]["point"]["p"]);
  const auto back = run("recover", {{"genus", 8}, {"p", point.report["result"]["p"]}});
  CHECK(back.exit_code == 0);
  CHECK(back.report["result"]["mu"] == json({"5"}));
  const auto from_form = run("recover", {{"genus", 8}, {"form", form}});
  CHECK(from_form.report["result"]["mu"] == json({"5"}));
}

TEST_CASE("vanishing command") {
  const auto out = run("vanishing", run("model", {{"genus", 7}, {"mu", "2"}}).report["result"]["form"]);
  CHECK(out.exit_code == 0);
  CHECK(out.report["result"]["all_vanish"] == true);
  CHECK(out.report["result"]["vanishes"].size() == 4);
}

TEST_CASE("reconstruct command") {
  const auto out = run("reconstruct", {{"case", 1}, {"n", 2}, {"genus", 5}, {"u", {"2", "-66", "-4", "-66", "2"}}});
  CHECK(out.exit_code == 0);
  CHECK(out.report["result"]["coeffs"].size() == 5);
  const auto fiber =
      run("reconstruct", {{"case", 1}, {"n", 3}, {"genus", 2}, {"u", {"-7"}}, {"field", "Qi_sqrt3"}});
  CHECK(fiber.exit_code == 0);
  const auto zero = run("reconstruct", {{"case", 1}, {"n", 2}, {"genus", 2}, {"u", {"0", "0"}}});
  CHECK(zero.exit_code == 1);
  CHECK(zero.report["error"]["kind"] == "zero_dihedral_invariants");
}

TEST_CASE("verify-locus command") {
  const auto g5 = run("verify-locus", {{"genus", 5}});
  CHECK(g5.exit_code == 0);
  CHECK(g5.report["result"]["all_passed"] == false);
  const auto g8 = run("verify-locus", {{"genus", 8}});
  CHECK(g8.report["result"]["all_passed"] == true);
  const auto g6 = run("verify-locus", {{"genus", 6}});
  CHECK(g6.exit_code == 1);
  CHECK(g6.report["error"]["kind"] == "excluded_genus");
}

TEST_CASE("catalogue command") {
  const auto row = run("catalogue", {{"group", "Z2xA4"}, {"genus", 5}});
  CHECK(row.report["result"]["delta"] == 1);
  const auto branch = run("catalogue", {{"genus", 8}});
  CHECK(branch.report["result"]["group"] == "SL2(3)");
  CHECK(branch.report["result"]["v_cap_w"] == 6);
}

TEST_CASE("malformed input") {
  const auto broken = cli::run_text("{\"command\": ", fixture(), false);
  CHECK(broken.exit_code == 2);
  CHECK(broken.report["error"]["kind"] == "parse_error");
  CHECK(broken.report["error"].contains("position"));
  CHECK(run("nonsense", json::object()).exit_code == 2);
  CHECK(run("classify", {{"genus", "five"}, {"coeffs", {"1"}}}).exit_code == 2);
  CHECK(run("dihedral", {{"case", 1}, {"n", 2}, {"genus", 5}, {"coeffs", {"x"}}}).exit_code == 2);
  CHECK(cli::run(json::array(), fixture()).exit_code == 2);
}

TEST_CASE("batch keeps order and reports the worst exit code") {
  const json requests = {
      {{"command", "catalogue"}, {"payload", {{"genus", 5}}}},
      {{"command", "catalogue"}, {"payload", {{"genus", 6}}}},
      {{"command", "catalogue"}, {"payload", {{"genus", 8}}}},
  };
  const auto out = cli::run_text(requests.dump(), fixture(), true);
  REQUIRE(out.report.is_array());
  REQUIRE(out.report.size() == 3);
  CHECK(out.report[0]["result"]["group"] == "Z2xA4");
  CHECK(out.report[1]["status"] == "error");
  CHECK(out.report[2]["result"]["group"] == "SL2(3)");
  CHECK(out.exit_code == 1);
  CHECK(cli::run_text("{}", fixture(), true).exit_code == 2);
}

TEST_CASE("reports are deterministic and carry provenance") {
  const json request = {{"command", "verify-locus"}, {"payload", {{"genus", 12}}}};
  const auto a = cli::run(request, fixture());
  const auto b = cli::run(request, fixture());
  CHECK(without_time(a.report).dump() == without_time(b.report).dump());
  CHECK(a.report["provenance"]["kernel_version"] == cli::kKernelVersion);
  CHECK(a.report["provenance"]["fixture_version"] == "1");
  CHECK(a.report["provenance"]["wall_time_ms"].is_number_integer());
}

TEST_CASE("results re-parse under the published schemas") {
  const auto model = run("model", {{"genus", 9}, {"mu", "3"}});
  const auto form = codec::decode_form(model.report["result"]["form"]);
  CHECK(std::get<BinaryForm<Rational>>(form) == rational_model<Rational>(9, Rational(3)));
  const auto symbolic = run("model", {{"genus", 9}});
  const auto form_mu = codec::decode_form(symbolic.report["result"]["form"]);
  CHECK(std::get<BinaryForm<QPoly>>(form_mu) == rational_model<QPoly>(9, QPoly::variable()));
  const auto point = run("classify", model.report["result"]["form"]);
  CHECK(codec::decode_point(point.report["result"], 9).values.size() == 2);
  const auto reconstructed =
      run("reconstruct", {{"case", 1}, {"n", 2}, {"genus", 5}, {"u", {"2", "-66", "-4", "-66", "2"}}});
  const auto nf = codec::decode_normal_form(reconstructed.report["result"]);
  CHECK(dihedral_invariants(nf) == std::vector<Rational>{2, -66, -4, -66, 2});
  const auto lambdas = run("model", {{"genus", 7}, {"lambdas", {{"0", "0", "0", "1"}}}});
  CHECK(std::holds_alternative<BinaryForm<Cyclo>>(codec::decode_form(lambdas.report["result"]["form"])));
}

TEST_CASE("summary lines") {
  const auto out = run("dihedral", {{"case", 1}, {"n", 2}, {"genus", 5}, {"coeffs", {"-1", "-33", "2", "-33", "-1"}}});
  CHECK(cli::summary(out.report) == "dihedral: ok, u = [\"2\",\"-66\",\"-4\",\"-66\",\"2\"]\n");
}
