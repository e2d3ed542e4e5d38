#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperinv/cli.hpp"

namespace {

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of binary forms and loci of hyperelliptic curves with cyclic or A4 reduced group"};
  std::string input = "-";
  std::string output = "-";
  std::string fixture = HYPERINV_DATA_DIR "/locus_table.json";
  bool batch = false;
  bool pretty = false;
  app.add_option("--input", input, "request JSON file, or - for stdin");
  app.add_option("--output", output, "report JSON file, or - for stdout");
  app.add_option("--fixture", fixture, "locus table JSON");
  app.add_flag("--batch", batch, "input is an array of requests");
  app.add_flag("--pretty", pretty, "indent the report");
  CLI11_PARSE(app, argc, argv);

  hyperinv::LocusTable table;
  try {
    table = hyperinv::codec::load_locus_table(fixture);
  } catch (const std::exception& e) {
    std::cerr << "hyperinv: " << e.what() << "\n";
    return hyperinv::cli::kMalformed;
  }

  std::string text;
  if (input == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "hyperinv: cannot open " << input << "\n";
      return hyperinv::cli::kMalformed;
    }
    text = read_all(in);
  }

  const auto outcome = hyperinv::cli::run_text(text, table, batch);
  const std::string body = outcome.report.dump(pretty ? 2 : -1) + "\n";
  if (output == "-") {
    std::cout << body;
  } else {
    std::ofstream out(output);
    out << body;
    std::cerr << hyperinv::cli::summary(outcome.report);
  }
  return outcome.exit_code;
}
