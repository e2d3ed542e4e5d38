// Writes the locus table: printed parametrizations plus their recomputation
// from the curve models, with a status per entry.
#include <fstream>
#include <iostream>

#include "hyperinv/codec.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_locus_fixture OUT.json\n";
    return 2;
  }
  const auto table = hyperinv::recompute_locus_table(hyperinv::transcribed_locus_table());
  std::ofstream out(argv[1]);
  if (!out) {
    std::cerr << "cannot write " << argv[1] << "\n";
    return 2;
  }
  out << hyperinv::codec::encode_locus_table(table).dump(2) << "\n";
  return 0;
}
