// h(t) next to the braid-side window sum for a range of traces.

#include <cstdlib>
#include <iostream>

#include "bqf/counts.hpp"

int main(int argc, char** argv) {
  const long tmax = argc > 1 ? std::strtol(argv[1], nullptr, 10) : 30;
  std::cout << "    t      D   h(t)  residues\n";
  for (long t = -tmax; t <= tmax; ++t) {
    if (t == 2 || t == -2) continue;
    const auto hist = bqf::residue_histogram(t);
    std::cout << (t < 0 ? "" : " ") << t << "\t" << bqf::trace_discriminant(t) << "\t"
              << bqf::class_number_h(t) << "\t";
    for (const auto c : hist) std::cout << c << ' ';
    std::cout << "\n";
  }
}
