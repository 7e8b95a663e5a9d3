// Alexander and Jones polynomials of a few closed 3-braids.

#include <iostream>

#include "bqf/braid3.hpp"

int main() {
  for (const char* text : {"", "1 2", "1 -2", "1^3 2", "1 -2 1 -2", "1^2 2^2", "1^5 2"}) {
    const bqf::BraidWord w = bqf::parse_braid(text);
    std::cout << '"' << text << "\"\n"
              << "  eps = " << bqf::exponent_sum(w) << ", tr = " << bqf::trace_b3(w) << "\n"
              << "  Alexander: " << bqf::alexander(w) << "\n"
              << "  Jones:     " << bqf::jones(w) << "\n"
              << "  at q = -1: " << bqf::special_value(w) << "\n";
  }
}
