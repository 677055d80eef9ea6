// Acceptance suite: one verdict line per criterion; nonzero exit on any
// failure. Details of each failing criterion are printed after its line.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "coframe/reproduce.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240817;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  bool allPass = true;
  for (const auto& c : coframe::run_acceptance(seed)) {
    std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL")
              << " - " << c.label << "\n";
    if (!c.pass) {
      allPass = false;
      for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    }
  }
  return allPass ? 0 : 1;
}
