// Runs the ten acceptance criteria and prints one PASS/FAIL line each.

#include <cstdint>
#include <cstdio>
#include <string>

#include "cltet/suites.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 42;
  if (argc > 1) seed = std::stoull(argv[1]);
  int failed = 0;
  for (const auto& s : cltet::suites::acceptance_suites()) {
    const auto r = cltet::suites::run(s, seed);
    std::printf("%s %s (%.2f s)%s%s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.passed ? "" : ": ", r.passed ? "" : r.detail.c_str());
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}
