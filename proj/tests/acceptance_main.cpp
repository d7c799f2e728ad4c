#include <cstdio>
#include <cstdlib>
#include <string>

#include "greedylab/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed =
      argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20260826ULL;
  int failures = 0;
  for (const auto& r : greedylab::run_acceptance(seed)) {
    std::printf("%s  %2d  %-36s  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str());
    if (!r.passed) ++failures;
  }
  std::printf("%d/13 criteria passed (seed %llu)\n", 13 - failures,
              static_cast<unsigned long long>(seed));
  return failures == 0 ? 0 : 1;
}
