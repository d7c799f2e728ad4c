#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greedylab/sparse_vector.hpp"

namespace greedylab {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the full acceptance battery.  Deterministic: the same seed yields
/// bit-identical results.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// Seeded random sparse vectors (support <= max_support within [1, horizon],
/// coefficients uniform in [-2, -0.1] u [0.1, 2]); shared by the acceptance
/// battery and the CLI.
std::vector<SparseVector> random_sample(std::uint64_t seed, std::size_t count,
                                        std::size_t max_support, Index horizon);

}  // namespace greedylab
