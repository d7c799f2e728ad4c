#pragma once

#include <map>
#include <optional>
#include <vector>

#include "greedylab/greedy.hpp"
#include "greedylab/spaces.hpp"

namespace greedylab {

enum class ChebMethod { Analytic };

/// Best approximation to x among vectors supported on A, together with the
/// certified optimal residual norm.  All bundled norms admit closed-form
/// minimizers: projection for the 1-unconditional norms, a per-segment prefix
/// centering for the summing norm, and monotone interpolation for the
/// difference norm.
struct ChebyshevSolution {
  std::vector<Index> support;
  std::map<Index, double> coefficients;
  double residual;
  ChebMethod method;
  bool certified;
};

ChebyshevSolution chebyshev_project(const SequenceSpace& space,
                                    const SparseVector& x,
                                    const std::vector<Index>& A);

/// theta_m(x): worst Chebyshev residual over greedy sets of order m.
ErrorValue theta_error(const SequenceSpace& space, const SparseVector& x,
                       std::size_t m, std::size_t cap = 10000);

/// sigma_m(x): best m-term error over supports drawn from supp(x) plus
/// `window` trailing indices beyond the support.  Throws BudgetExceeded when
/// the subset count passes `budget`.
double sigma_error(const SequenceSpace& space, const SparseVector& x,
                   std::size_t m, Index window = 4,
                   std::size_t budget = 2000000);

/// Constant chains from the quasi-greedy / super-democracy / semi-greedy
/// equivalence for a p-Banach space with basis constant K_b:
///   C_sg <= (2 (C_q^2 eta_p(C_q))^p + (2 A_p C_sd C_q^2 eta_p(C_q))^p)^{1/p}
///   C_sd <= K_b (1 + K_b) C_sg^2
///   C_q  <= K_b C_sg (1 + (1+K_b)^p C_sg^p)^{1/p}
/// The last two need a value of C_sg: the caller may supply one, otherwise the
/// freshly computed c_sg_bound is used.
struct ConstantBudget {
  double c_sg_bound;
  double c_sd_bound;
  double c_q_bound;
};
ConstantBudget constant_budget(double C_q, double C_sd, double K_b, double p,
                               std::optional<double> C_sg = std::nullopt);

}  // namespace greedylab
