#pragma once

#include <functional>
#include <string>
#include <vector>

#include "greedylab/chebyshev.hpp"
#include "greedylab/democracy.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/weights.hpp"

namespace greedylab {

/// Which m-term error sequence drives an approximation-class quasi-norm.
enum class ErrorKind {
  BestTerm,    // sigma_m  (class A)
  Greedy,      // gamma_m  (class G)
  Chebyshev,   // theta_m  (class CG)
  PartialSum,  // beta_m   (class PG)
};

struct ClassParams {
  Weight weight;
  double q;  // quasi-norm exponent; infinity => sup
  ErrorKind kind;
};

/// ||x|| + (sum_{n<=cutoff} (w(n) err_n(x))^q / n)^{1/q}, sup for q = inf.
/// Cutoff is |supp(x)| for sigma/gamma/theta and max supp(x) for beta; the
/// errors vanish beyond, so the finite sum is exact.  The truncated flag
/// propagates from the underlying error computations (value then bounds the
/// true quasi-norm from below).
ErrorValue class_norm(const SequenceSpace& space, const SparseVector& x,
                      const ClassParams& params, Index window = 4,
                      std::size_t cap = 10000);

/// One row of an embedding-failure experiment (or of the remark-ratio scan,
/// where j is the sparsity m).  Unused level columns are 0.
struct ExperimentRow {
  std::string preset;
  long j;
  long k;
  long u;
  long eta;
  double num;
  double den;
  double ratio;
  double bound;
  std::string flags;
};

/// ||e_{m+1}||_G / ||e_{m+1}||_PG for m = 1..m_range, with the displayed bound
/// 1/(w(1) (sum_{n<=m} 1/n)^{1/q}) per row.
std::vector<ExperimentRow> remark_ratio(const SequenceSpace& space,
                                        const Weight& w, double q,
                                        std::size_t m_range);

/// Pairs (k_j, eta_j) with eta_j / k_j >= 2^j and f(k_j)/g(eta_j) >=
/// w(eta_j)/w(k_j), scanned over dyadic k and eta up to `grid`.  Stops at the
/// first j with no qualifying pair.
std::vector<std::pair<Index, Index>> witness_pair_search(
    const std::function<double(Index)>& f,
    const std::function<double(Index)>& g, const Weight& w, Index grid);

/// Chebyshev-greedy vs best-m-term class norms of x_j = 2 1_{eps Gamma_l} +
/// 1_{Gamma_r} with Gamma_l = [1, eta_j] alternating and Gamma_r the next k_j
/// indices; k_j = 2^j, eta_j = 4^j.  Every row evaluates theta on a fixed pair
/// of representative greedy sets (lower bound) and sigma on candidate support
/// families (upper bound) so the estimates are uniform across j; each ratio
/// therefore bounds the true ratio from below and rows carry the
/// "theta_lb;sigma_ub" flag.
std::vector<ExperimentRow> imp1_experiment(const SequenceSpace& space,
                                           const Weight& w, double q,
                                           int j_max, std::size_t cap = 10000,
                                           Index window = 4);

/// Greedy vs partial-sum class norms of x_j = 1_{Gamma_l} + 2 1_{Gamma_r}
/// with Gamma_l = even indices in [1, u_j] and Gamma_r = odd indices in
/// (u_j, u_j + 2 eta_j]; u_j = 2^j, eta_j = 4^j.
std::vector<ExperimentRow> kppg_experiment(const SequenceSpace& space,
                                           const Weight& w, double q,
                                           int j_max, std::size_t cap = 10000);

/// Diagnostic evaluation of the two-block construction x_s = 2 1_{eps M_s} +
/// 1_{V_s}: balanced r-way partition of D, the part V_s of maximal indicator
/// norm, the premise ||1_{eps M_s}|| <= ||1_{V_s}||, and the p-power chain
/// ||x_s||^p <= (1 + 2^p) ||1_{V_s}||^p.
struct CasecDiagnostics {
  std::vector<std::size_t> part_sizes;
  double norm_Ms;
  double norm_Vs;
  double norm_xs;
  bool premise_ok;
  double chain_lhs;
  double chain_rhs;
  bool chain_ok;
};
CasecDiagnostics casec_construction(const SequenceSpace& space,
                                    const SignedSet& Ms,
                                    const std::vector<Index>& D, int r);

/// Asserts ||x||_A <= ||x||_CG <= ||x||_G (same weight and q) and the termwise
/// chain sigma_n <= theta_n <= gamma_n for every sample vector, within 1e-9.
/// On failure writes the first violating instance to `detail` when provided.
bool chain_check(const SequenceSpace& space,
                 const std::vector<SparseVector>& sample, const Weight& w,
                 double q, Index window = 4, std::size_t cap = 10000,
                 std::string* detail = nullptr);

}  // namespace greedylab
