#include "greedylab/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace greedylab {

namespace {

// Summing norm: the residual prefix sums are fixed before the first free
// position; on each segment between consecutive free positions the cumulative
// free mass shifts the whole segment, so the optimum centers each segment's
// prefix range around zero.  Residual = max(pre-segment sup, max oscillation/2).
ChebyshevSolution summing_cheb(const SparseVector& x,
                               const std::vector<Index>& A) {
  std::set<Index> free(A.begin(), A.end());
  const Index L = std::max(x.max_index(), A.empty() ? Index{0} : A.back());
  ChebyshevSolution sol{A, {}, 0.0, ChebMethod::Analytic, true};

  double c = 0.0;          // prefix of x restricted off A
  double pre = 0.0;        // sup of |prefix| before the first free position
  double seg_lo = 0.0, seg_hi = 0.0;
  bool in_segment = false;
  std::size_t k = 0;       // free positions consumed
  double residual = 0.0;
  double cum_shift = 0.0;  // optimal cumulative free mass so far
  std::vector<double> shift_at(A.size(), 0.0);

  auto close_segment = [&]() {
    const double osc = (seg_hi - seg_lo) / 2.0;
    residual = std::max(residual, osc);
    cum_shift = -(seg_hi + seg_lo) / 2.0;
    shift_at[k - 1] = cum_shift;
  };

  for (Index n = 1; n <= L; ++n) {
    if (free.count(n)) {
      if (in_segment)
        close_segment();
      else
        residual = std::max(residual, pre);
      ++k;
      in_segment = true;
      seg_lo = seg_hi = c;  // segment range restarts at position n
    }
    c += free.count(n) ? 0.0 : x.coeff(n);
    if (in_segment) {
      seg_lo = std::min(seg_lo, c);
      seg_hi = std::max(seg_hi, c);
    } else {
      pre = std::max(pre, std::fabs(c));
    }
  }
  if (in_segment)
    close_segment();
  else
    residual = std::max(residual, pre);
  sol.residual = residual;

  // Realize the free residual values d_j = shift_j - shift_{j-1} and the
  // coefficients a_j = x_j - d_j.
  std::vector<Index> sortedA(A.begin(), A.end());
  std::sort(sortedA.begin(), sortedA.end());
  double prev_shift = 0.0;
  for (std::size_t j = 0; j < sortedA.size(); ++j) {
    const double d = shift_at[j] - prev_shift;
    prev_shift = shift_at[j];
    sol.coefficients[sortedA[j]] = x.coeff(sortedA[j]) - d;
  }
  return sol;
}

// Difference norm: the norm is the total variation of the dense residual path
// ending at 0, so free positions interpolate monotonically between their fixed
// neighbors at no cost.  Residual = TV of the fixed values in order plus the
// final drop to 0.
ChebyshevSolution difference_cheb(const SparseVector& x,
                                  const std::vector<Index>& A) {
  std::set<Index> free(A.begin(), A.end());
  const Index L = std::max(x.max_index(), A.empty() ? Index{0} : *free.rbegin());
  ChebyshevSolution sol{A, {}, 0.0, ChebMethod::Analytic, true};

  std::vector<std::pair<Index, double>> fixed;  // dense off-A values, in order
  for (Index n = 1; n <= L; ++n)
    if (!free.count(n)) fixed.emplace_back(n, x.coeff(n));

  double residual = 0.0;
  for (std::size_t t = 0; t + 1 < fixed.size(); ++t)
    residual += std::fabs(fixed[t].second - fixed[t + 1].second);
  if (!fixed.empty()) residual += std::fabs(fixed.back().second);
  sol.residual = residual;

  // Carry the previous fixed value through each free run (trailing frees go to
  // 0), a minimizing interpolation.
  double carry = fixed.empty() ? 0.0 : fixed.front().second;
  std::size_t t = 0;
  for (Index n = 1; n <= L; ++n) {
    if (!free.count(n)) {
      carry = fixed[t++].second;
      continue;
    }
    const double r = (t == fixed.size()) ? 0.0 : carry;
    sol.coefficients[n] = x.coeff(n) - r;
  }
  return sol;
}

// 1-unconditional lattice norms: enlarging any |residual coordinate| can never
// shrink the norm, so the projection coefficients are optimal.
ChebyshevSolution lattice_cheb(const SequenceSpace& space,
                               const SparseVector& x,
                               const std::vector<Index>& A) {
  ChebyshevSolution sol{A, {}, 0.0, ChebMethod::Analytic, true};
  for (Index i : A) sol.coefficients[i] = x.coeff(i);
  sol.residual = space.norm(x.project_complement(A));
  return sol;
}

}  // namespace

ChebyshevSolution chebyshev_project(const SequenceSpace& space,
                                    const SparseVector& x,
                                    const std::vector<Index>& A) {
  for (Index i : A)
    if (i < 1) throw std::invalid_argument("chebyshev_project: bad index");
  switch (space.kind()) {
    case SpaceKind::SummingC0: return summing_cheb(x, A);
    case SpaceKind::DifferenceL1: return difference_cheb(x, A);
    default: return lattice_cheb(space, x, A);
  }
}

ErrorValue theta_error(const SequenceSpace& space, const SparseVector& x,
                       std::size_t m, std::size_t cap) {
  const auto fam = greedy_sets(x, m, cap);
  double worst = 0.0;
  for (const auto& A : fam.sets)
    worst = std::max(worst, chebyshev_project(space, x, A).residual);
  return {worst, fam.truncated};
}

namespace {

double binomial_or_inf(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double b = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    b *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (b > 1e18) return b;
  }
  return b;
}

}  // namespace

double sigma_error(const SequenceSpace& space, const SparseVector& x,
                   std::size_t m, Index window, std::size_t budget) {
  if (m >= x.support_size()) return 0.0;
  std::vector<Index> pool = x.support();
  const Index top = x.max_index();
  for (Index j = 1; j <= window; ++j) pool.push_back(top + j);

  if (binomial_or_inf(pool.size(), m) > static_cast<double>(budget))
    throw BudgetExceeded("sigma_error: support enumeration over budget");

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::vector<Index> A(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) A[i] = pool[idx[i]];
    best = std::min(best, chebyshev_project(space, x, A).residual);
    std::size_t i = m;
    bool advanced = false;
    while (i > 0) {
      --i;
      if (idx[i] != i + pool.size() - m) {
        ++idx[i];
        for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return best;
}

ConstantBudget constant_budget(double C_q, double C_sd, double K_b, double p,
                               std::optional<double> C_sg) {
  const double eta = eta_p(C_q, p);
  const double ap = a_p(p);
  const double t1 = 2.0 * std::pow(C_q * C_q * eta, p);
  const double t2 = std::pow(2.0 * ap * C_sd * C_q * C_q * eta, p);
  ConstantBudget out{};
  out.c_sg_bound = std::pow(t1 + t2, 1.0 / p);
  const double sg = C_sg.value_or(out.c_sg_bound);
  out.c_sd_bound = K_b * (1.0 + K_b) * sg * sg;
  out.c_q_bound =
      K_b * sg * std::pow(1.0 + std::pow((1.0 + K_b) * sg, p), 1.0 / p);
  return out;
}

}  // namespace greedylab
