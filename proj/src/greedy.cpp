#include "greedylab/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace greedylab {

namespace {

// Visits all k-subsets of [0, n); returns false if `visit` aborts the walk.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return true;
    }
    if (k == 0) return true;
  }
}

}  // namespace

GreedySetFamily greedy_sets(const SparseVector& x, std::size_t m,
                            std::size_t cap) {
  GreedySetFamily fam{m, {}, false};
  if (m == 0) {
    fam.sets.push_back({});
    return fam;
  }
  std::vector<std::pair<Index, double>> supp(x.entries().begin(),
                                             x.entries().end());
  std::sort(supp.begin(), supp.end(), [](const auto& a, const auto& b) {
    const double ma = std::fabs(a.second), mb = std::fabs(b.second);
    if (ma != mb) return ma > mb;
    return a.first < b.first;
  });

  if (m >= supp.size()) {
    // Every zero coordinate ties for the remaining slots; emit the canonical
    // completion with the smallest unused indices and flag the truncation.
    std::vector<Index> A;
    for (const auto& [i, c] : supp) A.push_back(i);
    Index next = 1;
    while (A.size() < m) {
      while (x.coeff(next) != 0.0) ++next;
      A.push_back(next);
      ++next;
    }
    std::sort(A.begin(), A.end());
    fam.sets.push_back(std::move(A));
    fam.truncated = m > supp.size();
    return fam;
  }

  const double pivot = std::fabs(supp[m - 1].second);
  std::vector<Index> forced;
  std::vector<Index> ties;
  for (const auto& [i, c] : supp) {
    const double mod = std::fabs(c);
    if (mod > pivot)
      forced.push_back(i);
    else if (mod == pivot)
      ties.push_back(i);
  }
  const std::size_t pick = m - forced.size();
  std::sort(ties.begin(), ties.end());

  fam.truncated = !for_each_combination(
      ties.size(), pick, [&](const std::vector<std::size_t>& idx) {
        if (fam.sets.size() >= cap) return false;
        std::vector<Index> A = forced;
        for (std::size_t j : idx) A.push_back(ties[j]);
        std::sort(A.begin(), A.end());
        fam.sets.push_back(std::move(A));
        return true;
      });
  return fam;
}

ErrorValue gamma_error(const SequenceSpace& space, const SparseVector& x,
                       std::size_t m, std::size_t cap) {
  const auto fam = greedy_sets(x, m, cap);
  double worst = 0.0;
  for (const auto& A : fam.sets)
    worst = std::max(worst, space.norm(x.project_complement(A)));
  return {worst, fam.truncated};
}

double beta_error(const SequenceSpace& space, const SparseVector& x, Index m) {
  return space.norm(x - x.partial_sum(m));
}

TruncationResult truncate(const SparseVector& x, const std::vector<Index>& A,
                          TruncationKind kind) {
  if (A.empty()) throw std::invalid_argument("truncate: empty index set");
  double level = std::numeric_limits<double>::infinity();
  bool degenerate = false;
  for (Index i : A) {
    const double c = x.coeff(i);
    if (c == 0.0) degenerate = true;
    level = std::min(level, std::fabs(c));
  }
  SparseVector out;
  if (kind == TruncationKind::Full) out = x.project_complement(A);
  for (Index i : A) {
    const double c = x.coeff(i);
    const double sgn = (c > 0.0) ? 1.0 : (c < 0.0 ? -1.0 : 0.0);
    out.set(i, sgn * level);
  }
  return {out, kind, degenerate};
}

double a_p(double p) {
  return 1.0 / std::pow(std::pow(2.0, p) - 1.0, 1.0 / p);
}

double eta_p(double u, double p) {
  if (!(u > 0.0) || !(p > 0.0))
    throw std::invalid_argument("eta_p: u and p must be positive");
  const double ap = a_p(p);
  auto f = [&](double t) {
    const double left = std::pow(1.0 - std::pow(t, p), -1.0 / p);
    const double inner = 1.0 - std::pow(1.0 + t / (ap * u), -p);
    return left * std::pow(inner, -1.0 / p);
  };
  // coarse grid seed, then golden-section refinement
  double best_t = 0.5, best = f(0.5);
  const int grid = 4096;
  for (int i = 1; i < grid; ++i) {
    const double t = static_cast<double>(i) / grid;
    const double v = f(t);
    if (v < best) { best = v; best_t = t; }
  }
  double lo = std::max(best_t - 1.0 / grid, 1e-12);
  double hi = std::min(best_t + 1.0 / grid, 1.0 - 1e-12);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    if (f(c) < f(d)) { hi = d; d = c; c = hi - gr * (hi - lo); }
    else { lo = c; c = d; d = lo + gr * (hi - lo); }
  }
  return f(0.5 * (lo + hi));
}

double quasi_greedy_estimate(const SequenceSpace& space,
                             const std::vector<SparseVector>& sample,
                             std::size_t cap) {
  double best = 0.0;
  for (const auto& x : sample) {
    const double nx = space.norm(x);
    if (nx == 0.0) continue;
    for (std::size_t m = 1; m <= x.support_size(); ++m)
      best = std::max(best, gamma_error(space, x, m, cap).value / nx);
  }
  return best;
}

}  // namespace greedylab
