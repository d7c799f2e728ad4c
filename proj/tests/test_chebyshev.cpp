#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "greedylab/chebyshev.hpp"

using namespace greedylab;

namespace {

// Independent multi-start coordinate-descent oracle on a grid refined from
// step 0.5 down below 1e-4.  Convexity of every bundled norm makes this reach
// the optimum to the tested tolerance.
double grid_residual(const SequenceSpace& space, const SparseVector& x,
                     const std::vector<Index>& A) {
  std::vector<std::map<Index, double>> starts(2);
  for (Index i : A) {
    starts[0][i] = 0.0;
    starts[1][i] = x.coeff(i);
  }
  double best = std::numeric_limits<double>::infinity();
  for (auto coeffs : starts) {
    auto eval = [&](const std::map<Index, double>& c) {
      SparseVector r = x;
      for (const auto& [i, v] : c) r.set(i, x.coeff(i) - v);
      return space.norm(r);
    };
    double cur = eval(coeffs);
    for (double step = 0.5; step > 1e-4; step /= 8.0) {
      bool improved = true;
      while (improved) {
        improved = false;
        for (Index i : A) {
          double base = coeffs[i];
          for (int d = -8; d <= 8; ++d) {
            if (d == 0) continue;
            coeffs[i] = base + d * step;
            double v = eval(coeffs);
            if (v < cur - 1e-12) {
              cur = v;
              base = coeffs[i];
              improved = true;
            }
          }
          coeffs[i] = base;
        }
      }
    }
    best = std::min(best, cur);
  }
  return best;
}

std::vector<SparseVector> random_sample(unsigned seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<SparseVector> out;
  while (static_cast<int>(out.size()) < count) {
    SparseVector x;
    int supp = 2 + static_cast<int>(rng() % 4);
    for (int s = 0; s < supp; ++s)
      x.set(1 + static_cast<Index>(rng() % 10),
            (static_cast<double>(rng() % 2001) - 1000.0) / 250.0);
    if (x.support_size() >= 2) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("chebyshev projection beats plain projection and matches the grid") {
  auto sample = random_sample(271, 12);
  std::vector<SequenceSpace> spaces = {
      SequenceSpace::lp(2), SequenceSpace::summing(),
      SequenceSpace::difference(), SequenceSpace::schreier(),
      SequenceSpace::mixnorm()};
  std::mt19937_64 rng(99);
  for (const auto& sp : spaces) {
    for (const auto& x : sample) {
      auto supp = x.support();
      std::vector<Index> A;
      for (Index i : supp)
        if (rng() % 2) A.push_back(i);
      if (A.empty()) A.push_back(supp[0]);
      auto sol = chebyshev_project(sp, x, A);
      CHECK(sol.certified);
      // Never worse than the coefficient projection.
      CHECK(sol.residual <= sp.norm(x.project_complement(A)) + 1e-12);
      // Matches the independent numerical optimum.
      CHECK(sol.residual == doctest::Approx(grid_residual(sp, x, A))
                                .epsilon(5e-3));
      // The returned coefficients realize the reported residual.
      SparseVector r = x;
      for (const auto& [i, v] : sol.coefficients) r.set(i, x.coeff(i) - v);
      CHECK(sp.norm(r) == doctest::Approx(sol.residual));
    }
  }
}

TEST_CASE("summing chebyshev centers each free segment") {
  auto sp = SequenceSpace::summing();
  // x = (4, 0, -4) approximated on A = {1}: the free leading coefficient
  // centers the partial sums 4 - z, 4 - z, -z at z = 2.
  SparseVector x{{1, 4.0}, {3, -4.0}};
  auto sol = chebyshev_project(sp, x, {1});
  CHECK(sol.residual == doctest::Approx(2.0));
  CHECK(sp.norm(x.project_complement(std::vector<Index>{1})) ==
        doctest::Approx(4.0));
  // With only an interior free position the leading partial sum 4 is locked,
  // so no choice of coefficient improves on it.
  CHECK(chebyshev_project(sp, x, {2}).residual == doctest::Approx(4.0));
}

TEST_CASE("difference chebyshev interpolates monotonically") {
  auto sp = SequenceSpace::difference();
  // x = (2, 0, 2) on A = {2}: setting the middle value to anything in [0, 2]
  // erases the dip; residual = TV of (2, ., 2, 0) = 2.
  SparseVector x{{1, 2.0}, {3, 2.0}};
  auto sol = chebyshev_project(sp, x, {2});
  CHECK(sol.residual == doctest::Approx(2.0));
  CHECK(sp.norm(x.project_complement(std::vector<Index>{2})) ==
        doctest::Approx(6.0));
}

TEST_CASE("projection is optimal in hilbert space") {
  auto sp = SequenceSpace::lp(2);
  SparseVector x{{1, 3.0}, {2, 4.0}, {3, 12.0}};
  auto sol = chebyshev_project(sp, x, {3});
  CHECK(sol.residual == doctest::Approx(5.0));
  CHECK(sol.coefficients.at(3) == doctest::Approx(12.0));
}

TEST_CASE("error chain sigma <= theta <= gamma") {
  auto sample = random_sample(4242, 20);
  std::vector<SequenceSpace> spaces = {
      SequenceSpace::lp(2), SequenceSpace::summing(),
      SequenceSpace::difference(), SequenceSpace::schreier(),
      SequenceSpace::mixnorm()};
  for (const auto& sp : spaces) {
    for (const auto& x : sample) {
      for (std::size_t m = 1; m <= x.support_size(); ++m) {
        double s = sigma_error(sp, x, m);
        double th = theta_error(sp, x, m).value;
        double g = gamma_error(sp, x, m).value;
        CHECK(s <= th + 1e-9);
        CHECK(th <= g + 1e-9);
      }
    }
  }
}

TEST_CASE("sigma vanishes at the support size") {
  auto sp = SequenceSpace::summing();
  SparseVector x{{1, 1.0}, {4, -2.0}, {9, 0.5}};
  CHECK(sigma_error(sp, x, 3) == doctest::Approx(0.0));
  CHECK(sigma_error(sp, x, 5) == doctest::Approx(0.0));
  CHECK(sigma_error(sp, x, 1) > 0.0);
}

TEST_CASE("sigma uses off-support indices when they help") {
  // x = (1, 1): the single off-support coefficient at index 3 cannot beat
  // keeping one coordinate in the summing norm, but the search must at least
  // consider the window without error.
  auto sp = SequenceSpace::summing();
  SparseVector x{{1, 1.0}, {2, 1.0}};
  double s1 = sigma_error(sp, x, 1, /*window=*/4);
  CHECK(s1 <= sp.norm(x.project_complement(std::vector<Index>{2})) + 1e-12);
  CHECK(s1 >= 0.0);
}

TEST_CASE("sigma budget violation throws") {
  SparseVector x;
  for (Index i = 1; i <= 40; ++i) x.set(i, 1.0 + 1.0 / i);
  CHECK_THROWS_AS(sigma_error(SequenceSpace::lp(2), x, 20, 4, 1000),
                  BudgetExceeded);
}

TEST_CASE("constant budget formulas") {
  // C_q = C_sd = 1, p = 1: the semi-greedy bound evaluates to
  // 2 eta_1(1) + 2 A_1 eta_1(1) = 4 eta_1(1) = 4 (3 + 2 sqrt 2).
  auto b = constant_budget(1.0, 1.0, 1.0, 1.0);
  CHECK(b.c_sg_bound == doctest::Approx(4.0 * (3.0 + 2.0 * std::sqrt(2.0))));
  // K_b = 1, C_sg = 1: C_sd <= 2 and C_q <= 3.
  auto c = constant_budget(1.0, 1.0, 1.0, 1.0, 1.0);
  CHECK(c.c_sd_bound == doctest::Approx(2.0));
  CHECK(c.c_q_bound == doctest::Approx(3.0));
}
