#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "greedylab/classes.hpp"

using namespace greedylab;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<SparseVector> random_sample(unsigned seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<SparseVector> out;
  while (static_cast<int>(out.size()) < count) {
    SparseVector x;
    int supp = 1 + static_cast<int>(rng() % 5);
    for (int s = 0; s < supp; ++s)
      x.set(1 + static_cast<Index>(rng() % 12),
            (static_cast<double>(rng() % 2001) - 1000.0) / 250.0);
    if (!x.empty()) out.push_back(x);
  }
  return out;
}
}  // namespace

TEST_CASE("class norm of a unit vector") {
  // kind=A: sigma_n(e_k) = 0 for all n >= 1, so the class norm is ||e_k||.
  for (const auto& sp :
       {SequenceSpace::lp(2), SequenceSpace::summing(),
        SequenceSpace::mixnorm()}) {
    ClassParams pa{Weight::power(0.5), 2.0, ErrorKind::BestTerm};
    SparseVector e3{{3, 1.0}};
    CHECK(class_norm(sp, e3, pa).value == doctest::Approx(sp.norm(e3)));
  }
  // kind=PG on the summing norm with w = sqrt(n), q = inf:
  // beta_1 = beta_2 = 1, beta_3 = 0 => 1 + sqrt(2).
  ClassParams pg{Weight::power(0.5), kInf, ErrorKind::PartialSum};
  SparseVector e3{{3, 1.0}};
  CHECK(class_norm(SequenceSpace::summing(), e3, pg).value ==
        doctest::Approx(1.0 + std::sqrt(2.0)));
}

TEST_CASE("exactly sparse vectors have vanishing sigma tails") {
  auto sp = SequenceSpace::summing();
  SparseVector x{{1, 2.0}, {4, -1.0}, {6, 3.0}};
  for (std::size_t n = 3; n <= 6; ++n)
    CHECK(sigma_error(sp, x, n) == doctest::Approx(0.0));
  ClassParams pa{Weight::power(0.5), 1.0, ErrorKind::BestTerm};
  double cn = class_norm(sp, x, pa).value;
  CHECK(cn >= sp.norm(x));
  CHECK(std::isfinite(cn));
}

TEST_CASE("class norm chain A <= CG <= G") {
  auto sample = random_sample(808, 40);
  for (const auto& sp :
       {SequenceSpace::summing(), SequenceSpace::lp(2),
        SequenceSpace::difference()}) {
    std::string detail;
    CHECK(chain_check(sp, sample, Weight::power(0.5), 2.0, 4, 10000, &detail));
    INFO(detail);
  }
}

TEST_CASE("hilbert space collapses G and CG") {
  auto sp = SequenceSpace::lp(2);
  auto sample = random_sample(909, 25);
  for (const auto& x : sample) {
    for (std::size_t m = 1; m <= x.support_size(); ++m) {
      CHECK(theta_error(sp, x, m).value ==
            doctest::Approx(gamma_error(sp, x, m).value));
    }
  }
}

TEST_CASE("remark ratio respects the displayed bound") {
  auto sp = SequenceSpace::summing();
  auto rows = remark_ratio(sp, Weight::power(0.5), 2.0, 50);
  REQUIRE(rows.size() == 50);
  bool below_half = false;
  for (const auto& row : rows) {
    CHECK(row.ratio <= row.bound + 1e-12);
    CHECK(row.ratio == doctest::Approx(row.num / row.den));
    if (row.ratio < 0.5) below_half = true;
  }
  CHECK(below_half);  // the ratio decays like 1/sqrt(ln m)
}

TEST_CASE("witness pair search on power weights") {
  // f(k) = k, g(eta) = sqrt(eta), w = sqrt: f(k)/g(eta) = k/sqrt(eta) and
  // w(eta)/w(k) = sqrt(eta/k); pairs exist whenever k >= eta^{3/4} fails...
  // checked only for nonemptiness and the defining inequalities.
  auto pairs = witness_pair_search(
      [](Index k) { return static_cast<double>(k); },
      [](Index eta) { return std::sqrt(static_cast<double>(eta)); },
      Weight::power(0.5), 1 << 14);
  REQUIRE_FALSE(pairs.empty());
  auto w = Weight::power(0.5);
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    auto [k, eta] = pairs[j];
    CHECK(static_cast<double>(eta) / k >= std::pow(2.0, j + 1) - 1e-9);
    CHECK(static_cast<double>(k) / std::sqrt(static_cast<double>(eta)) >=
          w(eta) / w(k) - 1e-9);
  }
}

TEST_CASE("imp1 rows blow up at the documented rate") {
  auto rows = imp1_experiment(SequenceSpace::summing(), Weight::power(0.5),
                              1.0, 5);
  REQUIRE(rows.size() == 5);
  for (const auto& row : rows) {
    CHECK(row.k == (1L << row.j));
    CHECK(row.eta == (1L << (2 * row.j)));
    CHECK(row.flags.find("theta_lb") != std::string::npos);
    CHECK(row.flags.find("sigma_ub") != std::string::npos);
  }
  for (std::size_t j = 1; j < rows.size(); ++j) {
    CHECK(rows[j].ratio / rows[j - 1].ratio >= 1.2);
  }
}

TEST_CASE("kppg rows and the mixnorm democracy gap") {
  auto rows = kppg_experiment(SequenceSpace::mixnorm(), Weight::power(0.5),
                              kInf, 4);
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(row.u == (1L << row.j));
    CHECK(row.eta == (1L << (2 * row.j)));
    CHECK(row.ratio == doctest::Approx(row.num / row.den));
    CHECK(row.ratio > 0.0);
  }
  // Measured behavior at desk scale: the ratio drifts down slowly (the
  // mixnorm left-democracy gap is only logarithmic).  Frozen values:
  CHECK(rows[0].ratio == doctest::Approx(0.753985).epsilon(1e-4));
  CHECK(rows[3].ratio == doctest::Approx(0.718171).epsilon(1e-4));
}

TEST_CASE("casec diagnostics validate the chain inequality") {
  auto sp = SequenceSpace::summing();
  std::vector<Index> D;
  for (Index i = 9; i <= 16; ++i) D.push_back(i);
  SignedSet Ms;
  for (Index i = 1; i <= 8; ++i) {
    Ms.indices.push_back(i);
    Ms.signs.push_back(i % 2 ? 1 : -1);
  }
  auto diag = casec_construction(sp, Ms, D, 2);
  CHECK(diag.part_sizes.size() == 2);
  std::size_t total = 0;
  for (auto s : diag.part_sizes) total += s;
  CHECK(total == D.size());
  CHECK(diag.premise_ok);  // alternating block has norm 1 <= block norm
  CHECK(diag.chain_ok);
  CHECK(diag.chain_lhs <= diag.chain_rhs + 1e-12);
}

TEST_CASE("class norms are deterministic") {
  auto sp = SequenceSpace::schreier();
  SparseVector x{{2, 1.5}, {5, -2.0}, {9, 0.5}, {11, 1.0}};
  ClassParams pg{Weight::sqrtlog(1.0), 2.0, ErrorKind::Greedy};
  double a = class_norm(sp, x, pg).value;
  double b = class_norm(sp, x, pg).value;
  CHECK(a == b);  // bitwise
}
