#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "greedylab/spaces.hpp"

using namespace greedylab;

namespace {

// Brute-force Schreier norm: enumerate every admissible subset F of the
// support (sqrt(min F) >= |F|).  Exponential, so only for |supp| <= 12.
double schreier_brute(const SparseVector& x) {
  auto supp = x.support();
  const std::size_t n = supp.size();
  double best = 0.0;
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    double sum = 0.0;
    Index mn = 0;
    int cnt = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      if (mn == 0) mn = supp[i];
      sum += std::abs(x.coeff(supp[i]));
      ++cnt;
    }
    if (std::sqrt(static_cast<double>(mn)) >= cnt) best = std::max(best, sum);
  }
  return best;
}

// Brute-force MixNorm first component: try every permutation of the nonzero
// moduli into the leading positions (the decreasing rearrangement must win).
double mixnorm_first_brute(const SparseVector& x) {
  std::vector<double> mods;
  for (const auto& [i, c] : x.entries()) mods.push_back(std::abs(c));
  std::sort(mods.begin(), mods.end());
  double best = 0.0;
  do {
    double acc = 0.0, harm = 0.0;
    for (std::size_t n = 0; n < mods.size(); ++n) {
      acc += mods[n] / std::sqrt(static_cast<double>(n + 1));
      harm += 1.0 / static_cast<double>(n + 1);
      best = std::max(best, acc / std::sqrt(harm));
    }
  } while (std::next_permutation(mods.begin(), mods.end()));
  return best;
}

std::vector<SparseVector> random_vectors(unsigned seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<SparseVector> out;
  for (int v = 0; v < count; ++v) {
    SparseVector x;
    int supp = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < supp; ++s) {
      Index i = 1 + static_cast<Index>(rng() % 20);
      double c = (static_cast<double>(rng() % 2001) - 1000.0) / 250.0;
      if (c != 0.0) x.set(i, c);
    }
    if (!x.empty()) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("lp norms match closed forms") {
  SparseVector x{{1, 3.0}, {4, -4.0}};
  CHECK(SequenceSpace::lp(2).norm(x) == doctest::Approx(5.0));
  CHECK(SequenceSpace::lp(1).norm(x) == doctest::Approx(7.0));
  CHECK(SequenceSpace::lp(0.5).norm(x) ==
        doctest::Approx(std::pow(std::sqrt(3.0) + 2.0, 2.0)));
  CHECK(SequenceSpace::lp(2).kappa() == doctest::Approx(1.0));
  CHECK(SequenceSpace::lp(0.5).kappa() == doctest::Approx(2.0));
}

TEST_CASE("summing norm is the sup of partial sums") {
  SparseVector x{{1, 1.0}, {2, -1.0}, {3, 1.0}};
  CHECK(SequenceSpace::summing().norm(x) == doctest::Approx(1.0));
  SparseVector y{{1, 1.0}, {3, 1.0}, {7, -5.0}};
  CHECK(SequenceSpace::summing().norm(y) == doctest::Approx(3.0));
  SparseVector gap{{5, 2.0}};
  CHECK(SequenceSpace::summing().norm(gap) == doctest::Approx(2.0));
}

TEST_CASE("difference norm is the terminal total variation") {
  auto d = SequenceSpace::difference();
  // Constant block: only the final drop to zero is charged.
  SparseVector ones{{1, 1.0}, {2, 1.0}, {3, 1.0}};
  CHECK(d.norm(ones) == doctest::Approx(1.0));
  // Dense evaluation over [1, max supp]: gaps count as zeros.
  SparseVector spread{{1, 1.0}, {3, 1.0}};
  CHECK(d.norm(spread) == doctest::Approx(3.0));
  SparseVector alt{{1, 1.0}, {2, -1.0}, {3, 1.0}};
  CHECK(d.norm(alt) == doctest::Approx(5.0));
  SparseVector single{{4, 2.5}};
  CHECK(d.norm(single) == doctest::Approx(5.0));
}

TEST_CASE("schreier norm against subset brute force") {
  auto sch = SequenceSpace::schreier();
  auto sample = random_vectors(101, 60);
  for (const auto& x : sample) {
    CHECK(sch.norm(x) == doctest::Approx(schreier_brute(x)).epsilon(1e-12));
  }
  // Block vectors: m ones starting beyond m^2 have norm m.
  for (int m = 1; m <= 5; ++m) {
    SparseVector block;
    for (int i = 0; i < m; ++i) block.set(m * m + i, 1.0);
    CHECK(sch.norm(block) == doctest::Approx(m));
  }
}

TEST_CASE("mixnorm decreasing rearrangement is optimal") {
  auto mix = SequenceSpace::mixnorm();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    SparseVector x;
    int supp = 1 + static_cast<int>(rng() % 5);
    for (int s = 0; s < supp; ++s)
      x.set(2 * (1 + static_cast<Index>(rng() % 8)) - 1,  // odd indices only:
            1.0 + static_cast<double>(rng() % 100) / 25.0);  // kill the l2 part
    CHECK(mix.norm(x) >=
          doctest::Approx(mixnorm_first_brute(x)).epsilon(1e-12));
    CHECK(mix.norm(x) == doctest::Approx(mixnorm_first_brute(x)));
  }
  // Even coordinates contribute through the l2 component.
  SparseVector e2{{2, 3.0}, {4, 4.0}};
  CHECK(mix.norm(e2) >= 5.0 - 1e-12);
}

TEST_CASE("norm axioms hold on random vectors") {
  auto sample = random_vectors(2024, 50);
  std::vector<SequenceSpace> spaces = {
      SequenceSpace::lp(2),      SequenceSpace::lp(1),
      SequenceSpace::summing(),  SequenceSpace::difference(),
      SequenceSpace::schreier(), SequenceSpace::mixnorm()};
  for (const auto& sp : spaces) {
    for (std::size_t i = 0; i + 1 < sample.size(); i += 2) {
      const auto& x = sample[i];
      const auto& y = sample[i + 1];
      CHECK(sp.norm(x) > 0.0);
      CHECK(sp.norm(x.scaled(-2.5)) == doctest::Approx(2.5 * sp.norm(x)));
      CHECK(sp.norm(x + y) <= sp.kappa() * (sp.norm(x) + sp.norm(y)) + 1e-12);
      if (sp.unconditional()) {
        SparseVector flipped;
        bool flip = true;
        for (const auto& [idx, c] : x.entries()) {
          flipped.set(idx, flip ? -c : c);
          flip = !flip;
        }
        CHECK(sp.norm(flipped) == doctest::Approx(sp.norm(x)));
      }
    }
  }
}

TEST_CASE("unit vector norms") {
  for (const auto& sp :
       {SequenceSpace::lp(2), SequenceSpace::summing(),
        SequenceSpace::schreier(), SequenceSpace::mixnorm()}) {
    for (Index n : {1, 2, 3, 5, 9, 16}) {
      SparseVector e;
      e.set(n, 1.0);
      CHECK(sp.norm(e) == doctest::Approx(1.0));
    }
  }
  // The difference norm charges both the entry jump and the terminal drop
  // once the support starts past position 1.
  auto d = SequenceSpace::difference();
  CHECK(d.norm(SparseVector{{1, 1.0}}) == doctest::Approx(1.0));
  for (Index n : {2, 3, 5, 9}) {
    SparseVector e;
    e.set(n, 1.0);
    CHECK(d.norm(e) == doctest::Approx(2.0));
  }
}

TEST_CASE("partial-sum constant is attained at 1") {
  auto sample = random_vectors(555, 40);
  for (const auto& sp :
       {SequenceSpace::summing(), SequenceSpace::difference(),
        SequenceSpace::schreier(), SequenceSpace::mixnorm()}) {
    double est = basis_constant_estimate(sp, sample);
    CHECK(est <= sp.basis_constant() + 1e-12);
    CHECK(est == doctest::Approx(1.0));
  }
}

TEST_CASE("space parsing round-trips") {
  CHECK(SequenceSpace::parse("lp:2").kind() == SpaceKind::Lp);
  CHECK(SequenceSpace::parse("lp:0.5").p() == doctest::Approx(0.5));
  CHECK(SequenceSpace::parse("summing").kind() == SpaceKind::SummingC0);
  CHECK(SequenceSpace::parse("difference").kind() == SpaceKind::DifferenceL1);
  CHECK(SequenceSpace::parse("schreier").kind() == SpaceKind::SchreierMod);
  CHECK(SequenceSpace::parse("mixnorm").kind() == SpaceKind::MixNorm);
  CHECK_THROWS(SequenceSpace::parse("banana"));
}
