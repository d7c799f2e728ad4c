#include <doctest.h>

#include <cmath>

#include "greedylab/democracy.hpp"

using namespace greedylab;

TEST_CASE("summing democracy endpoints") {
  auto sp = SequenceSpace::summing();
  for (std::size_t m = 1; m <= 6; ++m) {
    CHECK(h_right(sp, m, 12).value == doctest::Approx(m));   // constant block
    CHECK(h_left(sp, m, 12).value == doctest::Approx(1.0));  // alternating
  }
  // Restricted: any m beyond u still admits an alternating pattern of norm 1.
  CHECK(h_restricted(sp, 3, 5, Side::Right, 24).value == doctest::Approx(1.0));
  // Left-restricted sup with m = u forces the full interval.
  CHECK(h_restricted(sp, 4, 4, Side::Left, 12).value == doctest::Approx(4.0));
}

TEST_CASE("difference restricted democracy closed formulas") {
  auto sp = SequenceSpace::difference();
  // Unsigned left sup over plain indicators:
  //   2(u - m) + 1 if u >= 2m,  2u - 2m + 1... the spread pattern; and the
  //   packed value 2m - 1 when m = u.  Checked against direct enumeration.
  for (Index u = 1; u <= 10; ++u) {
    for (std::size_t m = 1; m <= static_cast<std::size_t>(u); ++m) {
      double got =
          h_restricted(sp, m, u, Side::Left, 12, 2000000, SignMode::Unsigned)
              .value;
      double expect;
      const double mm = static_cast<double>(m);
      if (2 * mm <= u)
        expect = 2.0 * mm;                  // fully spread inside [1, u]
      else
        expect = 2.0 * (u - mm) + 1.0;      // forced overlaps
      CHECK(got == doctest::Approx(expect));
    }
  }
  // Signed right inf is the constant block of value 2 (TV of a constant run
  // ending at zero plus the entry jump).
  for (std::size_t m = 1; m <= 5; ++m) {
    CHECK(h_restricted(sp, m, 6, Side::Right, 40).value ==
          doctest::Approx(2.0));
  }
}

TEST_CASE("schreier democracy scales like sqrt at the left end") {
  auto sp = SequenceSpace::schreier();
  CHECK(h_right(sp, 4, 40).value == doctest::Approx(4.0));
  // Packing m = 4 into [1, 4]: admissible subsets need sqrt(min F) >= |F|,
  // so only singletons qualify and the sup is 1.
  CHECK(h_restricted(sp, 4, 4, Side::Left, 12).value == doctest::Approx(1.0));
  // One more column of room admits {4, 5}.
  CHECK(h_restricted(sp, 4, 5, Side::Left, 12).value == doctest::Approx(2.0));
  // Beyond u = m^2 the full block is admissible.
  CHECK(h_restricted(sp, 3, 9, Side::Right, 40).value == doctest::Approx(3.0));
}

TEST_CASE("mixnorm democracy gap") {
  auto sp = SequenceSpace::mixnorm();
  // h_r(N) = sqrt(N) via spread even-free sets; h_l(N) ~ sqrt(N / ln N).
  for (std::size_t m : {4, 9, 16}) {
    double hr = h_right(sp, m, 200).value;
    double hl = h_left(sp, m, 200).value;
    CHECK(hr == doctest::Approx(std::sqrt(static_cast<double>(m)))
                    .epsilon(1e-6));
    CHECK(hl < hr);
    double pred = std::sqrt(static_cast<double>(m)) /
                  std::sqrt(std::log(static_cast<double>(m) + 1.0));
    CHECK(hl / pred > 0.5);
    CHECK(hl / pred < 2.0);
  }
}

TEST_CASE("witnesses re-evaluate to the reported value") {
  for (const auto& sp :
       {SequenceSpace::summing(), SequenceSpace::difference(),
        SequenceSpace::schreier(), SequenceSpace::mixnorm()}) {
    for (std::size_t m : {2, 3, 5}) {
      auto r = h_right(sp, m, 20);
      CHECK(sp.norm(r.witness) == doctest::Approx(r.value));
      auto l = h_left(sp, m, 20);
      CHECK(sp.norm(l.witness) == doctest::Approx(l.value));
      CHECK(l.witness.size() == m);
    }
  }
}

TEST_CASE("super-democracy ratios") {
  // lp(2) is 1-democratic.
  CHECK(superdemocracy_ratio(SequenceSpace::lp(2), 5, 15) ==
        doctest::Approx(1.0));
  // Summing: h_r(m)/h_l(m) = m.
  CHECK(superdemocracy_ratio(SequenceSpace::summing(), 5, 15) ==
        doctest::Approx(5.0));
  // Conservative comparison never reverses for lp.
  CHECK(superconservative_ratio(SequenceSpace::lp(2), 4, 24) ==
        doctest::Approx(1.0));
}

TEST_CASE("property W holds with constant 1 on the bundled spaces") {
  for (const auto& sp :
       {SequenceSpace::summing(), SequenceSpace::difference(),
        SequenceSpace::schreier(), SequenceSpace::mixnorm()}) {
    auto rep = check_property_w(sp, 4, 8, 70);
    CHECK(rep.holds);
    CHECK(rep.constant == doctest::Approx(1.0));
    for (const auto& [key, wit] : rep.witnesses) {
      CHECK(wit.size() == key.first);
    }
  }
}

TEST_CASE("property W* finds compact low-norm sets") {
  auto s = check_property_wstar(SequenceSpace::summing(), 6, 60);
  CHECK(s.holds);
  CHECK(s.c1 == doctest::Approx(1.0));
  CHECK(s.c2 <= 1.0 + 1e-9);

  auto d = check_property_wstar(SequenceSpace::difference(), 6, 60);
  CHECK(d.holds);
  CHECK(d.c1 == doctest::Approx(1.0));

  auto m = check_property_wstar(SequenceSpace::mixnorm(), 6, 60);
  CHECK(m.holds);
  CHECK(m.c1 <= 2.0);
  CHECK(m.c2 <= 1.1);
}

TEST_CASE("property I with the per-space characteristic") {
  auto sch = SequenceSpace::schreier();
  auto psi_s = [](std::size_t m) {
    Index v = static_cast<Index>(m) * static_cast<Index>(m) - 1;
    return v < 1 ? Index{1} : v;
  };
  auto rs = check_property_i(sch, psi_s, 2, 8, 80);
  CHECK(rs.holds);

  auto mix = SequenceSpace::mixnorm();
  auto psi_m = [](std::size_t m) { return static_cast<Index>(m); };
  auto rm = check_property_i(mix, psi_m, 2, 8, 80);
  CHECK(rm.holds);

  auto sum = SequenceSpace::summing();
  auto psi_1 = [](std::size_t m) { return static_cast<Index>(m); };
  auto ru = check_property_i(sum, psi_1, 2, 8, 80);
  CHECK(ru.holds);
  CHECK(ru.part1_worst <= 1.0 + 1e-9);
}

TEST_CASE("characteristic psi values") {
  // lp: perfectly democratic, psi(m) = m.
  CHECK(characteristic_psi(SequenceSpace::lp(2), 3, 100) == 3);
  // Schreier: the left-restricted value reaches h_r(m)/2 once u covers the
  // admissibility threshold.
  CHECK(characteristic_psi(SequenceSpace::schreier(), 3, 200) ==
        doctest::Approx(5));
  // Difference: h_r(3) = 6 (signed), and 2 h_Rl(3, u) >= 6 first holds at the
  // computed threshold below; the signed sup at u = 3 is already 5.
  Index d = characteristic_psi(SequenceSpace::difference(), 3, 200);
  CHECK(d == 3);
}

TEST_CASE("structured fallback reports non-exhaustive searches honestly") {
  auto sp = SequenceSpace::summing();
  auto r = h_right(sp, 6, 400, /*budget=*/50);
  CHECK_FALSE(r.exhaustive);
  // The structured candidates still find the exact constant block.
  CHECK(r.value == doctest::Approx(6.0));
  CHECK(sp.norm(r.witness) == doctest::Approx(r.value));
}
