#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lfk/floer.hpp"

using lfk::FibreFloerData;
using lfk::GradedSpace;
using lfk::Rational;
using lfk::TwistParams;

namespace {

const FibreFloerData kCp2{GradedSpace{{0, 1}, {-1, 1}}};
const FibreFloerData kRp2{GradedSpace{{0, 2}}};
const FibreFloerData kHp2{GradedSpace{{0, 1}, {-3, 1}}};

GradedSpace cp2_table(unsigned k) {
  GradedSpace g;
  for (int l = 0; l < static_cast<int>(k); ++l) {
    g.add_rank(-4 * l, 1);
    g.add_rank(-4 * l - 1, 1);
  }
  return g;
}

// Degreewise sum over the intersection points, written out independently.
GradedSpace naive_total(const GradedSpace& fibre, int s, unsigned k) {
  GradedSpace g;
  for (unsigned l = 0; l < k; ++l)
    for (const auto& [j, r] : fibre.ranks()) g.add_rank(j + static_cast<int>(l) * s, r);
  return g;
}

FibreFloerData random_fibre(std::mt19937_64& rng) {
  GradedSpace g;
  const int terms = 1 + rng() % 4;
  for (int i = 0; i < terms; ++i) g.add_rank(static_cast<int>(rng() % 9) - 6, 1 + rng() % 3);
  return {g};
}

}  // namespace

TEST_SUITE("floer_engine") {
  TEST_CASE("grading shifts") {
    CHECK(lfk::monodromy_shift(Rational(3, 2)) == 1);
    CHECK(lfk::monodromy_shift(Rational(3)) == -2);
    CHECK(lfk::monodromy_shift(Rational(2)) == 0);
    CHECK(lfk::winding_shift(Rational(3, 2)) == -1);
    CHECK(lfk::winding_shift(Rational(3)) == -4);
    CHECK(lfk::winding_shift(Rational(1)) == 0);
  }

  TEST_CASE("twist parameters are validated") {
    CHECK_THROWS_AS(TwistParams(Rational(0), 1), std::invalid_argument);
    CHECK_THROWS_AS(TwistParams(Rational(-3, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(TwistParams(Rational(4, 3), 1), std::invalid_argument);
    CHECK_NOTHROW(TwistParams(Rational(5, 2), 0));
  }

  TEST_CASE("E1 for the CP2 data, k = 3") {
    const auto page = lfk::build_e1(kCp2, TwistParams(Rational(3), 3));
    CHECK(page.totals() == GradedSpace{{0, 1}, {-1, 1}, {-4, 1}, {-5, 1}, {-8, 1}, {-9, 1}});
    CHECK(page.column(0) == kCp2.hf);
    CHECK(page.entries.count({-2, -2}) == 1);  // z_1, fibre degree 0: total -4
    CHECK(lfk::collapse_analysis(page).empty());
  }

  TEST_CASE("E1 for the RP2 data, k = 3") {
    const auto page = lfk::build_e1(kRp2, TwistParams(Rational(3, 2), 3));
    CHECK(page.totals() == GradedSpace{{0, 2}, {-1, 2}, {-2, 2}});
    const auto cands = lfk::collapse_analysis(page);
    CHECK(std::any_of(cands.begin(), cands.end(), [](const auto& c) { return c.r == 2; }));
  }

  TEST_CASE("k = 1 has one column equal to the fibre") {
    const auto page = lfk::build_e1(kRp2, TwistParams(Rational(3, 2), 1));
    CHECK(page.totals() == kRp2.hf);
    CHECK(lfk::collapse_analysis(page).empty());
    CHECK_THROWS_AS(lfk::build_e1(kRp2, TwistParams(Rational(3, 2), 0)), std::invalid_argument);
  }

  TEST_CASE("candidates have bidegree (r, 1 - r) and live on the page") {
    for (unsigned k = 2; k <= 6; ++k) {
      const auto page = lfk::build_e1(kRp2, TwistParams(Rational(3, 2), k));
      for (const auto& c : lfk::collapse_analysis(page)) {
        CHECK(c.target.first == c.source.first + c.r);
        CHECK(c.target.second == c.source.second - c.r + 1);
        CHECK(c.r >= 1);
        CHECK(c.r <= 2 * (static_cast<int>(k) - 1));
        CHECK(page.entries.count(c.source) == 1);
        CHECK(page.entries.count(c.target) == 1);
      }
    }
  }

  TEST_CASE("compute_hf on the CP2 data") {
    for (unsigned k = 0; k <= 6; ++k) {
      const auto res = lfk::compute_hf(kCp2, TwistParams(Rational(3), k));
      REQUIRE(std::holds_alternative<lfk::HFDetermined>(res));
      CHECK(std::get<lfk::HFDetermined>(res).total == cp2_table(k));
    }
  }

  TEST_CASE("compute_hf on the RP2 data is ambiguous from k = 2") {
    for (unsigned k = 2; k <= 6; ++k) {
      const auto res = lfk::compute_hf(kRp2, TwistParams(Rational(3, 2), k));
      REQUIRE(std::holds_alternative<lfk::HFAmbiguous>(res));
      const auto& amb = std::get<lfk::HFAmbiguous>(res);
      GradedSpace expected;
      for (int l = 0; l < static_cast<int>(k); ++l) expected.add_rank(-l, 2);
      CHECK(amb.upper == expected);
      CHECK(amb.lower.euler_characteristic() == amb.upper.euler_characteristic());
      for (const auto& [t, r] : amb.lower.ranks()) CHECK(r <= amb.upper.rank(t));
    }
  }

  TEST_CASE("HP2 data with |s| > 4 collapses") {
    const auto res = lfk::compute_hf(kHp2, TwistParams(Rational(4), 4));  // s = -6
    REQUIRE(std::holds_alternative<lfk::HFDetermined>(res));
    CHECK(std::get<lfk::HFDetermined>(res).total.total_rank() == 8);
  }

  TEST_CASE("properties over random fibre data") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
      const FibreFloerData fibre = random_fibre(rng);
      const Rational d(1 + static_cast<long>(rng() % 8), 2);
      const unsigned k = rng() % 7;
      const int s = lfk::winding_shift(d);
      const auto res = lfk::compute_hf(fibre, TwistParams(d, k));

      const auto once = lfk::compute_hf(fibre, TwistParams(d, 1));
      REQUIRE(std::holds_alternative<lfk::HFDetermined>(once));
      CHECK(std::get<lfk::HFDetermined>(once).total == fibre.hf);
      if (k >= 1) CHECK(lfk::build_e1(fibre, TwistParams(d, k)).column(0) == fibre.hf);
      if (const auto* det = std::get_if<lfk::HFDetermined>(&res)) {
        CHECK(det->total.total_rank() == k * fibre.hf.total_rank());
        CHECK(det->total == naive_total(fibre.hf, s, k));
      } else {
        const auto& amb = std::get<lfk::HFAmbiguous>(res);
        CHECK(!amb.candidates.empty());
        CHECK(amb.upper == naive_total(fibre.hf, s, k));
        CHECK(amb.lower.euler_characteristic() == amb.upper.euler_characteristic());
        CHECK(amb.lower.total_rank() < amb.upper.total_rank());
      }
    }
  }

  TEST_CASE("maximal cancellation on a hand-built page") {
    lfk::SpectralPage page;
    page.k = 2;
    page.entries[{-2, 1}] = 3;  // total -1
    page.entries[{0, 0}] = 1;   // total 0
    const auto cands = lfk::collapse_analysis(page);
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].r == 2);
    CHECK(lfk::maximal_cancellation_lower_bound(page, cands) == GradedSpace{{-1, 2}});
  }
}
