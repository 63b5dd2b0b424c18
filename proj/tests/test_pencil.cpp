#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lfk/pencil.hpp"

using lfk::PencilData;

TEST_SUITE("pencil_toolkit") {
  TEST_CASE("Euler relation examples") {
    CHECK(lfk::euler_solve({3, 2, 4, 2, std::nullopt}) == 3);  // conics on CP2
    CHECK(lfk::euler_solve({4, 4, 0, 3, std::nullopt}) == 4);  // quadrics on CP3
    CHECK(lfk::euler_solve({9, 6, std::nullopt, 4, 3}) == 6);  // (1,1) on CP2 x CP2
  }

  TEST_CASE("Euler relation errors") {
    CHECK_THROWS_AS(lfk::euler_solve({3, 2, 4, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(lfk::euler_solve({3, std::nullopt, 4, 2, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(lfk::euler_solve({3, 2, 4, std::nullopt, 3}), std::invalid_argument);
    CHECK_THROWS_AS(lfk::euler_solve({4, std::nullopt, 0, 2, 1}), std::invalid_argument);  // 2 chi_sigma = 3
    CHECK_THROWS_AS(lfk::euler_solve({-10, 2, 4, 2, std::nullopt}), std::invalid_argument);
  }

  TEST_CASE("solutions substitute back") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 500; ++t) {
      PencilData p{static_cast<long long>(rng() % 40) - 20, static_cast<long long>(rng() % 40) - 20,
                   static_cast<long long>(rng() % 40) - 20, 1 + static_cast<long long>(rng() % 6),
                   static_cast<long long>(rng() % 20)};
      const int unknown = static_cast<int>(rng() % 4);
      PencilData q = p;
      if (unknown == 0) q.chi_x.reset();
      if (unknown == 1) q.chi_sigma.reset();
      if (unknown == 2) q.chi_b.reset();
      if (unknown == 3) q.crit_count.reset();
      long long value = 0;
      try {
        value = lfk::euler_solve(q);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (unknown == 0) q.chi_x = value;
      if (unknown == 1) q.chi_sigma = value;
      if (unknown == 2) q.chi_b = value;
      if (unknown == 3) q.crit_count = value;
      CHECK(lfk::euler_relation_holds(q));
    }
  }

  TEST_CASE("genus of bidegree curves") {
    CHECK(lfk::genus_bidegree(2, 2) == 1);
    CHECK(lfk::genus_bidegree(1, 1) == 0);
    CHECK(lfk::genus_bidegree(3, 2) == 2);
    CHECK_THROWS_AS(lfk::genus_bidegree(0, 2), std::invalid_argument);
  }

  TEST_CASE("del Pezzo candidates") {
    CHECK(lfk::del_pezzo_candidates(6) == std::vector<std::string>{"CP2#3-CP2"});
    CHECK(lfk::del_pezzo_candidates(4) == std::vector<std::string>{"CP2#1-CP2", "CP1xCP1"});
    CHECK(lfk::del_pezzo_candidates(3) == std::vector<std::string>{"CP2"});
    for (int r = 0; r <= 8; ++r) {
      const auto c = lfk::del_pezzo_candidates(3 + r);
      const std::string blowup = r == 0 ? "CP2" : "CP2#" + std::to_string(r) + "-CP2";
      CHECK(std::find(c.begin(), c.end(), blowup) != c.end());
    }
    CHECK_THROWS_AS(lfk::del_pezzo_candidates(2), std::invalid_argument);
    CHECK_THROWS_AS(lfk::del_pezzo_candidates(12), std::invalid_argument);
  }

  TEST_CASE("Euler characteristic of blow-ups is additive") {
    // chi(CP2) = 3 from the cellular table; each blow-up adds one.
    long long chi_cp2 = 0;
    const auto ranks = lfk::cellular_ranks("CP2");
    for (std::size_t i = 0; i < ranks.size(); ++i) chi_cp2 += (i % 2 ? -1 : 1) * static_cast<long long>(ranks[i]);
    CHECK(chi_cp2 == 3);
    CHECK(lfk::del_pezzo_candidates(chi_cp2 + 1).front() == "CP2#1-CP2");
  }

  TEST_CASE("filling descriptors") {
    const auto rp2 = lfk::filling_descriptor("rp2");
    CHECK(rp2.alternative.name == "O_CP1(-4)");
    CHECK(rp2.alternative.note == "rational blowdown");
    CHECK(rp2.alternative.ranks == std::vector<std::size_t>{1, 0, 1});
    CHECK(rp2.standard.ranks == std::vector<std::size_t>{1});

    const auto rp3 = lfk::filling_descriptor("rp3");
    CHECK(rp3.alternative.ranks == std::vector<std::size_t>{1, 0, 2, 0, 1});
    CHECK(rp3.alternative.ranks[4] == 1);
    CHECK(!rp3.alternative.exact);
    CHECK(rp3.flags.size() == 1);

    const auto cp2 = lfk::filling_descriptor("cp2");
    CHECK(!cp2.alternative.exact);
    CHECK(cp2.alternative.ranks == std::vector<std::size_t>{1, 0, 2, 0, 2, 0, 1});

    for (const char* s : {"rp2", "rp3", "cp2"}) {
      const auto f = lfk::filling_descriptor(s);
      CHECK(f.alternative.ranks == lfk::cellular_ranks(f.alternative.base));
    }
    CHECK_THROWS_AS(lfk::filling_descriptor("hp2"), std::invalid_argument);
  }

  TEST_CASE("matrix model examples") {
    using C = std::complex<double>;
    const std::vector<C> zero(3, C(0));
    const auto s0 = lfk::check_matrix_sample(zero, zero, 1e-9);
    CHECK(s0.passed);
    CHECK(s0.shifted_rank == 0);

    const std::vector<C> e1{1, 0, 0}, e2{0, 1, 0};
    const auto s1 = lfk::check_matrix_sample(e1, e2, 1e-9);
    CHECK(s1.passed);
    CHECK(s1.shifted_rank == 1);

    const auto report = lfk::matrix_model_check(2, 100, 1, 1e-9);
    CHECK(report.samples.size() == 100);
    CHECK(report.all_passed());
    CHECK_THROWS_AS(lfk::matrix_model_check(1, 10, 1, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(lfk::matrix_model_check(2, 0, 1, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(lfk::matrix_model_check(2, 10, 1, 0), std::invalid_argument);
  }

  TEST_CASE("the 1/n factor would not be traceless") {
    // Oracle for the trace factor: tr(x y^T) = x.y, so only 1/(n+1) cancels it
    // on (n+1) x (n+1) matrices.
    using C = std::complex<double>;
    const std::vector<C> x{1, 2, 0}, y{1, 1, 0};
    const C dot = 3.0;
    const C trace_with_n = dot - 3.0 * dot / 2.0;
    CHECK(std::abs(trace_with_n) > 1);
    CHECK(lfk::check_matrix_sample(x, y, 1e-9).trace_abs < 1e-12);
  }

  TEST_CASE("complex rank") {
    using C = std::complex<double>;
    CHECK(lfk::complex_rank({1, 2, 2, 4}, 2, 2, 1e-9) == 1);
    CHECK(lfk::complex_rank({1, 0, 0, C(0, 1)}, 2, 2, 1e-9) == 2);
    CHECK(lfk::complex_rank({0, 0, 0, 0}, 2, 2, 1e-9) == 0);
  }
}
