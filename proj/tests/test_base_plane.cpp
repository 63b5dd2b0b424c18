#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "lfk/base_plane.hpp"

using lfk::CriticalConfig;
using lfk::LoopKind;
using lfk::Point2;
using lfk::PointQ;
using lfk::Polyline;
using lfk::Rational;
using lfk::VanishingPath;

namespace {

CriticalConfig three_points() {
  return CriticalConfig({{Rational(-1, 4), Rational(-1)}, {Rational(1, 4), Rational(0)}, {Rational(-1, 4), Rational(1)}},
                        Rational(5), Rational(1, 2));
}

Polyline circle(Point2 c, double r, int n = 128) {
  std::vector<Point2> v;
  for (int i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * i / n;
    v.push_back({c.x + r * std::cos(t), c.y + r * std::sin(t)});
  }
  return Polyline(v, true);
}

// Random configuration with distinct heights, points strictly inside the
// inner disc.
CriticalConfig random_config(std::mt19937_64& rng) {
  const long R = 3 + static_cast<long>(rng() % 6);
  const Rational eps(1 + static_cast<long>(rng() % 4), 4);
  const Rational inner = Rational(R) - 2 * eps;
  const std::size_t m = 2 + rng() % 4;
  std::set<Rational> heights;
  std::vector<PointQ> pts;
  while (pts.size() < m) {
    const Rational x(static_cast<long>(rng() % 201) - 100, 100);
    const Rational y(static_cast<long>(rng() % 201) - 100, 100);
    const PointQ p{x * inner * Rational(7, 10), y * inner * Rational(7, 10)};
    if (heights.insert(p.y).second) pts.push_back(p);
  }
  return CriticalConfig(pts, Rational(R), eps);
}

}  // namespace

TEST_SUITE("base_plane") {
  TEST_CASE("twist_path") {
    const VanishingPath g{1, Rational(2), 0};
    CHECK(lfk::twist_path(g, 3).winding == 3);
    CHECK(lfk::twist_path(g, 3).critical_index == 1);
    CHECK(lfk::twist_path(g, 3).height == Rational(2));
    const VanishingPath g1{1, Rational(2), 1};
    CHECK(lfk::twist_path(g1, 0) == g1);
    CHECK(lfk::twist_path(lfk::twist_path(g, 2), 1) == lfk::twist_path(g, 3));
  }

  TEST_CASE("intersection diagrams") {
    const VanishingPath alpha{2, Rational(1), 0}, beta{0, Rational(-1), 0};
    const auto d3 = lfk::intersections(lfk::twist_path(alpha, 3), beta);
    CHECK(d3.size() == 3);
    CHECK(d3.degrees == std::vector<int>{0, -2, -4});
    CHECK(d3.labels == std::vector<std::string>{"z0", "z1", "z2"});
    CHECK(lfk::intersections(alpha, beta).size() == 0);
    CHECK(lfk::intersections(lfk::twist_path(alpha, 5), beta).degrees == std::vector<int>{0, -2, -4, -6, -8});
    CHECK_THROWS_AS(lfk::intersections(alpha, VanishingPath{2, Rational(0), 0}), std::invalid_argument);
    CHECK_THROWS_AS(lfk::intersections(alpha, lfk::twist_path(beta, 1)), std::invalid_argument);
    CHECK_THROWS_AS(lfk::intersections(alpha, VanishingPath{0, Rational(1), 0}), std::invalid_argument);
  }

  TEST_CASE("basis validation") {
    CHECK_NOTHROW(lfk::validate_basis({{0, Rational(0), 0}, {1, Rational(1), 0}}));
    CHECK_THROWS_AS(lfk::validate_basis({{0, Rational(1), 0}, {1, Rational(1), 0}}), std::invalid_argument);
    CHECK_THROWS_AS(lfk::validate_basis({{0, Rational(0), 0}, {0, Rational(1), 0}}), std::invalid_argument);
    CHECK_THROWS_AS(lfk::validate_basis({{0, Rational(0), 1}}), std::invalid_argument);
  }

  TEST_CASE("config validation") {
    CHECK_THROWS_AS(CriticalConfig({{Rational(0), Rational(0)}}, Rational(4), Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(CriticalConfig({{Rational(3), Rational(0)}}, Rational(4), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(CriticalConfig({{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}, Rational(4), Rational(1)),
                    std::invalid_argument);
  }

  TEST_CASE("untwisted realization is monotone with no net turning") {
    const auto config = three_points();
    const auto line = lfk::realize_polyline({1, Rational(0), 0}, config, 32);
    for (std::size_t i = 0; i + 1 < line.vertices.size(); ++i) CHECK(line.vertices[i + 1].x < line.vertices[i].x);
    CHECK(std::abs(lfk::net_turns(line, {0, 0})) < 0.25);
    CHECK_THROWS_AS(lfk::realize_polyline({1, Rational(0), 0}, config, 8), std::invalid_argument);
  }

  TEST_CASE("twisted realization turns once per twist") {
    const auto config = three_points();
    const Point2 origin{0, 0};
    const VanishingPath g{2, Rational(1), 0};
    const double base = lfk::net_turns(lfk::realize_polyline(g, config, 32), origin);
    for (unsigned k = 1; k <= 4; ++k) {
      const double turns = lfk::net_turns(lfk::realize_polyline(lfk::twist_path(g, k), config, 32), origin);
      CHECK(turns - base == doctest::Approx(static_cast<double>(k)).epsilon(1e-9));
    }
  }

  TEST_CASE("basis paths are pairwise disjoint") {
    const auto config = three_points();
    std::vector<Polyline> lines;
    for (std::size_t i = 0; i < 3; ++i) {
      lines.push_back(lfk::realize_polyline({i, config.critical_points()[i].y, 0}, config, 32));
    }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) CHECK(lfk::count_segment_intersections(lines[i], lines[j]) == 0);
  }

  TEST_CASE("geometric count matches the diagram on random configurations") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
      const CriticalConfig config = random_config(rng);
      std::size_t top = 0, bottom = 0;
      for (std::size_t i = 0; i < config.size(); ++i) {
        if (config.critical_points()[i].y > config.critical_points()[top].y) top = i;
        if (config.critical_points()[i].y < config.critical_points()[bottom].y) bottom = i;
      }
      const VanishingPath alpha{top, config.critical_points()[top].y, 0};
      const VanishingPath beta{bottom, config.critical_points()[bottom].y, 0};
      const Polyline beta_line = lfk::realize_polyline(beta, config, 24);
      for (unsigned k = 0; k <= 8; ++k) {
        const auto twisted = lfk::twist_path(alpha, k);
        const std::size_t geometric =
            lfk::count_segment_intersections(lfk::realize_polyline(twisted, config, 24), beta_line);
        CHECK(geometric == lfk::intersections(twisted, beta).size());
        CHECK(geometric == k);
      }
    }
  }

  TEST_CASE("winding numbers") {
    const Polyline square({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, true);
    CHECK(lfk::winding_number(square, {0, 0}) == 1);
    CHECK(lfk::winding_number(square, {3, 0}) == 0);
    const Polyline reversed({{-1, 1}, {1, 1}, {1, -1}, {-1, -1}}, true);
    CHECK(lfk::winding_number(reversed, {0, 0}) == -1);
    CHECK_THROWS_AS(lfk::winding_number(Polyline({{0, 0}, {1, 0}}, false), {0, 0}), std::invalid_argument);
  }

  TEST_CASE("loop classification examples") {
    const CriticalConfig one({{Rational(0), Rational(0)}}, Rational(4), Rational(1));
    auto c1 = lfk::classify_loop(circle({0, 0}, 1), one, 0);
    CHECK(c1.kind == LoopKind::Type1);
    CHECK(c1.windings == std::vector<long>{1});
    CHECK(lfk::classify_loop(circle({1.5, 0}, 0.5), one, 0).kind == LoopKind::Type2);
    const Polyline through({{0, 0}, {1, 0}, {1, 1}}, true);
    CHECK(lfk::classify_loop(through, one, 0).kind == LoopKind::SingularSphere);
    CHECK(lfk::minimal_maslov_index(LoopKind::Type1) == 4);
    CHECK(lfk::minimal_maslov_index(LoopKind::Type2) == 2);
    CHECK(!lfk::minimal_maslov_index(LoopKind::SingularSphere).has_value());
    CHECK_THROWS_AS(lfk::classify_loop(Polyline({{0, 0}, {1, 0}}, false), one, 0), std::invalid_argument);
  }

  TEST_CASE("classification uses the chosen critical value") {
    const auto config = three_points();
    const Polyline loop = circle({-0.25, 1}, 0.5);  // encloses only point 2
    CHECK(lfk::classify_loop(loop, config, 2).kind == LoopKind::Type1);
    CHECK(lfk::classify_loop(loop, config, 0).kind == LoopKind::Type2);
    CHECK(lfk::classify_loop(loop, config, 0).windings == std::vector<long>{0, 0, 1});
  }

  TEST_CASE("winding numbers are invariant under refinement") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int t = 0; t < 100; ++t) {
      std::vector<Point2> v;
      for (int i = 0; i < 6; ++i) v.push_back({u(rng), u(rng)});
      const Polyline loop(v, true);
      std::vector<Point2> fine;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2 a = v[i], b = v[(i + 1) % v.size()];
        fine.push_back(a);
        fine.push_back({a.x + 0.37 * (b.x - a.x), a.y + 0.37 * (b.y - a.y)});
      }
      const Point2 p{u(rng), u(rng)};
      CHECK(lfk::winding_number(loop, p) == lfk::winding_number(Polyline(fine, true), p));
    }
  }
}
