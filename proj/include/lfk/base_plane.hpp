#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lfk/rational.hpp"

namespace lfk {

struct PointQ {
  Rational x;
  Rational y;
  friend bool operator==(const PointQ&, const PointQ&) = default;
};

struct Point2 {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

Point2 to_point2(const PointQ& p);

// Critical values of the fibration inside D_{R-2eps}; the twist b_{2pi} is
// supported in the annulus D_R \ D_{R-2eps}.
class CriticalConfig {
public:
  CriticalConfig(std::vector<PointQ> critical_points, Rational radius, Rational epsilon);

  const std::vector<PointQ>& critical_points() const { return points_; }
  const Rational& radius() const { return radius_; }
  const Rational& epsilon() const { return epsilon_; }
  Rational inner_radius() const { return radius_ - 2 * epsilon_; }
  std::size_t size() const { return points_.size(); }

private:
  std::vector<PointQ> points_;
  Rational radius_;
  Rational epsilon_;
};

// Combinatorial vanishing path: the critical value it starts at, the height of
// its horizontal end, and how many times b_{2pi} has been applied.
struct VanishingPath {
  std::size_t critical_index = 0;
  Rational height;
  unsigned winding = 0;
  friend bool operator==(const VanishingPath&, const VanishingPath&) = default;
};

// Throws std::invalid_argument on repeated heights, repeated critical indices
// or nonzero windings.
void validate_basis(const std::vector<VanishingPath>& basis);

struct Polyline {
  std::vector<Point2> vertices;
  bool closed = false;

  Polyline() = default;
  Polyline(std::vector<Point2> vertices, bool closed);

  std::size_t segment_count() const;
  std::pair<Point2, Point2> segment(std::size_t i) const;
};

struct IntersectionDiagram {
  std::vector<std::string> labels;  // z_0 (innermost) .. z_{k-1}
  std::vector<int> degrees;         // deg(z_l) = -2l

  std::size_t size() const { return labels.size(); }
};

enum class LoopKind { Type1, Type2, SingularSphere };

struct LoopClass {
  std::vector<long> windings;  // per critical value
  LoopKind kind = LoopKind::Type2;
};

std::string to_string(LoopKind kind);
// Minimal Maslov index of the associated S^1 x S^3: 4 for Type1, 2 for Type2,
// none for the immersed sphere.
std::optional<int> minimal_maslov_index(LoopKind kind);

VanishingPath twist_path(const VanishingPath& path, unsigned k);

// Intersection points of b_{2pi}^k(gamma_alpha) with a basis path gamma_beta;
// degrees are assigned by formula, z_0 in degree 0.
IntersectionDiagram intersections(const VanishingPath& twisted, const VanishingPath& other);

// Geometric realization, from the critical value outwards:
//   - horizontal segment at height Im(w) to the circle of radius R - 2eps,
//   - angular alignment to the exit angle asin(height / R) across
//     [R - 2eps, R - eps],
//   - the twist profile across [R - eps, R], turning `winding` times
//     anticlockwise towards the inside,
//   - horizontal ray at `height`, truncated at x = 2R.
// Paths of a basis are disjoint when the order of the heights matches the
// order of Im(w) and these are pairwise distinct.
Polyline realize_polyline(const VanishingPath& path, const CriticalConfig& config, int resolution);

// Net number of turns of an open polyline about a point (real-valued).
double net_turns(const Polyline& line, const Point2& about);
// Winding number of a closed polyline about a point off the curve.
long winding_number(const Polyline& loop, const Point2& about);
// Number of (segment, segment) pairs that meet, with exact predicates.
std::size_t count_segment_intersections(const Polyline& a, const Polyline& b);

constexpr double kThroughCriticalTolerance = 1e-9;

LoopClass classify_loop(const Polyline& loop, const CriticalConfig& config, std::size_t about);

}  // namespace lfk
