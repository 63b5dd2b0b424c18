#include "lfk/base_plane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace lfk {

Point2 to_point2(const PointQ& p) { return {p.x.get_d(), p.y.get_d()}; }

CriticalConfig::CriticalConfig(std::vector<PointQ> critical_points, Rational radius, Rational epsilon)
    : points_(std::move(critical_points)), radius_(std::move(radius)), epsilon_(std::move(epsilon)) {
  if (radius_ <= 0) throw std::invalid_argument("radius R must be positive");
  if (!(epsilon_ > 0 && 2 * epsilon_ < radius_)) throw std::invalid_argument("need 0 < eps < R/2");
  const Rational inner = inner_radius();
  const Rational inner_sq = inner * inner;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.x * p.x + p.y * p.y >= inner_sq) {
      throw std::invalid_argument("critical point " + std::to_string(i) + " not inside D_{R-2eps}");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[j] == p) throw std::invalid_argument("critical points must be distinct");
    }
  }
}

void validate_basis(const std::vector<VanishingPath>& basis) {
  std::set<Rational> heights;
  std::set<std::size_t> indices;
  for (const auto& p : basis) {
    if (p.winding != 0) throw std::invalid_argument("basis paths must have winding 0");
    if (!heights.insert(p.height).second) throw std::invalid_argument("basis paths need distinct heights");
    if (!indices.insert(p.critical_index).second) {
      throw std::invalid_argument("basis paths need distinct critical values");
    }
  }
}

Polyline::Polyline(std::vector<Point2> verts, bool is_closed) : vertices(std::move(verts)), closed(is_closed) {
  if (vertices.size() < 2) throw std::invalid_argument("polyline needs at least two vertices");
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (vertices[i] == vertices[i + 1]) throw std::invalid_argument("consecutive polyline vertices coincide");
  }
  if (closed && vertices.front() == vertices.back()) {
    throw std::invalid_argument("closed polyline repeats its first vertex");
  }
}

std::size_t Polyline::segment_count() const {
  if (vertices.size() < 2) return 0;
  return closed ? vertices.size() : vertices.size() - 1;
}

std::pair<Point2, Point2> Polyline::segment(std::size_t i) const {
  return {vertices[i], vertices[(i + 1) % vertices.size()]};
}

std::string to_string(LoopKind kind) {
  switch (kind) {
    case LoopKind::Type1: return "type1";
    case LoopKind::Type2: return "type2";
    case LoopKind::SingularSphere: return "singular_sphere";
  }
  return "?";
}

std::optional<int> minimal_maslov_index(LoopKind kind) {
  switch (kind) {
    case LoopKind::Type1: return 4;
    case LoopKind::Type2: return 2;
    case LoopKind::SingularSphere: return std::nullopt;
  }
  return std::nullopt;
}

VanishingPath twist_path(const VanishingPath& path, unsigned k) {
  VanishingPath out = path;
  out.winding += k;
  return out;
}

IntersectionDiagram intersections(const VanishingPath& twisted, const VanishingPath& other) {
  if (twisted.critical_index == other.critical_index) {
    throw std::invalid_argument("intersections: both paths end at the same critical value");
  }
  if (other.winding != 0) throw std::invalid_argument("intersections: second path must be a basis path");
  if (twisted.height == other.height) throw std::invalid_argument("intersections: paths share a height");
  IntersectionDiagram diagram;
  for (unsigned l = 0; l < twisted.winding; ++l) {
    diagram.labels.push_back("z" + std::to_string(l));
    diagram.degrees.push_back(-2 * static_cast<int>(l));
  }
  return diagram;
}

Polyline realize_polyline(const VanishingPath& path, const CriticalConfig& config, int resolution) {
  if (resolution < 16) throw std::invalid_argument("realize_polyline: resolution must be at least 16");
  if (path.critical_index >= config.size()) throw std::invalid_argument("realize_polyline: bad critical index");

  const double R = config.radius().get_d();
  const double eps = config.epsilon().get_d();
  const double inner = R - 2 * eps;
  const double lambda = path.height.get_d();
  if (std::abs(lambda) >= R) throw std::invalid_argument("realize_polyline: |height| must be below R");
  const Point2 w = to_point2(config.critical_points()[path.critical_index]);

  constexpr double two_pi = 2 * std::numbers::pi;
  const double exit_angle = std::asin(lambda / R);
  const double entry_angle = std::asin(w.y / inner);
  const double turns = static_cast<double>(path.winding);
  auto polar = [](double r, double a) { return Point2{r * std::cos(a), r * std::sin(a)}; };

  std::vector<Point2> v;
  v.push_back({2 * R, lambda});
  v.push_back({std::sqrt(R * R - lambda * lambda), lambda});

  // Twist profile: smoothstep in the radial parameter.
  const int twist_steps = resolution * std::max(1, static_cast<int>(path.winding));
  for (int s = 1; s <= twist_steps; ++s) {
    const double t = static_cast<double>(s) / twist_steps;
    const double profile = t * t * (3 - 2 * t);
    v.push_back(polar(R - t * eps, exit_angle + two_pi * turns * profile));
  }
  const int align_steps = resolution / 2;
  for (int s = 1; s <= align_steps; ++s) {
    const double u = static_cast<double>(s) / align_steps;
    v.push_back(polar(R - eps - u * eps, exit_angle + two_pi * turns + u * (entry_angle - exit_angle)));
  }
  v.back() = {std::sqrt(inner * inner - w.y * w.y), w.y};
  v.push_back(w);
  return Polyline(std::move(v), false);
}

double net_turns(const Polyline& line, const Point2& about) {
  double total = 0;
  for (std::size_t i = 0; i < line.segment_count(); ++i) {
    const auto [p, q] = line.segment(i);
    const double a0 = std::atan2(p.y - about.y, p.x - about.x);
    const double a1 = std::atan2(q.y - about.y, q.x - about.x);
    double d = a1 - a0;
    while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
    while (d < -std::numbers::pi) d += 2 * std::numbers::pi;
    total += d;
  }
  return total / (2 * std::numbers::pi);
}

namespace {

// Sign of (b - a) x (c - a), exact on the double inputs.
int orient(const Point2& a, const Point2& b, const Point2& c) {
  const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const Rational det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return sgn(det);
}

bool on_segment(const Point2& p, const Point2& q, const Point2& r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

bool segments_meet(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2) {
  if (std::max(p1.x, p2.x) < std::min(q1.x, q2.x) || std::max(q1.x, q2.x) < std::min(p1.x, p2.x) ||
      std::max(p1.y, p2.y) < std::min(q1.y, q2.y) || std::max(q1.y, q2.y) < std::min(p1.y, p2.y)) {
    return false;
  }
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

double distance_to_segment(const Point2& p, const Point2& a, const Point2& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

}  // namespace

long winding_number(const Polyline& loop, const Point2& about) {
  if (!loop.closed) throw std::invalid_argument("winding_number: polyline is not closed");
  long wn = 0;
  for (std::size_t i = 0; i < loop.segment_count(); ++i) {
    const auto [a, b] = loop.segment(i);
    if (a.y <= about.y) {
      if (b.y > about.y && orient(a, b, about) > 0) ++wn;
    } else {
      if (b.y <= about.y && orient(a, b, about) < 0) --wn;
    }
  }
  return wn;
}

std::size_t count_segment_intersections(const Polyline& a, const Polyline& b) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.segment_count(); ++i) {
    const auto [p1, p2] = a.segment(i);
    for (std::size_t j = 0; j < b.segment_count(); ++j) {
      const auto [q1, q2] = b.segment(j);
      if (segments_meet(p1, p2, q1, q2)) ++count;
    }
  }
  return count;
}

LoopClass classify_loop(const Polyline& loop, const CriticalConfig& config, std::size_t about) {
  if (!loop.closed) throw std::invalid_argument("classify_loop: loop must be closed");
  if (about >= config.size()) throw std::invalid_argument("classify_loop: bad critical index");

  LoopClass out;
  bool through = false;
  for (const auto& cq : config.critical_points()) {
    const Point2 c = to_point2(cq);
    for (std::size_t i = 0; i < loop.segment_count() && !through; ++i) {
      const auto [a, b] = loop.segment(i);
      through = distance_to_segment(c, a, b) < kThroughCriticalTolerance;
    }
    out.windings.push_back(through ? 0 : winding_number(loop, c));
    if (through) break;
  }
  if (through) {
    out.windings.assign(config.size(), 0);
    out.kind = LoopKind::SingularSphere;
    return out;
  }
  out.kind = out.windings[about] != 0 ? LoopKind::Type1 : LoopKind::Type2;
  return out;
}

}  // namespace lfk
