#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lfk/report.hpp"

namespace lfk {

namespace {

struct View {
  double scale = 1;
  double x0 = 0;  // world x at the left edge
  double y0 = 0;  // world y at the top edge
  double px(double x) const { return (x - x0) * scale; }
  double py(double y) const { return (y0 - y) * scale; }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (std::abs(v) < 0.005 ? 0.0 : v);
  return os.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string points_attr(const Polyline& line, const View& v) {
  std::string s;
  for (const auto& p : line.vertices) {
    if (!s.empty()) s += ' ';
    s += fmt(v.px(p.x)) + "," + fmt(v.py(p.y));
  }
  return s;
}

// Crossing points of two polylines, for placing labels only.
std::vector<Point2> crossing_points(const Polyline& a, const Polyline& b) {
  std::vector<Point2> out;
  for (std::size_t i = 0; i < a.segment_count(); ++i) {
    const auto [p, p2] = a.segment(i);
    const double rx = p2.x - p.x, ry = p2.y - p.y;
    for (std::size_t j = 0; j < b.segment_count(); ++j) {
      const auto [q, q2] = b.segment(j);
      const double sx = q2.x - q.x, sy = q2.y - q.y;
      const double den = rx * sy - ry * sx;
      if (std::abs(den) < 1e-15) continue;
      const double t = ((q.x - p.x) * sy - (q.y - p.y) * sx) / den;
      const double u = ((q.x - p.x) * ry - (q.y - p.y) * rx) / den;
      if (t < 0 || t > 1 || u < 0 || u > 1) continue;
      const Point2 c{p.x + t * rx, p.y + t * ry};
      const bool seen = std::any_of(out.begin(), out.end(), [&](const Point2& o) {
        return std::hypot(o.x - c.x, o.y - c.y) < 1e-7;
      });
      if (!seen) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Point2& l, const Point2& r) { return std::hypot(l.x, l.y) < std::hypot(r.x, r.y); });
  return out;
}

}  // namespace

SvgDiagram render_svg(const Scenario& scenario, unsigned k, int resolution) {
  validate_scenario(scenario);
  const CriticalConfig config = default_critical_config(scenario.crit_count);
  const auto basis = default_basis(config);
  const double R = config.radius().get_d();

  const VanishingPath& alpha_base = basis.back();
  const VanishingPath& beta = basis.front();
  const VanishingPath alpha = twist_path(alpha_base, k);

  std::vector<Polyline> lines;
  for (const auto& p : basis) {
    lines.push_back(realize_polyline(&p == &alpha_base ? alpha : p, config, resolution));
  }

  IntersectionDiagram diagram;
  std::vector<Point2> where;
  if (k >= 1 && basis.size() >= 2) {
    diagram = intersections(alpha, beta);
    where = crossing_points(lines.back(), lines.front());
  }

  const bool with_grid = k >= 1 && scenario.fibre_hf && scenario.d;
  SpectralPage e1;
  if (with_grid) e1 = build_e1(FibreFloerData{*scenario.fibre_hf}, TwistParams(*scenario.d, k));

  View view;
  view.scale = 280.0 / (2 * R);
  view.x0 = -1.2 * R;
  view.y0 = 1.2 * R;
  const double plot_w = view.px(2.1 * R);
  const double plot_h = view.py(-1.2 * R);

  // E_1 grid: columns p, rows total degree.
  const double cell = 22;
  int p_min = 0, t_min = 0, t_max = 0;
  for (const auto& [pq, r] : e1.entries) {
    p_min = std::min(p_min, pq.first);
    t_min = std::min(t_min, pq.first + pq.second);
    t_max = std::max(t_max, pq.first + pq.second);
  }
  const double grid_x = plot_w + 60;
  const double grid_y = 40;
  const int cols = with_grid ? (-p_min + 1) : 0;
  const int rows = with_grid ? (t_max - t_min + 1) : 0;
  const double width = with_grid ? grid_x + cols * cell + 30 : plot_w + 20;
  const double height = std::max(plot_h + 20, grid_y + rows * cell + 40);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n"
     << "  <title>" << escape(scenario.name) << ": twisted vanishing paths, k = " << k << "</title>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\" fill=\"white\"/>\n";

  const Point2 origin{0, 0};
  for (double rad : {R, config.inner_radius().get_d()}) {
    os << "  <circle class=\"boundary\" cx=\"" << fmt(view.px(origin.x)) << "\" cy=\"" << fmt(view.py(origin.y))
       << "\" r=\"" << fmt(rad * view.scale) << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const bool is_alpha = i + 1 == lines.size();
    const bool is_beta = i == 0;
    const char* colour = is_alpha ? "#c0392b" : is_beta ? "#2471a3" : "#7f8c8d";
    os << "  <polyline class=\"path\" data-index=\"" << basis[i].critical_index << "\" points=\""
       << points_attr(lines[i], view) << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t i = 0; i < config.size(); ++i) {
    const Point2 c = to_point2(config.critical_points()[i]);
    os << "  <circle class=\"critical\" cx=\"" << fmt(view.px(c.x)) << "\" cy=\"" << fmt(view.py(c.y))
       << "\" r=\"3.5\" fill=\"black\"/>\n";
  }
  for (std::size_t l = 0; l < diagram.size(); ++l) {
    const Point2 at = l < where.size() ? where[l] : Point2{R, 0};
    const double x = view.px(at.x), y = view.py(at.y);
    os << "  <g class=\"intersection\">\n"
       << "    <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"2.5\" fill=\"#27ae60\"/>\n"
       << "    <text x=\"" << fmt(x + 4) << "\" y=\"" << fmt(y - 4) << "\" font-size=\"9\">" << diagram.labels[l]
       << " (deg " << diagram.degrees[l] << ")</text>\n"
       << "  </g>\n";
  }

  if (with_grid) {
    os << "  <g class=\"e1-grid\">\n"
       << "    <text x=\"" << fmt(grid_x) << "\" y=\"" << fmt(grid_y - 14) << "\" font-size=\"11\">E1 ranks (column p, total degree)</text>\n";
    for (int c = 0; c < cols; ++c) {
      const int p = p_min + c;
      os << "    <text x=\"" << fmt(grid_x + c * cell + 4) << "\" y=\"" << fmt(grid_y + rows * cell + 14)
         << "\" font-size=\"8\">" << p << "</text>\n";
    }
    for (int r = 0; r < rows; ++r) {
      const int t = t_max - r;
      os << "    <text x=\"" << fmt(grid_x - 24) << "\" y=\"" << fmt(grid_y + r * cell + 15) << "\" font-size=\"8\">"
         << t << "</text>\n";
      for (int c = 0; c < cols; ++c) {
        const int p = p_min + c;
        auto it = e1.entries.find({p, t - p});
        const std::size_t rank = it == e1.entries.end() ? 0 : it->second;
        os << "    <rect x=\"" << fmt(grid_x + c * cell) << "\" y=\"" << fmt(grid_y + r * cell) << "\" width=\""
           << fmt(cell) << "\" height=\"" << fmt(cell) << "\" fill=\"" << (rank ? "#f5cba7" : "none")
           << "\" stroke=\"#888888\"/>\n";
        if (rank) {
          os << "    <text x=\"" << fmt(grid_x + c * cell + 8) << "\" y=\"" << fmt(grid_y + r * cell + 15)
             << "\" font-size=\"10\">" << rank << "</text>\n";
        }
      }
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return {os.str(), diagram.size()};
}

Report run_svg(const Scenario& scenario, unsigned k, const std::string& out_path) {
  const SvgDiagram svg = render_svg(scenario, k);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << svg.document;
  out.close();
  if (!out) throw std::runtime_error("write to '" + out_path + "' failed");

  Report rep;
  rep.json["command"] = "svg";
  rep.json["scenario"] = scenario.name;
  rep.json["inputs"] = {{"k", k}, {"out", out_path}};
  rep.json["result"] = {{"intersection_labels", svg.intersection_labels}, {"bytes", svg.document.size()}};
  rep.json["version"] = engine_version();
  rep.json["seed"] = nullptr;
  rep.text = "wrote " + out_path + " (" + std::to_string(svg.intersection_labels) + " labeled intersections)\n";
  return rep;
}

}  // namespace lfk
