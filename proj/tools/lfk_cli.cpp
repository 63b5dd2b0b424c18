// lfk: command-line front end for the twist / pencil computations.

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "lfk/report.hpp"

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::string scenario;
  std::string config;
  bool override_data = false;
  std::string d;
  std::string fibre;
};

lfk::Scenario resolve_scenario(const Globals& g) {
  lfk::Scenario s;
  if (!g.config.empty()) {
    if (!g.scenario.empty()) throw lfk::ScenarioError("use either --scenario or --config, not both");
    s = lfk::load_scenario(g.config);
  } else if (!g.scenario.empty()) {
    s = lfk::builtin_scenario(g.scenario);
  } else {
    throw lfk::ScenarioError("no scenario given; pass --scenario <name> or --config <file>");
  }
  std::optional<lfk::Rational> d;
  std::optional<lfk::GradedSpace> fibre;
  if (!g.d.empty()) d = lfk::parse_rational(g.d);
  if (!g.fibre.empty()) fibre = lfk::parse_graded(g.fibre);
  return lfk::with_user_data(std::move(s), d, fibre, g.override_data);
}

// "x,y;x,y;..." with rational coordinates.
std::vector<lfk::PointQ> parse_points(const std::string& text) {
  std::vector<lfk::PointQ> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("point '" + item + "' is not x,y");
    out.push_back({lfk::parse_rational(item.substr(0, comma)), lfk::parse_rational(item.substr(comma + 1))});
  }
  if (out.empty()) throw std::invalid_argument("empty point list");
  return out;
}

lfk::Polyline circle_loop(const std::string& spec, int samples) {
  std::vector<double> v;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "' in --circle");
    v.push_back(x);
  }
  if (v.size() != 3 || !(v[2] > 0)) throw std::invalid_argument("--circle expects cx,cy,r with r > 0");
  std::vector<lfk::Point2> pts;
  for (int i = 0; i < samples; ++i) {
    const double t = 2 * std::numbers::pi * i / samples;
    pts.push_back({v[0] + v[2] * std::cos(t), v[1] + v[2] * std::sin(t)});
  }
  return lfk::Polyline(std::move(pts), true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Floer-theoretic computations for projective twists and Lefschetz pencils", "lfk"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", lfk::engine_version());

  Globals g;
  app.add_flag("--json", g.json, "Print the JSON report instead of text");
  app.add_option("--seed", g.seed, "Seed for every randomized check")->capture_default_str();
  app.add_option("--scenario", g.scenario, "Built-in scenario: rp2, cp2, rp3, hp2");
  app.add_option("--config", g.config, "Scenario config file (JSON)");
  app.add_flag("--override", g.override_data, "Allow --d / --fibre to replace built-in data");
  app.add_option("--d", g.d, "Degree parameter d as p/q");
  app.add_option("--fibre", g.fibre, "Fibre Floer data as degree:rank,...");

  lfk::Report report;
  std::function<void()> action;

  unsigned hf_k = 1;
  auto* hf = app.add_subcommand("hf", "Floer cohomology of twisted thimbles");
  hf->add_option("-k,--power", hf_k, "Power of the twist")->required();
  hf->callback([&] { action = [&] { report = lfk::run_hf(resolve_scenario(g), hf_k); }; });

  std::size_t lantern_trials = 100;
  bool lantern_corrupt = false;
  auto* lantern = app.add_subcommand("lantern", "Check the lantern relation on multicurves");
  lantern->add_option("--trials", lantern_trials, "Random multicurves")->capture_default_str();
  lantern->add_flag("--corrupt", lantern_corrupt, "Replace A23 by its inverse (negative control)");
  lantern->callback([&] { action = [&] { report = lfk::run_lantern(lantern_trials, g.seed, lantern_corrupt); }; });

  int nf_strands = 3;
  std::string nf_word;
  std::string nf_compare;
  auto* nf = app.add_subcommand("nf", "Left normal form of a braid word");
  nf->add_option("--strands,-n", nf_strands)->capture_default_str();
  nf->add_option("word", nf_word, "Word in s<k> / s<k>^-1 tokens")->required();
  nf->add_option("--compare", nf_compare, "Second word to compare with");
  nf->callback([&] {
    action = [&] {
      report = lfk::run_nf(nf_strands, nf_word, nf_compare.empty() ? std::nullopt : std::optional(nf_compare));
    };
  });

  int central_strands = 3;
  std::string central_word = "full";
  std::size_t central_trials = 100;
  auto* central = app.add_subcommand("central", "Test whether a braid commutes with random words");
  central->add_option("--strands,-n", central_strands)->capture_default_str();
  central->add_option("word", central_word, "Word, or 'full' for the full twist")->capture_default_str();
  central->add_option("--trials", central_trials)->capture_default_str();
  central->callback([&] {
    action = [&] {
      const std::string w =
          central_word == "full" ? lfk::BraidWord::full_twist(central_strands).to_string() : central_word;
      report = lfk::run_central(central_strands, w, central_trials, g.seed);
    };
  });

  lfk::PencilData pencil;
  auto* euler = app.add_subcommand("euler", "Solve the Euler characteristic relation for the missing quantity");
  euler->add_option("--chi-x", pencil.chi_x);
  euler->add_option("--chi-sigma", pencil.chi_sigma);
  euler->add_option("--chi-b", pencil.chi_b);
  euler->add_option("--dim", pencil.dim, "Complex dimension of X");
  euler->add_option("--crit", pencil.crit_count);
  euler->callback([&] { action = [&] { report = lfk::run_euler(pencil); }; });

  long long genus_d1 = 1, genus_d2 = 1;
  auto* genus = app.add_subcommand("genus", "Genus of a bidegree (d1, d2) curve on CP1 x CP1");
  genus->add_option("d1", genus_d1)->required();
  genus->add_option("d2", genus_d2)->required();
  genus->callback([&] { action = [&] { report = lfk::run_genus(genus_d1, genus_d2); }; });

  std::string loops_space = "s2";
  int loops_max = 20;
  auto* loops = app.add_subcommand("loops", "Mod 2 homology of based loop spaces");
  loops->add_option("space", loops_space, "s<n>, rp2 or cp2")->capture_default_str();
  loops->add_option("--max-degree", loops_max)->capture_default_str();
  loops->callback([&] { action = [&] { report = lfk::run_loops(loops_space, loops_max); }; });

  std::string maslov_circle;
  std::string maslov_loop;
  std::string maslov_critical = "0,0";
  std::string maslov_radius = "4";
  std::string maslov_epsilon = "1";
  std::size_t maslov_about = 0;
  int maslov_samples = 256;
  auto* maslov = app.add_subcommand("maslov", "Classify a loop in the base and its minimal Maslov index");
  auto* circle_opt = maslov->add_option("--circle", maslov_circle, "Circle cx,cy,r");
  maslov->add_option("--loop", maslov_loop, "Closed polygon x,y;x,y;...")->excludes(circle_opt);
  maslov->add_option("--critical", maslov_critical, "Critical values x,y;...")->capture_default_str();
  maslov->add_option("--radius", maslov_radius)->capture_default_str();
  maslov->add_option("--epsilon", maslov_epsilon)->capture_default_str();
  maslov->add_option("--about", maslov_about, "Index of the critical value tested for enclosure")
      ->capture_default_str();
  maslov->add_option("--samples", maslov_samples, "Vertices used for --circle")->capture_default_str();
  maslov->callback([&] {
    action = [&] {
      const lfk::CriticalConfig config(parse_points(maslov_critical), lfk::parse_rational(maslov_radius),
                                       lfk::parse_rational(maslov_epsilon));
      lfk::Polyline loop;
      if (!maslov_circle.empty()) {
        loop = circle_loop(maslov_circle, maslov_samples);
      } else if (!maslov_loop.empty()) {
        std::vector<lfk::Point2> pts;
        for (const auto& p : parse_points(maslov_loop)) pts.push_back(lfk::to_point2(p));
        loop = lfk::Polyline(std::move(pts), true);
      } else {
        throw std::invalid_argument("maslov needs --circle or --loop");
      }
      report = lfk::run_maslov(loop, config, maslov_about);
    };
  });

  auto* fillings = app.add_subcommand("fillings", "Standard and alternative fillings of the unit cotangent bundle");
  fillings->callback([&] {
    action = [&] {
      if (g.scenario.empty()) throw lfk::ScenarioError("fillings needs --scenario (rp2, rp3 or cp2)");
      report = lfk::run_fillings(g.scenario);
    };
  });

  int matrix_n = 2;
  std::size_t matrix_samples = 100;
  double matrix_tol = 1e-9;
  auto* matrix = app.add_subcommand("matrix-check", "Random check of the traceless rank-one matrix model");
  matrix->add_option("-n", matrix_n)->capture_default_str();
  matrix->add_option("--samples", matrix_samples)->capture_default_str();
  matrix->add_option("--tol", matrix_tol)->capture_default_str();
  matrix->callback([&] { action = [&] { report = lfk::run_matrix_check(matrix_n, matrix_samples, g.seed, matrix_tol); }; });

  unsigned svg_k = 1;
  std::string svg_out = "paths.svg";
  auto* svg = app.add_subcommand("svg", "Draw twisted vanishing paths and the E1 grid");
  svg->add_option("-k,--power", svg_k)->capture_default_str();
  svg->add_option("-o,--out", svg_out)->capture_default_str();
  svg->callback([&] { action = [&] { report = lfk::run_svg(resolve_scenario(g), svg_k, svg_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? lfk::kExitOk : lfk::kExitError;
  }

  try {
    action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lfk::kExitError;
  }
  std::cout << (g.json ? report.dump() : report.text);
  return report.exit_code;
}
