#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lfk/base_plane.hpp"
#include "lfk/braid.hpp"
#include "lfk/floer.hpp"
#include "lfk/pencil.hpp"
#include "lfk/scenario.hpp"

namespace lfk {

// Exit codes shared by every command.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitAmbiguous = 2;  // E_1 leaves room for differentials

// Result of one command: the JSON report, a plain-text rendering and the
// process exit code. Reports carry {command, scenario, inputs, result,
// bounds?, candidates?, version, seed} in that order.
struct Report {
  nlohmann::ordered_json json;
  std::string text;
  int exit_code = kExitOk;

  std::string dump() const { return json.dump(2) + "\n"; }
};

std::string engine_version();

nlohmann::ordered_json graded_to_json(const GradedSpace& g);

Report run_hf(const Scenario& scenario, unsigned k);
Report run_lantern(std::size_t trials, std::uint64_t seed, bool corrupt = false);
Report run_nf(int strands, const std::string& word, const std::optional<std::string>& compare);
Report run_central(int strands, const std::string& word, std::size_t trials, std::uint64_t seed);
Report run_euler(const PencilData& pencil);
Report run_genus(long long d1, long long d2);
// space: "s<n>" (n >= 2), "rp2" or "cp2".
Report run_loops(const std::string& space, int max_degree);
Report run_maslov(const Polyline& loop, const CriticalConfig& config, std::size_t about);
Report run_fillings(const std::string& scenario);
Report run_matrix_check(int n, std::size_t samples, std::uint64_t seed, double tol);

// Path diagram and E_1 grid as an SVG 1.1 document.
struct SvgDiagram {
  std::string document;
  std::size_t intersection_labels = 0;
};

SvgDiagram render_svg(const Scenario& scenario, unsigned k, int resolution = 96);
// Writes the document; throws std::runtime_error on I/O failure.
Report run_svg(const Scenario& scenario, unsigned k, const std::string& out_path);

}  // namespace lfk
