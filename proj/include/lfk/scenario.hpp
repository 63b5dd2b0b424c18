#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lfk/base_plane.hpp"
#include "lfk/graded.hpp"
#include "lfk/rational.hpp"

namespace lfk {

struct Scenario {
  std::string name;
  std::optional<Rational> d;
  std::optional<GradedSpace> fibre_hf;
  std::size_t crit_count = 0;
  std::optional<int> braid_model;  // puncture count of the curve model
  std::string fibre_description;
  std::string provenance;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

class ScenarioError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> builtin_scenario_names();
// rp2, cp2, rp3, hp2. Throws ScenarioError for other names.
Scenario builtin_scenario(std::string_view name);

// Checks d > 0 with 2d integral, nonnegative fibre ranks, crit_count >= 1
// and braid_model >= 3 when present.
void validate_scenario(const Scenario& s);

// Fills unset data freely; replacing frozen built-in data needs
// allow_override. Throws ScenarioError otherwise.
Scenario with_user_data(Scenario s, const std::optional<Rational>& d, const std::optional<GradedSpace>& fibre,
                        bool allow_override);

// Config text: a JSON object with keys name, d ("p/q"), fibre_hf
// ({"degree": rank}), crit_count, braid_model, and optionally
// fibre_description and provenance. Errors name the line or the key.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);
std::string save_scenario(const Scenario& s);

// Fibre text for the CLI: "0:1,-1:1".
GradedSpace parse_graded(std::string_view text);

// Critical values on a vertical line, heights equal to Im(w); used for the
// path diagrams.
CriticalConfig default_critical_config(std::size_t crit_count);
std::vector<VanishingPath> default_basis(const CriticalConfig& config);

}  // namespace lfk
