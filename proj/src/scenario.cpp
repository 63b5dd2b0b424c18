#include "lfk/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lfk/floer.hpp"

namespace lfk {

using nlohmann::ordered_json;

std::vector<std::string> builtin_scenario_names() { return {"rp2", "cp2", "rp3", "hp2"}; }

Scenario builtin_scenario(std::string_view name) {
  Scenario s;
  s.name = std::string(name);
  if (name == "rp2") {
    s.d = Rational(3, 2);
    s.fibre_hf = GradedSpace{{0, 2}};
    s.crit_count = 3;
    s.braid_model = 3;
    s.fibre_description = "Lagrangian circles meeting at two points, both generators in degree 0";
    s.provenance = "conic pencil on CP2, T*RP2 with three singular fibres";
  } else if (name == "cp2") {
    s.d = Rational(3);
    s.fibre_hf = GradedSpace{{0, 1}, {-1, 1}};
    s.crit_count = 3;
    s.braid_model = 3;
    s.fibre_description = "vanishing 3-spheres meeting cleanly in a circle, deg(q0-) = -1, deg(q0+) = 0";
    s.provenance = "(1,1)-pencil on CP2 x CP2, T*CP2 with three singular fibres";
  } else if (name == "rp3") {
    s.d = Rational(2);
    s.crit_count = 4;
    s.fibre_description = "two 3-spheres in the complement of a (2,2)-curve; Floer data not known, supply it";
    s.provenance = "quadric pencil on CP3, T*RP3 with four singular fibres";
  } else if (name == "hp2") {
    s.fibre_hf = GradedSpace{{0, 1}, {-3, 1}};
    s.crit_count = 3;
    s.fibre_description = "H*(S^3) fibre data; d is not fixed, supply it (collapse is an assumption)";
    s.provenance = "T*HP2 with three singular fibres";
  } else {
    throw ScenarioError("unknown scenario '" + std::string(name) + "' (built-ins: rp2, cp2, rp3, hp2)");
  }
  return s;
}

void validate_scenario(const Scenario& s) {
  if (s.name.empty()) throw ScenarioError("scenario: empty name");
  if (s.d) {
    try {
      validate_degree_parameter(*s.d);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError("scenario '" + s.name + "': key 'd': " + e.what());
    }
  }
  if (s.crit_count < 1) throw ScenarioError("scenario '" + s.name + "': key 'crit_count' must be >= 1");
  if (s.braid_model && *s.braid_model < 3) {
    throw ScenarioError("scenario '" + s.name + "': key 'braid_model' must be >= 3");
  }
}

Scenario with_user_data(Scenario s, const std::optional<Rational>& d, const std::optional<GradedSpace>& fibre,
                        bool allow_override) {
  if (d) {
    if (s.d && *s.d != *d && !allow_override) {
      throw ScenarioError("scenario '" + s.name + "' fixes d = " + s.d->get_str() + "; pass --override to replace it");
    }
    s.d = *d;
  }
  if (fibre) {
    if (s.fibre_hf && *s.fibre_hf != *fibre && !allow_override) {
      throw ScenarioError("scenario '" + s.name + "' fixes its fibre data; pass --override to replace it");
    }
    s.fibre_hf = *fibre;
  }
  validate_scenario(s);
  return s;
}

namespace {

int parse_degree(std::string_view key, const std::string& context) {
  int value = 0;
  const auto* first = key.data();
  const auto* last = key.data() + key.size();
  if (!key.empty() && key.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ScenarioError(context + ": degree '" + std::string(key) + "' is not an integer");
  }
  return value;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    throw ScenarioError("config parse error at line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) throw ScenarioError("config: top level must be an object");

  static const std::set<std::string> known{"name",        "d",                 "fibre_hf",  "crit_count",
                                           "braid_model", "fibre_description", "provenance"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ScenarioError("config: unknown key '" + key + "'");
  }
  auto require = [&](const char* key) -> const ordered_json& {
    if (!j.contains(key)) throw ScenarioError(std::string("config: missing key '") + key + "'");
    return j.at(key);
  };

  Scenario s;
  const auto& name = require("name");
  if (!name.is_string()) throw ScenarioError("config: key 'name' must be a string");
  s.name = name.get<std::string>();

  if (j.contains("d") && !j.at("d").is_null()) {
    if (!j.at("d").is_string()) throw ScenarioError("config: key 'd' must be a string like \"3/2\"");
    try {
      s.d = parse_rational(j.at("d").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(std::string("config: key 'd': ") + e.what());
    }
  }
  if (j.contains("fibre_hf") && !j.at("fibre_hf").is_null()) {
    const auto& f = j.at("fibre_hf");
    if (!f.is_object()) throw ScenarioError("config: key 'fibre_hf' must map degrees to ranks");
    GradedSpace hf;
    for (const auto& [deg, rank] : f.items()) {
      const int degree = parse_degree(deg, "config: key 'fibre_hf'");
      if (!rank.is_number_integer()) throw ScenarioError("config: key 'fibre_hf': rank at " + deg + " is not an integer");
      const auto r = rank.get<long long>();
      if (r < 0) throw ScenarioError("config: key 'fibre_hf': negative rank at degree " + deg);
      hf.add_rank(degree, static_cast<std::size_t>(r));
    }
    s.fibre_hf = hf;
  }
  const auto& crit = require("crit_count");
  if (!crit.is_number_integer() || crit.get<long long>() < 1) {
    throw ScenarioError("config: key 'crit_count' must be a positive integer");
  }
  s.crit_count = crit.get<std::size_t>();
  if (j.contains("braid_model") && !j.at("braid_model").is_null()) {
    if (!j.at("braid_model").is_number_integer()) throw ScenarioError("config: key 'braid_model' must be an integer");
    s.braid_model = j.at("braid_model").get<int>();
  }
  for (const char* key : {"fibre_description", "provenance"}) {
    if (!j.contains(key)) continue;
    if (!j.at(key).is_string()) throw ScenarioError(std::string("config: key '") + key + "' must be a string");
    (std::string_view(key) == "provenance" ? s.provenance : s.fibre_description) = j.at(key).get<std::string>();
  }

  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string save_scenario(const Scenario& s) {
  ordered_json j;
  j["name"] = s.name;
  j["d"] = s.d ? ordered_json(s.d->get_str()) : ordered_json(nullptr);
  if (s.fibre_hf) {
    ordered_json f = ordered_json::object();
    for (const auto& [deg, r] : s.fibre_hf->ranks()) f[std::to_string(deg)] = r;
    j["fibre_hf"] = f;
  } else {
    j["fibre_hf"] = nullptr;
  }
  j["crit_count"] = s.crit_count;
  j["braid_model"] = s.braid_model ? ordered_json(*s.braid_model) : ordered_json(nullptr);
  j["fibre_description"] = s.fibre_description;
  j["provenance"] = s.provenance;
  return j.dump(2) + "\n";
}

GradedSpace parse_graded(std::string_view text) {
  GradedSpace out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ScenarioError("fibre entry '" + item + "' is not degree:rank");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    const int degree = parse_degree(trim(item.substr(0, colon)), "fibre");
    const std::string rank_text = trim(item.substr(colon + 1));
    long long rank = 0;
    auto [ptr, ec] = std::from_chars(rank_text.data(), rank_text.data() + rank_text.size(), rank);
    if (ec != std::errc() || ptr != rank_text.data() + rank_text.size() || rank < 0) {
      throw ScenarioError("fibre rank '" + rank_text + "' must be a nonnegative integer");
    }
    out.add_rank(degree, static_cast<std::size_t>(rank));
  }
  return out;
}

CriticalConfig default_critical_config(std::size_t crit_count) {
  if (crit_count < 1) throw ScenarioError("need at least one critical value");
  std::vector<PointQ> pts;
  const auto m = static_cast<long>(crit_count);
  for (long i = 0; i < m; ++i) {
    // x staggered so the values are not collinear with the origin.
    pts.push_back({Rational(i % 2 == 0 ? -1 : 1, 4), Rational(2 * i - (m - 1), 2)});
  }
  return CriticalConfig(std::move(pts), Rational(m + 2), Rational(1, 2));
}

std::vector<VanishingPath> default_basis(const CriticalConfig& config) {
  std::vector<VanishingPath> basis;
  for (std::size_t i = 0; i < config.size(); ++i) basis.push_back({i, config.critical_points()[i].y, 0});
  validate_basis(basis);
  return basis;
}

}  // namespace lfk
