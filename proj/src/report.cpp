#include "lfk/report.hpp"

#include <sstream>
#include <stdexcept>

#include "lfk/loop_space.hpp"

namespace lfk {

using nlohmann::ordered_json;

namespace {

ordered_json header(const std::string& command, const std::string& scenario, ordered_json inputs) {
  ordered_json j;
  j["command"] = command;
  j["scenario"] = scenario.empty() ? ordered_json(nullptr) : ordered_json(scenario);
  j["inputs"] = std::move(inputs);
  j["result"] = nullptr;
  return j;
}

void finish(ordered_json& j, std::optional<std::uint64_t> seed) {
  j["version"] = engine_version();
  j["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
}

std::string table(const GradedSpace& g) {
  std::ostringstream os;
  if (g.empty()) {
    os << "  (zero)\n";
    return os.str();
  }
  os << "  degree  rank\n";
  for (auto it = g.ranks().rbegin(); it != g.ranks().rend(); ++it) {
    os << "  " << std::string(6 - std::min<std::size_t>(6, std::to_string(it->first).size()), ' ') << it->first
       << "  " << it->second << "\n";
  }
  return os.str();
}

ordered_json bidegree_json(const Bidegree& b) { return ordered_json::array({b.first, b.second}); }

ordered_json page_json(const SpectralPage& page) {
  ordered_json entries = ordered_json::array();
  for (const auto& [pq, r] : page.entries) {
    entries.push_back({{"p", pq.first}, {"q", pq.second}, {"total", pq.first + pq.second}, {"rank", r}});
  }
  return {{"page", page.page}, {"k", page.k}, {"entries", std::move(entries)}};
}

}  // namespace

std::string engine_version() { return LFK_VERSION; }

ordered_json graded_to_json(const GradedSpace& g) {
  ordered_json j = ordered_json::object();
  for (auto it = g.ranks().rbegin(); it != g.ranks().rend(); ++it) j[std::to_string(it->first)] = it->second;
  return j;
}

Report run_hf(const Scenario& scenario, unsigned k) {
  if (!scenario.fibre_hf) {
    throw ScenarioError("scenario '" + scenario.name + "' has no fibre Floer data; supply it with --fibre or --config");
  }
  if (!scenario.d) {
    throw ScenarioError("scenario '" + scenario.name + "' has no value of d; supply it with --d or --config");
  }
  const TwistParams params(*scenario.d, k);
  const FibreFloerData fibre{*scenario.fibre_hf};
  const HFResult res = compute_hf(fibre, params);

  Report rep;
  rep.json = header("hf", scenario.name,
                    {{"k", k},
                     {"d", scenario.d->get_str()},
                     {"fibre_hf", graded_to_json(*scenario.fibre_hf)},
                     {"monodromy_shift", monodromy_shift(*scenario.d)},
                     {"winding_shift", winding_shift(*scenario.d)}});
  std::ostringstream text;
  text << "HF*(phi^" << k << "(D_alpha), D_beta; Z/2), scenario " << scenario.name << ", d = " << scenario.d->get_str()
       << ", s = " << winding_shift(*scenario.d) << "\n";

  if (const auto* det = std::get_if<HFDetermined>(&res)) {
    rep.json["result"] = {{"status", "determined"},
                          {"ranks", graded_to_json(det->total)},
                          {"total_rank", det->total.total_rank()}};
    if (k >= 2) rep.json["result"]["e1"] = page_json(build_e1(fibre, params));
    text << "determined (E1 collapses)\n" << table(det->total);
    rep.exit_code = kExitOk;
  } else {
    const auto& amb = std::get<HFAmbiguous>(res);
    rep.json["result"] = {{"status", "ambiguous"},
                          {"e1", page_json(amb.e1)},
                          {"note", "E1 leaves room for nontrivial differentials; only rank bounds follow"}};
    rep.json["bounds"] = {{"lower", graded_to_json(amb.lower)}, {"upper", graded_to_json(amb.upper)}};
    ordered_json cands = ordered_json::array();
    for (const auto& c : amb.candidates) {
      cands.push_back({{"r", c.r}, {"source", bidegree_json(c.source)}, {"target", bidegree_json(c.target)}});
    }
    rep.json["candidates"] = std::move(cands);
    text << "ambiguous: E1 leaves room for nontrivial differentials\nE1 by total degree (upper bound):\n"
         << table(amb.upper) << "lower bound (maximal cancellation):\n"
         << table(amb.lower) << "candidate differentials:\n";
    for (const auto& c : amb.candidates) {
      text << "  d" << c.r << ": (" << c.source.first << "," << c.source.second << ") -> (" << c.target.first << ","
           << c.target.second << ")\n";
    }
    rep.exit_code = kExitAmbiguous;
  }
  finish(rep.json, std::nullopt);
  rep.text = text.str();
  return rep;
}

Report run_lantern(std::size_t trials, std::uint64_t seed, bool corrupt) {
  auto factors = lantern_factors();
  if (corrupt) factors[2] = {"A23^-1", factors[2].word.inverse()};
  const ActionReport ar = relation_check(factors, BraidWord::full_twist(3), trials, seed);

  Report rep;
  rep.json = header("lantern", "", {{"trials", trials}, {"corrupt", corrupt}});
  std::size_t fixed = 0;
  for (bool f : ar.fixed_by_product) fixed += f ? 1 : 0;
  ordered_json moved = ordered_json::object();
  for (std::size_t i = 0; i < ar.factor_names.size(); ++i) moved[ar.factor_names[i]] = ar.curves_moved_by_factor[i];
  std::string product;
  for (const auto& f : factors) product += (product.empty() ? "" : " ") + f.name;
  rep.json["result"] = {{"product", product},
                        {"curves_tested", ar.curves.size()},
                        {"curves_fixed", fixed},
                        {"trivial_action", ar.trivial_action},
                        {"curves_moved_by_factor", moved},
                        {"factors_nontrivial", ar.factors_nontrivial},
                        {"normal_form_matches_full_twist", ar.normal_form_matches},
                        {"matching_rotations", ar.matching_rotations},
                        {"passed", ar.passed()}};
  finish(rep.json, seed);

  std::ostringstream text;
  text << "lantern relation " << product << " = Delta^2 in B_3\n"
       << "  curves fixed by product: " << fixed << "/" << ar.curves.size() << "\n";
  for (std::size_t i = 0; i < ar.factor_names.size(); ++i) {
    text << "  " << ar.factor_names[i] << " moves " << ar.curves_moved_by_factor[i] << " curves\n";
  }
  text << "  normal form equals Delta^2: " << (ar.normal_form_matches ? "yes" : "no") << "\n"
       << (ar.passed() ? "PASS" : "FAIL") << "\n";
  rep.text = text.str();
  rep.exit_code = ar.passed() ? kExitOk : kExitError;
  return rep;
}

Report run_nf(int strands, const std::string& word, const std::optional<std::string>& compare) {
  const BraidWord w = BraidWord::parse(strands, word);
  const NormalForm nf = left_normal_form(w);
  Report rep;
  ordered_json inputs{{"strands", strands}, {"word", word}};
  if (compare) inputs["compare"] = *compare;
  rep.json = header("nf", "", std::move(inputs));
  ordered_json factors = ordered_json::array();
  for (const auto& p : nf.factors) factors.push_back(p);
  rep.json["result"] = {{"delta_power", nf.delta_power},
                        {"factors", std::move(factors)},
                        {"normal_form_word", nf.to_word().to_string()}};
  std::string text = "normal form: " + nf.to_string() + "\n";
  if (compare) {
    const bool equal = left_normal_form(BraidWord::parse(strands, *compare)) == nf;
    rep.json["result"]["equal"] = equal;
    text += std::string("equal to comparison word: ") + (equal ? "yes" : "no") + "\n";
  }
  finish(rep.json, std::nullopt);
  rep.text = text;
  return rep;
}

Report run_central(int strands, const std::string& word, std::size_t trials, std::uint64_t seed) {
  const BraidWord w = BraidWord::parse(strands, word);
  const bool central = centrality_check(w, trials, seed);
  Report rep;
  rep.json = header("central", "", {{"strands", strands}, {"word", word}, {"trials", trials}});
  rep.json["result"] = {{"central", central}};
  finish(rep.json, seed);
  rep.text = std::string("commutes with all test words: ") + (central ? "yes" : "no") + "\n";
  rep.exit_code = central ? kExitOk : kExitError;
  return rep;
}

Report run_euler(const PencilData& pencil) {
  auto opt = [](const std::optional<long long>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  Report rep;
  rep.json = header("euler", "",
                    {{"chi_x", opt(pencil.chi_x)},
                     {"chi_sigma", opt(pencil.chi_sigma)},
                     {"chi_b", opt(pencil.chi_b)},
                     {"dim", opt(pencil.dim)},
                     {"crit_count", opt(pencil.crit_count)}});
  const long long value = euler_solve(pencil);
  std::string unknown = !pencil.chi_x       ? "chi_x"
                        : !pencil.chi_sigma ? "chi_sigma"
                        : !pencil.chi_b     ? "chi_b"
                                            : "crit_count";
  rep.json["result"] = {{"unknown", unknown}, {"value", value}};
  finish(rep.json, std::nullopt);
  rep.text = unknown + " = " + std::to_string(value) + "\n";
  return rep;
}

Report run_genus(long long d1, long long d2) {
  Report rep;
  rep.json = header("genus", "", {{"d1", d1}, {"d2", d2}});
  const long long g = genus_bidegree(d1, d2);
  rep.json["result"] = {{"genus", g}};
  finish(rep.json, std::nullopt);
  rep.text = "genus = " + std::to_string(g) + "\n";
  return rep;
}

Report run_loops(const std::string& space, int max_degree) {
  GradedSpace g;
  if (space == "rp2") {
    g = loop_rp2(max_degree);
  } else if (space == "cp2") {
    g = loop_cp2(max_degree);
  } else if (space.size() >= 2 && space[0] == 's') {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(space.substr(1), &used);
      if (used != space.size() - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown space '" + space + "' (expected s<n>, rp2 or cp2)");
    }
    g = loop_sphere(n, max_degree);
  } else {
    throw std::invalid_argument("unknown space '" + space + "' (expected s<n>, rp2 or cp2)");
  }
  Report rep;
  rep.json = header("loops", "", {{"space", space}, {"max_degree", max_degree}});
  ordered_json ranks = ordered_json::array();
  for (int q = 0; q <= max_degree; ++q) ranks.push_back(g.rank(q));
  rep.json["result"] = {{"grading", "homological"}, {"ranks", std::move(ranks)}};
  finish(rep.json, std::nullopt);
  std::ostringstream text;
  text << "H_*(Omega " << space << "; Z/2), degrees 0.." << max_degree << ":\n ";
  for (int q = 0; q <= max_degree; ++q) text << ' ' << g.rank(q);
  text << "\n";
  rep.text = text.str();
  return rep;
}

Report run_maslov(const Polyline& loop, const CriticalConfig& config, std::size_t about) {
  const LoopClass lc = classify_loop(loop, config, about);
  const auto maslov = minimal_maslov_index(lc.kind);
  Report rep;
  rep.json = header("maslov", "", {{"vertices", loop.vertices.size()}, {"about", about}});
  rep.json["result"] = {{"kind", to_string(lc.kind)},
                        {"windings", lc.windings},
                        {"minimal_maslov_index", maslov ? ordered_json(*maslov) : ordered_json(nullptr)}};
  finish(rep.json, std::nullopt);
  rep.text = "loop kind: " + to_string(lc.kind) +
             (maslov ? ", minimal Maslov index " + std::to_string(*maslov) : ", immersed (no Maslov index)") + "\n";
  return rep;
}

Report run_fillings(const std::string& scenario) {
  const FillingDescriptor f = filling_descriptor(scenario);
  auto side = [](const FillingSide& s) {
    return ordered_json{{"name", s.name}, {"base", s.base}, {"rational_homology_ranks", s.ranks},
                        {"exact", s.exact},   {"note", s.note}};
  };
  Report rep;
  rep.json = header("fillings", scenario, ordered_json::object());
  rep.json["result"] = {{"contact_boundary", f.contact_boundary},
                        {"standard", side(f.standard)},
                        {"alternative", side(f.alternative)},
                        {"flags", f.flags}};
  finish(rep.json, std::nullopt);
  std::ostringstream text;
  auto ranks = [](const std::vector<std::size_t>& r) {
    std::string s;
    for (auto x : r) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  text << "boundary " << f.contact_boundary << "\n"
       << "  standard:    " << f.standard.name << " (b = " << ranks(f.standard.ranks) << ")\n"
       << "  alternative: " << f.alternative.name << " over " << f.alternative.base << " (b = "
       << ranks(f.alternative.ranks) << "), " << (f.alternative.exact ? "exact" : "not exact");
  if (!f.alternative.note.empty()) text << ", " << f.alternative.note;
  text << "\n";
  for (const auto& flag : f.flags) text << "  note: " << flag << "\n";
  rep.text = text.str();
  return rep;
}

Report run_matrix_check(int n, std::size_t samples, std::uint64_t seed, double tol) {
  const MatrixModelReport mr = matrix_model_check(n, samples, seed, tol);
  std::size_t passed = 0;
  double worst_trace = 0;
  std::size_t worst_rank = 0;
  for (const auto& s : mr.samples) {
    passed += s.passed ? 1 : 0;
    worst_trace = std::max(worst_trace, s.trace_abs);
    worst_rank = std::max(worst_rank, s.shifted_rank);
  }
  Report rep;
  rep.json = header("matrix-check", "", {{"n", n}, {"samples", samples}, {"tolerance", tol}});
  rep.json["result"] = {{"passed", passed},
                        {"failed", samples - passed},
                        {"max_trace_abs", worst_trace},
                        {"max_shifted_rank", worst_rank},
                        {"all_passed", mr.all_passed()}};
  finish(rep.json, seed);
  std::ostringstream text;
  text << "matrix model n = " << n << ": " << passed << "/" << samples << " samples traceless with rank(A - tI) <= 1"
       << " (max |tr| = " << worst_trace << ")\n";
  rep.text = text.str();
  rep.exit_code = mr.all_passed() ? kExitOk : kExitError;
  return rep;
}

}  // namespace lfk
