#include "lfk/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace lfk {

namespace {

long long sign_term(long long dim) { return dim % 2 == 0 ? 1 : -1; }  // (-1)^{n+1}, dim = n + 1

}  // namespace

bool euler_relation_holds(const PencilData& p) {
  if (!p.chi_x || !p.chi_sigma || !p.chi_b || !p.dim || !p.crit_count) return false;
  return *p.chi_x == 2 * *p.chi_sigma - *p.chi_b + sign_term(*p.dim) * *p.crit_count;
}

long long euler_solve(const PencilData& p) {
  const int unset = !p.chi_x + !p.chi_sigma + !p.chi_b + !p.dim + !p.crit_count;
  if (unset == 0) throw std::invalid_argument("euler_solve: all fields set (overdetermined)");
  if (unset > 1) throw std::invalid_argument("euler_solve: more than one field unset (underdetermined)");

  if (!p.dim) {
    throw std::invalid_argument("euler_solve: the relation fixes only the parity of dim; supply dim");
  }
  const long long sign = sign_term(*p.dim);
  if (!p.chi_x) return 2 * *p.chi_sigma - *p.chi_b + sign * *p.crit_count;
  if (!p.chi_b) return 2 * *p.chi_sigma + sign * *p.crit_count - *p.chi_x;
  if (!p.chi_sigma) {
    const long long twice = *p.chi_x + *p.chi_b - sign * *p.crit_count;
    if (twice % 2 != 0) throw std::invalid_argument("euler_solve: chi(Sigma) would not be an integer");
    return twice / 2;
  }
  const long long crit = sign * (*p.chi_x - 2 * *p.chi_sigma + *p.chi_b);
  if (crit < 0) throw std::invalid_argument("euler_solve: negative number of critical points");
  return crit;
}

long long genus_bidegree(long long d1, long long d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("genus_bidegree: degrees must be >= 1");
  return (d1 - 1) * (d2 - 1);
}

std::vector<std::string> del_pezzo_candidates(long long chi) {
  if (chi < 3 || chi > 11) throw std::invalid_argument("del Pezzo surfaces have 3 <= chi <= 11");
  const long long r = chi - 3;
  std::vector<std::string> out;
  out.push_back(r == 0 ? "CP2" : "CP2#" + std::to_string(r) + "-CP2");
  if (chi == 4) out.push_back("CP1xCP1");
  return out;
}

std::vector<std::size_t> cellular_ranks(const std::string& space) {
  static const std::map<std::string, std::vector<std::size_t>> table{
      {"pt", {1}},
      {"CP1", {1, 0, 1}},
      {"CP1xCP1", {1, 0, 2, 0, 1}},
      {"CP2", {1, 0, 1, 0, 1}},
      {"Fl3", {1, 0, 2, 0, 2, 0, 1}},
      {"RP2", {1}},  // rationally a point
      {"RP3", {1, 0, 0, 1}},
  };
  auto it = table.find(space);
  if (it == table.end()) throw std::invalid_argument("no cellular data for '" + space + "'");
  return it->second;
}

FillingDescriptor filling_descriptor(const std::string& scenario) {
  auto side = [](std::string name, std::string base, bool exact, std::string note) {
    FillingSide s{std::move(name), base, cellular_ranks(base), exact, std::move(note)};
    return s;
  };
  FillingDescriptor f;
  f.scenario = scenario;
  if (scenario == "rp2") {
    f.contact_boundary = "ST*RP2 = L(4,1)";
    f.standard = side("D*RP2", "RP2", true, "rational homology ball");
    f.alternative = side("O_CP1(-4)", "CP1", true, "rational blowdown");
  } else if (scenario == "rp3") {
    f.contact_boundary = "ST*RP3";
    f.standard = side("D*RP3", "RP3", true, "");
    f.alternative = side("O_CP1xCP1(-2,-2)", "CP1xCP1", false, "strong filling, not Stein");
    const auto& r = f.alternative.ranks;
    f.flags.push_back("quoted rank of H^4(E';Q) is 2; the base retract CP1xCP1 gives b4 = " +
                      std::to_string(r[4]) + " and b2 = " + std::to_string(r[2]));
  } else if (scenario == "cp2") {
    f.contact_boundary = "ST*CP2";
    f.standard = side("D*CP2", "CP2", true, "");
    f.alternative = side("O(-1,-1)|Fl3", "Fl3", false, "Fl3 embedded as a symplectic submanifold");
  } else {
    throw std::invalid_argument("no filling data for scenario '" + scenario + "' (expected rp2, rp3 or cp2)");
  }
  return f;
}

// --- matrix model -----------------------------------------------------------

bool MatrixModelReport::all_passed() const {
  return std::all_of(samples.begin(), samples.end(), [](const MatrixSample& s) { return s.passed; });
}

std::size_t complex_rank(std::vector<std::complex<double>> m, std::size_t rows, std::size_t cols, double tol) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (std::abs(m[r * cols + c]) > std::abs(m[pivot * cols + c])) pivot = r;
    }
    if (std::abs(m[pivot * cols + c]) <= tol) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(m[pivot * cols + k], m[rank * cols + k]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const auto factor = m[r * cols + c] / m[rank * cols + c];
      for (std::size_t k = c; k < cols; ++k) m[r * cols + k] -= factor * m[rank * cols + k];
    }
    ++rank;
  }
  return rank;
}

MatrixSample check_matrix_sample(std::span<const std::complex<double>> x, std::span<const std::complex<double>> y,
                                 double tol) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("matrix model: x and y need equal length");
  const std::size_t m = x.size();
  std::complex<double> dot = 0;
  for (std::size_t i = 0; i < m; ++i) dot += x[i] * y[i];
  const std::complex<double> mu = dot / static_cast<double>(m);

  std::vector<std::complex<double>> a(m * m);
  std::complex<double> trace = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i * m + j] = x[i] * y[j] - (i == j ? mu : 0.0);
    trace += a[i * m + i];
  }
  const std::complex<double> t = -mu;
  std::vector<std::complex<double>> shifted = a;
  for (std::size_t i = 0; i < m; ++i) shifted[i * m + i] -= t;

  MatrixSample s;
  s.trace_abs = std::abs(trace);
  s.shifted_rank = complex_rank(std::move(shifted), m, m, tol);
  s.passed = s.trace_abs <= tol && s.shifted_rank <= 1;
  return s;
}

MatrixModelReport matrix_model_check(int n, std::size_t samples, std::uint64_t seed, double tol) {
  if (n < 2) throw std::invalid_argument("matrix model: n must be at least 2");
  if (samples == 0) throw std::invalid_argument("matrix model: need at least one sample");
  if (!(tol > 0)) throw std::invalid_argument("matrix model: tolerance must be positive");

  MatrixModelReport report;
  report.n = n;
  report.tolerance = tol;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  auto unit_vector = [&] {
    std::vector<std::complex<double>> v(m);
    double norm = 0;
    for (auto& z : v) {
      z = {normal(rng), normal(rng)};
      norm += std::norm(z);
    }
    for (auto& z : v) z /= std::sqrt(norm);
    return v;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = unit_vector();
    const auto y = unit_vector();
    report.samples.push_back(check_matrix_sample(x, y, tol));
  }
  return report;
}

}  // namespace lfk
