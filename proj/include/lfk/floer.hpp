#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "lfk/graded.hpp"
#include "lfk/rational.hpp"

namespace lfk {

// d with K_X = L^{-d}, and the power k of the twist. 2d must be integral so
// that the grading shifts are integers.
class TwistParams {
public:
  TwistParams(Rational d, unsigned k);

  const Rational& d() const { return d_; }
  unsigned k() const { return k_; }

private:
  Rational d_;
  unsigned k_;
};

// Throws std::invalid_argument unless d > 0 and 2d is an integer.
void validate_degree_parameter(const Rational& d);

// Shift of graded closed exact Lagrangians of the fibre under the global
// monodromy: 4 - 2d.
int monodromy_shift(const Rational& d);
// Shift of one full base twist: s = (4 - 2d) - 2 = 2 - 2d.
int winding_shift(const Rational& d);

struct FibreFloerData {
  GradedSpace hf;  // HF*(V_{z0,alpha}, V_{z0,beta})
};

using Bidegree = std::pair<int, int>;  // (p, q), total degree p + q

struct SpectralPage {
  unsigned k = 0;
  int page = 1;
  std::map<Bidegree, std::size_t> entries;

  // Entries of column p.
  GradedSpace column(int p) const;
  // Ranks by total degree p + q.
  GradedSpace totals() const;
};

struct DifferentialCandidate {
  int r = 0;
  Bidegree source;
  Bidegree target;
  friend bool operator==(const DifferentialCandidate&, const DifferentialCandidate&) = default;
};

// Associated-graded E_1: for each intersection point z_l (column p = -2l) and
// fibre degree j, an entry at total degree j + l * s. Rejects k = 0.
SpectralPage build_e1(const FibreFloerData& fibre, const TwistParams& params);

// Every d_r : E^{p,q} -> E^{p+r,q-r+1}, 1 <= r <= 2(k-1), whose source and
// target are both nonzero. Empty iff the page collapses for degree reasons.
std::vector<DifferentialCandidate> collapse_analysis(const SpectralPage& page);

struct HFDetermined {
  GradedSpace total;
};

struct HFAmbiguous {
  SpectralPage e1;
  std::vector<DifferentialCandidate> candidates;
  GradedSpace lower;  // E_1 minus a maximum cancellation along the candidates
  GradedSpace upper;  // E_1 totals
};

using HFResult = std::variant<HFDetermined, HFAmbiguous>;

// Lower bound: E_1 totals minus a maximum simultaneous cancellation, where
// each candidate may kill rank from its source and target entry.
GradedSpace maximal_cancellation_lower_bound(const SpectralPage& page,
                                             const std::vector<DifferentialCandidate>& candidates);

// HF*(phi^k(Delta_alpha), Delta_beta): zero for k = 0, the fibre for k = 1,
// otherwise the E_1 totals when the page collapses, else rank bounds.
HFResult compute_hf(const FibreFloerData& fibre, const TwistParams& params);

}  // namespace lfk
