#pragma once

#include <cstddef>
#include <cstdint>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lfk {

// Euler characteristics attached to a Lefschetz pencil on X with smooth
// member Sigma and base locus B:
//   chi(X) = 2 chi(Sigma) - chi(B) + (-1)^{n+1} (r + 1),
// with dim_C X = n + 1 and r + 1 critical points.
struct PencilData {
  std::optional<long long> chi_x;
  std::optional<long long> chi_sigma;
  std::optional<long long> chi_b;
  std::optional<long long> dim;         // complex dimension n + 1 of X
  std::optional<long long> crit_count;  // r + 1
};

// Solves for the single unset field. Throws std::invalid_argument when zero or
// several fields are unset, when the solution is not an integer, when the
// critical count would be negative, or when `dim` is the unknown (the relation
// only determines its parity).
long long euler_solve(const PencilData& pencil);
bool euler_relation_holds(const PencilData& pencil);

// Genus of a smooth curve of bidegree (d1, d2) on CP^1 x CP^1.
long long genus_bidegree(long long d1, long long d2);

// Del Pezzo surfaces with the given Euler characteristic: CP^2 # r(-CP^2)
// has chi = 3 + r for 0 <= r <= 8, CP^1 x CP^1 has chi = 4.
std::vector<std::string> del_pezzo_candidates(long long chi);

// Rational Betti numbers b_0, b_1, ... of the bases used by the fillings:
// "CP1", "CP1xCP1", "Fl3", "CP2", "RP2", "RP3", "pt".
std::vector<std::size_t> cellular_ranks(const std::string& space);

struct FillingSide {
  std::string name;
  std::string base;                 // space the filling retracts to
  std::vector<std::size_t> ranks;   // rational homology ranks b_0, b_1, ...
  bool exact = true;
  std::string note;
};

struct FillingDescriptor {
  std::string scenario;
  std::string contact_boundary;
  FillingSide standard;
  FillingSide alternative;
  std::vector<std::string> flags;  // disagreements with quoted figures
};

// Scenarios rp2, rp3, cp2.
FillingDescriptor filling_descriptor(const std::string& scenario);

struct MatrixSample {
  double trace_abs = 0;
  std::size_t shifted_rank = 0;  // rank(A - t Id)
  bool passed = false;
};

struct MatrixModelReport {
  int n = 0;
  double tolerance = 0;
  std::vector<MatrixSample> samples;
  bool all_passed() const;
};

// Numerical rank with pivot threshold `tol`, by complex Gaussian elimination.
std::size_t complex_rank(std::vector<std::complex<double>> m, std::size_t rows, std::size_t cols, double tol);

// Checks one pair (x, y), both of length n + 1.
MatrixSample check_matrix_sample(std::span<const std::complex<double>> x, std::span<const std::complex<double>> y,
                                 double tol);

// For random unit complex vectors x, y of length n + 1, forms
// A = x y^T - (x.y)/(n+1) Id and checks tr A = 0 and rank(A - t Id) <= 1 for
// t = -(x.y)/(n+1), i.e. an eigenspace of dimension >= n.
MatrixModelReport matrix_model_check(int n, std::size_t samples, std::uint64_t seed, double tol);

}  // namespace lfk
