#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lfk {

// Finitely supported map degree -> F2-rank. Zero ranks are never stored, so
// two spaces compare equal iff they agree in every degree.
//
// Cohomological convention: differentials raise degree by one. Loop-space
// homology is stored in nonnegative (homological) degrees; H_{-*} in the
// cohomological grading is obtained with flip_degrees().
class GradedSpace {
public:
  GradedSpace() = default;
  GradedSpace(std::initializer_list<std::pair<const int, std::size_t>> init);
  explicit GradedSpace(const std::map<int, std::size_t>& ranks);

  std::size_t rank(int degree) const;
  void set_rank(int degree, std::size_t rank);
  void add_rank(int degree, std::size_t rank);

  std::size_t total_rank() const;
  // Alternating sum of ranks.
  long long euler_characteristic() const;
  bool empty() const { return ranks_.empty(); }
  int min_degree() const;
  int max_degree() const;

  const std::map<int, std::size_t>& ranks() const { return ranks_; }

  GradedSpace flip_degrees() const;
  // Keeps degrees in [lo, hi].
  GradedSpace truncated(int lo, int hi) const;

  std::string to_string() const;

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

private:
  std::map<int, std::size_t> ranks_;
};

// ranks'(t) = ranks(t - s); X[l] in the Floer-theoretic notation sits at
// shift(X, -l).
GradedSpace shift(const GradedSpace& space, int s);
GradedSpace direct_sum(std::span<const GradedSpace> spaces);
GradedSpace direct_sum(std::initializer_list<GradedSpace> spaces);
// Graded tensor product of ranks (Cauchy product of Poincare series).
GradedSpace convolve(const GradedSpace& a, const GradedSpace& b);

// Dense bit-packed matrix over F2.
class F2Matrix {
public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c);

  bool is_zero() const;
  std::size_t rank() const;

  F2Matrix operator*(const F2Matrix& rhs) const;
  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
  std::size_t words_per_row() const { return (cols_ + 63) / 64; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Cochain complex over F2: C^t with d^t : C^t -> C^{t+1}. d^t is stored as a
// dim(C^{t+1}) x dim(C^t) matrix.
class ChainComplexF2 {
public:
  void set_dimension(int degree, std::size_t dim);
  // Throws std::invalid_argument when the shape disagrees with the set
  // dimensions.
  void set_differential(int degree, F2Matrix d);

  std::size_t dimension(int degree) const;
  // Zero matrix of the right shape when unset.
  F2Matrix differential(int degree) const;

  GradedSpace chains() const;
  // Throws std::domain_error naming the first degree where d^{t+1} d^t != 0.
  void check_square_zero() const;

private:
  std::map<int, std::size_t> dims_;
  std::map<int, F2Matrix> diffs_;
};

// H^t = dim C^t - rank d^t - rank d^{t-1}. Validates d^2 = 0 first.
GradedSpace homology(const ChainComplexF2& complex);

}  // namespace lfk
