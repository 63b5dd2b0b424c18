#include "lfk/graded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lfk {

GradedSpace::GradedSpace(std::initializer_list<std::pair<const int, std::size_t>> init) {
  for (const auto& [deg, r] : init) add_rank(deg, r);
}

GradedSpace::GradedSpace(const std::map<int, std::size_t>& ranks) {
  for (const auto& [deg, r] : ranks) add_rank(deg, r);
}

std::size_t GradedSpace::rank(int degree) const {
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

void GradedSpace::set_rank(int degree, std::size_t rank) {
  if (rank == 0) {
    ranks_.erase(degree);
  } else {
    ranks_[degree] = rank;
  }
}

void GradedSpace::add_rank(int degree, std::size_t rank) {
  if (rank != 0) ranks_[degree] += rank;
}

std::size_t GradedSpace::total_rank() const {
  std::size_t total = 0;
  for (const auto& [deg, r] : ranks_) total += r;
  return total;
}

long long GradedSpace::euler_characteristic() const {
  long long chi = 0;
  for (const auto& [deg, r] : ranks_) {
    chi += (deg % 2 == 0) ? static_cast<long long>(r) : -static_cast<long long>(r);
  }
  return chi;
}

int GradedSpace::min_degree() const {
  if (ranks_.empty()) throw std::logic_error("min_degree of zero space");
  return ranks_.begin()->first;
}

int GradedSpace::max_degree() const {
  if (ranks_.empty()) throw std::logic_error("max_degree of zero space");
  return ranks_.rbegin()->first;
}

GradedSpace GradedSpace::flip_degrees() const {
  GradedSpace out;
  for (const auto& [deg, r] : ranks_) out.add_rank(-deg, r);
  return out;
}

GradedSpace GradedSpace::truncated(int lo, int hi) const {
  GradedSpace out;
  for (auto it = ranks_.lower_bound(lo); it != ranks_.end() && it->first <= hi; ++it) {
    out.add_rank(it->first, it->second);
  }
  return out;
}

std::string GradedSpace::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [deg, r] : ranks_) {
    if (!first) os << ", ";
    first = false;
    os << deg << ':' << r;
  }
  os << '}';
  return os.str();
}

GradedSpace shift(const GradedSpace& space, int s) {
  GradedSpace out;
  for (const auto& [deg, r] : space.ranks()) out.add_rank(deg + s, r);
  return out;
}

GradedSpace direct_sum(std::span<const GradedSpace> spaces) {
  GradedSpace out;
  for (const auto& sp : spaces) {
    for (const auto& [deg, r] : sp.ranks()) out.add_rank(deg, r);
  }
  return out;
}

GradedSpace direct_sum(std::initializer_list<GradedSpace> spaces) {
  return direct_sum(std::span<const GradedSpace>(spaces.begin(), spaces.size()));
}

GradedSpace convolve(const GradedSpace& a, const GradedSpace& b) {
  GradedSpace out;
  for (const auto& [da, ra] : a.ranks()) {
    for (const auto& [db, rb] : b.ranks()) out.add_rank(da + db, ra * rb);
  }
  return out;
}

// --- F2Matrix ---------------------------------------------------------------

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + 63) / 64), 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
  return (bits_[r * words_per_row() + c / 64] >> (c % 64)) & 1U;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
  auto& word = bits_[r * words_per_row() + c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  word = value ? (word | mask) : (word & ~mask);
}

void F2Matrix::flip(std::size_t r, std::size_t c) {
  bits_[r * words_per_row() + c / 64] ^= std::uint64_t{1} << (c % 64);
}

bool F2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t F2Matrix::rank() const {
  const std::size_t wpr = words_per_row();
  std::vector<std::uint64_t> m = bits_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(m[pivot * wpr + w] & mask)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(m.begin() + pivot * wpr, m.begin() + (pivot + 1) * wpr, m.begin() + rank * wpr);
    }
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m[r * wpr + w] & mask) {
        for (std::size_t k = w; k < wpr; ++k) m[r * wpr + k] ^= m[rank * wpr + k];
      }
    }
    ++rank;
  }
  return rank;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("F2Matrix: shape mismatch in product");
  F2Matrix out(rows_, rhs.cols_);
  const std::size_t wpr = rhs.words_per_row();
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      for (std::size_t w = 0; w < wpr; ++w) out.bits_[r * wpr + w] ^= rhs.bits_[k * wpr + w];
    }
  }
  return out;
}

// --- ChainComplexF2 ---------------------------------------------------------

void ChainComplexF2::set_dimension(int degree, std::size_t dim) {
  if (dim == 0) {
    dims_.erase(degree);
  } else {
    dims_[degree] = dim;
  }
}

void ChainComplexF2::set_differential(int degree, F2Matrix d) {
  if (d.cols() != dimension(degree) || d.rows() != dimension(degree + 1)) {
    std::ostringstream os;
    os << "differential d^" << degree << " has shape " << d.rows() << "x" << d.cols() << ", expected "
       << dimension(degree + 1) << "x" << dimension(degree);
    throw std::invalid_argument(os.str());
  }
  diffs_[degree] = std::move(d);
}

std::size_t ChainComplexF2::dimension(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

F2Matrix ChainComplexF2::differential(int degree) const {
  auto it = diffs_.find(degree);
  if (it != diffs_.end()) return it->second;
  return F2Matrix(dimension(degree + 1), dimension(degree));
}

GradedSpace ChainComplexF2::chains() const { return GradedSpace(dims_); }

void ChainComplexF2::check_square_zero() const {
  for (const auto& [deg, d] : diffs_) {
    auto next = diffs_.find(deg + 1);
    if (next == diffs_.end()) continue;
    if (!(next->second * d).is_zero()) {
      throw std::domain_error("d^" + std::to_string(deg + 1) + " o d^" + std::to_string(deg) + " is nonzero");
    }
  }
}

GradedSpace homology(const ChainComplexF2& complex) {
  complex.check_square_zero();
  GradedSpace out;
  const GradedSpace chains = complex.chains();
  for (const auto& [deg, dim] : chains.ranks()) {
    const std::size_t out_rank = complex.differential(deg).rank();
    const std::size_t in_rank = complex.differential(deg - 1).rank();
    if (out_rank + in_rank > dim) throw std::logic_error("homology: boundary ranks exceed chain rank");
    out.add_rank(deg, dim - out_rank - in_rank);
  }
  return out;
}

}  // namespace lfk
