#include "lfk/loop_space.hpp"

#include <stdexcept>
#include <vector>

namespace lfk {

namespace {

void require_sphere(int n, int max_degree) {
  if (n < 2) throw std::invalid_argument("loop_sphere: need n >= 2");
  if (max_degree < 0) throw std::invalid_argument("loop space: degree bound must be nonnegative");
}

}  // namespace

GradedSpace loop_sphere(int n, int max_degree) {
  require_sphere(n, max_degree);
  // E_2^{0,q} = h_q and E_2^{n,q} = h_q. Only (0,0) survives, so for q > 0
  // E^{0,q} injects and for q >= 0 E^{n,q} is hit from E^{0,q+n-1}; together
  // h_q = h_{q-(n-1)}, with h_q = 0 when 0 < q < n - 1.
  std::vector<std::size_t> h(max_degree + 1, 0);
  h[0] = 1;
  for (int q = 1; q <= max_degree; ++q) {
    const int source = q - (n - 1);
    h[q] = source >= 0 ? h[source] : 0;
  }
  GradedSpace out;
  for (int q = 0; q <= max_degree; ++q) out.add_rank(q, h[q]);
  return out;
}

GradedSpace loop_sphere_closed_form(int n, int max_degree) {
  require_sphere(n, max_degree);
  GradedSpace out;
  for (int q = 0; q <= max_degree; q += n - 1) out.add_rank(q, 1);
  return out;
}

ChainComplexF2 path_loop_total_complex(int n, int max_degree) {
  const GradedSpace fibre = loop_sphere(n, max_degree);
  // Column 0 in total degrees q <= max_degree; column n entries with total
  // degree n + q <= max_degree + 1 so every column-0 class has its target.
  ChainComplexF2 cx;
  for (int q = 0; q <= max_degree; ++q) {
    std::size_t dim = fibre.rank(q);
    const int q_col_n = q - n;
    if (q_col_n >= 0) dim += fibre.rank(q_col_n);
    cx.set_dimension(q, dim);
  }
  const int top = max_degree + 1;
  if (top - n >= 0) cx.set_dimension(top, fibre.rank(top - n));

  // Basis in each total degree: column-0 classes first, then column n.
  for (int t = 0; t <= max_degree; ++t) {
    const std::size_t src_dim = cx.dimension(t);
    const std::size_t tgt_dim = cx.dimension(t + 1);
    if (src_dim == 0 || tgt_dim == 0) continue;
    F2Matrix d(tgt_dim, src_dim);
    // E^{0,t} -> E^{n,t-n+1}, sitting after the column-0 block of degree t+1.
    const std::size_t col0_src = fibre.rank(t);
    const std::size_t col0_tgt = (t + 1 <= max_degree) ? fibre.rank(t + 1) : 0;
    const std::size_t target_rank = (t - n + 1 >= 0) ? fibre.rank(t - n + 1) : 0;
    if (t > 0 && col0_src != target_rank) {
      throw std::logic_error("path-loop transgression is not an isomorphism");
    }
    if (t > 0) {
      for (std::size_t i = 0; i < col0_src; ++i) d.set(col0_tgt + i, i, true);
    }
    cx.set_differential(t, std::move(d));
  }
  return cx;
}

GradedSpace loop_rp2(int max_degree) {
  const GradedSpace component = loop_sphere(2, max_degree);
  return direct_sum({component, component});
}

GradedSpace loop_cp2(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("loop space: degree bound must be nonnegative");
  const GradedSpace circle{{0, 1}, {1, 1}};
  return convolve(circle, loop_sphere(5, max_degree)).truncated(0, max_degree);
}

}  // namespace lfk
