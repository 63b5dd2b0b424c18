#pragma once

#include "lfk/graded.hpp"

namespace lfk {

// H_*(Omega X; F2) in homological (nonnegative) degrees 0..max_degree. The
// cohomological reading H_{-*} used when comparing with wrapped Floer
// cohomology is `flip_degrees()` of these.

// Two-column Serre spectral sequence of Omega S^n -> P S^n -> S^n with
// contractible total space: the transgression d_n : E^{0,q} -> E^{n,q-n+1}
// must be an isomorphism off (0, 0). Requires n >= 2.
GradedSpace loop_sphere(int n, int max_degree);

// Closed form for the same ranks: 1 iff (n - 1) divides q.
GradedSpace loop_sphere_closed_form(int n, int max_degree);

// Total complex of the two-column E_n page with the transgression as the
// differential, truncated so that its cohomology is that of a point in
// degrees <= max_degree.
ChainComplexF2 path_loop_total_complex(int n, int max_degree);

// Omega RP^2 has two components, each homotopy equivalent to Omega S^2.
GradedSpace loop_rp2(int max_degree);

// Omega S^5 -> Omega CP^2 -> S^1; over F2 the ranks are H(S^1) * H(Omega S^5).
GradedSpace loop_cp2(int max_degree);

}  // namespace lfk
