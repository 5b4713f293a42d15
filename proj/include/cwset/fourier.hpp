#pragma once

#include "cwset/groups.hpp"
#include "cwset/region.hpp"

#include <complex>

namespace cwset {

using Complex = std::complex<double>;

/// Fourier transform of the indicator of r at xi, with the convention
/// f^(xi) = integral of f(z) exp(-2 pi i <z, xi>) dz. Pieces are assumed
/// interior-disjoint; overlapping pieces are counted with multiplicity.
Complex ft_indicator(const Region& r, double xi_x, double xi_y);

/// Transform of the indicator of A (three squares of side 2/3 on the
/// diagonal) at the integer point (k, l). Throws std::invalid_argument at (0, 0).
Complex closed_form_A_hat(long k, long l);
/// Same for A/2.
Complex closed_form_halfA_hat(long k, long l);

struct FourierCheckReport {
    double max_abs_value = 0;
    double value_at_zero_error = 0;
    long points_checked = 0;
    double radius = 0;
    double tolerance = 0;
    bool passed = false;
};

/// Numeric tiling criterion: the transform vanishes on the nonzero dual
/// lattice points of norm at most radius and equals k times the covolume at 0.
FourierCheckReport fourier_tiling_check(const Region& r, const Lattice& lattice, double radius, double tol,
                                        int k = 1);

}  // namespace cwset
