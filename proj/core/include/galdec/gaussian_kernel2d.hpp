#pragma once

#include <complex>

#include "galdec/density_kernel.hpp"

namespace galdec {

/// Exponential of a complex quadratic in two variables,
///   K(g1, g2) = exp(c0 + c1 g1 + c2 g2 + c11 g1^2 + c22 g2^2 + c12 g1 g2),
/// closed under Gaussian separation damping and the mass-scaled Fourier
/// transform. Used as the exact carrier of coherent-state dyads through the
/// decoherence channels (no grid, no aliasing, no underflow in the exponent).
struct GaussianKernel2D {
    Rep rep = Rep::Position;
    double mass = 0.0;
    double hbar = 0.0;
    std::complex<double> c0, c1, c2, c11, c22, c12;

    std::complex<double> operator()(double g1, double g2) const;
};

/// Multiply by exp(-c (g1 - g2)^2) in the current representation.
GaussianKernel2D damp_separation(const GaussianKernel2D& k, double c);

/// Exact mass-scaled Fourier transforms of the quadratic exponential.
/// Throws std::domain_error if the Gaussian is not integrable (the real
/// quadratic part must be negative definite).
GaussianKernel2D to_velocity_rep(const GaussianKernel2D& k);
GaussianKernel2D to_position_rep(const GaussianKernel2D& k);

/// Supremum of |K| over the plane (exp of the maximal real part).
double sup_abs(const GaussianKernel2D& k);

/// Integral of K(g, g) dg along the diagonal.
std::complex<double> trace(const GaussianKernel2D& k);

/// Sample on a grid as a DensityKernel-shaped matrix (may be non-Hermitian
/// for off-diagonal dyads; validate() is the caller's business).
DensityKernel on_grid(const GaussianKernel2D& k, const Grid1D& grid);

}  // namespace galdec
