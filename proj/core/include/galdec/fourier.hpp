#pragma once

#include <Eigen/Dense>
#include <complex>

#include "galdec/grid.hpp"

namespace galdec {

/// In-place unnormalized DFT, sign = -1 forward (e^{-i 2 pi k j / n}),
/// sign = +1 backward. FFTW under the hood.
void dft(Eigen::VectorXcd& v, int sign);

/// Mass-scaled continuum Fourier transform, position -> velocity rep:
///   psi(v) = sqrt(m / 2 pi hbar) * Integral exp(-i m v x / hbar) phi(x) dx
/// discretized on `pos` with the dual velocity grid. Exact inverse pair.
Eigen::VectorXcd position_to_velocity(const Eigen::VectorXcd& phi, const Grid1D& pos,
                                      double mass, double hbar);
Eigen::VectorXcd velocity_to_position(const Eigen::VectorXcd& psi, const Grid1D& pos,
                                      double mass, double hbar);

}  // namespace galdec
