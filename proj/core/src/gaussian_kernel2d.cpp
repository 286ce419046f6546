#include "galdec/gaussian_kernel2d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace galdec {

using cplx = std::complex<double>;

std::complex<double> GaussianKernel2D::operator()(double g1, double g2) const {
    return std::exp(c0 + c1 * g1 + c2 * g2 + c11 * g1 * g1 + c22 * g2 * g2 + c12 * g1 * g2);
}

GaussianKernel2D damp_separation(const GaussianKernel2D& k, double c) {
    if (c < 0.0) throw std::domain_error("damping coefficient must be non-negative");
    GaussianKernel2D out = k;
    out.c11 -= c;
    out.c22 -= c;
    out.c12 += 2.0 * c;
    return out;
}

namespace {

// Fourier transform of the quadratic exponential:
//   K'(h1, h2) = (m / 2 pi hbar) Int exp(i s kappa (h1 g1 - h2 g2)) K(g1, g2) dg1 dg2,
// s = -1 for position -> velocity, s = +1 for the inverse; kappa = m / hbar.
// Standard complex Gaussian integral with A = -2 [[c11, c12/2], [c12/2, c22]].
GaussianKernel2D fourier(const GaussianKernel2D& k, int s) {
    const double kappa = k.mass / k.hbar;
    const cplx a11 = -2.0 * k.c11;
    const cplx a22 = -2.0 * k.c22;
    const cplx a12 = -k.c12;
    if (a11.real() <= 0.0 || a22.real() <= 0.0 ||
        (a11.real() * a22.real() - a12.real() * a12.real()) <= 0.0)
        throw std::domain_error("kernel exponent is not negative definite; transform diverges");

    const cplx det = a11 * a22 - a12 * a12;
    // B = A^{-1}
    const cplx b11 = a22 / det;
    const cplx b22 = a11 / det;
    const cplx b12 = -a12 / det;

    const cplx i_s(0.0, static_cast<double>(s));
    // linear sources: b = (c1 + i s kappa h1, c2 - i s kappa h2); collect powers of (h1, h2)
    // from 1/2 b^T B b.
    GaussianKernel2D out;
    out.rep = k.rep == Rep::Position ? Rep::Velocity : Rep::Position;
    out.mass = k.mass;
    out.hbar = k.hbar;
    out.c11 = -0.5 * kappa * kappa * b11;
    out.c22 = -0.5 * kappa * kappa * b22;
    out.c12 = kappa * kappa * b12;
    out.c1 = i_s * kappa * (b11 * k.c1 + b12 * k.c2);
    out.c2 = -i_s * kappa * (b12 * k.c1 + b22 * k.c2);
    const cplx quad = 0.5 * (b11 * k.c1 * k.c1 + 2.0 * b12 * k.c1 * k.c2 + b22 * k.c2 * k.c2);
    out.c0 = k.c0 + quad + std::log(k.mass / (k.hbar * std::sqrt(det)));
    return out;
}

}  // namespace

GaussianKernel2D to_velocity_rep(const GaussianKernel2D& k) {
    if (k.rep != Rep::Position) throw std::domain_error("kernel already in velocity rep");
    return fourier(k, -1);
}

GaussianKernel2D to_position_rep(const GaussianKernel2D& k) {
    if (k.rep != Rep::Velocity) throw std::domain_error("kernel already in position rep");
    return fourier(k, +1);
}

double sup_abs(const GaussianKernel2D& k) {
    // maximize Re(exponent): f = r0 + r^T z + 1/2 z^T Q z, Q negative definite
    const double q11 = 2.0 * k.c11.real();
    const double q22 = 2.0 * k.c22.real();
    const double q12 = k.c12.real();
    const double det = q11 * q22 - q12 * q12;
    if (q11 >= 0.0 || det <= 0.0)
        throw std::domain_error("kernel magnitude is unbounded");
    const double r1 = k.c1.real();
    const double r2 = k.c2.real();
    // f* = r0 - 1/2 r^T Q^{-1} r
    const double qinv_r1 = (q22 * r1 - q12 * r2) / det;
    const double qinv_r2 = (-q12 * r1 + q11 * r2) / det;
    return std::exp(k.c0.real() - 0.5 * (r1 * qinv_r1 + r2 * qinv_r2));
}

std::complex<double> trace(const GaussianKernel2D& k) {
    const cplx a = -(k.c11 + k.c22 + k.c12);
    if (a.real() <= 0.0) throw std::domain_error("diagonal is not integrable");
    const cplx lin = k.c1 + k.c2;
    return std::sqrt(std::numbers::pi / a) * std::exp(lin * lin / (4.0 * a) + k.c0);
}

DensityKernel on_grid(const GaussianKernel2D& k, const Grid1D& grid) {
    validate(grid);
    DensityKernel out;
    out.rep = k.rep;
    out.grid = grid;
    out.mass = k.mass;
    out.hbar = k.hbar;
    const auto n = static_cast<Eigen::Index>(grid.n);
    out.data.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double gj = grid.point(static_cast<std::size_t>(j));
        for (Eigen::Index i = 0; i < n; ++i)
            out.data(i, j) = k(grid.point(static_cast<std::size_t>(i)), gj);
    }
    return out;
}

}  // namespace galdec
