#include "galdec/packet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "galdec/fourier.hpp"

namespace galdec {

std::complex<double> gaussian_packet_value(const GaussianPacketSpec& spec, double r, double t,
                                           double hbar) {
    using namespace std::complex_literals;
    const double m = spec.mass;
    const double d = spec.d;
    const double v = spec.v;
    const double x = r - spec.center;

    const double d2m = d * d * m;
    const std::complex<double> denom = 2.0 * d2m + 1i * t * hbar;
    const double q = 4.0 * d2m * d2m + t * t * hbar * hbar;

    const std::complex<double> amp =
        std::pow(2.0 / std::numbers::pi, 0.25) * std::sqrt(d * m / denom);
    const double envelope = -d * d * m * m * (x - t * v) * (x - t * v) / q;
    const double phase =
        (m * t * x * x * hbar * hbar - 4.0 * d2m * d2m * m * v * (t * v - 2.0 * x)) /
        (2.0 * hbar * q);
    return amp * std::exp(envelope + 1i * phase);
}

double packet_width(const GaussianPacketSpec& spec, double t, double hbar) {
    const double spread = t * hbar / (2.0 * spec.d * spec.mass);
    return std::sqrt(spec.d * spec.d + spread * spread);
}

WaveFunction sample_packet(const GaussianPacketSpec& spec, const Grid1D& grid, double t,
                           double hbar) {
    validate(grid);
    WaveFunction psi;
    psi.rep = Rep::Position;
    psi.grid = grid;
    psi.mass = spec.mass;
    psi.hbar = hbar;
    psi.data.resize(static_cast<Eigen::Index>(grid.n));
    for (std::size_t i = 0; i < grid.n; ++i)
        psi.data(static_cast<Eigen::Index>(i)) = gaussian_packet_value(spec, grid.point(i), t, hbar);
    psi.normalize();
    return psi;
}

namespace {

// Occupied momentum scale: mean velocity plus four standard deviations.
double occupied_wavenumber(const WaveFunction& psi) {
    WaveFunction vel = to_velocity_rep(psi);
    const double vc = mean(vel);
    const double vs = std_dev(vel);
    return psi.mass * (std::abs(vc) + 4.0 * vs) / psi.hbar;
}

}  // namespace

WaveFunction split_step_propagate(const WaveFunction& psi_in, const std::optional<DeltaWall>& wall,
                                  double t, int steps) {
    validate(psi_in);
    if (psi_in.rep != Rep::Position)
        throw std::domain_error("split-step propagation expects a position-rep state");
    if (steps < 1) throw std::domain_error("steps must be >= 1");
    if (t == 0.0) return psi_in;
    if (t < 0.0) throw std::domain_error("negative propagation time");

    const double dx = psi_in.grid.step();
    if (std_dev(psi_in) < 16.0 * dx)
        throw std::domain_error("grid under-resolves the packet (< 16 points per width)");

    const double dt = t / steps;
    const double kocc = occupied_wavenumber(psi_in);
    if (psi_in.hbar * kocc * kocc / (2.0 * psi_in.mass) * dt >= std::numbers::pi / 4.0)
        throw std::domain_error("per-step kinetic phase exceeds pi/4; increase steps");

    const auto n = static_cast<Eigen::Index>(psi_in.grid.n);
    const Grid1D vel = dual_velocity_grid(psi_in.grid, psi_in.mass, psi_in.hbar);

    // exp(-i m v^2 dt / 2 hbar) on the dual velocity grid.
    Eigen::VectorXcd kin(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double v = vel.point(static_cast<std::size_t>(k));
        kin(k) = std::exp(std::complex<double>(0.0, -psi_in.mass * v * v * dt / (2.0 * psi_in.hbar)));
    }

    Eigen::VectorXcd pot_half = Eigen::VectorXcd::Ones(n);
    if (wall) {
        const double height = wall->strength / (dx * std::sqrt(2.0 * std::numbers::pi));
        for (Eigen::Index i = 0; i < n; ++i) {
            const double x = psi_in.grid.point(static_cast<std::size_t>(i)) - wall->position;
            const double V = height * std::exp(-x * x / (2.0 * dx * dx));
            pot_half(i) = std::exp(std::complex<double>(0.0, -V * dt / (2.0 * psi_in.hbar)));
        }
    }

    WaveFunction psi = psi_in;
    for (int s = 0; s < steps; ++s) {
        if (wall) psi.data.array() *= pot_half.array();
        psi.data = position_to_velocity(psi.data, psi.grid, psi.mass, psi.hbar);
        psi.data.array() *= kin.array();
        psi.data = velocity_to_position(psi.data, psi.grid, psi.mass, psi.hbar);
        if (wall) psi.data.array() *= pot_half.array();
    }
    return psi;
}

CmRel cm_relative(double x1, double x2, double m1, double m2) {
    if (!(m1 > 0.0) || !(m2 > 0.0)) throw std::domain_error("masses must be positive");
    return CmRel{(m1 * x1 + m2 * x2) / (m1 + m2), x1 - x2};
}

std::pair<double, double> cm_relative_inverse(const CmRel& c, double m1, double m2) {
    if (!(m1 > 0.0) || !(m2 > 0.0)) throw std::domain_error("masses must be positive");
    const double M = m1 + m2;
    return {c.X + m2 / M * c.x, c.X - m1 / M * c.x};
}

}  // namespace galdec
