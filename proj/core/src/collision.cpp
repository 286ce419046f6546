#include "galdec/collision.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace galdec {

using cplx = std::complex<double>;

double CollisionSetup::theta(double t) const {
    return t * hbar / (pointer.d * pointer.d * pointer.mass);
}

double factorization_residual(const CollisionSetup& s) {
    // cross term of the CM/relative exponent: m2/d1^2 - m1/d2^2, normalized
    const double a = s.pointer.mass / (s.atom.d * s.atom.d);
    const double b = s.atom.mass / (s.pointer.d * s.pointer.d);
    return std::abs(a - b) / (a + b);
}

namespace {

// Integral of |psi_atom(x,0)| |psi_pointer(x,0)| dx for the initial Gaussians.
double initial_overlap(const CollisionSetup& s) {
    const double a1 = 1.0 / (4.0 * s.atom.d * s.atom.d);
    const double a2 = 1.0 / (4.0 * s.pointer.d * s.pointer.d);
    const double sep = s.pointer.center - s.atom.center;
    const double norm = std::pow(2.0 * std::numbers::pi * s.atom.d * s.atom.d, -0.25) *
                        std::pow(2.0 * std::numbers::pi * s.pointer.d * s.pointer.d, -0.25);
    return norm * std::sqrt(std::numbers::pi / (a1 + a2)) *
           std::exp(-a1 * a2 * sep * sep / (a1 + a2));
}

}  // namespace

void validate(const CollisionSetup& s) {
    if (!(s.atom.mass > 0.0) || !(s.pointer.mass > 0.0) || !(s.atom.d > 0.0) ||
        !(s.pointer.d > 0.0) || !(s.hbar > 0.0))
        throw std::domain_error("collision masses, widths and hbar must be positive");
    if (!(s.atom.v > 0.0) || !(s.pointer.center > s.atom.center))
        throw std::domain_error("atom must move toward the pointer");
    if (s.pointer.v != 0.0) throw std::domain_error("pointer must start at rest");
    const double res = factorization_residual(s);
    if (res > 1e-4) {
        std::ostringstream msg;
        msg << "width rule d2 = d1 sqrt(m1/m2) violated, factorization residual " << res;
        throw std::domain_error(msg.str());
    }
    if (initial_overlap(s) >= 1e-8)
        throw std::domain_error("initial atom/pointer overlap is not negligible");
    if (s.v0_strength < 100.0 * s.hbar * s.atom.v)
        throw std::domain_error("potential strength below 100 hbar v; transmission not negligible");
}

CollisionResult collide(const CollisionSetup& s, double t) {
    validate(s);
    if (t < s.t3()) throw std::domain_error("collision not finished before t3 = 2A/v");

    const double m1 = s.atom.mass;
    const double m2 = s.pointer.mass;
    const double M = m1 + m2;
    const double A = s.pointer.center;
    const double v = s.atom.v;

    CollisionResult r;
    // perfect-mirror relative motion, refactorized into single-particle packets
    r.atom_out = GaussianPacketSpec{m1, (m1 - m2) * v / M, s.atom.d, 2.0 * A * m2 / M};
    r.pointer_out = GaussianPacketSpec{m2, 2.0 * m1 * v / M, s.pointer.d, A * (m2 - m1) / M};
    r.v0 = r.pointer_out.v;
    r.x0 = r.pointer_out.center + r.v0 * t;
    return r;
}

WaveFunction atom_state(const CollisionResult& r, const Grid1D& grid, double t, double hbar) {
    return sample_packet(r.atom_out, grid, t, hbar);
}

WaveFunction pointer_state(const CollisionResult& r, const Grid1D& grid, double t, double hbar) {
    return sample_packet(r.pointer_out, grid, t, hbar);
}

PointerExpansion pointer_expansion(const CollisionSetup& s, double t) {
    validate(s);
    const double m1 = s.atom.mass;
    const double m2 = s.pointer.mass;
    const double M = m1 + m2;
    const double A = s.pointer.center;
    const double v = s.atom.v;
    const double d2 = s.pointer.d;
    const double h = s.hbar;

    PointerExpansion e;
    e.theta = s.theta(t);
    if (e.theta >= 1.0) throw std::domain_error("theta >= 1: short-spread expansion invalid");

    const double d2sq = d2 * d2;
    const double q = 4.0 * d2sq * d2sq * m2 * m2 + t * t * h * h;

    e.R_coeff = -d2sq * m2 * m2 / q;
    e.R_series = -1.0 / (4.0 * d2sq) + e.theta * e.theta / (16.0 * d2sq);

    e.I1 = (8.0 * d2sq * d2sq * m1 * m2 * m2 * m2 * v + A * (m1 - m2) * m2 * t * h * h) /
           (M * h * q);
    e.I1_series = 2.0 * m1 * m2 * v / (M * h) + A * (m1 - m2) * e.theta / (4.0 * d2sq * M);

    e.I2 = m2 * t * h / (2.0 * q);
    e.I2_series = e.theta / (8.0 * d2sq);

    e.x0 = A * (m2 - m1) / M + 2.0 * m1 * v * t / M;
    e.v0 = 2.0 * m1 * v / M;
    return e;
}

namespace {

// Exponent coefficients (e0, e1, e2) of the free packet at time t,
// psi(r, t) = exp(e0 + e1 r + e2 r^2), log-amplitude folded into e0.
struct Quad {
    cplx e0, e1, e2;
};

Quad packet_exponent(const GaussianPacketSpec& p, double t, double hbar) {
    const double m = p.mass;
    const double d = p.d;
    const double v = p.v;
    const double d2m = d * d * m;
    const cplx denom(2.0 * d2m, t * hbar);
    const double q = 4.0 * d2m * d2m + t * t * hbar * hbar;

    // in the packet-centered coordinate x = r - center
    const cplx E2(-d * d * m * m / q, m * t * hbar / (2.0 * q));
    const cplx E1(2.0 * d * d * m * m * t * v / q, 4.0 * d2m * d2m * m * v / (hbar * q));
    const cplx E0(-d * d * m * m * t * t * v * v / q, -2.0 * d2m * d2m * m * t * v * v / (hbar * q));
    const cplx logamp = 0.25 * std::log(2.0 / std::numbers::pi) + 0.5 * std::log(d * m / denom);

    // shift to the absolute coordinate r
    const double c = p.center;
    Quad out;
    out.e2 = E2;
    out.e1 = E1 - 2.0 * E2 * c;
    out.e0 = E0 - E1 * c + E2 * c * c + logamp;
    return out;
}

// |Int conj(f) g dr| for two quadratic exponentials.
double abs_overlap(const Quad& f, const Quad& g) {
    const cplx a = -(std::conj(f.e2) + g.e2);
    const cplx b = std::conj(f.e1) + g.e1;
    const cplx c = std::conj(f.e0) + g.e0;
    return std::abs(std::sqrt(std::numbers::pi / a) * std::exp(b * b / (4.0 * a) + c));
}

Quad coherent_exponent(double x0, double v0, double sigma_x, double mass, double hbar) {
    Quad q;
    q.e2 = cplx(-1.0 / (4.0 * sigma_x * sigma_x), 0.0);
    q.e1 = cplx(x0 / (2.0 * sigma_x * sigma_x), mass * v0 / hbar);
    q.e0 = cplx(-x0 * x0 / (4.0 * sigma_x * sigma_x) -
                    0.25 * std::log(2.0 * std::numbers::pi * sigma_x * sigma_x),
                0.0);
    return q;
}

}  // namespace

std::vector<TrajectoryRow> collision_trajectory(const CollisionSetup& s,
                                                const std::vector<double>& times) {
    validate(s);
    std::vector<TrajectoryRow> rows;
    rows.reserve(times.size());
    const double t3 = s.t3();
    for (double t : times) {
        if (t < t3) throw std::domain_error("trajectory time before t3");
        const CollisionResult r = collide(s, t);
        TrajectoryRow row;
        row.t = t;
        row.atom_mean = r.atom_out.center + r.atom_out.v * t;
        row.atom_width = packet_width(r.atom_out, t, s.hbar);
        row.pointer_mean = r.x0;
        row.pointer_width = packet_width(r.pointer_out, t, s.hbar);
        const Quad coh = coherent_exponent(r.x0, r.v0, s.pointer.d, s.pointer.mass, s.hbar);
        const Quad ptr = packet_exponent(r.pointer_out, t, s.hbar);
        row.overlap_with_coherent = abs_overlap(coh, ptr);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace galdec
