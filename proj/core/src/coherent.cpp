#include "galdec/coherent.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "galdec/channels.hpp"

namespace galdec {

using cplx = std::complex<double>;

namespace {

void check_label(const CoherentLabel& l) {
    if (!(l.sigma_x > 0.0) || !(l.mass > 0.0) || !(l.hbar > 0.0))
        throw std::domain_error("coherent label needs positive sigma_x, mass, hbar");
}

void check_pair(const CoherentLabel& a, const CoherentLabel& b) {
    check_label(a);
    check_label(b);
    if (a.sigma_x != b.sigma_x || a.mass != b.mass || a.hbar != b.hbar)
        throw std::domain_error("coherent labels must share sigma_x, mass and hbar");
}

cplx coherent_value(const CoherentLabel& l, double x) {
    const double s2 = l.sigma_x * l.sigma_x;
    const double dx = x - l.x0;
    const double norm = std::pow(2.0 * std::numbers::pi * s2, -0.25);
    return norm * std::exp(cplx(-dx * dx / (4.0 * s2), l.mass * l.v0 * x / l.hbar));
}

}  // namespace

WaveFunction coherent_wavefunction(const CoherentLabel& l, const Grid1D& grid) {
    check_label(l);
    validate(grid);
    if (grid.step() > l.sigma_x / 8.0)
        throw std::domain_error("grid step exceeds sigma_x / 8");
    if (l.x0 - 6.0 * l.sigma_x < grid.min || l.x0 + 6.0 * l.sigma_x > grid.max)
        throw std::domain_error("grid clips the 6-sigma support of the coherent state");

    WaveFunction psi;
    psi.rep = Rep::Position;
    psi.grid = grid;
    psi.mass = l.mass;
    psi.hbar = l.hbar;
    psi.data.resize(static_cast<Eigen::Index>(grid.n));
    for (std::size_t i = 0; i < grid.n; ++i)
        psi.data(static_cast<Eigen::Index>(i)) = coherent_value(l, grid.point(i));
    psi.normalize();
    return psi;
}

std::complex<double> coherent_overlap(const CoherentLabel& l1, const CoherentLabel& l2) {
    check_pair(l1, l2);
    // Int conj(Omega1) Omega2 dx, a complex Gaussian integral
    const double s2 = l1.sigma_x * l1.sigma_x;
    const double kappa = l1.mass / l1.hbar;
    const cplx a(1.0 / (2.0 * s2), 0.0);
    const cplx b(l1.x0 / (2.0 * s2) + l2.x0 / (2.0 * s2), kappa * (l2.v0 - l1.v0));
    const cplx c(-(l1.x0 * l1.x0 + l2.x0 * l2.x0) / (4.0 * s2) -
                     0.5 * std::log(2.0 * std::numbers::pi * s2),
                 0.0);
    return std::sqrt(std::numbers::pi / a) * std::exp(b * b / (4.0 * a) + c);
}

std::complex<double> overlap_kernel(const DensityKernel& W, const CoherentLabel& l1,
                                    const CoherentLabel& l2) {
    check_pair(l1, l2);
    const DensityKernel& pos = W.rep == Rep::Position ? W : to_position_rep(W);
    if (pos.mass != l1.mass) throw std::domain_error("kernel and labels disagree on mass");

    const auto n = static_cast<Eigen::Index>(pos.grid.n);
    Eigen::VectorXcd bra(n), ket(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = pos.grid.point(static_cast<std::size_t>(i));
        bra(i) = coherent_value(l1, x);
        ket(i) = coherent_value(l2, x);
    }
    const double step = pos.grid.step();
    return step * step * (bra.adjoint() * pos.data * ket)(0, 0);
}

double a1_upper_bound(double m_sf, double sigma_x, double eta0, double w_sup) {
    if (!(m_sf > 0.0) || !(sigma_x > 0.0)) throw std::domain_error("m_sf, sigma_x must be positive");
    const double q = 1.0 + 4.0 * m_sf * m_sf;
    return 2.0 * std::sqrt(2.0 * std::numbers::pi) * sigma_x / std::sqrt(q) *
           std::exp(-m_sf * m_sf * eta0 * eta0 / (2.0 * q * sigma_x * sigma_x)) * w_sup;
}

MixtureResult mixture_of_coherent_states(const DensityKernel& W, const GalileanConfig& cfg) {
    const DensityKernel pos = W.rep == Rep::Position ? W : to_position_rep(W);
    const DensityKernel vel = to_velocity_rep(pos);
    const DerivedQuantities dq = derive_quantities(cfg, pos.mass);

    const auto n = static_cast<Eigen::Index>(pos.grid.n);
    const double step = pos.grid.step();

    // support of the state from the diagonal probability densities
    auto moments = [](const DensityKernel& k) {
        double m1 = 0.0, m2 = 0.0, w = 0.0;
        for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(k.grid.n); ++i) {
            const double p = std::max(0.0, k.data(i, i).real());
            const double g = k.grid.point(static_cast<std::size_t>(i));
            w += p;
            m1 += p * g;
            m2 += p * g * g;
        }
        m1 /= w;
        return std::pair{m1, std::sqrt(std::max(0.0, m2 / w - m1 * m1))};
    };
    const auto [mx, sx] = moments(pos);
    const auto [mv, sv] = moments(vel);

    const double dx0 = dq.sigma_x / 2.0;
    const double dv0 = dq.sigma_u / 2.0;
    const double span_x = 3.0 * sx + 8.0 * dq.sigma_x;
    const double span_v = 3.0 * sv + 8.0 * dq.sigma_u;
    const auto nx = static_cast<Eigen::Index>(std::ceil(2.0 * span_x / dx0)) + 1;
    const auto nv = static_cast<Eigen::Index>(std::ceil(2.0 * span_v / dv0)) + 1;

    // dOmega = m dx0 dv0 / (2 pi hbar); with the sigma/2 lattice the cell
    // weight is exactly 1 / 16 pi
    const double cell = pos.mass * dx0 * dv0 / (2.0 * std::numbers::pi * pos.hbar);

    // accumulate W~ = C C^H with columns sqrt(cell * <O|W|O>) * Omega
    Eigen::MatrixXcd cols(n, nx * nv);
    Eigen::Index used = 0;
    Eigen::VectorXcd omega(n);
    for (Eigen::Index a = 0; a < nx; ++a) {
        const double x0 = mx - span_x + static_cast<double>(a) * dx0;
        for (Eigen::Index b = 0; b < nv; ++b) {
            const double v0 = mv - span_v + static_cast<double>(b) * dv0;
            const CoherentLabel l{x0, v0, dq.sigma_x, pos.mass, pos.hbar};
            for (Eigen::Index i = 0; i < n; ++i)
                omega(i) = coherent_value(l, pos.grid.point(static_cast<std::size_t>(i)));
            const double h = (step * step * (omega.adjoint() * pos.data * omega)(0, 0)).real();
            if (h <= 0.0) continue;
            cols.col(used++) = std::sqrt(cell * h) * omega;
        }
    }

    MixtureResult out;
    out.kernel.rep = Rep::Position;
    out.kernel.grid = pos.grid;
    out.kernel.mass = pos.mass;
    out.kernel.hbar = pos.hbar;
    out.kernel.data = cols.leftCols(used) * cols.leftCols(used).adjoint();

    const double tr = (step * out.kernel.data.trace()).real();
    out.trace_deviation = std::abs(tr - 1.0);
    if (out.trace_deviation > 1e-3) {
        std::ostringstream msg;
        msg << "coherent-state lattice too coarse: trace deviation " << out.trace_deviation;
        throw std::domain_error(msg.str());
    }
    out.kernel.data /= tr;
    return out;
}

GaussianKernel2D pointer_dyad_after_channels(const CoherentLabel& l_mu,
                                             const CoherentLabel& l_nu,
                                             const GalileanConfig& cfg) {
    check_pair(l_mu, l_nu);
    const double s2 = l_mu.sigma_x * l_mu.sigma_x;
    const double m = l_mu.mass;
    const double h = l_mu.hbar;
    const double kappa = m / h;

    GaussianKernel2D dyad;  // Omega_mu(x) conj(Omega_nu(y))
    dyad.rep = Rep::Position;
    dyad.mass = m;
    dyad.hbar = h;
    dyad.c11 = dyad.c22 = cplx(-1.0 / (4.0 * s2), 0.0);
    dyad.c12 = 0.0;
    dyad.c1 = cplx(l_mu.x0 / (2.0 * s2), kappa * l_mu.v0);
    dyad.c2 = cplx(l_nu.x0 / (2.0 * s2), -kappa * l_nu.v0);
    dyad.c0 = cplx(-(l_mu.x0 * l_mu.x0 + l_nu.x0 * l_nu.x0) / (4.0 * s2) -
                       0.5 * std::log(2.0 * std::numbers::pi * s2),
                   0.0);
    if (cfg.delta_t == 0.0) return dyad;
    validate(cfg);

    const double c_s = m * m * cfg.alpha * cfg.delta_t / (2.0 * h * h);
    const double c_b = m * m * cfg.beta * cfg.delta_t / (2.0 * h * h);
    GaussianKernel2D out = to_position_rep(damp_separation(to_velocity_rep(dyad), c_s));
    return damp_separation(out, c_b);
}

MeasurementVerdict measurement_mixture(const std::vector<BranchSpec>& branches,
                                       const GalileanConfig& cfg, const Grid1D& grid) {
    if (branches.empty()) throw std::domain_error("no branches");
    double wsum = 0.0;
    for (const auto& b : branches) {
        if (!(b.weight > 0.0)) throw std::domain_error("branch weights must be positive");
        wsum += b.weight * b.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
        throw std::domain_error("branch weights must satisfy sum c^2 = 1");
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            const auto& a = branches[i].label;
            const auto& b = branches[j].label;
            check_pair(a, b);
            if (std::abs(a.x0 - b.x0) < 10.0 * a.sigma_x &&
                std::abs(a.v0 - b.v0) < 10.0 * a.sigma_u()) {
                std::ostringstream msg;
                msg << "branches " << i << " and " << j << " are not macroscopically distinct";
                throw std::domain_error(msg.str());
            }
        }

    // superposition kernel on the grid and its channel image
    const auto n = static_cast<Eigen::Index>(grid.n);
    std::vector<WaveFunction> states;
    states.reserve(branches.size());
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n);
    for (const auto& b : branches) {
        states.push_back(coherent_wavefunction(b.label, grid));
        psi += b.weight * states.back().data;
    }
    WaveFunction super;
    super.rep = Rep::Position;
    super.grid = grid;
    super.mass = branches.front().label.mass;
    super.hbar = branches.front().label.hbar;
    super.data = psi;
    super.normalize();  // cross terms are < 1e-21 at 10 sigma separation

    MeasurementVerdict out;
    out.evolved = apply_galilean_decoherence(kernel_from_wavefunction(super), cfg);

    std::vector<std::pair<double, const DensityKernel*>> parts;
    std::vector<DensityKernel> diag(branches.size());
    for (std::size_t i = 0; i < branches.size(); ++i) {
        diag[i] = apply_galilean_decoherence(kernel_from_wavefunction(states[i]), cfg);
        parts.emplace_back(branches[i].weight * branches[i].weight, &diag[i]);
    }
    out.mixture = mix(parts);

    // exact dyads: residual survives far below what the grid can represent
    double sup_diag = 0.0;
    for (const auto& b : branches)
        sup_diag = std::max(sup_diag, sup_abs(pointer_dyad_after_channels(b.label, b.label, cfg)));
    out.max_offdiag_residual = 0.0;
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t j = 0; j < branches.size(); ++j) {
            if (i == j) continue;
            const double s =
                sup_abs(pointer_dyad_after_channels(branches[i].label, branches[j].label, cfg));
            out.max_offdiag_residual = std::max(out.max_offdiag_residual, s / sup_diag);
        }
    out.proper_mixture = out.max_offdiag_residual <= 1e-6;

    out.recovered_weights.resize(branches.size());
    double hsum = 0.0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        out.recovered_weights[i] =
            std::max(0.0, overlap_kernel(out.evolved, branches[i].label, branches[i].label).real());
        hsum += out.recovered_weights[i];
    }
    for (double& w : out.recovered_weights) w /= hsum;
    return out;
}

}  // namespace galdec
