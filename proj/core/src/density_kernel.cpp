#include "galdec/density_kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "galdec/fourier.hpp"

namespace galdec {

void validate(const DensityKernel& k, bool strict) {
    validate(k.grid);
    if (!(k.mass > 0.0) || !(k.hbar > 0.0))
        throw std::domain_error("kernel mass and hbar must be positive");
    const auto n = static_cast<Eigen::Index>(k.grid.n);
    if (k.data.rows() != n || k.data.cols() != n)
        throw std::domain_error("kernel matrix does not match grid");

    const double scale = sup_abs(k);
    const double herm = (k.data - k.data.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12 * scale) throw std::domain_error("kernel is not Hermitian");

    if (std::abs(trace(k) - 1.0) > 1e-10)
        throw std::domain_error("kernel trace deviates from 1");

    if (strict || k.grid.n <= 512) {
        const Eigen::VectorXd ev = spectrum(k);
        if (ev(0) < -1e-10) throw std::domain_error("kernel is not positive semidefinite");
    }
}

DensityKernel kernel_from_wavefunction(const WaveFunction& psi) {
    validate(psi);
    DensityKernel k;
    k.rep = psi.rep;
    k.grid = psi.grid;
    k.dual = psi.dual;
    k.mass = psi.mass;
    k.hbar = psi.hbar;
    k.data = psi.data * psi.data.adjoint();
    return k;
}

namespace {

// W_hat = F W F^H for the mass-scaled transform F, applied as column
// transforms followed by conjugated row transforms (2n FFTs).
Eigen::MatrixXcd transform_kernel(const Eigen::MatrixXcd& w, const Grid1D& pos, double mass,
                                  double hbar, bool forward) {
    const auto n = w.rows();
    Eigen::MatrixXcd out(n, n);
    Eigen::VectorXcd col(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        col = w.col(j);
        out.col(j) = forward ? position_to_velocity(col, pos, mass, hbar)
                             : velocity_to_position(col, pos, mass, hbar);
    }
    Eigen::VectorXcd row(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        row = out.row(i).conjugate();
        row = forward ? position_to_velocity(row, pos, mass, hbar)
                      : velocity_to_position(row, pos, mass, hbar);
        out.row(i) = row.conjugate();
    }
    return out;
}

// Max magnitude on the outermost rows/columns, as an aliasing proxy.
double boundary_magnitude(const Eigen::MatrixXcd& w) {
    const auto n = w.rows();
    double m = 0.0;
    m = std::max(m, w.row(0).cwiseAbs().maxCoeff());
    m = std::max(m, w.row(n - 1).cwiseAbs().maxCoeff());
    m = std::max(m, w.col(0).cwiseAbs().maxCoeff());
    m = std::max(m, w.col(n - 1).cwiseAbs().maxCoeff());
    return m;
}

}  // namespace

DensityKernel to_velocity_rep(const DensityKernel& k) {
    if (k.rep == Rep::Velocity) return k;
    DensityKernel out;
    out.rep = Rep::Velocity;
    out.grid = dual_velocity_grid(k.grid, k.mass, k.hbar);
    out.dual = k.grid;
    out.mass = k.mass;
    out.hbar = k.hbar;
    out.data = transform_kernel(k.data, k.grid, k.mass, k.hbar, true);
    const double scale = out.data.cwiseAbs().maxCoeff();
    out.aliasing_warning =
        k.aliasing_warning || (scale > 0.0 && boundary_magnitude(out.data) > 1e-6 * scale);
    return out;
}

DensityKernel to_position_rep(const DensityKernel& k) {
    if (k.rep == Rep::Position) return k;
    DensityKernel out;
    out.rep = Rep::Position;
    out.grid = k.dual.n == k.grid.n ? k.dual : dual_position_grid(k.grid, k.mass, k.hbar);
    out.dual = k.grid;
    out.mass = k.mass;
    out.hbar = k.hbar;
    out.data = transform_kernel(k.data, out.grid, k.mass, k.hbar, false);
    const double scale = out.data.cwiseAbs().maxCoeff();
    out.aliasing_warning =
        k.aliasing_warning || (scale > 0.0 && boundary_magnitude(out.data) > 1e-6 * scale);
    return out;
}

double trace(const DensityKernel& k) {
    return (k.grid.step() * k.data.trace()).real();
}

double purity(const DensityKernel& k) {
    const double s = k.grid.step();
    return s * s * k.data.cwiseAbs2().sum();
}

Eigen::VectorXd spectrum(const DensityKernel& k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        (0.5 * k.grid.step()) * (k.data + k.data.adjoint()), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double von_neumann_entropy(const DensityKernel& k) {
    const Eigen::VectorXd ev = spectrum(k);
    if (ev(0) < -1e-8) throw std::domain_error("positivity violation: eigenvalue < -1e-8");
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        const double lam = std::min(1.0, std::max(0.0, ev(i)));
        if (lam > 0.0) s -= lam * std::log(lam);
    }
    return s;
}

double sup_abs(const DensityKernel& k) {
    return k.data.cwiseAbs().maxCoeff();
}

DensityKernel mix(const std::vector<std::pair<double, const DensityKernel*>>& parts) {
    if (parts.empty()) throw std::domain_error("mix needs at least one kernel");
    double total = 0.0;
    for (const auto& [w, kp] : parts) {
        if (!(w > 0.0)) throw std::domain_error("mix weights must be positive");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::domain_error("mix weights must sum to 1, got " + std::to_string(total));
    DensityKernel out = *parts.front().second;
    out.data = parts.front().first * parts.front().second->data;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto& [w, kp] = parts[i];
        if (kp->grid.n != out.grid.n || kp->grid.min != out.grid.min ||
            kp->grid.max != out.grid.max || kp->rep != out.rep || kp->mass != out.mass)
            throw std::domain_error("mix requires matching grids and representations");
        out.data += w * kp->data;
    }
    return out;
}

}  // namespace galdec
