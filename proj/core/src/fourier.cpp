#include "galdec/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>

namespace galdec {

namespace {

// FFTW plans keyed by (size, sign); execute_dft is thread-safe, planning is not.
std::mutex plan_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan>& plan_cache() {
    static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
    return cache;
}

fftw_plan get_plan(std::size_t n, int sign) {
    std::lock_guard lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = plan_cache().find(key);
    if (it != plan_cache().end()) return it->second;
    std::vector<std::complex<double>> buf(n);
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), p, p,
                                      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    plan_cache().emplace(key, plan);
    return plan;
}

}  // namespace

void dft(Eigen::VectorXcd& v, int sign) {
    fftw_plan plan = get_plan(static_cast<std::size_t>(v.size()), sign);
    auto* p = reinterpret_cast<fftw_complex*>(v.data());
    fftw_execute_dft(plan, p, p);
}

Eigen::VectorXcd position_to_velocity(const Eigen::VectorXcd& phi, const Grid1D& pos,
                                      double mass, double hbar) {
    const auto n = static_cast<Eigen::Index>(pos.n);
    const double dx = pos.step();
    const Grid1D vel = dual_velocity_grid(pos, mass, hbar);
    const double pref = std::sqrt(mass / (2.0 * std::numbers::pi * hbar)) * dx;

    Eigen::VectorXcd work(n);
    for (Eigen::Index j = 0; j < n; ++j)
        work(j) = (j % 2 == 0) ? phi(j) : -phi(j);
    dft(work, -1);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double vk = vel.point(static_cast<std::size_t>(k));
        work(k) *= pref * std::exp(std::complex<double>(0.0, -mass * vk * pos.min / hbar));
    }
    return work;
}

Eigen::VectorXcd velocity_to_position(const Eigen::VectorXcd& psi, const Grid1D& pos,
                                      double mass, double hbar) {
    const auto n = static_cast<Eigen::Index>(pos.n);
    const Grid1D vel = dual_velocity_grid(pos, mass, hbar);
    const double dv = vel.step();
    const double pref = std::sqrt(mass / (2.0 * std::numbers::pi * hbar)) * dv;

    Eigen::VectorXcd work(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double vk = vel.point(static_cast<std::size_t>(k));
        work(k) = psi(k) * std::exp(std::complex<double>(0.0, mass * vk * pos.min / hbar));
    }
    dft(work, +1);
    for (Eigen::Index j = 0; j < n; ++j)
        work(j) *= (j % 2 == 0) ? pref : -pref;
    return work;
}

}  // namespace galdec
