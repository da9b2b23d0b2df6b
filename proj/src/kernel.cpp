#include "prodhawkes/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prodhawkes {

namespace {

void check_omega(double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::domain_error("kernel rate omega must be positive");
    }
}

}  // namespace

double kernel_eval(double omega, double dt) {
    check_omega(omega);
    if (dt < 0.0) return 0.0;
    return std::exp(-omega * dt);
}

double kernel_integral(double omega, double dt) {
    check_omega(omega);
    if (dt < 0.0) throw std::domain_error("kernel_integral requires dt >= 0");
    return -std::expm1(-omega * dt) / omega;
}

double kernel_mass_between(double omega, double lo, double hi) {
    if (lo > hi) throw std::domain_error("kernel_mass_between requires lo <= hi");
    const double glo = lo > 0.0 ? kernel_integral(omega, lo) : 0.0;
    const double ghi = hi > 0.0 ? kernel_integral(omega, hi) : 0.0;
    return ghi - glo;
}

double clamped_excitation_integral(double mu, double dev, double omega, double dt) {
    check_omega(omega);
    if (dt < 0.0) throw std::domain_error("clamped_excitation_integral requires dt >= 0");
    if (mu < 0.0) throw std::domain_error("clamped_excitation_integral requires mu >= 0");
    if (dt == 0.0) return 0.0;

    if (dev >= 0.0) {
        return mu * dt + dev * kernel_integral(omega, dt);
    }
    if (mu + dev >= 0.0) {
        // Starts non-negative and rises toward mu: positive throughout.
        return mu * dt + dev * kernel_integral(omega, dt);
    }
    if (mu == 0.0) return 0.0;

    // Negative at the gap start; crosses zero at s* = log(-dev/mu)/omega.
    const double cross = std::log(-dev / mu) / omega;
    if (dt <= cross) return 0.0;
    const double tail = dt - cross;
    // exp(-omega * cross) = -mu / dev, so the kernel term telescopes.
    return mu * tail + dev * (std::exp(-omega * cross) - std::exp(-omega * dt)) / omega;
}

}  // namespace prodhawkes
