#pragma once

namespace prodhawkes {

/// Causal exponential triggering kernel: exp(-omega * dt) for dt >= 0,
/// 0 for dt < 0. Throws std::domain_error if omega <= 0.
double kernel_eval(double omega, double dt);

/// Integral of the kernel on [0, dt]: (1 - exp(-omega * dt)) / omega.
/// Monotone in dt with limit 1/omega. Throws std::domain_error if
/// omega <= 0 or dt < 0.
double kernel_integral(double omega, double dt);

/// Kernel mass on [lo, hi] measured from an event at 0, with negative
/// arguments clipped: G(max(0,hi)) - G(max(0,lo)). Requires lo <= hi.
double kernel_mass_between(double omega, double lo, double hi);

/// Integral over [0, dt] of max(0, mu + dev * exp(-omega * s)) with
/// mu >= 0. This is the compensator increment of one clamped intensity
/// between events, where dev is its deviation from the base rate at the
/// start of the gap. Throws std::domain_error on dt < 0 or mu < 0.
double clamped_excitation_integral(double mu, double dev, double omega, double dt);

}  // namespace prodhawkes
