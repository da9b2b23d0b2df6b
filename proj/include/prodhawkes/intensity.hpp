#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prodhawkes/types.hpp"

namespace prodhawkes {

/// Decaying kernel sums per (user, product): s_own(u, l) sums
/// exp(-omega (t - t_i)) over u's own past uses of l, s_exposed(u, l)
/// the same over uses of l by nodes u observes. Keeping these per source
/// product makes the intensity an inner product with the (a, b) columns,
/// so one state serves simulation, likelihood and gradients.
class IntensityState {
public:
    IntensityState(std::size_t num_users, std::size_t num_products, double omega,
                   double start_time);

    std::size_t num_users() const noexcept { return num_users_; }
    std::size_t num_products() const noexcept { return num_products_; }
    double omega() const noexcept { return omega_; }
    double last_update() const noexcept { return last_update_; }

    double s_own(std::uint32_t u, std::uint32_t l) const;
    double s_exposed(std::uint32_t u, std::uint32_t l) const;

    /// Multiplies every sum by exp(-omega * dt) and advances last_update
    /// by dt. Throws std::domain_error if dt < 0.
    void advance(double dt);

    /// advance() to exactly time t (t >= last_update).
    void advance_to(double t);

    /// Adds the event to the poster's own sums and to the exposed sums of
    /// every observer. Requires last_update == e.time (advance first);
    /// throws std::logic_error otherwise.
    void register_event(const Event& e, const Network& net);

private:
    std::size_t num_users_;
    std::size_t num_products_;
    double omega_;
    double last_update_;
    std::vector<double> s_own_;
    std::vector<double> s_exposed_;
};

/// Eq.-style direct intensity: mu_p plus kernel-weighted sums over the
/// full recorded history strictly before t. May be negative; clamping is
/// the caller's responsibility.
double intensity_naive(const UserParams& params, const EventLog& log, const Network& net,
                       std::uint32_t u, std::uint32_t p, double t);

/// Intensity reconstructed from incremental state at state.last_update().
double intensity_from_state(const UserParams& params, const IntensityState& state,
                            std::uint32_t u, std::uint32_t p);

namespace detail {

/// Lazy variant of the kernel sums: rows decay on touch instead of on a
/// global advance, so updates stay local to a posting user and her
/// observers. Shared by the simulator and the streaming evaluators.
class LazyKernelSums {
public:
    LazyKernelSums(std::size_t num_users, std::size_t num_products, double omega,
                   double start_time);

    /// Decays user u's rows to time t (t must not precede the row time).
    void touch(std::uint32_t u, double t);

    /// Touches poster and observers at e.time and adds the event.
    /// Returns the number of (user, product) sum entries rewritten.
    std::size_t apply_event(const Event& e, const Network& net);

    double own(std::uint32_t u, std::uint32_t l) const;
    double exposed(std::uint32_t u, std::uint32_t l) const;
    double row_time(std::uint32_t u) const { return row_time_[u]; }

    /// lambda_up(row_time(u)) - mu_p for the given user's parameters.
    double deviation(const UserParams& params, std::uint32_t u, std::uint32_t p) const;

    std::size_t num_products() const noexcept { return num_products_; }

private:
    std::size_t num_products_;
    double omega_;
    std::vector<double> s_own_;
    std::vector<double> s_exposed_;
    std::vector<double> row_time_;
};

}  // namespace detail

}  // namespace prodhawkes
