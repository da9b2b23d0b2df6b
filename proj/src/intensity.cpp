#include "prodhawkes/intensity.hpp"

#include <cmath>
#include <stdexcept>

#include "prodhawkes/kernel.hpp"

namespace prodhawkes {

IntensityState::IntensityState(std::size_t num_users, std::size_t num_products,
                               double omega, double start_time)
    : num_users_(num_users),
      num_products_(num_products),
      omega_(omega),
      last_update_(start_time),
      s_own_(num_users * num_products, 0.0),
      s_exposed_(num_users * num_products, 0.0) {
    if (!(omega > 0.0)) throw std::domain_error("omega must be positive");
}

double IntensityState::s_own(std::uint32_t u, std::uint32_t l) const {
    return s_own_.at(static_cast<std::size_t>(u) * num_products_ + l);
}

double IntensityState::s_exposed(std::uint32_t u, std::uint32_t l) const {
    return s_exposed_.at(static_cast<std::size_t>(u) * num_products_ + l);
}

void IntensityState::advance(double dt) {
    if (dt < 0.0) throw std::domain_error("advance requires dt >= 0");
    if (dt == 0.0) return;
    const double factor = std::exp(-omega_ * dt);
    for (double& s : s_own_) s *= factor;
    for (double& s : s_exposed_) s *= factor;
    last_update_ += dt;
}

void IntensityState::advance_to(double t) {
    advance(t - last_update_);
    last_update_ = t;
}

void IntensityState::register_event(const Event& e, const Network& net) {
    if (e.time != last_update_) {
        throw std::logic_error("register_event on stale state; advance_to(e.time) first");
    }
    if (e.user >= num_users_ || e.product >= num_products_) {
        throw std::out_of_range("event index out of range");
    }
    s_own_[static_cast<std::size_t>(e.user) * num_products_ + e.product] += 1.0;
    for (std::uint32_t w : net.observers(e.user)) {
        s_exposed_[static_cast<std::size_t>(w) * num_products_ + e.product] += 1.0;
    }
}

double intensity_naive(const UserParams& params, const EventLog& log, const Network& net,
                       std::uint32_t u, std::uint32_t p, double t) {
    const std::size_t num_products = params.num_products();
    if (p >= num_products) throw std::out_of_range("product index out of range");
    if (u >= net.num_users()) throw std::out_of_range("user index out of range");
    double value = params.mu[p];
    for (const Event& e : log.events()) {
        if (e.time >= t) break;
        if (e.product >= num_products) throw std::out_of_range("event product out of range");
        if (e.user == u) {
            value += params.a_at(e.product, p) * kernel_eval(params.omega, t - e.time);
        } else if (net.observes(u, e.user)) {
            value += params.b_at(e.product, p) * kernel_eval(params.omega, t - e.time);
        }
    }
    return value;
}

double intensity_from_state(const UserParams& params, const IntensityState& state,
                            std::uint32_t u, std::uint32_t p) {
    const std::size_t num_products = state.num_products();
    double value = params.mu.at(p);
    for (std::uint32_t l = 0; l < num_products; ++l) {
        value += params.a_at(l, p) * state.s_own(u, l);
        value += params.b_at(l, p) * state.s_exposed(u, l);
    }
    return value;
}

namespace detail {

LazyKernelSums::LazyKernelSums(std::size_t num_users, std::size_t num_products,
                               double omega, double start_time)
    : num_products_(num_products),
      omega_(omega),
      s_own_(num_users * num_products, 0.0),
      s_exposed_(num_users * num_products, 0.0),
      row_time_(num_users, start_time) {}

void LazyKernelSums::touch(std::uint32_t u, double t) {
    double& rt = row_time_[u];
    if (t == rt) return;
    if (t < rt) throw std::domain_error("LazyKernelSums::touch cannot move backwards");
    const double factor = std::exp(-omega_ * (t - rt));
    const std::size_t base = static_cast<std::size_t>(u) * num_products_;
    for (std::size_t l = 0; l < num_products_; ++l) {
        s_own_[base + l] *= factor;
        s_exposed_[base + l] *= factor;
    }
    rt = t;
}

std::size_t LazyKernelSums::apply_event(const Event& e, const Network& net) {
    touch(e.user, e.time);
    s_own_[static_cast<std::size_t>(e.user) * num_products_ + e.product] += 1.0;
    std::size_t touched = num_products_;
    for (std::uint32_t w : net.observers(e.user)) {
        touch(w, e.time);
        s_exposed_[static_cast<std::size_t>(w) * num_products_ + e.product] += 1.0;
        touched += num_products_;
    }
    return touched;
}

double LazyKernelSums::own(std::uint32_t u, std::uint32_t l) const {
    return s_own_[static_cast<std::size_t>(u) * num_products_ + l];
}

double LazyKernelSums::exposed(std::uint32_t u, std::uint32_t l) const {
    return s_exposed_[static_cast<std::size_t>(u) * num_products_ + l];
}

double LazyKernelSums::deviation(const UserParams& params, std::uint32_t u,
                                 std::uint32_t p) const {
    const std::size_t base = static_cast<std::size_t>(u) * num_products_;
    double dev = 0.0;
    for (std::size_t l = 0; l < num_products_; ++l) {
        dev += params.a_at(l, p) * s_own_[base + l];
        dev += params.b_at(l, p) * s_exposed_[base + l];
    }
    return dev;
}

}  // namespace detail

}  // namespace prodhawkes
