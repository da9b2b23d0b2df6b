#include "prodhawkes/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace prodhawkes {

EventLog::EventLog(std::vector<Event> events, double t_begin, double t_end)
    : events_(std::move(events)), t_begin_(t_begin), t_end_(t_end) {
    if (!(t_begin_ < t_end_)) {
        throw std::invalid_argument("EventLog window must satisfy t_begin < t_end");
    }
    double prev = t_begin_;
    for (std::size_t i = 0; i < events_.size(); ++i) {
        const Event& e = events_[i];
        if (!std::isfinite(e.time) || e.time < t_begin_ || e.time >= t_end_) {
            throw std::invalid_argument("event " + std::to_string(i) + " outside window");
        }
        if (e.time < prev) {
            throw std::invalid_argument("events not sorted at index " + std::to_string(i));
        }
        prev = e.time;
    }
}

std::vector<Event> EventLog::slice(double lo, double hi) const {
    std::vector<Event> out;
    for (const Event& e : events_) {
        if (e.time >= hi) break;
        if (e.time >= lo) out.push_back(e);
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> EventLog::user_index(std::size_t num_users) const {
    std::vector<std::vector<std::uint32_t>> index(num_users);
    for (std::uint32_t i = 0; i < events_.size(); ++i) {
        const Event& e = events_[i];
        if (e.user >= num_users) {
            throw std::out_of_range("event user index exceeds num_users");
        }
        index[e.user].push_back(i);
    }
    return index;
}

Network::Network(std::size_t num_users,
                 std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : num_users_(num_users), observed_(num_users), observers_(num_users) {
    std::sort(edges.begin(), edges.end());
    std::pair<std::uint32_t, std::uint32_t> prev{0, 0};
    bool first = true;
    for (const auto& [v, u] : edges) {
        if (v >= num_users_ || u >= num_users_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (v == u) {
            throw std::invalid_argument("self-edge (" + std::to_string(v) + ") not allowed");
        }
        if (!first && prev == std::make_pair(v, u)) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(v) + "," +
                                        std::to_string(u) + ")");
        }
        prev = {v, u};
        first = false;
        observed_[u].push_back(v);
        observers_[v].push_back(u);
        ++num_edges_;
    }
    for (auto& adj : observed_) std::sort(adj.begin(), adj.end());
    for (auto& adj : observers_) std::sort(adj.begin(), adj.end());
}

std::span<const std::uint32_t> Network::observed(std::uint32_t u) const {
    return observed_.at(u);
}

std::span<const std::uint32_t> Network::observers(std::uint32_t v) const {
    return observers_.at(v);
}

bool Network::observes(std::uint32_t u, std::uint32_t v) const {
    const auto& adj = observed_.at(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Network::edge_list() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(num_edges_);
    for (std::uint32_t v = 0; v < num_users_; ++v) {
        for (std::uint32_t u : observers_[v]) edges.emplace_back(v, u);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::size_t Network::max_observed_degree() const {
    std::size_t d = 0;
    for (const auto& adj : observed_) d = std::max(d, adj.size());
    return d;
}

std::size_t Network::max_observer_degree() const {
    std::size_t d = 0;
    for (const auto& adj : observers_) d = std::max(d, adj.size());
    return d;
}

UserParams::UserParams(std::size_t num_products, double omega_value)
    : mu(num_products, 0.0),
      a(num_products * num_products, 0.0),
      b(num_products * num_products, 0.0),
      omega(omega_value) {}

void UserParams::validate() const {
    const std::size_t p = mu.size();
    if (p == 0) throw std::domain_error("UserParams needs at least one product");
    if (a.size() != p * p || b.size() != p * p) {
        throw std::domain_error("UserParams matrix size mismatch");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::domain_error("omega must be positive and finite");
    }
    for (double m : mu) {
        if (!std::isfinite(m) || m < 0.0) {
            throw std::domain_error("mu entries must be finite and non-negative");
        }
    }
    for (double x : a) {
        if (!std::isfinite(x)) throw std::domain_error("a entries must be finite");
    }
    for (double x : b) {
        if (!std::isfinite(x)) throw std::domain_error("b entries must be finite");
    }
}

double shared_omega(std::span<const UserParams> params) {
    if (params.empty()) throw std::invalid_argument("empty parameter set");
    const double omega = params.front().omega;
    for (const UserParams& up : params) {
        if (up.omega != omega) {
            throw std::invalid_argument("all users must share one omega");
        }
    }
    return omega;
}

std::size_t shared_num_products(std::span<const UserParams> params) {
    if (params.empty()) throw std::invalid_argument("empty parameter set");
    const std::size_t p = params.front().num_products();
    for (const UserParams& up : params) {
        if (up.num_products() != p) {
            throw std::invalid_argument("all users must share the product count");
        }
    }
    return p;
}

}  // namespace prodhawkes
