#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace prodhawkes {

/// One product-use record: user `user` used product `product` at `time`
/// (seconds, continuous).
struct Event {
    std::uint32_t user{0};
    std::uint32_t product{0};
    double time{0.0};

    friend bool operator==(const Event&, const Event&) = default;
};

/// Time-sorted event collection on an observation window [t_begin, t_end).
/// Events with equal timestamps keep their input order.
class EventLog {
public:
    EventLog() = default;

    /// Throws std::invalid_argument if events are unsorted or fall outside
    /// the window, or if the window is empty.
    EventLog(std::vector<Event> events, double t_begin, double t_end);

    const std::vector<Event>& events() const noexcept { return events_; }
    std::size_t size() const noexcept { return events_.size(); }
    bool empty() const noexcept { return events_.empty(); }
    double t_begin() const noexcept { return t_begin_; }
    double t_end() const noexcept { return t_end_; }
    double duration() const noexcept { return t_end_ - t_begin_; }

    /// Set when a simulation hit its event cap before reaching t_end.
    bool truncated() const noexcept { return truncated_; }
    void set_truncated(bool flag) noexcept { truncated_ = flag; }

    /// Events restricted to [lo, hi), preserving order.
    std::vector<Event> slice(double lo, double hi) const;

    /// Indices into events() per user, in time order.
    std::vector<std::vector<std::uint32_t>> user_index(std::size_t num_users) const;

private:
    std::vector<Event> events_;
    double t_begin_{0.0};
    double t_end_{0.0};
    bool truncated_{false};
};

/// Directed observation graph. An edge (v, u) means u observes v, so
/// observed(u) is the neighbour set N(u) whose events reach u.
class Network {
public:
    Network() = default;

    /// Builds adjacency from (v, u) pairs. Throws std::invalid_argument on
    /// self-edges, duplicate edges, or out-of-range indices.
    Network(std::size_t num_users, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    std::size_t num_users() const noexcept { return num_users_; }
    std::size_t num_edges() const noexcept { return num_edges_; }

    /// N(u): nodes whose events u observes, ascending.
    std::span<const std::uint32_t> observed(std::uint32_t u) const;

    /// Nodes that observe v (reverse adjacency), ascending.
    std::span<const std::uint32_t> observers(std::uint32_t v) const;

    /// True iff v is in N(u).
    bool observes(std::uint32_t u, std::uint32_t v) const;

    /// Edge list in canonical (v, u) ascending order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list() const;

    std::size_t max_observed_degree() const;
    std::size_t max_observer_degree() const;

private:
    std::size_t num_users_{0};
    std::size_t num_edges_{0};
    std::vector<std::vector<std::uint32_t>> observed_;
    std::vector<std::vector<std::uint32_t>> observers_;
};

/// Per-user model parameters for the competing-products intensity:
/// base rates mu[p], recency matrix a(l, p), social-influence matrix
/// b(l, p), and the shared exponential kernel rate omega. Matrices are
/// row-major with the source product l as the row.
struct UserParams {
    std::vector<double> mu;
    std::vector<double> a;
    std::vector<double> b;
    double omega{1.0};

    UserParams() = default;
    UserParams(std::size_t num_products, double omega_value);

    std::size_t num_products() const noexcept { return mu.size(); }

    double a_at(std::size_t l, std::size_t p) const { return a[l * mu.size() + p]; }
    double b_at(std::size_t l, std::size_t p) const { return b[l * mu.size() + p]; }
    double& a_at(std::size_t l, std::size_t p) { return a[l * mu.size() + p]; }
    double& b_at(std::size_t l, std::size_t p) { return b[l * mu.size() + p]; }

    /// Throws std::domain_error if mu has negative entries, omega <= 0,
    /// any entry is non-finite, or the matrix sizes disagree with mu.
    void validate() const;
};

/// Common omega of a per-user parameter set. Throws std::invalid_argument
/// if the set is empty or the omegas differ.
double shared_omega(std::span<const UserParams> params);

/// Common product count; throws std::invalid_argument on disagreement.
std::size_t shared_num_products(std::span<const UserParams> params);

}  // namespace prodhawkes
