#pragma once

#include <vector>

#include "seatarrange/errors.hpp"

namespace seat {

// Bijection agents -> seats, stored as seat_of[agent]. Immutable.
class Arrangement {
public:
    Arrangement() = default;
    // Throws ArgumentError unless seat_of is a permutation of 0..n-1.
    explicit Arrangement(std::vector<int> seat_of);

    static Arrangement identity(int n);

    [[nodiscard]] int size() const { return static_cast<int>(seat_of_.size()); }
    [[nodiscard]] const std::vector<int>& seat_of() const { return seat_of_; }
    [[nodiscard]] int seat_of_agent(int p) const;
    // Inverse map: agent_at()[vertex] == agent seated there.
    [[nodiscard]] std::vector<int> agent_at() const;

    // Exchanges the seats of agents p and q (p != q).
    [[nodiscard]] Arrangement swapped(int p, int q) const;

    friend bool operator==(const Arrangement&, const Arrangement&) = default;
    friend bool operator<(const Arrangement& a, const Arrangement& b) {
        return a.seat_of_ < b.seat_of_;
    }

private:
    std::vector<int> seat_of_;
};

}  // namespace seat
