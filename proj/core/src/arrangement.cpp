#include "seatarrange/arrangement.hpp"

#include <numeric>
#include <string>

namespace seat {

Arrangement::Arrangement(std::vector<int> seat_of) : seat_of_(std::move(seat_of)) {
    const int n = static_cast<int>(seat_of_.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : seat_of_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw ArgumentError("seat_of is not a permutation of 0.." + std::to_string(n - 1));
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Arrangement Arrangement::identity(int n) {
    if (n < 0) throw ArgumentError("negative arrangement size");
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    Arrangement a;
    a.seat_of_ = std::move(ids);
    return a;
}

int Arrangement::seat_of_agent(int p) const {
    if (p < 0 || p >= size()) throw ArgumentError("agent index out of range: " + std::to_string(p));
    return seat_of_[static_cast<std::size_t>(p)];
}

std::vector<int> Arrangement::agent_at() const {
    std::vector<int> inverse(seat_of_.size());
    for (int p = 0; p < size(); ++p) inverse[static_cast<std::size_t>(seat_of_[static_cast<std::size_t>(p)])] = p;
    return inverse;
}

Arrangement Arrangement::swapped(int p, int q) const {
    if (p == q) throw ArgumentError("swap of an agent with itself");
    if (p < 0 || q < 0 || p >= size() || q >= size()) {
        throw ArgumentError("swap index out of range");
    }
    Arrangement out = *this;
    std::swap(out.seat_of_[static_cast<std::size_t>(p)], out.seat_of_[static_cast<std::size_t>(q)]);
    return out;
}

}  // namespace seat
