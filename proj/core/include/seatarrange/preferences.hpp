#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seatarrange/errors.hpp"
#include "seatarrange/rational.hpp"

namespace seat {

struct PreferenceFlags {
    bool symmetric = false;
    bool binary = false;
    bool nonnegative = false;
    bool positive = false;
    bool strict = false;

    friend bool operator==(const PreferenceFlags&, const PreferenceFlags&) = default;
};

// The n x n table f_p(q). The diagonal is stored but never read; every accessor
// guards p != q so no code path can depend on it.
class PreferenceProfile {
public:
    PreferenceProfile() = default;
    explicit PreferenceProfile(int agent_count);
    PreferenceProfile(int agent_count, std::vector<std::vector<Rational>> values);

    [[nodiscard]] int agent_count() const { return n_; }

    // f_p(q); throws ArgumentError when p == q or out of range.
    [[nodiscard]] const Rational& value(int p, int q) const;
    void set_value(int p, int q, Rational v);

    [[nodiscard]] PreferenceFlags classify() const;

    // Restriction to a subset of agents (indices into this profile, strictly
    // increasing); agent i of the result is keep[i].
    [[nodiscard]] PreferenceProfile restrict(const std::vector<int>& keep) const;

private:
    void check_pair(int p, int q) const;

    int n_ = 0;
    std::vector<Rational> table_;  // row-major n*n
};

// Off-diagonal values as int64 when every one is an integer of magnitude at
// most `bound`; empty otherwise. Diagonal slots are forced to zero. Enables
// exact fast paths in the enumeration-heavy callers.
std::optional<std::vector<std::int64_t>> integer_table(const PreferenceProfile& profile,
                                                       std::int64_t bound = (std::int64_t{1} << 40));

}  // namespace seat
