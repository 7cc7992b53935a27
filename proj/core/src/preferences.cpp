#include "seatarrange/preferences.hpp"

#include <algorithm>
#include <string>

namespace seat {

PreferenceProfile::PreferenceProfile(int agent_count) : n_(agent_count) {
    if (agent_count < 0) throw ArgumentError("negative agent count");
    table_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), Rational(0));
}

PreferenceProfile::PreferenceProfile(int agent_count, std::vector<std::vector<Rational>> values)
    : PreferenceProfile(agent_count) {
    if (static_cast<int>(values.size()) != n_) {
        throw ArgumentError("preference table row count != agent count");
    }
    for (int p = 0; p < n_; ++p) {
        if (static_cast<int>(values[static_cast<std::size_t>(p)].size()) != n_) {
            throw ArgumentError("preference table row " + std::to_string(p) + " has wrong length");
        }
        for (int q = 0; q < n_; ++q) {
            table_[static_cast<std::size_t>(p) * n_ + q] =
                values[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        }
    }
}

void PreferenceProfile::check_pair(int p, int q) const {
    if (p < 0 || q < 0 || p >= n_ || q >= n_) {
        throw ArgumentError("agent index out of range: (" + std::to_string(p) + "," +
                            std::to_string(q) + ")");
    }
    if (p == q) throw ArgumentError("diagonal preference read at agent " + std::to_string(p));
}

const Rational& PreferenceProfile::value(int p, int q) const {
    check_pair(p, q);
    return table_[static_cast<std::size_t>(p) * n_ + q];
}

void PreferenceProfile::set_value(int p, int q, Rational v) {
    check_pair(p, q);
    table_[static_cast<std::size_t>(p) * n_ + q] = v;
}

PreferenceFlags PreferenceProfile::classify() const {
    PreferenceFlags flags;
    flags.symmetric = true;
    flags.binary = true;
    flags.nonnegative = true;
    flags.positive = true;
    flags.strict = true;
    const Rational zero(0), one(1);
    for (int p = 0; p < n_; ++p) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(n_) - 1);
        for (int q = 0; q < n_; ++q) {
            if (p == q) continue;
            const Rational& v = value(p, q);
            row.push_back(v);
            if (v != value(q, p)) flags.symmetric = false;
            if (v != zero && v != one) flags.binary = false;
            if (v < zero) flags.nonnegative = false;
            if (v <= zero) flags.positive = false;
        }
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) flags.strict = false;
    }
    return flags;
}

PreferenceProfile PreferenceProfile::restrict(const std::vector<int>& keep) const {
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n_) throw ArgumentError("restrict index out of range");
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw ArgumentError("restrict indices must be strictly increasing");
        }
    }
    PreferenceProfile out(static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = 0; b < keep.size(); ++b) {
            if (a == b) continue;
            out.set_value(static_cast<int>(a), static_cast<int>(b), value(keep[a], keep[b]));
        }
    }
    return out;
}

std::optional<std::vector<std::int64_t>> integer_table(const PreferenceProfile& profile,
                                                       std::int64_t bound) {
    const int n = profile.agent_count();
    std::vector<std::int64_t> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p == q) continue;
            const Rational& v = profile.value(p, q);
            if (!v.is_integer() || v.num() > bound || v.num() < -bound) return std::nullopt;
            out[static_cast<std::size_t>(p) * n + q] = v.num();
        }
    }
    return out;
}

}  // namespace seat
