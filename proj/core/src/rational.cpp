#include "seatarrange/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace seat {
namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

// Euclid on __int128; std::gcd rejects the extension type under -std=c++20.
Wide wide_gcd(Wide a, Wide b) {
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Reduces n/d (d != 0) to canonical form and narrows to int64.
Rational make(Wide n, Wide d) {
    if (d == 0) throw ArgumentError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wide_gcd(wide_abs(n), d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(std::int64_t numerator) : num_(numerator), den_(1) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw ArgumentError("rational with zero denominator");
    if (denominator < 0) {
        if (numerator == std::numeric_limits<std::int64_t>::min() ||
            denominator == std::numeric_limits<std::int64_t>::min()) {
            // Negation would overflow; go through wide arithmetic.
            *this = make(static_cast<Wide>(numerator), static_cast<Wide>(denominator));
            return;
        }
        numerator = -numerator;
        denominator = -denominator;
    }
    std::int64_t g = std::gcd(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    num_ = numerator;
    den_ = denominator;
}

Rational Rational::operator-() const {
    if (num_ == std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("rational negation overflow");
    }
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == 1 && rhs.den_ == 1) {
        num_ = narrow(static_cast<Wide>(num_) + rhs.num_);
        return *this;
    }
    *this = make(static_cast<Wide>(num_) * rhs.den_ + static_cast<Wide>(rhs.num_) * den_,
                 static_cast<Wide>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (den_ == 1 && rhs.den_ == 1) {
        num_ = narrow(static_cast<Wide>(num_) - rhs.num_);
        return *this;
    }
    *this = make(static_cast<Wide>(num_) * rhs.den_ - static_cast<Wide>(rhs.num_) * den_,
                 static_cast<Wide>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    *this = make(static_cast<Wide>(num_) * rhs.num_, static_cast<Wide>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw ArgumentError("rational division by zero");
    *this = make(static_cast<Wide>(num_) * rhs.den_, static_cast<Wide>(den_) * rhs.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view piece) -> std::int64_t {
        std::int64_t value = 0;
        if (piece.empty()) throw SchemaError("empty number in rational literal");
        const char* first = piece.data();
        const char* last = piece.data() + piece.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            throw SchemaError("bad rational literal: '" + std::string(piece) + "'");
        }
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    std::int64_t n = parse_int(text.substr(0, slash));
    std::int64_t d = parse_int(text.substr(slash + 1));
    if (d == 0) throw SchemaError("rational literal with zero denominator");
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace seat
