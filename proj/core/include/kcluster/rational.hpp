#ifndef KCLUSTER_RATIONAL_HPP
#define KCLUSTER_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "kcluster/errors.hpp"

namespace kcluster {

// Exact rational with int64 numerator/denominator, always normalized
// (den > 0, gcd(num, den) == 1). Endpoint coordinates stay small, so no
// arbitrary precision is needed; comparisons cross-multiply in 128 bits.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw ArgumentError("rational with zero denominator");
        if (num_ == std::numeric_limits<std::int64_t>::min() ||
            den_ == std::numeric_limits<std::int64_t>::min()) {
            throw ArgumentError("rational endpoint out of range");
        }
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "12", "-3", "7/2", "-7/2". Returns nullopt on anything else.
    static std::optional<Rational> parse(std::string_view text);

private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace kcluster

#endif // KCLUSTER_RATIONAL_HPP
