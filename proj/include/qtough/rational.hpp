#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qtough {

/// Exact rational number or positive infinity. Finite values are kept in
/// lowest terms with a positive denominator; comparisons never go through
/// floating point.
class ExtendedRational {
public:
    ExtendedRational() : ExtendedRational(0, 1) {}

    ExtendedRational(std::int64_t num, std::int64_t den = 1) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        num_ = g == 0 ? 0 : num / g;
        den_ = g == 0 ? 1 : den / g;
    }

    static ExtendedRational infinity() {
        ExtendedRational r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const { return infinite_; }

    std::int64_t num() const {
        if (infinite_) throw std::logic_error("rational: numerator of infinity");
        return num_;
    }

    std::int64_t den() const {
        if (infinite_) throw std::logic_error("rational: denominator of infinity");
        return den_;
    }

    double to_double() const {
        if (infinite_) throw std::logic_error("rational: infinity has no double value");
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        if (infinite_) return "inf";
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                            const ExtendedRational& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        // denominators positive, so cross-multiplication preserves order
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    bool infinite_ = false;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace qtough
