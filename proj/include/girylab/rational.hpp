#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace girylab {

/// Exact rational number over 64-bit integers with checked arithmetic.
/// Always stored in lowest terms with positive denominator, so equality
/// is structural. Desk-scale magnitudes only; overflow throws.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_),
                   checked(__int128(a.den_) * b.den_), raw_tag{});
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num_, b.den_); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked(__int128(a.num_) * b.num_),
                   checked(__int128(a.den_) * b.den_), raw_tag{});
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(checked(__int128(a.num_) * b.den_),
                   checked(__int128(a.den_) * b.num_), raw_tag{});
    }
    Rat operator-() const { return Rat(-num_, den_); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        __int128 l = __int128(a.num_) * b.den_;
        __int128 r = __int128(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    /// Renders "p/q" in lowest terms, or just "p" when q = 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Canonical wire form: always "p/q", q > 0, lowest terms.
    std::string wire() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(std::stoll(s));
            std::int64_t p = std::stoll(s.substr(0, slash));
            std::int64_t q = std::stoll(s.substr(slash + 1));
            return Rat(p, q);
        } catch (const std::exception&) {
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        }
    }

private:
    struct raw_tag {};
    Rat(std::int64_t n, std::int64_t d, raw_tag) : num_(n), den_(d) { normalize(); }

    static std::int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("Rat: 64-bit overflow");
        return static_cast<std::int64_t>(v);
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace girylab
