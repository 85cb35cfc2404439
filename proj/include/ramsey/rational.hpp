#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

/// Exact rational with int64 numerator/denominator, always normalized
/// (den > 0, gcd(|num|, den) = 1). Intermediate products run in 128 bits;
/// results that do not fit back into int64 throw input_error.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rat(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    static Rat make(__int128 n, __int128 d);
    static Rat parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    std::string str() const;

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                    (__int128)a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                    (__int128)a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw input_error("rational division by zero");
        return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rat Rat::make(__int128 n, __int128 d) {
    if (d == 0) throw input_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a != 0) {
        n /= a;
        d /= a;
    }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
        throw input_error("rational overflows 64-bit range");
    Rat r;
    r.num_ = (std::int64_t)n;
    r.den_ = (std::int64_t)d;
    return r;
}

inline std::string Rat::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

inline Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw input_error("bad rational: " + text);
            return Rat(n);
        }
        std::size_t used = 0;
        std::int64_t n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw input_error("bad rational: " + text);
        std::int64_t d = std::stoll(text.substr(slash + 1), &used);
        if (used != text.size() - slash - 1)
            throw input_error("bad rational: " + text);
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw input_error("bad rational: " + text);
    } catch (const std::out_of_range&) {
        throw input_error("rational literal out of range: " + text);
    }
}

} // namespace ramsey

template <> struct std::hash<ramsey::Rat> {
    std::size_t operator()(const ramsey::Rat& r) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 0x100000001b3ull;
        };
        mix((std::uint64_t)r.num());
        mix((std::uint64_t)r.den());
        return (std::size_t)h;
    }
};
