// expsum — small exact rationals.
//
// Newton-polygon vertices and predicted slopes are rationals with tiny
// numerator/denominator; this wrapper keeps them exact with int64 storage
// and __int128 intermediates so cross-multiplication comparisons never
// overflow.  For genuinely big rational arithmetic the library uses GMP's
// mpq_class instead.

#ifndef EXPSUM_RATIONAL_HPP
#define EXPSUM_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "expsum/errors.hpp"

namespace expsum {

struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw NotAUnit("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return from128(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return from128(n, d);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw NotAUnit("division by zero rational");
        return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // floor(num/den) as an integer (toward -inf)
    std::int64_t floor() const {
        std::int64_t q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }
    std::int64_t ceil() const { return -(-*this).floor(); }
    bool is_integer() const { return den == 1; }

    double to_double() const { return double(num) / double(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

  private:
    static Rat from128(__int128 n, __int128 d) {
        if (d == 0) throw NotAUnit("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        // gcd reduce in 128 bits, then check fit
        __int128 a = an, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        const __int128 lim = (__int128)INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw TooLarge("rational exceeds 64-bit storage after reduction");
        Rat r;
        r.num = (std::int64_t)n;
        r.den = (std::int64_t)d;
        if (r.num == 0) r.den = 1;
        return r;
    }
};

}  // namespace expsum

#endif  // EXPSUM_RATIONAL_HPP
