#pragma once

#include "torjump/util.hpp"

#include <compare>
#include <string>

namespace torjump {

// Exact rational number with 64-bit numerator/denominator, always reduced,
// denominator > 0. Plenty of headroom for jump arithmetic (denominators are
// lcm's of small ramification indices).
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& o) const {
        long long g = gcd_ll(den_, o.den_);
        long long l = checked_mul(den_ / g, o.den_);
        long long n = checked_add(checked_mul(num_, o.den_ / g),
                                  checked_mul(o.num_, den_ / g));
        return Rational(n, l);
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational operator*(const Rational& o) const {
        long long g1 = gcd_ll(num_, o.den_);
        long long g2 = gcd_ll(o.num_, den_);
        Rational r;
        r.num_ = checked_mul(num_ / g1, o.num_ / g2);
        r.den_ = checked_mul(den_ / g2, o.den_ / g1);
        return r;
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("division by zero rational");
        return *this * Rational(o.den_, o.num_);
    }

    friend auto operator<=>(const Rational& a, const Rational& b) {
        // a.num/a.den <=> b.num/b.den with positive denominators
        __int128 lhs = (__int128)a.num_ * b.den_;
        __int128 rhs = (__int128)b.num_ * a.den_;
        return lhs <=> rhs;
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Fractional part in [0,1).
    Rational mod1() const {
        long long f = num_ % den_;
        if (f < 0) f += den_;
        Rational r;
        r.num_ = f;
        r.den_ = den_;
        r.normalize();
        return r;
    }

    long long floor() const { return floor_div(num_, den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = gcd_ll(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

} // namespace torjump
