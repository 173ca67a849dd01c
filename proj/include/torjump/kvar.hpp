#pragma once

#include "torjump/util.hpp"

#include <string>
#include <vector>

namespace torjump {

// Integer polynomial in the Lefschetz class L, coefficients indexed by
// L-degree. This is the subring of K0(Var_k) the closed formulas live in.
class LPolynomial {
public:
    LPolynomial() = default;
    explicit LPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }
    static LPolynomial constant(long long v) { return LPolynomial({v}); }
    static LPolynomial L_power(long long k, long long scale = 1);
    // (L-1)^t * L^(g-t)
    static LPolynomial torus_class(long long comp_count, long long t, long long g);

    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    LPolynomial operator+(const LPolynomial& o) const;
    LPolynomial operator-(const LPolynomial& o) const;
    LPolynomial operator*(const LPolynomial& o) const;
    LPolynomial scaled(long long k) const;
    bool operator==(const LPolynomial& o) const { return c_ == o.c_; }

    std::string str() const; // e.g. "L^3 - L^2"

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<long long> c_;
};

// Symbolic class comp_count * (L-1)^t * L^(g-t): component count times the
// class of the identity component.
struct KVarClass {
    long long comp_count = 1; // #(Phi)_tors
    long long t = 0;          // torus rank
    long long g = 0;          // dimension

    LPolynomial expand() const {
        if (comp_count < 1) throw std::invalid_argument("component count must be >= 1");
        if (t < 0 || t > g) throw std::invalid_argument("need 0 <= t <= g");
        return LPolynomial::torus_class(comp_count, t, g);
    }
};

} // namespace torjump
