#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace torjump {

// Arithmetic context for the finite field F_q, q = p^s with q < 2^31.
// Elements are encoded as integers in [0,q): the base-p digits of the code
// are the coefficients of the residue polynomial. For s = 1 this is plain
// arithmetic mod p. The field is presented by a monic irreducible polynomial
// over F_p found deterministically at construction.
class FqField {
public:
    explicit FqField(std::uint32_t p, std::uint32_t s = 1);

    std::uint32_t p() const { return p_; }
    std::uint32_t s() const { return s_; }
    std::uint32_t q() const { return q_; }

    // modulus coefficients c_0..c_s (monic, c_s = 1); trivial (x - 0 shaped
    // placeholder) when s = 1
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, unsigned long long e) const;

    // an element of multiplicative order exactly n; requires n | q-1
    std::uint32_t root_of_unity(std::uint32_t n) const;

    bool operator==(const FqField& o) const {
        return p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_;
    }

private:
    std::vector<std::uint32_t> decode(std::uint32_t a) const;
    std::uint32_t encode(const std::vector<std::uint32_t>& digits) const;

    std::uint32_t p_;
    std::uint32_t s_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    mutable std::uint32_t generator_ = 0; // cached multiplicative generator
};

using FqFieldPtr = std::shared_ptr<const FqField>;

// Smallest prime r with r ≡ 1 (mod m); used by the oracle to pick a scalar
// field with enough roots of unity.
std::uint32_t smallest_prime_1_mod(std::uint32_t m);

bool is_prime_u32(std::uint32_t n);

} // namespace torjump
