#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace torjump {

// Overflow-checked 64-bit helpers. All exact-arithmetic paths go through
// these; an overflow is a hard error, never silent wraparound.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd_ll(a, b), b);
}

// floor(a/b) for b > 0, correct for negative a.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long ceil_div(long long a, long long b) {
    return -floor_div(-a, b);
}

inline unsigned long long powmod(unsigned long long base, unsigned long long exp,
                                 unsigned long long mod) {
    unsigned long long result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = (unsigned __int128)result * base % mod;
        base = (unsigned __int128)base * base % mod;
        exp >>= 1;
    }
    return result;
}

// Domain-specific error types; the CLI maps these to exit codes and
// machine-readable error JSON.
struct below_threshold_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precision_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_injective_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct equivariance_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace torjump
