#pragma once

#include "torjump/fq.hpp"
#include "torjump/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace torjump {

// Truncated series over F_q in fractional powers of t: exponents live in
// (1/N)Z, stored as integer numerators over the shared denominator N.
// `prec` is the first unknown exponent numerator (exponents >= prec/N are
// unknown); prec == kExactZero marks a series known to be exactly zero.
class TruncSeries {
public:
    static constexpr long long kExactZero = (1ll << 62);

    TruncSeries() = default;
    TruncSeries(FqFieldPtr field, long long denom, long long prec)
        : field_(std::move(field)), denom_(denom), prec_(prec) {
        if (denom_ <= 0) throw std::invalid_argument("denominator must be positive");
    }

    static TruncSeries zero(FqFieldPtr field, long long denom) {
        return TruncSeries(std::move(field), denom, kExactZero);
    }
    // c * t^(e/denom), truncated at prec/denom
    static TruncSeries monomial(FqFieldPtr field, long long denom, long long e,
                                std::uint32_t c, long long prec);

    const FqFieldPtr& field() const { return field_; }
    long long denominator() const { return denom_; }
    long long precision() const { return prec_; }
    bool exactly_zero() const { return prec_ == kExactZero && coeffs_.empty(); }
    bool zero_to_precision() const { return coeffs_.empty(); }
    const std::map<long long, std::uint32_t>& coeffs() const { return coeffs_; }

    // valuation numerator; nullopt when no term is visible
    std::optional<long long> val() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.begin()->first;
    }

    void set_coeff(long long e, std::uint32_t c);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries operator*(const TruncSeries& o) const;

    TruncSeries scalar_mul(std::uint32_t c) const;
    // multiply by t^(k/denom); k may be negative if it keeps exponents >= 0
    TruncSeries shift(long long k) const;
    // inverse of a unit (val == 0), to the unit's own precision
    TruncSeries unit_inverse() const;

    bool same_ring(const TruncSeries& o) const {
        return denom_ == o.denom_ && field_ && o.field_ && *field_ == *o.field_;
    }

    std::string str() const;

private:
    void drop_beyond_precision();

    FqFieldPtr field_;
    long long denom_ = 1;
    long long prec_ = kExactZero;
    std::map<long long, std::uint32_t> coeffs_;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

} // namespace torjump
