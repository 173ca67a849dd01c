#pragma once

#include "torjump/rational.hpp"
#include "torjump/trunc_series.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace torjump {

// Matrix over the truncated-series DVR. All entries share one exponent
// denominator N and one working precision. The base DVR whose elementary
// divisors we report has uniformizer t^grain, where grain (a positive
// rational) must divide every entry exponent appearing in a pivot.
class DvrMatrix {
public:
    DvrMatrix(FqFieldPtr field, int rows, int cols, long long denom, long long prec);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long denominator() const { return denom_; }
    long long precision() const { return prec_; }
    const FqFieldPtr& field() const { return field_; }

    const TruncSeries& at(int r, int c) const { return entries_[idx(r, c)]; }
    TruncSeries& at(int r, int c) { return entries_[idx(r, c)]; }

    // one entry per line: "row col exponent_numerator/N coeff_list"
    void debug_dump(std::ostream& os) const;

private:
    int idx(int r, int c) const { return r * cols_ + c; }

    FqFieldPtr field_;
    int rows_;
    int cols_;
    long long denom_;
    long long prec_;
    std::vector<TruncSeries> entries_;
};

struct ElementaryDivisors {
    // exponents in units of the base-ring uniformizer t^grain, sorted
    std::vector<long long> exponents;
    Rational grain;
    bool certified = false;

    std::vector<Rational> absolute_exponents() const {
        std::vector<Rational> r;
        r.reserve(exponents.size());
        for (auto e : exponents) r.push_back(grain * Rational(e));
        return r;
    }
};

// Smith normal form over the truncated DVR. Pivots on the minimal-valuation
// entry (lexicographically smallest (row, col) among ties), scales its row by
// the inverse of the unit part, clears row and column, recurses. Throws
// precision_exhausted_error when truncation could hide a better pivot and
// not_injective_error when an exactly-zero block remains.
ElementaryDivisors snf_over_dvr(const DvrMatrix& m, const Rational& base_grain);

struct PrecisionPolicy {
    long long factor = 2;  // precision = factor * max expected exponent + slack
    long long slack = 1;   // in base-grain units
    int retries = 4;       // automatic precision doublings
    static PrecisionPolicy from_env();
};

// The ef x ef matrix of Lie(Res G_m) ⊗ O_K(d) -> Lie of the base-changed
// model, over O_K(d) = F_q[[t^(1/d)]] with exponent denominator N = e*d, in
// the monomial bases coming from O_L = O_K[y]/(m(y)) ⊗ O_K[x]/(x^e - pi_K)
// and the uniformizer normalization pi_K(d)^d = pi_K.
DvrMatrix build_induced_lie_matrix(long long e, long long f, long long d,
                                   std::uint32_t q,
                                   const PrecisionPolicy& policy = {});

// Multiplies by `steps` random unimodular shear/permutation/unit factors on
// both sides (determinant a unit to working precision); elementary divisors
// are invariant under this. Shear exponents are multiples of exp_step
// numerator units so the factors stay inside the base ring.
DvrMatrix scramble_unimodular(const DvrMatrix& m, std::uint64_t seed, int steps,
                              long long exp_step = 1);

// snf_over_dvr(build_induced_lie_matrix(...)) with automatic precision
// doubling on precision-exhausted, optional scrambling first.
ElementaryDivisors induced_lie_divisors(long long e, long long f, long long d,
                                        std::uint32_t q,
                                        const PrecisionPolicy& policy = {},
                                        std::uint64_t scramble_seed = 0,
                                        int scramble_steps = 0);

} // namespace torjump
