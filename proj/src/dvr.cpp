#include "torjump/dvr.hpp"

#include "torjump/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <random>

namespace torjump {

DvrMatrix::DvrMatrix(FqFieldPtr field, int rows, int cols, long long denom,
                     long long prec)
    : field_(std::move(field)), rows_(rows), cols_(cols), denom_(denom), prec_(prec) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("empty matrix");
    // entries start as exact zeros; set_coeff / assignment installs values
    // carrying the working precision
    entries_.assign((size_t)rows * cols, TruncSeries::zero(field_, denom_));
}

void DvrMatrix::debug_dump(std::ostream& os) const {
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            const TruncSeries& s = at(r, c);
            for (auto& [e, coeff] : s.coeffs())
                os << r << " " << c << " " << e << "/" << denom_ << " " << coeff << "\n";
        }
}

PrecisionPolicy PrecisionPolicy::from_env() {
    PrecisionPolicy p;
    if (const char* v = std::getenv("TORJUMP_PREC_FACTOR")) p.factor = std::atoll(v);
    if (const char* v = std::getenv("TORJUMP_PREC_SLACK")) p.slack = std::atoll(v);
    if (const char* v = std::getenv("TORJUMP_PREC_RETRIES")) p.retries = std::atoi(v);
    if (p.factor < 1) p.factor = 1;
    if (p.slack < 1) p.slack = 1;
    if (p.retries < 0) p.retries = 0;
    return p;
}

ElementaryDivisors snf_over_dvr(const DvrMatrix& m, const Rational& base_grain) {
    if (m.cols() > m.rows())
        throw std::invalid_argument("snf_over_dvr expects a square or tall matrix");
    if (!(base_grain > Rational(0)))
        throw std::invalid_argument("base grain must be positive");
    // grain in exponent-numerator units: grain = gnum/gden of t, numerators
    // are over N, so one grain unit is gnum*N/gden numerators (must be whole)
    long long gu_num = checked_mul(base_grain.num(), m.denominator());
    if (gu_num % base_grain.den() != 0)
        throw std::invalid_argument("base grain incompatible with exponent denominator");
    long long grain_units = gu_num / base_grain.den();
    if (grain_units <= 0) throw std::invalid_argument("degenerate base grain");

    int n = m.rows(), k = m.cols();
    std::vector<TruncSeries> w;
    w.reserve((size_t)n * k);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < k; ++c) w.push_back(m.at(r, c));
    auto at = [&](int r, int c) -> TruncSeries& { return w[(size_t)r * k + c]; };

    std::vector<bool> row_done(n, false), col_done(k, false);
    ElementaryDivisors result;
    result.grain = base_grain;
    result.certified = true;

    for (int step = 0; step < k; ++step) {
        // pivot search over the live block
        bool have_pivot = false;
        long long best_val = 0;
        int pr = -1, pc = -1;
        long long min_hidden_prec = TruncSeries::kExactZero;
        bool any_unknown = false;
        for (int r = 0; r < n; ++r) {
            if (row_done[r]) continue;
            for (int c = 0; c < k; ++c) {
                if (col_done[c]) continue;
                const TruncSeries& s = at(r, c);
                if (auto v = s.val()) {
                    if (!have_pivot || *v < best_val) {
                        have_pivot = true;
                        best_val = *v;
                        pr = r;
                        pc = c;
                    }
                } else if (!s.exactly_zero()) {
                    any_unknown = true;
                    min_hidden_prec = std::min(min_hidden_prec, s.precision());
                }
            }
        }
        if (!have_pivot) {
            if (any_unknown)
                throw precision_exhausted_error(
                    "no visible pivot left but block not exactly zero; raise precision");
            throw not_injective_error(
                "exactly-zero block remains: cokernel has a free part");
        }
        // a truncated entry could hide a smaller valuation than the chosen pivot
        if (any_unknown && min_hidden_prec < best_val)
            throw precision_exhausted_error(
                "truncated entry could hide a smaller pivot valuation; raise precision");
        if (any_unknown && min_hidden_prec == best_val) result.certified = false;

        if (best_val % grain_units != 0)
            throw std::invalid_argument(
                "pivot valuation is not a multiple of the base grain");

        // normalize pivot row so the pivot becomes the exact monomial t^best_val
        TruncSeries unit = at(pr, pc).shift(-best_val);
        TruncSeries unit_inv = unit.unit_inverse();
        for (int c = 0; c < k; ++c) {
            if (col_done[c]) continue;
            at(pr, c) = at(pr, c) * unit_inv;
        }
        // clear the pivot column with row operations
        for (int r = 0; r < n; ++r) {
            if (row_done[r] || r == pr) continue;
            const TruncSeries& b = at(r, pc);
            if (b.exactly_zero()) continue;
            TruncSeries factor = b.shift(-best_val);
            for (int c = 0; c < k; ++c) {
                if (col_done[c]) continue;
                at(r, c) = at(r, c) - factor * at(pr, c);
            }
        }
        // clear the pivot row with column operations; entries below the pivot
        // are only zero to precision, so the subtraction still matters for
        // the precision bookkeeping of the remaining block
        for (int c = 0; c < k; ++c) {
            if (col_done[c] || c == pc) continue;
            const TruncSeries& b = at(pr, c);
            if (b.exactly_zero()) continue;
            TruncSeries factor = b.shift(-best_val);
            for (int r = 0; r < n; ++r) {
                if (row_done[r]) continue;
                at(r, c) = at(r, c) - factor * at(r, pc);
            }
        }
        row_done[pr] = true;
        col_done[pc] = true;
        result.exponents.push_back(best_val / grain_units);
    }
    std::sort(result.exponents.begin(), result.exponents.end());
    return result;
}

DvrMatrix build_induced_lie_matrix(long long e, long long f, long long d,
                                   std::uint32_t q, const PrecisionPolicy& policy) {
    if (e < 1 || f < 1 || d < 1) throw std::invalid_argument("e, f, d must be positive");
    auto field = std::make_shared<const FqField>([&] {
        // q must be a prime power; recover p as the smallest prime factor
        std::uint32_t p = 0;
        for (std::uint32_t t = 2; (unsigned long long)t * t <= q; ++t)
            if (q % t == 0) { p = t; break; }
        if (p == 0) p = q;
        std::uint32_t s = 0;
        std::uint32_t m = q;
        while (m % p == 0) { m /= p; ++s; }
        if (m != 1) throw std::invalid_argument("q is not a prime power");
        return FqField(p, s);
    }());
    std::uint32_t p = field->p();
    if (e % p == 0)
        throw unsupported_input_error("wildly ramified input: p divides e");
    if (d % p == 0)
        throw unsupported_input_error("p divides d: K(d) is not a tame extension");
    if (d % e != 1 % e)
        throw std::invalid_argument("need d ≡ 1 (mod e)");
    long long m = lcm_ll(e, d);
    if (((long long)q - 1) % m != 0)
        throw unsupported_input_error("q ≡ 1 mod lcm(e,d) required for roots of unity");

    // exponent denominator N = e*d; the base ring O_K(d) has grain 1/d,
    // i.e. e numerator units per uniformizer power
    long long N = checked_mul(e, d);
    long long max_exp_units = (e - 1) * (d - 1) / e; // in grain units
    long long prec = checked_mul(checked_add(checked_mul(policy.factor, max_exp_units),
                                             policy.slack),
                                 e);
    int n = (int)(e * f);
    DvrMatrix M(field, n, n, N, prec);
    // basis index (i,j) -> i*f + j with 0 <= i < e, 0 <= j < f; the image of
    // y^j pi_L^i is t^(i(d-1)/e in grain units) * y^j w^i, a diagonal matrix
    // in these bases (w = uniformizer of O_L(d), pi_L = w^d, t^(1/d) = w^e)
    for (long long i = 0; i < e; ++i) {
        long long exp_units = i * (d - 1) / e;         // multiple of grain
        long long exp_num = checked_mul(exp_units, e); // over N
        for (long long j = 0; j < f; ++j) {
            int idx = (int)(i * f + j);
            M.at(idx, idx) = TruncSeries::monomial(field, N, exp_num, 1, prec);
        }
    }
    return M;
}

DvrMatrix scramble_unimodular(const DvrMatrix& m, std::uint64_t seed, int steps,
                              long long exp_step) {
    std::mt19937_64 rng(seed);
    const FqFieldPtr& field = m.field();
    std::uint32_t q = field->q();
    int n = m.rows(), k = m.cols();
    DvrMatrix w = m;
    auto rand_unit = [&]() { return (std::uint32_t)(rng() % (q - 1)) + 1; };
    auto rand_coeff = [&]() { return (std::uint32_t)(rng() % q); };
    // shear exponents stay small so precision is not eaten by the scrambling;
    // multiples of exp_step keep the factors in the base ring
    auto rand_exp = [&]() { return (long long)(rng() % 3) * exp_step; };
    for (int s = 0; s < steps; ++s) {
        int kind = (int)(rng() % 3);
        if (kind == 0) {
            // left shear: row a += c * t^e * row b
            int a = (int)(rng() % n), b = (int)(rng() % n);
            if (a == b) continue;
            TruncSeries c = TruncSeries::monomial(field, w.denominator(), rand_exp(),
                                                  rand_coeff(), w.precision());
            for (int j = 0; j < k; ++j) w.at(a, j) = w.at(a, j) + c * w.at(b, j);
        } else if (kind == 1) {
            // right shear: col a += c * t^e * col b
            int a = (int)(rng() % k), b = (int)(rng() % k);
            if (a == b) continue;
            TruncSeries c = TruncSeries::monomial(field, w.denominator(), rand_exp(),
                                                  rand_coeff(), w.precision());
            for (int i = 0; i < n; ++i) w.at(i, a) = w.at(i, a) + c * w.at(i, b);
        } else {
            // unit scaling of a row (unit-determinant up to units; divisors
            // are insensitive to unit twists of the uniformizer/rows)
            int a = (int)(rng() % n);
            std::uint32_t u = rand_unit();
            for (int j = 0; j < k; ++j) w.at(a, j) = w.at(a, j).scalar_mul(u);
        }
    }
    return w;
}

ElementaryDivisors induced_lie_divisors(long long e, long long f, long long d,
                                        std::uint32_t q, const PrecisionPolicy& policy,
                                        std::uint64_t scramble_seed, int scramble_steps) {
    PrecisionPolicy pol = policy;
    Rational grain(1, d);
    for (int attempt = 0;; ++attempt) {
        DvrMatrix m = build_induced_lie_matrix(e, f, d, q, pol);
        if (scramble_steps > 0)
            m = scramble_unimodular(m, scramble_seed, scramble_steps, e);
        try {
            return snf_over_dvr(m, grain);
        } catch (const precision_exhausted_error&) {
            if (attempt >= pol.retries) throw;
            pol.factor *= 2;
        }
    }
}

} // namespace torjump
