#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torjump/dvr.hpp"
#include "torjump/intmat.hpp"
#include "torjump/util.hpp"

#include <algorithm>
#include <random>
#include <sstream>

using namespace torjump;

namespace {

FqFieldPtr make_field(std::uint32_t p, std::uint32_t s = 1) {
    return std::make_shared<const FqField>(p, s);
}

} // namespace

TEST_CASE("Fq arithmetic in prime fields") {
    auto f = make_field(31);
    CHECK(f->add(30, 5) == 4);
    CHECK(f->mul(6, 6) == 5);
    CHECK(f->mul(7, f->inv(7)) == 1);
    std::uint32_t z = f->root_of_unity(5);
    CHECK(f->pow(z, 5) == 1);
    CHECK(f->pow(z, 1) != 1);
}

TEST_CASE("Fq arithmetic in prime-power fields") {
    auto f = make_field(3, 2); // F_9
    CHECK(f->q() == 9);
    // every nonzero element has an inverse
    for (std::uint32_t a = 1; a < 9; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
    // the multiplicative group has order 8
    std::uint32_t z = f->root_of_unity(8);
    std::uint32_t acc = 1;
    int ord = 0;
    for (int i = 1; i <= 8; ++i) {
        acc = f->mul(acc, z);
        if (acc == 1) { ord = i; break; }
    }
    CHECK(ord == 8);
}

TEST_CASE("smallest_prime_1_mod") {
    CHECK(smallest_prime_1_mod(10) == 11);
    CHECK(smallest_prime_1_mod(21) == 43);
    CHECK(smallest_prime_1_mod(294) % 294 == 1);
}

TEST_CASE("series multiplication: difference of squares") {
    auto f = make_field(31);
    // (1 + t^(1/2))(1 - t^(1/2)) = 1 - t at precision 3
    long long N = 2, prec = 6;
    TruncSeries a(f, N, prec), b(f, N, prec);
    a.set_coeff(0, 1);
    a.set_coeff(1, 1);
    b.set_coeff(0, 1);
    b.set_coeff(1, f->neg(1));
    TruncSeries c = series_mul(a, b);
    CHECK(c.precision() == 6);
    REQUIRE(c.coeffs().size() == 2);
    CHECK(c.coeffs().at(0) == 1);
    CHECK(c.coeffs().at(2) == f->neg(1));
}

TEST_CASE("series multiplication: absorbing exact zero") {
    auto f = make_field(31);
    TruncSeries a(f, 2, 6);
    a.set_coeff(0, 1);
    TruncSeries z = TruncSeries::zero(f, 2);
    TruncSeries c = series_mul(a, z);
    CHECK(c.exactly_zero());
}

TEST_CASE("series multiplication: precision propagation t^(1/4) * t^(1/4)") {
    auto f = make_field(31);
    // prec 1 means numerator 4 over N = 4; product precision 5/4 -> numerator 5
    TruncSeries a = TruncSeries::monomial(f, 4, 1, 1, 4);
    TruncSeries c = series_mul(a, a);
    CHECK(c.precision() == 5);
    REQUIRE(c.coeffs().size() == 1);
    CHECK(c.coeffs().begin()->first == 2);
}

TEST_CASE("unit inverse round-trips") {
    auto f = make_field(43);
    TruncSeries u(f, 3, 20);
    u.set_coeff(0, 5);
    u.set_coeff(1, 7);
    u.set_coeff(4, 12);
    TruncSeries inv = u.unit_inverse();
    TruncSeries prod = u * inv;
    REQUIRE(prod.coeffs().size() == 1);
    CHECK(prod.coeffs().at(0) == 1);
}

TEST_CASE("snf_over_dvr: already diagonal") {
    auto f = make_field(31);
    // diag(t^(1/5), t^(3/5)) over base grain 1/5 -> exponents (1, 3)
    DvrMatrix m(f, 2, 2, 5, 20);
    m.at(0, 0) = TruncSeries::monomial(f, 5, 1, 1, 20);
    m.at(1, 1) = TruncSeries::monomial(f, 5, 3, 1, 20);
    auto ed = snf_over_dvr(m, Rational(1, 5));
    CHECK(ed.exponents == std::vector<long long>{1, 3});
    CHECK(ed.certified);
}

TEST_CASE("snf_over_dvr: identity") {
    auto f = make_field(31);
    DvrMatrix m(f, 2, 2, 1, 10);
    m.at(0, 0) = TruncSeries::monomial(f, 1, 0, 1, 10);
    m.at(1, 1) = TruncSeries::monomial(f, 1, 0, 1, 10);
    auto ed = snf_over_dvr(m, Rational(1));
    CHECK(ed.exponents == std::vector<long long>{0, 0});
}

TEST_CASE("snf_over_dvr: not-injective error on an exactly zero column") {
    auto f = make_field(31);
    DvrMatrix m(f, 2, 2, 1, 10);
    m.at(0, 0) = TruncSeries::monomial(f, 1, 0, 1, 10);
    // column 1 stays exactly zero
    CHECK_THROWS_AS(snf_over_dvr(m, Rational(1)), not_injective_error);
}

TEST_CASE("snf_over_dvr: precision-exhausted on an invisible block") {
    auto f = make_field(31);
    DvrMatrix m(f, 2, 2, 1, 3);
    m.at(0, 0) = TruncSeries::monomial(f, 1, 0, 1, 3);
    // entry known only to O(t^3): no visible term
    m.at(1, 1) = TruncSeries(f, 1, 3);
    CHECK_THROWS_AS(snf_over_dvr(m, Rational(1)), precision_exhausted_error);
}

TEST_CASE("induced Lie matrix: the paper's cokernel exponents") {
    // (e=2, f=1, d=5, q=31) -> (0, 2)
    auto ed = induced_lie_divisors(2, 1, 5, 31);
    CHECK(ed.exponents == std::vector<long long>{0, 2});
    CHECK(ed.grain == Rational(1, 5));

    // (e=1, f=3, d=7): weakly unramified, an isomorphism
    auto ed2 = induced_lie_divisors(1, 3, 7, 29);
    CHECK(ed2.exponents == std::vector<long long>{0, 0, 0});

    // (e=3, f=2, d=7, q=43) -> (0,0,2,2,4,4)
    auto ed3 = induced_lie_divisors(3, 2, 7, 43);
    CHECK(ed3.exponents == std::vector<long long>{0, 0, 2, 2, 4, 4});
}

TEST_CASE("induced Lie matrix: input validation") {
    CHECK_THROWS_AS(build_induced_lie_matrix(2, 1, 5, 32), unsupported_input_error); // p=2 | e
    CHECK_THROWS_AS(build_induced_lie_matrix(2, 1, 5, 7), unsupported_input_error);  // q too small
    CHECK_THROWS_AS(build_induced_lie_matrix(3, 1, 5, 31), std::invalid_argument);   // d != 1 mod e
}

TEST_CASE("snf invariance under unimodular scrambling") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 17ull}) {
        auto plain = induced_lie_divisors(4, 2, 9, 37);
        auto scrambled = induced_lie_divisors(4, 2, 9, 37, {}, seed, 60);
        CHECK(plain.exponents == scrambled.exponents);
    }
}

TEST_CASE("unit twist of the uniformizer does not change divisors") {
    // scaling every row by a unit series is a unit twist; a regression
    // property, not an assumption used by the algorithm
    auto f = make_field(31);
    DvrMatrix m = build_induced_lie_matrix(2, 1, 5, 31);
    DvrMatrix twisted = m;
    TruncSeries u(f, m.denominator(), m.precision());
    u.set_coeff(0, 3);
    u.set_coeff(2, 8);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) twisted.at(r, c) = m.at(r, c) * u;
    auto a = snf_over_dvr(m, Rational(1, 5));
    auto b = snf_over_dvr(twisted, Rational(1, 5));
    CHECK(a.exponents == b.exponents);
}

TEST_CASE("integer-exponent matrices agree with classical integer SNF") {
    // entries +-t^a map to +-3^a over Z; the 3-adic valuations of the
    // integer elementary divisors must match the DVR exponents
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + (int)(rng() % 3);
        long long prec = 40;
        auto f = make_field(101);
        DvrMatrix m(f, n, n, 1, prec);
        std::vector<std::vector<long long>> zmat(n, std::vector<long long>(n, 0));
        // random monomial matrix with unit coefficients +-1, then a few shears
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (rng() % 3 == 0 && i != j) continue;
                long long a = (long long)(rng() % 4);
                bool neg = rng() % 2;
                m.at(i, j) = TruncSeries::monomial(f, 1, a, neg ? f->neg(1) : 1, prec);
                long long v = 1;
                for (long long k = 0; k < a; ++k) v *= 3;
                zmat[i][j] = neg ? -v : v;
            }
        }
        // ensure generic injectivity by adding t^0 on the diagonal
        for (int i = 0; i < n; ++i) {
            if (m.at(i, i).zero_to_precision()) {
                m.at(i, i) = TruncSeries::monomial(f, 1, 0, 1, prec);
                zmat[i][i] = 1;
            }
        }
        IMat zm(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) zm.at(i, j) = zmat[i][j];
        auto s = smith_normal_form(zm);
        if (s.rank < n) continue; // singular draw: out of contract for both sides
        std::vector<long long> zvals;
        for (auto d : s.diagonal()) {
            long long v = 0;
            while (d != 0 && d % 3 == 0) { d /= 3; ++v; }
            zvals.push_back(v);
        }
        std::sort(zvals.begin(), zvals.end());
        auto ed = snf_over_dvr(m, Rational(1));
        CHECK(ed.exponents == zvals);
    }
}

TEST_CASE("precision monotonicity: larger M never changes certified exponents") {
    for (long long d : {5, 9, 13}) {
        PrecisionPolicy small_pol;
        small_pol.factor = 2;
        PrecisionPolicy big_pol;
        big_pol.factor = 8;
        auto a = induced_lie_divisors(4, 1, d, (std::uint32_t)smallest_prime_1_mod(4 * (std::uint32_t)d),
                                      small_pol, 11, 30);
        auto b = induced_lie_divisors(4, 1, d, (std::uint32_t)smallest_prime_1_mod(4 * (std::uint32_t)d),
                                      big_pol, 11, 30);
        if (a.certified) CHECK(a.exponents == b.exponents);
    }
}

TEST_CASE("debug dump format") {
    auto f = make_field(31);
    DvrMatrix m(f, 1, 1, 5, 20);
    m.at(0, 0) = TruncSeries::monomial(f, 5, 3, 7, 20);
    std::ostringstream os;
    m.debug_dump(os);
    CHECK(os.str() == "0 0 3/5 7\n");
}
