#pragma once

#include "torjump/jumps.hpp"
#include "torjump/kvar.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace torjump {

// Formal series in x with L-polynomial coefficients, together with a closed
// form: a finite prefix plus tail terms c * x^alpha / (1 - L^A x^B)^k. The
// denominator power k > 1 only occurs in the abelian-variety branch.
struct RationalSeries {
    struct Tail {
        LPolynomial coeff;
        long long alpha = 0;
        long long A = 0;
        long long B = 1;
        int den_power = 1;
    };
    std::vector<std::pair<long long, LPolynomial>> prefix; // (exponent, coeff)
    std::vector<Tail> tails;

    // coefficients of x^1..x^n of the full (prefix + re-expanded tails) series
    std::vector<LPolynomial> expand_to(long long n) const;
};

enum class ZetaVariant { torus, abelian };

// Inputs for the motivic zeta function of a descriptor: torus rank and
// component-count data as functions of d. In the torus variant both depend
// on d only through gcd(d, delta).
struct ZetaInput {
    DescriptorPtr group;
    long long p = 2;     // residue characteristic
    long long delta = 1; // degree of the splitting-extension surrogate
    std::function<long long(long long)> t_of_d;
    std::function<long long(long long)> phi_tors_of_d;
    ZetaVariant variant = ZetaVariant::torus;
};

// ZetaInput with gcd-periodic tables keyed by divisors of delta.
ZetaInput make_torus_input(DescriptorPtr group, long long p, long long delta,
                           std::map<long long, long long> t_table,
                           std::map<long long, long long> phi_table);
// an induced torus split by a cyclic extension of degree delta = e*f acting
// through its regular representation: t_d = gcd(d, delta), phi = 1
ZetaInput make_induced_input(long long e, long long f, long long p);
// abelian variant: #Phi follows the power law from the seed values at the
// divisors of delta, with exponents t(alpha')
ZetaInput make_abelian_input(DescriptorPtr uniformizing_torus, long long p,
                             long long delta, std::map<long long, long long> t_table,
                             std::map<long long, long long> phi_seeds);

RationalSeries zeta_truncated(const ZetaInput& z, long long n_terms);
RationalSeries zeta_closed_form(const ZetaInput& z);

// One simple-fraction term of Sum_l (a+bl)^t y^l: poly(y) / (1-y)^den_power.
struct GeomPowerSum {
    struct Term {
        std::vector<long long> num; // polynomial in y
        int den_power = 1;
    };
    std::vector<Term> terms;

    std::vector<long long> expand_to(long long n) const; // coefficients of y^0..y^n
    std::string str() const;
};

// closed form of Sum_{l>=0} (a + b*l)^t y^l in Z[y, 1/(1-y)]
GeomPowerSum geometric_power_sum(long long a, long long b, long long t);

struct VerifyResult {
    bool ok = true;
    long long first_mismatch = -1;
    explicit operator bool() const { return ok; }
};

// re-expands the closed form and compares it with the truncated series,
// coefficient by coefficient, up to x^n_terms
VerifyResult verify_rationality(const ZetaInput& z, long long n_terms);

// e'(G) = lcm(p, e(G), delta)
long long e_prime(const ZetaInput& z);

} // namespace torjump
