#include "torjump/zeta.hpp"

#include <algorithm>
#include <sstream>

namespace torjump {

LPolynomial LPolynomial::L_power(long long k, long long scale) {
    if (k < 0) throw std::invalid_argument("negative L-degree");
    std::vector<long long> c((size_t)k + 1, 0);
    c[(size_t)k] = scale;
    return LPolynomial(std::move(c));
}

LPolynomial LPolynomial::torus_class(long long comp_count, long long t, long long g) {
    LPolynomial r = constant(comp_count);
    LPolynomial lm1({-1, 1});
    for (long long i = 0; i < t; ++i) r = r * lm1;
    return r * L_power(g - t);
}

LPolynomial LPolynomial::operator+(const LPolynomial& o) const {
    std::vector<long long> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] = checked_add(c[i], o.c_[i]);
    return LPolynomial(std::move(c));
}

LPolynomial LPolynomial::operator-(const LPolynomial& o) const {
    return *this + o.scaled(-1);
}

LPolynomial LPolynomial::operator*(const LPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return LPolynomial();
    std::vector<long long> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(c_[i], o.c_[j]));
    }
    return LPolynomial(std::move(c));
}

LPolynomial LPolynomial::scaled(long long k) const {
    std::vector<long long> c = c_;
    for (auto& x : c) x = checked_mul(x, k);
    return LPolynomial(std::move(c));
}

std::string LPolynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        long long v = c_[i];
        if (!v) continue;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        long long a = v < 0 ? -v : v;
        if (a != 1 || i == 0) os << a;
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "L";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<LPolynomial> RationalSeries::expand_to(long long n) const {
    std::vector<LPolynomial> out((size_t)n + 1);
    for (auto& [e, c] : prefix)
        if (e >= 1 && e <= n) out[(size_t)e] = out[(size_t)e] + c;
    for (auto& t : tails) {
        if (t.B < 1) throw std::invalid_argument("tail ratio exponent B must be >= 1");
        for (long long lambda = 0;; ++lambda) {
            long long d = t.alpha + lambda * t.B;
            if (d > n) break;
            // binomial C(lambda + k - 1, k - 1) for the k-th power denominator
            long long binom = 1;
            for (int i = 1; i < t.den_power; ++i)
                binom = checked_mul(binom, lambda + i) / i;
            LPolynomial term =
                t.coeff * LPolynomial::L_power(checked_mul(t.A, lambda), binom);
            if (d >= 1) out[(size_t)d] = out[(size_t)d] + term;
        }
    }
    out.erase(out.begin());
    return out;
}

ZetaInput make_torus_input(DescriptorPtr group, long long p, long long delta,
                           std::map<long long, long long> t_table,
                           std::map<long long, long long> phi_table) {
    ZetaInput z;
    z.group = std::move(group);
    z.p = p;
    z.delta = delta;
    z.variant = ZetaVariant::torus;
    z.t_of_d = [delta, t_table = std::move(t_table)](long long d) {
        auto it = t_table.find(gcd_ll(d, delta));
        if (it == t_table.end()) throw std::invalid_argument("t table missing a divisor");
        return it->second;
    };
    z.phi_tors_of_d = [delta, phi_table = std::move(phi_table)](long long d) {
        auto it = phi_table.find(gcd_ll(d, delta));
        if (it == phi_table.end())
            throw std::invalid_argument("phi table missing a divisor");
        return it->second;
    };
    return z;
}

ZetaInput make_induced_input(long long e, long long f, long long p) {
    // t_d for the regular representation of the cyclic splitting group:
    // invariants of Z[C_delta] under the index-gcd(d,delta) subgroup have
    // rank gcd(d, delta); the component group of an induced torus is free
    long long delta = checked_mul(e, f);
    std::map<long long, long long> t_table, phi_table;
    for (long long m = 1; m <= delta; ++m)
        if (delta % m == 0) {
            t_table[m] = m;
            phi_table[m] = 1;
        }
    return make_torus_input(GroupDescriptor::induced(e, f), p, delta,
                            std::move(t_table), std::move(phi_table));
}

ZetaInput make_abelian_input(DescriptorPtr uniformizing_torus, long long p,
                             long long delta, std::map<long long, long long> t_table,
                             std::map<long long, long long> phi_seeds) {
    ZetaInput z;
    z.group = GroupDescriptor::abelian(std::move(uniformizing_torus));
    z.p = p;
    z.delta = delta;
    z.variant = ZetaVariant::abelian;
    auto t_fn = [delta, t_table = std::move(t_table)](long long d) {
        auto it = t_table.find(gcd_ll(d, delta));
        if (it == t_table.end()) throw std::invalid_argument("t table missing a divisor");
        return it->second;
    };
    z.t_of_d = t_fn;
    z.phi_tors_of_d = [delta, t_fn, phi_seeds = std::move(phi_seeds)](long long d) {
        long long dprime = gcd_ll(d, delta);
        auto it = phi_seeds.find(dprime);
        if (it == phi_seeds.end())
            throw std::invalid_argument("phi seed missing for a divisor of delta");
        long long ratio = d / dprime;
        long long t = t_fn(dprime);
        long long v = it->second;
        for (long long i = 0; i < t; ++i) v = checked_mul(v, ratio);
        return v;
    };
    return z;
}

long long e_prime(const ZetaInput& z) {
    return lcm_ll(z.p, lcm_ll(jump_denominator(*z.group), z.delta));
}

namespace {

LPolynomial coefficient_at(const ZetaInput& z, long long d) {
    KVarClass cls{z.phi_tors_of_d(d), z.t_of_d(d), z.group->dimension()};
    return cls.expand() * LPolynomial::L_power(ord(*z.group, d));
}

} // namespace

RationalSeries zeta_truncated(const ZetaInput& z, long long n_terms) {
    RationalSeries s;
    for (long long d = 1; d <= n_terms; ++d) {
        if (d % z.p == 0) continue;
        s.prefix.emplace_back(d, coefficient_at(z, d));
    }
    return s;
}

RationalSeries zeta_closed_form(const ZetaInput& z) {
    RationalSeries s;
    long long n = threshold_N(*z.group);
    long long ep = e_prime(z);
    Rational ct = c_tame(*z.group);
    Rational a_rat = ct * Rational(ep);
    if (!a_rat.is_integer())
        throw std::logic_error("e'(G) * c_tame(G) must be an integer");
    long long A = a_rat.num();
    // light sanity check of the gcd-periodicity invariant on the window
    for (long long d = n + 1; d <= n + ep; ++d) {
        if (d % z.p == 0) continue;
        if (z.variant == ZetaVariant::torus &&
            z.t_of_d(d) != z.t_of_d(d + ep))
            throw std::invalid_argument("t_of_d is not periodic along residue classes");
    }
    for (long long d = 1; d <= n; ++d) {
        if (d % z.p == 0) continue;
        s.prefix.emplace_back(d, coefficient_at(z, d));
    }
    for (long long alpha = n + 1; alpha <= n + ep; ++alpha) {
        if (gcd_ll(alpha, z.p) != 1) continue;
        if (z.variant == ZetaVariant::torus) {
            RationalSeries::Tail t;
            t.coeff = coefficient_at(z, alpha);
            t.alpha = alpha;
            t.A = A;
            t.B = ep;
            t.den_power = 1;
            s.tails.push_back(t);
        } else {
            // abelian branch: Phi follows the power law along the class, so
            // the tail is class0(alpha) L^ord(alpha) x^alpha times the closed
            // form of Sum_l Phi(alpha + l e') y^l with y = L^A x^e'
            long long aprime = gcd_ll(alpha, z.delta);
            long long t_exp = z.t_of_d(aprime);
            long long seed_phi = z.phi_tors_of_d(aprime);
            if (alpha % aprime != 0 || ep % aprime != 0)
                throw std::logic_error("alpha' must divide alpha and e'");
            GeomPowerSum gs =
                geometric_power_sum(alpha / aprime, ep / aprime, t_exp);
            KVarClass cls0{1, z.t_of_d(alpha), z.group->dimension()};
            LPolynomial base =
                cls0.expand() * LPolynomial::L_power(ord(*z.group, alpha));
            for (auto& term : gs.terms) {
                for (size_t gdeg = 0; gdeg < term.num.size(); ++gdeg) {
                    long long c = term.num[gdeg];
                    if (!c) continue;
                    RationalSeries::Tail t;
                    t.coeff = base.scaled(checked_mul(c, seed_phi)) *
                              LPolynomial::L_power(checked_mul(A, (long long)gdeg));
                    t.alpha = checked_add(alpha, checked_mul(ep, (long long)gdeg));
                    t.A = A;
                    t.B = ep;
                    t.den_power = term.den_power;
                    s.tails.push_back(t);
                }
            }
        }
    }
    return s;
}

GeomPowerSum geometric_power_sum(long long a, long long b, long long t) {
    if (a < 0 || b < 1 || t < 0) throw std::invalid_argument("bad geometric power sum");
    // E_m(y) := Sum_l l^m y^l = P_m(y)/(1-y)^(m+1), built by applying y d/dy
    std::vector<std::vector<long long>> pm(t + 1);
    pm[0] = {1};
    for (long long m = 1; m <= t; ++m) {
        // P_m = y ( P'_{m-1} (1-y) + m P_{m-1} )
        const auto& p = pm[m - 1];
        std::vector<long long> dp(p.size(), 0); // P'
        for (size_t i = 1; i < p.size(); ++i)
            dp[i - 1] = checked_mul(p[i], (long long)i);
        // out = y*P' - y^2*P' + m*y*P
        std::vector<long long> out(p.size() + 2, 0);
        for (size_t i = 0; i < dp.size(); ++i) {
            out[i + 1] = checked_add(out[i + 1], dp[i]);
            out[i + 2] = checked_sub(out[i + 2], dp[i]);
        }
        for (size_t i = 0; i < p.size(); ++i)
            out[i + 1] = checked_add(out[i + 1], checked_mul(m, p[i]));
        while (!out.empty() && out.back() == 0) out.pop_back();
        pm[m] = std::move(out);
    }
    // (a+bl)^t = Sum_m C(t,m) a^(t-m) b^m l^m
    GeomPowerSum g;
    long long binom = 1;
    for (long long m = 0; m <= t; ++m) {
        if (m > 0) binom = binom * (t - m + 1) / m;
        long long coeff = binom;
        for (long long i = 0; i < t - m; ++i) coeff = checked_mul(coeff, a);
        for (long long i = 0; i < m; ++i) coeff = checked_mul(coeff, b);
        if (coeff == 0) continue;
        GeomPowerSum::Term term;
        term.num = pm[m];
        for (auto& c : term.num) c = checked_mul(c, coeff);
        term.den_power = (int)m + 1;
        g.terms.push_back(std::move(term));
    }
    return g;
}

std::vector<long long> GeomPowerSum::expand_to(long long n) const {
    std::vector<long long> out((size_t)n + 1, 0);
    for (auto& t : terms) {
        for (long long l = 0; l <= n; ++l) {
            // coefficient of y^l in num(y)/(1-y)^k
            long long acc = 0;
            for (size_t j = 0; j < t.num.size(); ++j) {
                if ((long long)j > l) break;
                long long lam = l - (long long)j;
                long long binom = 1;
                for (int i = 1; i < t.den_power; ++i)
                    binom = checked_mul(binom, lam + i) / i;
                acc = checked_add(acc, checked_mul(t.num[j], binom));
            }
            out[(size_t)l] = checked_add(out[(size_t)l], acc);
        }
    }
    return out;
}

std::string GeomPowerSum::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(";
        bool f2 = true;
        for (size_t i = 0; i < t.num.size(); ++i) {
            if (!t.num[i]) continue;
            if (!f2) os << (t.num[i] < 0 ? " - " : " + ");
            else if (t.num[i] < 0) os << "-";
            long long a = std::abs(t.num[i]);
            if (a != 1 || i == 0) os << a;
            if (i >= 1) {
                if (a != 1) os << "*";
                os << "y";
                if (i > 1) os << "^" << i;
            }
            f2 = false;
        }
        if (f2) os << "0";
        os << ")/(1-y)";
        if (t.den_power > 1) os << "^" << t.den_power;
    }
    if (first) os << "0";
    return os.str();
}

VerifyResult verify_rationality(const ZetaInput& z, long long n_terms) {
    VerifyResult res;
    if (n_terms <= 0) return res;
    auto closed = zeta_closed_form(z).expand_to(n_terms);
    auto direct = zeta_truncated(z, n_terms).expand_to(n_terms);
    for (long long d = 1; d <= n_terms; ++d) {
        if (!(closed[(size_t)d - 1] == direct[(size_t)d - 1])) {
            res.ok = false;
            res.first_mismatch = d;
            return res;
        }
    }
    return res;
}

} // namespace torjump
