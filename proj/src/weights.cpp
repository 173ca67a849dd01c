#include "torjump/weights.hpp"

#include "torjump/util.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace torjump {

WeightMultiset WeightMultiset::from_list(long long modulus,
                                         const std::vector<long long>& weights) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    std::map<long long, long long> acc;
    for (long long w : weights) acc[((w % modulus) + modulus) % modulus] += 1;
    WeightMultiset out;
    out.modulus = modulus;
    for (auto& [r, m] : acc) out.entries.emplace_back(r, m);
    return out;
}

std::vector<long long> WeightMultiset::sorted_list() const {
    std::vector<long long> out;
    for (auto& [r, m] : entries)
        for (long long i = 0; i < m; ++i) out.push_back(r);
    return out;
}

long long WeightMultiset::total_multiplicity() const {
    long long t = 0;
    for (auto& [r, m] : entries) t = checked_add(t, m);
    return t;
}

long long Scale::sum() const {
    long long s = 0;
    for (long long e : exponents) {
        if (e < 0) throw std::invalid_argument("scale exponents must be nonnegative");
        s = checked_add(s, e);
    }
    return s;
}

WeightMultiset apply_scale(const WeightMultiset& w, const Scale& s, long long p) {
    auto list = w.sorted_list();
    if (list.size() != s.exponents.size())
        throw std::invalid_argument("scale length must match the number of weights");
    std::vector<long long> out;
    for (size_t i = 0; i < list.size(); ++i) {
        long long pe = (long long)powmod((unsigned long long)p,
                                         (unsigned long long)s.exponents[i],
                                         (unsigned long long)w.modulus);
        out.push_back((list[i] % w.modulus) * pe % w.modulus);
    }
    return WeightMultiset::from_list(w.modulus, out);
}

WeightMultiset induced_weights(const GradedSubstitution& g) {
    std::vector<long long> out;
    for (size_t t = 0; t < g.targets.size(); ++t) {
        const auto& monomials = g.targets[t];
        if (monomials.empty())
            throw std::invalid_argument("target parameter with empty monomial support");
        bool first = true;
        long long weight = 0;
        for (const auto& xi : monomials) {
            if (xi.size() != g.source_weights.size())
                throw std::invalid_argument("exponent vector length mismatch");
            long long w = 0;
            for (size_t k = 0; k < xi.size(); ++k) {
                if (xi[k] < 0) throw std::invalid_argument("negative monomial exponent");
                w = (w + (__int128)xi[k] * (g.source_weights[k] % g.modulus)) %
                    g.modulus;
            }
            w = ((w % g.modulus) + g.modulus) % g.modulus;
            if (first) {
                weight = w;
                first = false;
            } else if (w != weight) {
                throw equivariance_error(
                    "substitution is not mu_d-equivariant: mixed weights in one target");
            }
        }
        out.push_back(weight);
    }
    return WeightMultiset::from_list(g.modulus, out);
}

long long thickness_norm_example(long long deg, long long p) {
    if (deg < 1) throw std::invalid_argument("degree must be positive");
    if (p < 2) throw std::invalid_argument("p must be a prime");
    long long t = 1;
    while (deg % p == 0) {
        deg /= p;
        t = checked_mul(t, p);
    }
    return t;
}

bool degree_bound_check(const Scale& scale, long long p, long long bound) {
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    long long total = scale.sum();
    // compare p^total <= bound without overflow
    __int128 v = 1;
    for (long long i = 0; i < total; ++i) {
        v *= p;
        if (v > bound) return false;
    }
    return v <= bound;
}

} // namespace torjump
