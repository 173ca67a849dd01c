#pragma once

#include <vector>

namespace torjump {

// Z/dZ weight multiset of a mu_d-action on a regular parameter system.
struct WeightMultiset {
    long long modulus = 1;
    std::vector<std::pair<long long, long long>> entries; // (residue, mult), sorted

    static WeightMultiset from_list(long long modulus, const std::vector<long long>& weights);
    std::vector<long long> sorted_list() const;
    long long total_multiplicity() const;
    bool operator==(const WeightMultiset& o) const {
        return modulus == o.modulus && entries == o.entries;
    }
};

// Exponent vector (e_1,...,e_n) transforming weights across an infinitesimal
// torsor quotient: weights j_i become p^{e_i} j_i.
struct Scale {
    std::vector<long long> exponents;
    long long sum() const;
};

// Weight-level shadow of a graded power-series substitution: only the
// monomial supports matter for the weight calculus.
struct GradedSubstitution {
    long long modulus = 1;
    std::vector<long long> source_weights;
    // one target parameter per entry; each is a set of exponent vectors
    std::vector<std::vector<std::vector<long long>>> targets;
};

WeightMultiset apply_scale(const WeightMultiset& w, const Scale& s, long long p);

WeightMultiset induced_weights(const GradedSubstitution& g);

// largest power of p dividing deg (the thickness of the norm-map example)
long long thickness_norm_example(long long deg, long long p);

// p^(sum of scale exponents) <= bound
bool degree_bound_check(const Scale& scale, long long p, long long bound);

} // namespace torjump
