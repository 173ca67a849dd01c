#pragma once

#include <memory>
#include <string>
#include <vector>

namespace torjump {

// Finite group given by its multiplication table; element 0 is the identity.
// Associativity / identity / inverses are verified at construction.
class FiniteGroup {
public:
    static constexpr int kSubgroupCap = 64;

    explicit FiniteGroup(std::vector<std::vector<int>> mul_table);

    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);    // order 2n, n >= 1
    static FiniteGroup dicyclic(int n);    // order 4n (n = 2 gives Q8)
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup alternating4();
    // group generated by permutations of {0,...,npoints-1}
    static FiniteGroup from_permutations(int npoints,
                                         const std::vector<std::vector<int>>& gens);

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[(size_t)a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }

    // all subgroups as sorted element lists, ordered by (size, elements);
    // enumerated lazily, exhaustive for order <= kSubgroupCap
    const std::vector<std::vector<int>>& subgroups() const;

    // smallest generating set found greedily for a subgroup's element list
    std::vector<int> generators_of(const std::vector<int>& subgroup_elems) const;

    // left cosets gH as sorted lists, in first-seen order of minimal element
    std::vector<std::vector<int>> left_cosets(const std::vector<int>& subgroup) const;

    std::vector<int> closure(std::vector<int> seed) const;

private:
    int n_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    mutable std::vector<std::vector<int>> subgroups_;
    mutable bool subgroups_ready_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

} // namespace torjump
