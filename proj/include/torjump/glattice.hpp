#pragma once

#include "torjump/group.hpp"
#include "torjump/intmat.hpp"

#include <vector>

namespace torjump {

// Z-free G-module of finite rank: one invertible integer matrix per group
// element, action a homomorphism (checked exhaustively at construction for
// order <= 64).
class GLattice {
public:
    GLattice(GroupPtr group, std::vector<IMat> action);

    // action given on generators only; the rest is filled in along words
    static GLattice from_generators(GroupPtr group,
                                    const std::vector<std::pair<int, IMat>>& gens);

    static GLattice trivial(GroupPtr group, int rank);
    static GLattice regular(GroupPtr group); // Z[G]
    // Z[G/H] for a subgroup given by its sorted element list
    static GLattice coset_permutation(GroupPtr group, const std::vector<int>& subgroup);
    // kernel of the augmentation Z[G] -> Z, basis e_g - e_1 for g != 1
    static GLattice augmentation_kernel(GroupPtr group);

    const GroupPtr& group() const { return group_; }
    int rank() const { return rank_; }
    const IMat& action(int g) const { return action_[g]; }

    GLattice dual() const;
    GLattice direct_sum(const GLattice& other) const;

private:
    GroupPtr group_;
    int rank_;
    std::vector<IMat> action_;
};

struct TateH {
    int degree; // -1 or 0
    std::vector<long long> invariant_factors; // > 1, sorted; empty = trivial
    bool trivial() const { return invariant_factors.empty(); }
};

// Tate cohomology of the subgroup H (element list) acting on A, degree -1 or
// 0, by integer SNF on the norm and augmentation matrices.
TateH tate_cohomology(const FiniteGroup& g, const std::vector<int>& subgroup,
                      const GLattice& a, int degree);

// Ĥ^{-1}(H, A) = 0 for every subgroup H of G.
bool is_flasque(const FiniteGroup& g, const GLattice& a);

// rank of the invariant sublattice A^H
int invariant_rank(const FiniteGroup& g, const std::vector<int>& subgroup,
                   const GLattice& a);

struct FlasqueResolution {
    IMat inclusion;                        // rank(P) x rank(M), columns = images
    IMat projection;                       // rank(F) x rank(P)
    std::vector<std::vector<int>> p_summands; // stabilizers: P = ⊕ Z[G/H_i]
    GLattice p;
    GLattice f;
};

// 0 -> M -> P -> F -> 0 with P a permutation lattice and F flasque, via the
// dual construction: surject a permutation lattice onto M^dual along the
// G-orbits of the dual standard basis, take the kernel, dualize. Exactness
// and flasqueness are verified before returning.
FlasqueResolution flasque_resolve(GroupPtr group, const GLattice& m);

} // namespace torjump
