#include "torjump/glattice.hpp"

#include "torjump/util.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace torjump {

GLattice::GLattice(GroupPtr group, std::vector<IMat> action)
    : group_(std::move(group)), action_(std::move(action)) {
    int n = group_->order();
    if ((int)action_.size() != n)
        throw std::invalid_argument("need one action matrix per group element");
    rank_ = action_.empty() ? 0 : action_[0].rows();
    for (auto& m : action_)
        if (m.rows() != rank_ || m.cols() != rank_)
            throw std::invalid_argument("action matrices must be square of equal rank");
    if (rank_ == 0) return;
    if (!(action_[0] == IMat::identity(rank_)))
        throw std::invalid_argument("identity must act trivially");
    // generator checks suffice: rho(s) unimodular and rho(s)rho(h) = rho(sh)
    // for every s in a generating set and every h proves the rest by
    // induction on word length
    if (n <= FiniteGroup::kSubgroupCap) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        auto gens = group_->generators_of(all);
        for (int s : gens) {
            if (!is_unimodular(action_[s]))
                throw std::invalid_argument("action matrix is not invertible over Z");
            for (int h = 0; h < n; ++h)
                if (!(action_[s] * action_[h] == action_[group_->mul(s, h)]))
                    throw std::invalid_argument("action is not a homomorphism");
        }
    }
}

GLattice GLattice::from_generators(GroupPtr group,
                                   const std::vector<std::pair<int, IMat>>& gens) {
    int n = group->order();
    int rank = gens.empty() ? 0 : gens[0].second.rows();
    std::vector<IMat> act(n);
    std::vector<bool> have(n, false);
    act[0] = IMat::identity(rank);
    have[0] = true;
    for (auto& [g, m] : gens) {
        if (g < 0 || g >= n) throw std::invalid_argument("generator index out of range");
        act[g] = m;
        have[g] = true;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& [g, m] : gens)
            for (int h = 0; h < n; ++h) {
                if (!have[h]) continue;
                int gh = group->mul(g, h);
                if (!have[gh]) {
                    act[gh] = m * act[h];
                    have[gh] = true;
                    grew = true;
                }
            }
    }
    for (int g = 0; g < n; ++g)
        if (!have[g])
            throw std::invalid_argument("generators do not generate the group");
    return GLattice(std::move(group), std::move(act));
}

GLattice GLattice::trivial(GroupPtr group, int rank) {
    std::vector<IMat> act(group->order(), IMat::identity(rank));
    return GLattice(std::move(group), std::move(act));
}

GLattice GLattice::regular(GroupPtr group) {
    int n = group->order();
    std::vector<IMat> act(n);
    for (int g = 0; g < n; ++g) {
        IMat m(n, n);
        for (int h = 0; h < n; ++h) m.at(group->mul(g, h), h) = 1; // e_h -> e_{gh}
        act[g] = m;
    }
    return GLattice(std::move(group), std::move(act));
}

GLattice GLattice::coset_permutation(GroupPtr group, const std::vector<int>& subgroup) {
    auto cosets = group->left_cosets(subgroup);
    int k = (int)cosets.size();
    int n = group->order();
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < k; ++i) idx[cosets[i]] = i;
    std::vector<IMat> act(n);
    for (int g = 0; g < n; ++g) {
        IMat m(k, k);
        for (int i = 0; i < k; ++i) {
            std::vector<int> image;
            for (int x : cosets[i]) image.push_back(group->mul(g, x));
            std::sort(image.begin(), image.end());
            m.at(idx.at(image), i) = 1;
        }
        act[g] = m;
    }
    return GLattice(std::move(group), std::move(act));
}

GLattice GLattice::augmentation_kernel(GroupPtr group) {
    // basis b_g = e_g - e_1 for g != 1; h.b_g = b_{hg} - b_h
    int n = group->order();
    if (n < 2) throw std::invalid_argument("augmentation kernel needs |G| >= 2");
    int r = n - 1;
    auto bi = [&](int g) { return g - 1; }; // element g>=1 -> basis index
    std::vector<IMat> act(n);
    for (int h = 0; h < n; ++h) {
        IMat m(r, r);
        for (int g = 1; g < n; ++g) {
            int hg = group->mul(h, g);
            if (hg != 0) m.at(bi(hg), bi(g)) += 1;
            if (h != 0) m.at(bi(h), bi(g)) -= 1;
        }
        act[h] = m;
    }
    return GLattice(std::move(group), std::move(act));
}

GLattice GLattice::dual() const {
    std::vector<IMat> act(group_->order());
    for (int g = 0; g < group_->order(); ++g)
        act[g] = action_[group_->inv(g)].transpose();
    return GLattice(group_, std::move(act));
}

GLattice GLattice::direct_sum(const GLattice& other) const {
    if (group_ != other.group_) throw std::invalid_argument("direct sum across groups");
    std::vector<IMat> act(group_->order());
    for (int g = 0; g < group_->order(); ++g) {
        IMat m(rank_ + other.rank_, rank_ + other.rank_);
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) m.at(i, j) = action_[g].at(i, j);
        for (int i = 0; i < other.rank_; ++i)
            for (int j = 0; j < other.rank_; ++j)
                m.at(rank_ + i, rank_ + j) = other.action_[g].at(i, j);
        act[g] = m;
    }
    return GLattice(group_, std::move(act));
}

namespace {

IMat norm_matrix(const FiniteGroup&, const std::vector<int>& subgroup, const GLattice& a) {
    IMat n(a.rank(), a.rank());
    for (int h : subgroup) n = n + a.action(h);
    return n;
}

// columns spanning I_H * A; generators of H suffice since
// (gh - 1)a = (g - 1)(ha) + (h - 1)a
IMat augmentation_image(const FiniteGroup& g, const std::vector<int>& subgroup,
                        const GLattice& a) {
    IMat id = IMat::identity(a.rank());
    IMat cols(a.rank(), 0);
    for (int h : g.generators_of(subgroup))
        cols = IMat::hstack(cols, a.action(h) - id);
    if (cols.cols() == 0) cols = IMat(a.rank(), 1); // zero column for trivial H
    return cols;
}

// basis of the invariant sublattice A^H as columns
IMat invariant_basis(const FiniteGroup& g, const std::vector<int>& subgroup,
                     const GLattice& a) {
    auto gens = g.generators_of(subgroup);
    if (gens.empty()) return IMat::identity(a.rank());
    IMat stacked(0, a.rank());
    IMat id = IMat::identity(a.rank());
    for (int h : gens) stacked = IMat::vstack(stacked, a.action(h) - id);
    return kernel_basis(stacked);
}

std::vector<long long> quotient_invariants(const IMat& basis, const IMat& gens) {
    // invariant factors of (lattice spanned by basis) / (sublattice spanned
    // by gens), both expressed in ambient coordinates
    if (basis.cols() == 0) return {};
    IMat x = solve_exact(basis, gens);
    auto s = smith_normal_form(x);
    std::vector<long long> out;
    for (int i = 0; i < s.rank; ++i)
        if (s.d.at(i, i) > 1) out.push_back(s.d.at(i, i));
    if (s.rank < basis.cols())
        throw std::logic_error("Tate cohomology group is not finite");
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TateH tate_cohomology(const FiniteGroup& g, const std::vector<int>& subgroup,
                      const GLattice& a, int degree) {
    if (degree != -1 && degree != 0)
        throw std::invalid_argument("degree must be -1 or 0");
    TateH res;
    res.degree = degree;
    if (a.rank() == 0) return res;
    IMat n = norm_matrix(g, subgroup, a);
    if (degree == 0) {
        // A^H / N_H(A)
        IMat inv = invariant_basis(g, subgroup, a);
        res.invariant_factors = quotient_invariants(inv, n);
    } else {
        // ker(N_H) / I_H A
        IMat ker = kernel_basis(n);
        IMat img = augmentation_image(g, subgroup, a);
        res.invariant_factors = quotient_invariants(ker, img);
    }
    return res;
}

bool is_flasque(const FiniteGroup& g, const GLattice& a) {
    for (auto& h : g.subgroups())
        if (!tate_cohomology(g, h, a, -1).trivial()) return false;
    return true;
}

int invariant_rank(const FiniteGroup& g, const std::vector<int>& subgroup,
                   const GLattice& a) {
    if (a.rank() == 0) return 0;
    return invariant_basis(g, subgroup, a).cols();
}

FlasqueResolution flasque_resolve(GroupPtr group, const GLattice& m) {
    const FiniteGroup& g = *group;
    int n = g.order();
    int rank = m.rank();
    GLattice mdual = m.dual();
    // G-stable generating set of M^dual: orbits of the dual standard basis,
    // deduplicated, in first-seen order
    std::vector<std::vector<long long>> gen_vecs;
    std::map<std::vector<long long>, int> seen;
    for (int i = 0; i < rank; ++i) {
        for (int e = 0; e < n; ++e) {
            std::vector<long long> v(rank, 0);
            for (int r = 0; r < rank; ++r) v[r] = mdual.action(e).at(r, i);
            if (!seen.count(v)) {
                seen[v] = (int)gen_vecs.size();
                gen_vecs.push_back(v);
            }
        }
    }
    int s = (int)gen_vecs.size();
    // the surjection Q -> M^dual, columns the generating vectors
    IMat surj(rank, s);
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < rank; ++i) surj.at(i, j) = gen_vecs[j][i];
    // G permutes the generating set
    std::vector<IMat> qact(n);
    for (int e = 0; e < n; ++e) {
        IMat pm(s, s);
        for (int j = 0; j < s; ++j) {
            std::vector<long long> w(rank, 0);
            for (int r = 0; r < rank; ++r)
                for (int c = 0; c < rank; ++c)
                    w[r] = checked_add(w[r], checked_mul(mdual.action(e).at(r, c),
                                                         gen_vecs[j][c]));
            auto it = seen.find(w);
            if (it == seen.end()) throw std::logic_error("generating set not G-stable");
            pm.at(it->second, j) = 1;
        }
        qact[e] = pm;
    }
    GLattice q(group, qact);
    // R = ker(Q -> M^dual) with its induced action
    IMat kb = kernel_basis(surj); // s x r
    int r = kb.cols();
    std::vector<IMat> ract(n);
    for (int e = 0; e < n; ++e)
        ract[e] = r == 0 ? IMat(0, 0) : solve_exact(kb, qact[e] * kb);
    // dualize: 0 -> M --surj^T--> Q^dual = Q --kb^T--> R^dual -> 0
    std::vector<IMat> fact(n);
    for (int e = 0; e < n; ++e)
        fact[e] = r == 0 ? IMat(0, 0) : ract[g.inv(e)].transpose();
    GLattice f(group, fact);

    FlasqueResolution res{surj.transpose(), kb.transpose(), {}, q, f};
    // record the permutation summands: stabilizers of orbit representatives
    std::vector<bool> used(s, false);
    for (int j = 0; j < s; ++j) {
        if (used[j]) continue;
        std::vector<int> stab;
        for (int e = 0; e < n; ++e) {
            // mark the orbit of j and collect its stabilizer
            std::vector<long long> w(rank, 0);
            for (int rr = 0; rr < rank; ++rr)
                for (int c = 0; c < rank; ++c)
                    w[rr] = checked_add(w[rr], checked_mul(mdual.action(e).at(rr, c),
                                                           gen_vecs[j][c]));
            int img = seen.at(w);
            used[img] = true;
            if (img == j) stab.push_back(e);
        }
        res.p_summands.push_back(stab);
    }

    // verification: inclusion primitive, composite zero, projection onto,
    // ranks add up, F flasque
    auto inc_snf = smith_normal_form(res.inclusion);
    if (inc_snf.rank != rank)
        throw std::logic_error("flasque_resolve: inclusion not injective");
    for (auto x : inc_snf.diagonal())
        if (x != 0 && x != 1)
            throw std::logic_error("flasque_resolve: inclusion not primitive");
    if (r > 0 && !(res.projection * res.inclusion).is_zero())
        throw std::logic_error("flasque_resolve: composite not zero");
    if (r > 0) {
        auto pr_snf = smith_normal_form(res.projection);
        if (pr_snf.rank != r)
            throw std::logic_error("flasque_resolve: projection not surjective");
        for (auto x : pr_snf.diagonal())
            if (x != 0 && x != 1)
                throw std::logic_error("flasque_resolve: projection not onto over Z");
    }
    if (rank + r != s) throw std::logic_error("flasque_resolve: ranks do not add up");
    if (!is_flasque(g, f)) throw std::logic_error("flasque_resolve: F is not flasque");
    return res;
}

} // namespace torjump
