#include "torjump/group.hpp"

#include "torjump/util.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace torjump {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul_table) {
    n_ = (int)mul_table.size();
    if (n_ == 0) throw std::invalid_argument("empty group");
    mul_.resize((size_t)n_ * n_);
    for (int i = 0; i < n_; ++i) {
        if ((int)mul_table[i].size() != n_)
            throw std::invalid_argument("multiplication table is not square");
        for (int j = 0; j < n_; ++j) {
            int v = mul_table[i][j];
            if (v < 0 || v >= n_) throw std::invalid_argument("table entry out of range");
            mul_[(size_t)i * n_ + j] = v;
        }
    }
    // identity at index 0
    for (int i = 0; i < n_; ++i)
        if (mul(0, i) != i || mul(i, 0) != i)
            throw std::invalid_argument("element 0 is not an identity");
    // inverses
    inv_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j)
            if (mul(i, j) == 0 && mul(j, i) == 0) {
                inv_[i] = j;
                break;
            }
        if (inv_[i] < 0) throw std::invalid_argument("missing inverse");
    }
    // associativity
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("multiplication table not associative");
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    // elements r^i s^j encoded as i + n*j
    if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
    int m = 2 * n;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    auto enc = [&](int i, int j) { return ((i % n + n) % n) + n * (j & 1); };
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
                    int i = j1 ? i1 - i2 : i1 + i2;
                    t[enc(i1, j1)][enc(i2, j2)] = enc(i, j1 ^ j2);
                }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dicyclic(int n) {
    // <a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>, elements a^i b^j,
    // 0 <= i < 2n, j in {0,1}, encoded i + 2n*j
    if (n < 1) throw std::invalid_argument("dicyclic parameter must be positive");
    int two_n = 2 * n;
    int m = 4 * n;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    auto enc = [&](int i, int j) { return ((i % two_n + two_n) % two_n) + two_n * (j & 1); };
    for (int i1 = 0; i1 < two_n; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < two_n; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // b a^k = a^-k b; b^2 = a^n
                    int i = j1 ? i1 - i2 : i1 + i2;
                    int j = j1 ^ j2;
                    if (j1 && j2) i += n;
                    t[enc(i1, j1)][enc(i2, j2)] = enc(i, j);
                }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order() * b.order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    auto enc = [&](int x, int y) { return x * b.order() + y; };
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::alternating4() {
    return from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); // (012), (01)(23)
}

FiniteGroup FiniteGroup::from_permutations(int npoints,
                                           const std::vector<std::vector<int>>& gens) {
    for (auto& g : gens) {
        if ((int)g.size() != npoints) throw std::invalid_argument("bad permutation size");
        std::vector<bool> seen(npoints, false);
        for (int x : g) {
            if (x < 0 || x >= npoints || seen[x])
                throw std::invalid_argument("not a permutation");
            seen[x] = true;
        }
    }
    std::vector<int> id(npoints);
    for (int i = 0; i < npoints; ++i) id[i] = i;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    elems.push_back(id);
    index[id] = 0;
    for (size_t head = 0; head < elems.size(); ++head) {
        for (auto& g : gens) {
            std::vector<int> prod(npoints);
            for (int i = 0; i < npoints; ++i) prod[i] = g[elems[head][i]];
            if (!index.count(prod)) {
                index[prod] = (int)elems.size();
                elems.push_back(prod);
            }
        }
        if (elems.size() > 4096) throw unsupported_input_error("permutation group too large");
    }
    int n = (int)elems.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> prod(npoints);
            for (int x = 0; x < npoints; ++x) prod[x] = elems[i][elems[j][x]];
            t[i][j] = index.at(prod);
        }
    return FiniteGroup(std::move(t));
}

std::vector<int> FiniteGroup::closure(std::vector<int> seed) const {
    std::set<int> s(seed.begin(), seed.end());
    s.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur) {
                if (s.insert(mul(a, b)).second) grew = true;
            }
    }
    return std::vector<int>(s.begin(), s.end());
}

const std::vector<std::vector<int>>& FiniteGroup::subgroups() const {
    if (subgroups_ready_) return subgroups_;
    if (n_ > kSubgroupCap)
        throw unsupported_input_error("subgroup enumeration capped at order " +
                                      std::to_string(kSubgroupCap));
    std::set<std::vector<int>> found;
    found.insert({0});
    std::vector<std::vector<int>> queue = {{0}};
    while (!queue.empty()) {
        std::vector<int> s = queue.back();
        queue.pop_back();
        std::set<int> in(s.begin(), s.end());
        for (int g = 1; g < n_; ++g) {
            if (in.count(g)) continue;
            std::vector<int> seed = s;
            seed.push_back(g);
            std::vector<int> t = closure(seed);
            if (found.insert(t).second) queue.push_back(t);
        }
    }
    subgroups_.assign(found.begin(), found.end());
    std::sort(subgroups_.begin(), subgroups_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    subgroups_ready_ = true;
    return subgroups_;
}

std::vector<int> FiniteGroup::generators_of(const std::vector<int>& subgroup_elems) const {
    std::vector<int> gens;
    std::vector<int> have = {0};
    std::set<int> target(subgroup_elems.begin(), subgroup_elems.end());
    while (have.size() < subgroup_elems.size()) {
        int next = -1;
        for (int g : subgroup_elems) {
            if (std::find(have.begin(), have.end(), g) == have.end()) {
                next = g;
                break;
            }
        }
        if (next < 0) break;
        gens.push_back(next);
        std::vector<int> seed = gens;
        have = closure(seed);
        for (int h : have)
            if (!target.count(h))
                throw std::invalid_argument("element set is not a subgroup");
    }
    return gens;
}

std::vector<std::vector<int>> FiniteGroup::left_cosets(const std::vector<int>& subgroup) const {
    std::vector<std::vector<int>> cosets;
    std::vector<bool> used(n_, false);
    for (int g = 0; g < n_; ++g) {
        if (used[g]) continue;
        std::vector<int> coset;
        for (int h : subgroup) {
            int x = mul(g, h);
            coset.push_back(x);
            used[x] = true;
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(coset);
    }
    return cosets;
}

} // namespace torjump
