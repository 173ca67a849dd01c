#include "torjump/jumps.hpp"

#include "torjump/util.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace torjump {

namespace {

std::vector<std::pair<Rational, long long>> merge_entries(
    std::vector<std::pair<Rational, long long>> in) {
    std::sort(in.begin(), in.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<std::pair<Rational, long long>> out;
    for (auto& [v, m] : in) {
        if (m == 0) continue;
        if (m < 0) throw std::invalid_argument("negative multiplicity");
        if (!(Rational(0) <= v) || !(v < Rational(1)))
            throw std::invalid_argument("jump values must lie in [0,1)");
        if (!out.empty() && out.back().first == v)
            out.back().second += m;
        else
            out.emplace_back(v, m);
    }
    return out;
}

} // namespace

JumpMultiset::JumpMultiset(std::vector<std::pair<Rational, long long>> entries)
    : entries_(merge_entries(std::move(entries))) {}

long long JumpMultiset::total_multiplicity() const {
    long long t = 0;
    for (auto& [v, m] : entries_) t = checked_add(t, m);
    return t;
}

long long JumpMultiset::multiplicity(const Rational& v) const {
    for (auto& [w, m] : entries_)
        if (w == v) return m;
    return 0;
}

JumpMultiset JumpMultiset::operator+(const JumpMultiset& o) const {
    auto e = entries_;
    e.insert(e.end(), o.entries_.begin(), o.entries_.end());
    return JumpMultiset(std::move(e));
}

JumpMultiset JumpMultiset::operator-(const JumpMultiset& o) const {
    std::map<Rational, long long> acc;
    for (auto& [v, m] : entries_) acc[v] = m;
    for (auto& [v, m] : o.entries_) {
        auto it = acc.find(v);
        if (it == acc.end() || it->second < m)
            throw inconsistency_error(
                "multiset difference infeasible: sub-jumps not contained in total");
        it->second -= m;
        if (it->second == 0) acc.erase(it);
    }
    std::vector<std::pair<Rational, long long>> e(acc.begin(), acc.end());
    return JumpMultiset(std::move(e));
}

JumpMultiset JumpMultiset::scale_mod1(long long d0) const {
    if (d0 < 1) throw std::invalid_argument("scaling factor must be positive");
    std::vector<std::pair<Rational, long long>> e;
    for (auto& [v, m] : entries_) e.emplace_back((v * Rational(d0)).mod1(), m);
    return JumpMultiset(std::move(e));
}

long long JumpMultiset::denominator_lcm() const {
    long long l = 1;
    for (auto& [v, m] : entries_) l = lcm_ll(l, v.den());
    return l;
}

Rational JumpMultiset::weighted_sum() const {
    Rational s(0);
    for (auto& [v, m] : entries_) s = s + v * Rational(m);
    return s;
}

long long DJumpMultiset::total_multiplicity() const {
    long long t = 0;
    for (auto& [r, m] : entries) t = checked_add(t, m);
    return t;
}

long long DJumpMultiset::residue_weighted_sum() const {
    long long s = 0;
    for (auto& [r, m] : entries) s = checked_add(s, checked_mul(r, m));
    return s;
}

GroupDescriptor::GroupDescriptor(Variant v) : v_(std::move(v)) {
    dim_ = std::visit(
        [](auto&& arg) -> long long {
            using T = std::decay_t<decltype(arg)>;
            if constexpr (std::is_same_v<T, InducedTorus>) {
                if (arg.e < 1 || arg.f < 1)
                    throw std::invalid_argument("induced torus needs e, f >= 1");
                return checked_mul(arg.e, arg.f);
            } else if constexpr (std::is_same_v<T, ExactSeqQuotient>) {
                long long dim = arg.total->dimension() - arg.sub->dimension();
                if (dim < 0)
                    throw std::invalid_argument("quotient dimension would be negative");
                if (!is_induced_like(*arg.sub))
                    throw std::invalid_argument(
                        "quotient rule requires an induced/invertible sub-torus");
                return dim;
            } else if constexpr (std::is_same_v<T, DirectSum>) {
                long long dim = 0;
                for (auto& p : arg.parts) dim = checked_add(dim, p->dimension());
                return dim;
            } else if constexpr (std::is_same_v<T, BaseChange>) {
                if (arg.d0 < 1) throw std::invalid_argument("base change degree >= 1");
                return arg.inner->dimension();
            } else if constexpr (std::is_same_v<T, Nu1>) {
                if (arg.r < 1) throw std::invalid_argument("nu1 needs r >= 1");
                if (arg.p < 2) throw std::invalid_argument("nu1 needs a prime p");
                long long dim = 1;
                for (long long i = 0; i < arg.r; ++i) dim = checked_mul(dim, arg.p);
                return dim - 1;
            } else if constexpr (std::is_same_v<T, AbelianTotallyMultiplicative>) {
                if (!is_torus(*arg.uniformizing_torus))
                    throw std::invalid_argument("uniformizing descriptor must be a torus");
                return arg.uniformizing_torus->dimension();
            } else {
                static_assert(std::is_same_v<T, ExplicitProfile>);
                return arg.jumps.total_multiplicity();
            }
        },
        v_);
}

DescriptorPtr GroupDescriptor::induced(long long e, long long f) {
    return std::make_shared<GroupDescriptor>(Variant(InducedTorus{e, f}));
}
DescriptorPtr GroupDescriptor::quotient(DescriptorPtr sub, DescriptorPtr total) {
    return std::make_shared<GroupDescriptor>(
        Variant(ExactSeqQuotient{std::move(sub), std::move(total)}));
}
DescriptorPtr GroupDescriptor::direct_sum(std::vector<DescriptorPtr> parts) {
    return std::make_shared<GroupDescriptor>(Variant(DirectSum{std::move(parts)}));
}
DescriptorPtr GroupDescriptor::base_change(DescriptorPtr inner, long long d0) {
    return std::make_shared<GroupDescriptor>(Variant(BaseChange{std::move(inner), d0}));
}
DescriptorPtr GroupDescriptor::nu1(long long r, long long p) {
    return std::make_shared<GroupDescriptor>(Variant(Nu1{r, p}));
}
DescriptorPtr GroupDescriptor::abelian(DescriptorPtr t) {
    return std::make_shared<GroupDescriptor>(
        Variant(AbelianTotallyMultiplicative{std::move(t)}));
}
DescriptorPtr GroupDescriptor::explicit_profile(JumpMultiset jumps,
                                                FiltrationProfile profile) {
    // validate the profile against the jumps
    auto& rows = profile.rows;
    auto& je = jumps.entries();
    if (rows.size() != je.size())
        throw std::invalid_argument("profile must have one row per distinct jump");
    long long dim = jumps.total_multiplicity();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!(rows[i].jump == je[i].first))
            throw std::invalid_argument("profile jumps must match the jump multiset");
        if (rows[i].fplus < rows[i].fzero || rows[i].fzero < rows[i].fminus)
            throw std::invalid_argument("profile must satisfy f+ >= f0 >= f-");
        if (rows[i].fplus - rows[i].fminus != je[i].second)
            throw std::invalid_argument("profile drop must equal the jump multiplicity");
        if (rows[i].fplus > dim)
            throw std::invalid_argument("profile dimension exceeds group dimension");
        if (i > 0 && rows[i].fplus != rows[i - 1].fminus)
            throw std::invalid_argument("profile rows must chain: f+(i) = f-(i-1)");
    }
    return std::make_shared<GroupDescriptor>(
        Variant(ExplicitProfile{std::move(jumps), std::move(profile)}));
}

bool is_torus(const GroupDescriptor& g) {
    return std::visit(
        [](auto&& arg) -> bool {
            using T = std::decay_t<decltype(arg)>;
            if constexpr (std::is_same_v<T, InducedTorus>) return true;
            else if constexpr (std::is_same_v<T, ExactSeqQuotient>)
                return is_torus(*arg.sub) && is_torus(*arg.total);
            else if constexpr (std::is_same_v<T, DirectSum>) {
                for (auto& p : arg.parts)
                    if (!is_torus(*p)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, BaseChange>)
                return is_torus(*arg.inner);
            else
                return false;
        },
        g.variant());
}

bool is_induced_like(const GroupDescriptor& g) {
    return std::visit(
        [](auto&& arg) -> bool {
            using T = std::decay_t<decltype(arg)>;
            if constexpr (std::is_same_v<T, InducedTorus>) return true;
            else if constexpr (std::is_same_v<T, DirectSum>) {
                for (auto& p : arg.parts)
                    if (!is_induced_like(*p)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, BaseChange>)
                return is_induced_like(*arg.inner);
            else
                return false;
        },
        g.variant());
}

JumpMultiset jumps_of(const GroupDescriptor& g) {
    return std::visit(
        [&](auto&& arg) -> JumpMultiset {
            using T = std::decay_t<decltype(arg)>;
            if constexpr (std::is_same_v<T, InducedTorus>) {
                std::vector<std::pair<Rational, long long>> e;
                for (long long i = 0; i < arg.e; ++i)
                    e.emplace_back(Rational(i, arg.e), arg.f);
                return JumpMultiset(std::move(e));
            } else if constexpr (std::is_same_v<T, ExactSeqQuotient>) {
                return jumps_of(*arg.total) - jumps_of(*arg.sub);
            } else if constexpr (std::is_same_v<T, DirectSum>) {
                JumpMultiset s;
                for (auto& p : arg.parts) s = s + jumps_of(*p);
                return s;
            } else if constexpr (std::is_same_v<T, BaseChange>) {
                return jumps_of(*arg.inner).scale_mod1(arg.d0);
            } else if constexpr (std::is_same_v<T, Nu1>) {
                std::vector<std::pair<Rational, long long>> e;
                long long m = 1;
                for (long long i = 1; i < arg.r; ++i) m = checked_mul(m, arg.p);
                if (m > 1) e.emplace_back(Rational(0), m - 1);
                for (long long i = 1; i < arg.p; ++i)
                    e.emplace_back(Rational(i, arg.p), m);
                return JumpMultiset(std::move(e));
            } else if constexpr (std::is_same_v<T, AbelianTotallyMultiplicative>) {
                return jumps_of(*arg.uniformizing_torus);
            } else {
                static_assert(std::is_same_v<T, ExplicitProfile>);
                return arg.jumps;
            }
        },
        g.variant());
}

FiltrationProfile profile_of(const GroupDescriptor& g) {
    if (auto* ep = std::get_if<ExplicitProfile>(&g.variant())) return ep->profile;
    // built-in families are left-continuous: f0 = f+ at every jump
    FiltrationProfile p;
    auto jumps = jumps_of(g);
    long long above = jumps.total_multiplicity();
    for (auto& [v, m] : jumps.entries()) {
        FiltrationProfile::Row row;
        row.jump = v;
        row.fplus = above;
        row.fzero = above;
        row.fminus = above - m;
        above = row.fminus;
        p.rows.push_back(row);
    }
    return p;
}

long long threshold_N(const GroupDescriptor& g) {
    auto jumps = jumps_of(g);
    auto& e = jumps.entries();
    if (e.size() < 2) return 0;
    Rational min_gap = e[1].first - e[0].first;
    for (size_t i = 2; i < e.size(); ++i) {
        Rational gap = e[i].first - e[i - 1].first;
        if (gap < min_gap) min_gap = gap;
    }
    // ceil(1/gap) for gap = a/b is ceil(b/a)
    return ceil_div(min_gap.den(), min_gap.num());
}

long long jump_denominator(const GroupDescriptor& g) {
    return jumps_of(g).denominator_lcm();
}

DJumpMultiset read_off_d_jumps(const FiltrationProfile& profile, long long d) {
    DJumpMultiset out;
    out.modulus = d;
    std::map<long long, long long> acc;
    for (auto& row : profile.rows) {
        Rational dj = row.jump * Rational(d);
        long long fl = dj.floor();
        long long s, sp;
        if (dj.is_integer()) {
            s = row.fplus - row.fzero;
            sp = row.fzero - row.fminus;
        } else {
            s = 0;
            sp = row.fplus - row.fminus;
        }
        if (s > 0) acc[fl - 1] += s;
        if (sp > 0) acc[fl] += sp;
    }
    for (auto& [r, m] : acc) {
        if (r < 0 || r >= d)
            throw inconsistency_error("read-off produced a residue outside [0,d)");
        out.entries.emplace_back(r, m);
    }
    return out;
}

DJumpMultiset d_jumps_of(const GroupDescriptor& g, long long d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (d == 1) {
        DJumpMultiset out;
        out.modulus = 1;
        if (g.dimension() > 0) out.entries.emplace_back(0, g.dimension());
        return out;
    }
    return std::visit(
        [&](auto&& arg) -> DJumpMultiset {
            using T = std::decay_t<decltype(arg)>;
            if constexpr (std::is_same_v<T, InducedTorus> || std::is_same_v<T, Nu1>) {
                // the floor law holds at every d coprime to p for these
                // families (uniformizer rescaling); it reduces to the closed
                // formulas i(d-1)/e resp. i(d-1)/p when d ≡ 1 there
                if constexpr (std::is_same_v<T, Nu1>) {
                    if (d % arg.p == 0)
                        throw std::invalid_argument("d must be coprime to p for nu1");
                }
                return read_off_d_jumps(profile_of(g), d);
            } else if constexpr (std::is_same_v<T, ExactSeqQuotient>) {
                DJumpMultiset tot = d_jumps_of(*arg.total, d);
                DJumpMultiset sub = d_jumps_of(*arg.sub, d);
                std::map<long long, long long> acc;
                for (auto& [r, m] : tot.entries) acc[r] = m;
                for (auto& [r, m] : sub.entries) {
                    auto it = acc.find(r);
                    if (it == acc.end() || it->second < m)
                        throw inconsistency_error(
                            "d-jump difference infeasible for the claimed exact sequence");
                    it->second -= m;
                    if (it->second == 0) acc.erase(it);
                }
                DJumpMultiset out;
                out.modulus = d;
                for (auto& [r, m] : acc) out.entries.emplace_back(r, m);
                return out;
            } else if constexpr (std::is_same_v<T, DirectSum>) {
                std::map<long long, long long> acc;
                for (auto& p : arg.parts)
                    for (auto& [r, m] : d_jumps_of(*p, d).entries) acc[r] += m;
                DJumpMultiset out;
                out.modulus = d;
                for (auto& [r, m] : acc) out.entries.emplace_back(r, m);
                return out;
            } else if constexpr (std::is_same_v<T, BaseChange>) {
                // J_d(G(d0)) is the image of J_{d*d0}(G) under Z/dd0 -> Z/d
                DJumpMultiset big = d_jumps_of(*arg.inner, checked_mul(d, arg.d0));
                std::map<long long, long long> acc;
                for (auto& [r, m] : big.entries) acc[r % d] += m;
                DJumpMultiset out;
                out.modulus = d;
                for (auto& [r, m] : acc) out.entries.emplace_back(r, m);
                return out;
            } else if constexpr (std::is_same_v<T, AbelianTotallyMultiplicative>) {
                return d_jumps_of(*arg.uniformizing_torus, d);
            } else {
                static_assert(std::is_same_v<T, ExplicitProfile>);
                long long n = threshold_N(g);
                if (d <= n)
                    throw below_threshold_error(
                        "d = " + std::to_string(d) + " is not above the threshold N = " +
                        std::to_string(n) + " and no closed formula applies");
                return read_off_d_jumps(arg.profile, d);
            }
        },
        g.variant());
}

long long ord(const GroupDescriptor& g, long long d) {
    return d_jumps_of(g, d).residue_weighted_sum();
}

Rational c_tame(const GroupDescriptor& g) { return jumps_of(g).weighted_sum(); }

bool check_ord_recurrence(const GroupDescriptor& g, long long d, long long q) {
    long long n = threshold_N(g);
    if (d <= n)
        throw below_threshold_error("recurrence requires d > N = " + std::to_string(n));
    if (q < 1) throw std::invalid_argument("q must be positive");
    long long e = jump_denominator(g);
    long long lhs = ord(g, checked_add(d, checked_mul(q, e)));
    Rational rhs = Rational(ord(g, d)) + Rational(q) * Rational(e) * c_tame(g);
    if (!rhs.is_integer())
        throw std::logic_error("q*e(G)*c_tame(G) must be an integer");
    return lhs == rhs.num();
}

long long multiplicity_of_zero(const GroupDescriptor& g) {
    if (!is_torus(g))
        throw unsupported_input_error("multiplicity_of_zero is torus-only");
    long long from_jumps = jumps_of(g).multiplicity(Rational(0));
    // per-variant bookkeeping of the invariant rank, asserted to agree
    std::function<long long(const GroupDescriptor&)> book =
        [&](const GroupDescriptor& h) -> long long {
        return std::visit(
            [&](auto&& arg) -> long long {
                using T = std::decay_t<decltype(arg)>;
                if constexpr (std::is_same_v<T, InducedTorus>) return arg.f;
                else if constexpr (std::is_same_v<T, ExactSeqQuotient>)
                    return book(*arg.total) - book(*arg.sub);
                else if constexpr (std::is_same_v<T, DirectSum>) {
                    long long s = 0;
                    for (auto& p : arg.parts) s += book(*p);
                    return s;
                } else if constexpr (std::is_same_v<T, BaseChange>) {
                    long long s = 0;
                    for (auto& [v, m] : jumps_of(*arg.inner).entries())
                        if ((v * Rational(arg.d0)).is_integer()) s += m;
                    return s;
                } else {
                    throw unsupported_input_error("multiplicity_of_zero is torus-only");
                }
            },
            h.variant());
    };
    long long recorded = book(g);
    if (recorded != from_jumps)
        throw std::logic_error("zero-multiplicity bookkeeping disagrees with the jumps");
    return from_jumps;
}

bool check_ctame_additivity(const GroupDescriptor& sub, const GroupDescriptor& total,
                            const GroupDescriptor& quotient) {
    return c_tame(total) == c_tame(sub) + c_tame(quotient);
}

bool check_ctame_additivity(const GroupDescriptor& sub, const GroupDescriptor& total) {
    // derive the quotient when the exactness hypothesis allows it; a failed
    // derivation means the claimed exact sequence cannot satisfy the
    // additivity statement, which the checker reports as false, not an error
    try {
        auto subp = std::make_shared<GroupDescriptor>(sub);
        auto totp = std::make_shared<GroupDescriptor>(total);
        auto q = GroupDescriptor::quotient(subp, totp);
        return check_ctame_additivity(sub, total, *q);
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace torjump
