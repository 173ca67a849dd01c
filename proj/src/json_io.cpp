#include "torjump/json_io.hpp"

#include "torjump/util.hpp"

#include <sstream>

namespace torjump {

using nlohmann::json;

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

json jump_multiset_to_json(const JumpMultiset& m) {
    json arr = json::array();
    for (auto& [v, mult] : m.entries())
        arr.push_back({{"value", v.str()}, {"mult", mult}});
    return arr;
}

json d_jump_multiset_to_json(const DJumpMultiset& m) {
    json out;
    out["modulus"] = m.modulus;
    json arr = json::array();
    for (auto& [r, mult] : m.entries) arr.push_back({{"residue", r}, {"mult", mult}});
    out["entries"] = arr;
    return out;
}

json descriptor_to_json(const GroupDescriptor& g) {
    return std::visit(
        [](auto&& arg) -> json {
            using T = std::decay_t<decltype(arg)>;
            if constexpr (std::is_same_v<T, InducedTorus>)
                return {{"type", "induced"}, {"e", arg.e}, {"f", arg.f}};
            else if constexpr (std::is_same_v<T, ExactSeqQuotient>)
                return {{"type", "quotient"},
                        {"sub", descriptor_to_json(*arg.sub)},
                        {"total", descriptor_to_json(*arg.total)}};
            else if constexpr (std::is_same_v<T, DirectSum>) {
                json parts = json::array();
                for (auto& p : arg.parts) parts.push_back(descriptor_to_json(*p));
                return {{"type", "sum"}, {"parts", parts}};
            } else if constexpr (std::is_same_v<T, BaseChange>)
                return {{"type", "base_change"},
                        {"inner", descriptor_to_json(*arg.inner)},
                        {"d0", arg.d0}};
            else if constexpr (std::is_same_v<T, Nu1>)
                return {{"type", "nu1"}, {"r", arg.r}, {"p", arg.p}};
            else if constexpr (std::is_same_v<T, AbelianTotallyMultiplicative>)
                return {{"type", "abelian"},
                        {"torus", descriptor_to_json(*arg.uniformizing_torus)}};
            else {
                static_assert(std::is_same_v<T, ExplicitProfile>);
                json jumps = json::array();
                for (auto& [v, m] : arg.jumps.entries())
                    jumps.push_back({{"value", v.str()}, {"mult", m}});
                json prof = json::array();
                for (auto& row : arg.profile.rows)
                    prof.push_back({{"fplus", row.fplus},
                                    {"fzero", row.fzero},
                                    {"fminus", row.fminus}});
                return {{"type", "profile"}, {"jumps", jumps}, {"profile", prof}};
            }
        },
        g.variant());
}

DescriptorPtr descriptor_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "induced")
        return GroupDescriptor::induced(j.at("e").get<long long>(),
                                        j.at("f").get<long long>());
    if (type == "quotient")
        return GroupDescriptor::quotient(descriptor_from_json(j.at("sub")),
                                         descriptor_from_json(j.at("total")));
    if (type == "sum") {
        std::vector<DescriptorPtr> parts;
        for (auto& p : j.at("parts")) parts.push_back(descriptor_from_json(p));
        return GroupDescriptor::direct_sum(std::move(parts));
    }
    if (type == "base_change")
        return GroupDescriptor::base_change(descriptor_from_json(j.at("inner")),
                                            j.at("d0").get<long long>());
    if (type == "nu1")
        return GroupDescriptor::nu1(j.at("r").get<long long>(), j.at("p").get<long long>());
    if (type == "abelian")
        return GroupDescriptor::abelian(descriptor_from_json(j.at("torus")));
    if (type == "profile") {
        std::vector<std::pair<Rational, long long>> entries;
        for (auto& e : j.at("jumps"))
            entries.emplace_back(rational_from_string(e.at("value").get<std::string>()),
                                 e.at("mult").get<long long>());
        JumpMultiset jumps(entries);
        FiltrationProfile prof;
        size_t i = 0;
        for (auto& r : j.at("profile")) {
            FiltrationProfile::Row row;
            if (i >= jumps.entries().size())
                throw std::invalid_argument("more profile rows than jumps");
            row.jump = jumps.entries()[i].first;
            row.fplus = r.at("fplus").get<long long>();
            row.fzero = r.at("fzero").get<long long>();
            row.fminus = r.at("fminus").get<long long>();
            prof.rows.push_back(row);
            ++i;
        }
        return GroupDescriptor::explicit_profile(std::move(jumps), std::move(prof));
    }
    throw std::invalid_argument("unknown descriptor type: " + type);
}

GroupPtr group_from_json(const json& j) {
    if (j.contains("named")) {
        std::string n = j.at("named").get<std::string>();
        auto make = [&]() -> FiniteGroup {
            if (n.size() > 1 && n[0] == 'c' && n.find('x') == std::string::npos)
                return FiniteGroup::cyclic(std::stoi(n.substr(1)));
            if (n.size() > 1 && n[0] == 'd')
                return FiniteGroup::dihedral(std::stoi(n.substr(1)));
            if (n == "q8") return FiniteGroup::dicyclic(2);
            if (n == "dic3") return FiniteGroup::dicyclic(3);
            if (n == "a4") return FiniteGroup::alternating4();
            if (n == "s3") return FiniteGroup::dihedral(3);
            // products like "c2xc2" or "c2xc2xc2"
            if (n.find('x') != std::string::npos) {
                std::stringstream ss(n);
                std::string part;
                FiniteGroup acc = FiniteGroup::cyclic(1);
                while (std::getline(ss, part, 'x')) {
                    if (part.empty() || part[0] != 'c')
                        throw std::invalid_argument("unknown named group: " + n);
                    acc = FiniteGroup::product(acc, FiniteGroup::cyclic(std::stoi(part.substr(1))));
                }
                return acc;
            }
            throw std::invalid_argument("unknown named group: " + n);
        };
        return std::make_shared<const FiniteGroup>(make());
    }
    if (j.contains("mul")) {
        std::vector<std::vector<int>> t;
        for (auto& row : j.at("mul")) t.push_back(row.get<std::vector<int>>());
        return std::make_shared<const FiniteGroup>(FiniteGroup(std::move(t)));
    }
    if (j.contains("perm_generators")) {
        int npoints = j.at("points").get<int>();
        std::vector<std::vector<int>> gens;
        for (auto& g : j.at("perm_generators")) gens.push_back(g.get<std::vector<int>>());
        return std::make_shared<const FiniteGroup>(
            FiniteGroup::from_permutations(npoints, gens));
    }
    throw std::invalid_argument("group JSON needs \"named\", \"mul\" or \"perm_generators\"");
}

GLattice lattice_from_json(GroupPtr group, const json& j) {
    if (j.contains("named")) {
        std::string n = j.at("named").get<std::string>();
        if (n == "trivial")
            return GLattice::trivial(group, j.value("rank", 1));
        if (n == "regular") return GLattice::regular(group);
        if (n == "augmentation") return GLattice::augmentation_kernel(group);
        if (n == "coset") {
            int idx = j.at("subgroup").get<int>();
            auto& subs = group->subgroups();
            if (idx < 0 || idx >= (int)subs.size())
                throw std::invalid_argument("subgroup index out of range");
            return GLattice::coset_permutation(group, subs[idx]);
        }
        throw std::invalid_argument("unknown named lattice: " + n);
    }
    int rank = j.at("rank").get<int>();
    std::vector<std::pair<int, IMat>> gens;
    for (auto& g : j.at("generators")) {
        int elem = g.at("element").get<int>();
        auto rows = g.at("matrix");
        IMat m(rank, rank);
        int r = 0;
        for (auto& row : rows) {
            int c = 0;
            for (auto& v : row) m.at(r, c++) = v.get<long long>();
            ++r;
        }
        gens.emplace_back(elem, m);
    }
    return GLattice::from_generators(std::move(group), gens);
}

json rational_series_to_json(const RationalSeries& s) {
    json out;
    json prefix = json::array();
    for (auto& [e, c] : s.prefix)
        prefix.push_back({{"exponent", e}, {"coeff", c.coeffs()}});
    json tails = json::array();
    for (auto& t : s.tails)
        tails.push_back({{"coeff", t.coeff.coeffs()},
                         {"alpha", t.alpha},
                         {"A", t.A},
                         {"B", t.B},
                         {"den_power", t.den_power}});
    out["prefix"] = prefix;
    out["tails"] = tails;
    return out;
}

ZetaInput zeta_input_from_json(const json& j) {
    std::string variant = j.value("variant", std::string("torus"));
    long long p = j.at("p").get<long long>();
    long long delta = j.value("delta", 1ll);
    auto read_table = [&](const char* key) {
        std::map<long long, long long> t;
        if (j.contains(key))
            for (auto& [k, v] : j.at(key).items())
                t[std::stoll(k)] = v.get<long long>();
        return t;
    };
    DescriptorPtr desc = descriptor_from_json(j.at("descriptor"));
    if (variant == "torus")
        return make_torus_input(desc, p, delta, read_table("t"), read_table("phi"));
    if (variant == "abelian") {
        DescriptorPtr torus = desc;
        if (auto* ab = std::get_if<AbelianTotallyMultiplicative>(&desc->variant()))
            torus = ab->uniformizing_torus;
        return make_abelian_input(torus, p, delta, read_table("t"), read_table("seeds"));
    }
    throw std::invalid_argument("unknown zeta variant: " + variant);
}

} // namespace torjump
