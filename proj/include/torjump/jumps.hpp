#pragma once

#include "torjump/rational.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace torjump {

// Finite multiset of rationals in [0,1) with positive multiplicities; the
// central invariant.
class JumpMultiset {
public:
    JumpMultiset() = default;
    explicit JumpMultiset(std::vector<std::pair<Rational, long long>> entries);

    const std::vector<std::pair<Rational, long long>>& entries() const { return entries_; }
    long long total_multiplicity() const;
    long long multiplicity(const Rational& v) const;

    JumpMultiset operator+(const JumpMultiset& o) const; // multiset sum ⊎
    // multiset difference; throws inconsistency_error unless o ⊆ *this
    JumpMultiset operator-(const JumpMultiset& o) const;
    // {d0*j mod 1} with multiplicities
    JumpMultiset scale_mod1(long long d0) const;

    bool operator==(const JumpMultiset& o) const { return entries_ == o.entries_; }

    // lcm of jump denominators: the smallest e with e*j integral for all j
    long long denominator_lcm() const;
    // multiplicity-weighted sum of the jumps
    Rational weighted_sum() const;

private:
    std::vector<std::pair<Rational, long long>> entries_; // sorted, distinct values
};

// d-jump multiset: residues mod d in {0,...,d-1}.
struct DJumpMultiset {
    long long modulus = 1;
    std::vector<std::pair<long long, long long>> entries; // sorted, distinct residues

    long long total_multiplicity() const;
    long long residue_weighted_sum() const;
    bool operator==(const DJumpMultiset& o) const {
        return modulus == o.modulus && entries == o.entries;
    }
};

// Filtration dimensions at each distinct jump: (f+, f0, f-) = dims of the
// filtration strictly before, at, and strictly after the jump.
struct FiltrationProfile {
    struct Row {
        Rational jump;
        long long fplus, fzero, fminus;
    };
    std::vector<Row> rows; // sorted by jump
};

class GroupDescriptor;
using DescriptorPtr = std::shared_ptr<const GroupDescriptor>;

struct InducedTorus {
    long long e, f;
};
struct ExactSeqQuotient {
    DescriptorPtr sub, total;
};
struct DirectSum {
    std::vector<DescriptorPtr> parts;
};
struct BaseChange {
    DescriptorPtr inner;
    long long d0;
};
struct Nu1 {
    long long r, p;
};
struct AbelianTotallyMultiplicative {
    DescriptorPtr uniformizing_torus;
};
// user-supplied jumps with an explicit filtration profile
struct ExplicitProfile {
    JumpMultiset jumps;
    FiltrationProfile profile;
};

class GroupDescriptor {
public:
    using Variant = std::variant<InducedTorus, ExactSeqQuotient, DirectSum, BaseChange,
                                 Nu1, AbelianTotallyMultiplicative, ExplicitProfile>;

    explicit GroupDescriptor(Variant v);

    static DescriptorPtr induced(long long e, long long f);
    static DescriptorPtr quotient(DescriptorPtr sub, DescriptorPtr total);
    static DescriptorPtr direct_sum(std::vector<DescriptorPtr> parts);
    static DescriptorPtr base_change(DescriptorPtr inner, long long d0);
    static DescriptorPtr nu1(long long r, long long p);
    static DescriptorPtr abelian(DescriptorPtr uniformizing_torus);
    static DescriptorPtr explicit_profile(JumpMultiset jumps, FiltrationProfile profile);

    const Variant& variant() const { return v_; }
    long long dimension() const { return dim_; }

private:
    Variant v_;
    long long dim_;
};

// True for torus descriptors (induced tori and sums/quotients/base changes
// built from them).
bool is_torus(const GroupDescriptor& g);
// Gate for the quotient rule: the sub must be a declared induced/invertible
// torus (induced, or a sum/base change of such).
bool is_induced_like(const GroupDescriptor& g);

JumpMultiset jumps_of(const GroupDescriptor& g);
FiltrationProfile profile_of(const GroupDescriptor& g);

// ceil(1 / min gap between distinct jumps); 0 when there are fewer than two
// distinct jumps
long long threshold_N(const GroupDescriptor& g);
// smallest e with e*j integral for every jump
long long jump_denominator(const GroupDescriptor& g);

DJumpMultiset d_jumps_of(const GroupDescriptor& g, long long d);
// the d-jump read-off from a jump multiset and profile, valid for d > N
DJumpMultiset read_off_d_jumps(const FiltrationProfile& profile, long long d);

long long ord(const GroupDescriptor& g, long long d);
Rational c_tame(const GroupDescriptor& g);

bool check_ord_recurrence(const GroupDescriptor& g, long long d, long long q);

long long multiplicity_of_zero(const GroupDescriptor& g);

bool check_ctame_additivity(const GroupDescriptor& sub, const GroupDescriptor& total);
bool check_ctame_additivity(const GroupDescriptor& sub, const GroupDescriptor& total,
                            const GroupDescriptor& quotient);

} // namespace torjump
