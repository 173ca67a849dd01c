#include "torjump/trunc_series.hpp"

#include "torjump/util.hpp"

#include <sstream>

namespace torjump {

namespace {
long long add_prec(long long p, long long v) {
    // precision/valuation addition with the exact-zero sentinel saturating
    if (p >= TruncSeries::kExactZero || v >= TruncSeries::kExactZero)
        return TruncSeries::kExactZero;
    return p + v;
}
} // namespace

TruncSeries TruncSeries::monomial(FqFieldPtr field, long long denom, long long e,
                                  std::uint32_t c, long long prec) {
    TruncSeries s(std::move(field), denom, prec);
    s.set_coeff(e, c);
    return s;
}

void TruncSeries::set_coeff(long long e, std::uint32_t c) {
    if (e < 0) throw std::invalid_argument("negative exponent in TruncSeries");
    if (e >= prec_ || c == 0)
        return;
    coeffs_[e] = c;
}

void TruncSeries::drop_beyond_precision() {
    auto it = coeffs_.lower_bound(prec_);
    coeffs_.erase(it, coeffs_.end());
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    if (!same_ring(o)) throw std::invalid_argument("mismatched series denominators");
    TruncSeries r(field_, denom_, std::min(prec_, o.prec_));
    r.coeffs_ = coeffs_;
    for (auto& [e, c] : o.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end()) {
            r.coeffs_.emplace(e, c);
        } else {
            std::uint32_t s = field_->add(it->second, c);
            if (s == 0)
                r.coeffs_.erase(it);
            else
                it->second = s;
        }
    }
    r.drop_beyond_precision();
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(field_, denom_, prec_);
    for (auto& [e, c] : coeffs_) r.coeffs_.emplace(e, field_->neg(c));
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    if (!same_ring(o)) throw std::invalid_argument("mismatched series denominators");
    // precision(a*b) = min(prec(a)+val(b), prec(b)+val(a)); an invisible
    // factor contributes val >= its own precision, an exact zero val = +inf
    long long va = val().value_or(std::min(prec_, kExactZero));
    long long vb = o.val().value_or(std::min(o.prec_, kExactZero));
    long long prec = std::min(add_prec(prec_, vb), add_prec(o.prec_, va));
    TruncSeries r(field_, denom_, prec);
    for (auto& [ea, ca] : coeffs_) {
        if (ea >= prec) break;
        for (auto& [eb, cb] : o.coeffs_) {
            long long e = ea + eb;
            if (e >= prec) break;
            std::uint32_t prod = field_->mul(ca, cb);
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end()) {
                if (prod) r.coeffs_.emplace(e, prod);
            } else {
                std::uint32_t s = field_->add(it->second, prod);
                if (s == 0)
                    r.coeffs_.erase(it);
                else
                    it->second = s;
            }
        }
    }
    return r;
}

TruncSeries TruncSeries::scalar_mul(std::uint32_t c) const {
    if (c == 0) return zero(field_, denom_);
    TruncSeries r(field_, denom_, prec_);
    for (auto& [e, a] : coeffs_) {
        std::uint32_t v = field_->mul(a, c);
        if (v) r.coeffs_.emplace(e, v);
    }
    return r;
}

TruncSeries TruncSeries::shift(long long k) const {
    long long prec = prec_ >= kExactZero ? kExactZero : prec_ + k;
    TruncSeries r(field_, denom_, prec);
    for (auto& [e, c] : coeffs_) {
        if (e + k < 0) throw std::invalid_argument("shift below exponent zero");
        r.coeffs_.emplace(e + k, c);
    }
    return r;
}

TruncSeries TruncSeries::unit_inverse() const {
    auto v = val();
    if (!v || *v != 0) throw std::invalid_argument("unit_inverse needs valuation 0");
    std::uint32_t c0 = coeffs_.begin()->second;
    std::uint32_t c0i = field_->inv(c0);
    // u = c0(1 + h) with val(h) > 0: u^-1 = c0^-1(1 - h + h^2 - ...) and the
    // geometric tail terminates once h^k falls beyond the precision
    TruncSeries h = scalar_mul(c0i);
    h.coeffs_.erase(0);
    TruncSeries acc(field_, denom_, prec_);
    acc.set_coeff(0, 1);
    if (!h.coeffs_.empty()) {
        TruncSeries term(field_, denom_, prec_);
        term.set_coeff(0, 1);
        long long hv = *h.val();
        long long steps = hv > 0 ? prec_ / hv + 1 : 0;
        for (long long i = 1; i <= steps; ++i) {
            term = term * h;
            if (term.coeffs_.empty()) break;
            acc = (i % 2) ? acc - term : acc + term;
        }
    }
    return acc.scalar_mul(c0i);
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (e != 0) {
            os << "*t^(" << e << "/" << denom_ << ")";
        }
    }
    if (first) os << "0";
    if (prec_ < kExactZero)
        os << " + O(t^(" << prec_ << "/" << denom_ << "))";
    return os.str();
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

} // namespace torjump
