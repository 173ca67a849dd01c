#include "torjump/fq.hpp"

#include "torjump/util.hpp"

#include <algorithm>
#include <stdexcept>

namespace torjump {

namespace {

std::uint64_t powu(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// polynomial helpers over F_p, coefficient vectors little-endian
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (std::uint32_t)(((std::uint64_t)a[i] * b[j] + r[i + j]) % p);
    }
    // reduce mod the monic modulus
    size_t s = mod.size() - 1;
    for (size_t i = r.size(); i-- > s;) {
        std::uint32_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (size_t j = 0; j < s; ++j) {
            std::uint64_t sub = (std::uint64_t)c * mod[j] % p;
            std::uint64_t cur = r[i - s + j];
            r[i - s + j] = (std::uint32_t)((cur + p - sub) % p);
        }
    }
    r.resize(s);
    trim(r);
    return r;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
    Poly r = {1};
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    auto inv_mod_p = [&](std::uint32_t x) {
        return (std::uint32_t)powmod(x, p - 2, p);
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint32_t lead_inv = inv_mod_p(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint32_t c = (std::uint32_t)((std::uint64_t)a.back() * lead_inv % p);
            size_t off = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) {
                std::uint64_t sub = (std::uint64_t)c * b[j] % p;
                a[off + j] = (std::uint32_t)((a[off + j] + p - sub) % p);
            }
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool poly_irreducible(const Poly& f, std::uint32_t p) {
    // f monic of degree s over F_p: irreducible iff x^(p^s) ≡ x (mod f)
    // and gcd(x^(p^(s/r)) - x, f) = 1 for every prime r | s
    std::uint32_t s = (std::uint32_t)f.size() - 1;
    Poly x = {0, 1};
    Poly xq = poly_pow_mod(x, powu(p, s), f, p);
    Poly diff = xq;
    // diff -= x
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (std::uint32_t r = 2; r <= s; ++r) {
        if (s % r) continue;
        bool rp = true;
        for (std::uint32_t t = 2; t * t <= r; ++t)
            if (r % t == 0) { rp = false; break; }
        if (!rp) continue;
        Poly xe = poly_pow_mod(x, powu(p, s / r), f, p);
        Poly d = xe;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        Poly g = poly_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> factor_u32(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t smallest_prime_1_mod(std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    for (std::uint64_t q = m + 1;; q += m) {
        if (q >= (1ull << 31))
            throw unsupported_input_error("no prime q < 2^31 with q ≡ 1 mod " +
                                          std::to_string(m) + " found");
        if (is_prime_u32((std::uint32_t)q)) return (std::uint32_t)q;
    }
}

FqField::FqField(std::uint32_t p, std::uint32_t s) : p_(p), s_(s) {
    if (!is_prime_u32(p)) throw std::invalid_argument("p must be prime");
    if (s == 0) throw std::invalid_argument("s must be positive");
    std::uint64_t q = powu(p, s);
    if (q >= (1ull << 31))
        throw std::invalid_argument("q = p^s exceeds the 2^31 desk-scale cap");
    q_ = (std::uint32_t)q;
    if (s == 1) {
        modulus_ = {0, 1}; // x, unused
        return;
    }
    // deterministic search for a monic irreducible of degree s: enumerate
    // the non-leading coefficient vectors in lexicographic order
    std::vector<std::uint32_t> coeffs(s, 0);
    for (std::uint64_t code = 0; code < powu(p, s); ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < s; ++i) {
            coeffs[i] = (std::uint32_t)(c % p);
            c /= p;
        }
        Poly f = coeffs;
        f.push_back(1);
        if (f[0] == 0) continue; // reducible: x | f
        if (poly_irreducible(f, p)) {
            modulus_ = f;
            return;
        }
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

std::vector<std::uint32_t> FqField::decode(std::uint32_t a) const {
    std::vector<std::uint32_t> d(s_);
    for (std::uint32_t i = 0; i < s_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

std::uint32_t FqField::encode(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t a = 0;
    for (std::uint32_t i = s_; i-- > 0;) a = a * p_ + (i < digits.size() ? digits[i] : 0);
    return (std::uint32_t)a;
}

std::uint32_t FqField::add(std::uint32_t a, std::uint32_t b) const {
    if (s_ == 1) {
        std::uint64_t r = (std::uint64_t)a + b;
        if (r >= p_) r -= p_;
        return (std::uint32_t)r;
    }
    auto da = decode(a), db = decode(b);
    for (std::uint32_t i = 0; i < s_; ++i) {
        da[i] += db[i];
        if (da[i] >= p_) da[i] -= p_;
    }
    return encode(da);
}

std::uint32_t FqField::sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
}

std::uint32_t FqField::neg(std::uint32_t a) const {
    if (s_ == 1) return a ? p_ - a : 0;
    auto da = decode(a);
    for (auto& c : da) c = c ? p_ - c : 0;
    return encode(da);
}

std::uint32_t FqField::mul(std::uint32_t a, std::uint32_t b) const {
    if (s_ == 1) return (std::uint32_t)((std::uint64_t)a * b % p_);
    auto da = decode(a), db = decode(b);
    Poly pa(da.begin(), da.end()), pb(db.begin(), db.end());
    trim(pa);
    trim(pb);
    Poly r = poly_mul_mod(pa, pb, modulus_, p_);
    r.resize(s_, 0);
    return encode(r);
}

std::uint32_t FqField::pow(std::uint32_t a, unsigned long long e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t FqField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    return pow(a, (unsigned long long)q_ - 2);
}

std::uint32_t FqField::root_of_unity(std::uint32_t n) const {
    if (n == 0 || (q_ - 1) % n != 0)
        throw unsupported_input_error("F_q lacks a primitive " + std::to_string(n) +
                                      "-th root of unity (q = " + std::to_string(q_) + ")");
    if (generator_ == 0) {
        auto fs = factor_u32(q_ - 1);
        for (std::uint32_t g = 2; g < q_; ++g) {
            bool ok = true;
            for (auto f : fs)
                if (pow(g, (q_ - 1) / f) == 1) { ok = false; break; }
            if (ok) {
                generator_ = g;
                break;
            }
        }
        if (generator_ == 0) throw std::logic_error("no generator found");
    }
    return pow(generator_, (q_ - 1) / n);
}

} // namespace torjump
