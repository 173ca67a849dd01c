#include "torjump/intmat.hpp"

#include "torjump/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace torjump {

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::operator*(const IMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    IMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            long long aik = at(i, k);
            if (!aik) continue;
            for (int j = 0; j < o.cols_; ++j) {
                long long p = checked_mul(aik, o.at(k, j));
                r.at(i, j) = checked_add(r.at(i, j), p);
            }
        }
    return r;
}

IMat IMat::operator+(const IMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    IMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_add(a_[i], o.a_[i]);
    return r;
}

IMat IMat::operator-(const IMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    IMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_sub(a_[i], o.a_[i]);
    return r;
}

IMat IMat::transpose() const {
    IMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IMat::is_zero() const {
    for (auto v : a_)
        if (v) return false;
    return true;
}

IMat IMat::select_cols(const std::vector<int>& idx) const {
    IMat r(rows_, (int)idx.size());
    for (int j = 0; j < (int)idx.size(); ++j)
        for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
}

IMat IMat::hstack(const IMat& a, const IMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack shape mismatch");
    IMat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

IMat IMat::vstack(const IMat& a, const IMat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape mismatch");
    IMat r(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

std::vector<long long> SmithResult::diagonal() const {
    std::vector<long long> out;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

void row_op(IMat& m, IMat& u, int dst, int src, long long q) {
    // row dst -= q * row src, mirrored in u
    for (int j = 0; j < m.cols(); ++j)
        m.at(dst, j) = checked_sub(m.at(dst, j), checked_mul(q, m.at(src, j)));
    for (int j = 0; j < u.cols(); ++j)
        u.at(dst, j) = checked_sub(u.at(dst, j), checked_mul(q, u.at(src, j)));
}

void col_op(IMat& m, IMat& v, int dst, int src, long long q) {
    for (int i = 0; i < m.rows(); ++i)
        m.at(i, dst) = checked_sub(m.at(i, dst), checked_mul(q, m.at(i, src)));
    for (int i = 0; i < v.rows(); ++i)
        v.at(i, dst) = checked_sub(v.at(i, dst), checked_mul(q, v.at(i, src)));
}

void swap_rows(IMat& m, IMat& u, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
}

void swap_cols(IMat& m, IMat& v, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
}

void negate_row(IMat& m, IMat& u, int r) {
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
    for (int j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
}

} // namespace

SmithResult smith_normal_form(const IMat& m) {
    SmithResult res;
    res.d = m;
    res.u = IMat::identity(m.rows());
    res.v = IMat::identity(m.cols());
    IMat& d = res.d;
    IMat& u = res.u;
    IMat& v = res.v;
    int n = std::min(m.rows(), m.cols());
    int t = 0;
    for (; t < n; ++t) {
        // find a pivot with minimal |value| in the remaining block
        int pr = -1, pc = -1;
        long long best = 0;
        for (int i = t; i < m.rows(); ++i)
            for (int j = t; j < m.cols(); ++j) {
                long long a = d.at(i, j);
                if (a == 0) continue;
                if (pr < 0 || std::llabs(a) < best) {
                    pr = i;
                    pc = j;
                    best = std::llabs(a);
                }
            }
        if (pr < 0) break;
        swap_rows(d, u, t, pr);
        swap_cols(d, v, t, pc);
        // eliminate until the pivot divides its row and column
        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < m.rows(); ++i) {
                long long a = d.at(i, t);
                if (!a) continue;
                long long q = a / d.at(t, t);
                row_op(d, u, i, t, q);
                if (d.at(i, t)) {
                    swap_rows(d, u, t, i);
                    again = true;
                }
            }
            for (int j = t + 1; j < m.cols(); ++j) {
                long long a = d.at(t, j);
                if (!a) continue;
                long long q = a / d.at(t, t);
                col_op(d, v, j, t, q);
                if (d.at(t, j)) {
                    swap_cols(d, v, t, j);
                    again = true;
                }
            }
        }
        // enforce divisibility of the remaining block by the pivot
        bool fixed = false;
        for (int i = t + 1; i < m.rows() && !fixed; ++i)
            for (int j = t + 1; j < m.cols() && !fixed; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    // add row i to row t and redo this pivot
                    row_op(d, u, t, i, -1);
                    fixed = true;
                }
        if (fixed) {
            --t;
            continue;
        }
        if (d.at(t, t) < 0) negate_row(d, u, t);
    }
    res.rank = t;
    return res;
}

bool is_unimodular(const IMat& m) {
    if (m.rows() != m.cols()) return false;
    auto s = smith_normal_form(m);
    if (s.rank != m.rows()) return false;
    for (auto x : s.diagonal())
        if (x != 1) return false;
    return true;
}

IMat kernel_basis(const IMat& m) {
    auto s = smith_normal_form(m);
    std::vector<int> idx;
    for (int j = 0; j < m.cols(); ++j) {
        bool zero = j >= s.rank;
        if (zero) idx.push_back(j);
    }
    return s.v.select_cols(idx);
}

IMat solve_exact(const IMat& b, const IMat& c) {
    if (b.rows() != c.rows()) throw std::invalid_argument("solve_exact shape mismatch");
    auto s = smith_normal_form(b);
    if (s.rank != b.cols())
        throw std::invalid_argument("solve_exact requires full column rank");
    IMat uc = s.u * c;
    IMat w(b.cols(), c.cols());
    for (int i = 0; i < b.cols(); ++i) {
        long long di = s.d.at(i, i);
        for (int j = 0; j < c.cols(); ++j) {
            long long x = uc.at(i, j);
            if (x % di != 0)
                throw std::domain_error("solve_exact: no integral solution");
            w.at(i, j) = x / di;
        }
    }
    for (int i = b.cols(); i < b.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j)
            if (uc.at(i, j) != 0)
                throw std::domain_error("solve_exact: inconsistent system");
    return s.v * w;
}

std::vector<long long> cokernel_invariants(const IMat& m) {
    auto s = smith_normal_form(m);
    std::vector<long long> out;
    for (int i = 0; i < s.rank; ++i) {
        long long x = s.d.at(i, i);
        if (x > 1) out.push_back(x);
    }
    if (s.rank < m.rows())
        throw std::domain_error("cokernel has a free part");
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace torjump
