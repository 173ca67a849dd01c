#pragma once

#include <vector>

namespace torjump {

// Dense integer matrix with overflow-checked arithmetic.
class IMat {
public:
    IMat() : rows_(0), cols_(0) {}
    IMat(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols, 0) {}

    static IMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
    long long at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

    IMat operator*(const IMat& o) const;
    IMat operator+(const IMat& o) const;
    IMat operator-(const IMat& o) const;
    IMat transpose() const;
    bool operator==(const IMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

    // columns picked from this matrix
    IMat select_cols(const std::vector<int>& idx) const;
    // horizontal / vertical concatenation
    static IMat hstack(const IMat& a, const IMat& b);
    static IMat vstack(const IMat& a, const IMat& b);

private:
    int rows_, cols_;
    std::vector<long long> a_;
};

struct SmithResult {
    IMat d;           // diagonal form, same shape as input
    IMat u;           // unimodular, u * m * v == d
    IMat v;
    int rank = 0;     // number of nonzero diagonal entries
    std::vector<long long> diagonal() const;
};

SmithResult smith_normal_form(const IMat& m);

// All invariant factors are 1 (and the matrix is square): determinant ±1.
bool is_unimodular(const IMat& m);

// Basis of { x : m x = 0 } as columns; saturated by construction.
IMat kernel_basis(const IMat& m);

// Solve b x = c exactly over the integers (throws if no integral solution);
// b must have full column rank.
IMat solve_exact(const IMat& b, const IMat& c);

// Invariant factors > 1 of the cokernel Z^rows / im(m).
std::vector<long long> cokernel_invariants(const IMat& m);

} // namespace torjump
