#pragma once

#include <iosfwd>
#include <vector>

#include "jetgroups/rational.hpp"

namespace jetgroups {

// Dense matrix of rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    RationalMatrix(int rows, int cols, std::vector<Rational> entries);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const;
    bool is_identity() const;

    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator-=(const RationalMatrix& o);

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
    friend RationalMatrix operator-(const RationalMatrix& a) { return Rational(-1) * a; }
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

// Exact product; dimension mismatch is an input error.
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);

// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
// Throws SingularMatrixError when no inverse exists.
RationalMatrix mat_inverse(const RationalMatrix& a);

// Solves a * x = b for a square invertible a (b may have several columns).
RationalMatrix mat_solve(const RationalMatrix& a, const RationalMatrix& b);

} // namespace jetgroups
