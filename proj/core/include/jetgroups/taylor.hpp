#pragma once

#include <vector>

#include "jetgroups/jet.hpp"
#include "jetgroups/matrix.hpp"

namespace jetgroups {

// Truncated matrix Taylor series A(t) = sum_{n<=k} t^n/n! A_n, stored in
// the divided-power convention A_n = A^(n)(0) so that all recurrences use
// integer binomials. Orders never mix implicitly: combining jets of
// different order is an error.
class MatrixJet {
public:
    MatrixJet(int k, std::vector<RationalMatrix> coeffs);

    static MatrixJet constant(int k, const RationalMatrix& value);
    static MatrixJet identity(int k, int n);
    static MatrixJet zero(int k, int rows, int cols);

    int k() const { return k_; }
    int rows() const { return coeffs_[0].rows(); }
    int cols() const { return coeffs_[0].cols(); }
    const RationalMatrix& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    RationalMatrix& coeff(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

    MatrixJet& operator+=(const MatrixJet& o);
    MatrixJet& operator-=(const MatrixJet& o);
    friend MatrixJet operator+(MatrixJet a, const MatrixJet& b) { return a += b; }
    friend MatrixJet operator-(MatrixJet a, const MatrixJet& b) { return a -= b; }
    friend MatrixJet operator*(const Rational& s, const MatrixJet& a);
    friend bool operator==(const MatrixJet& a, const MatrixJet& b);
    friend bool operator!=(const MatrixJet& a, const MatrixJet& b) { return !(a == b); }

private:
    int k_ = 0;
    std::vector<RationalMatrix> coeffs_;  // k+1 entries
};

// Leibniz product: (AB)_n = sum_i binom(n,i) A_i B_{n-i}.
MatrixJet mjet_mul(const MatrixJet& a, const MatrixJet& b);

// Multiplicative inverse; needs invertible constant term.
// B_0 = A_0^-1, B_n = -A_0^-1 sum_{i=1..n} binom(n,i) A_i B_{n-i}.
MatrixJet mjet_inverse(const MatrixJet& a);

// Truncation to a lower order (explicit, never implicit).
MatrixJet mjet_truncate(const MatrixJet& a, int k);

// d/dt, one order lower: coefficient n of A' is A_{n+1}.
MatrixJet mjet_derivative(const MatrixJet& a);

// delta^r A = A' A^-1 or delta^l A = A^-1 A', of order k-1.
MatrixJet log_derivative(const MatrixJet& a, Side side);

// exp of a jet with zero constant term: sum_{m<=k} X^m / m!, exact
// because X^m vanishes to order >= m.
MatrixJet exp_jet(const MatrixJet& x);

// The trivialization of Theorem-style coordinates: g = A_0 and x_n the
// (n-1)-th coefficient of the logarithmic derivative, expressed in the
// algebra basis.
JetElement trivialize(const MatrixJet& a, Side side, const AlgebraPtr& algebra);

// Inverse map: the jet of the curve with c(0) = g and prescribed
// logarithmic derivative. Right side: C_{n+1} = sum binom(n,i) X_{i+1} C_{n-i}.
MatrixJet from_trivialization(const JetElement& j);

// Ground truth for the group operations: convert to matrix jets, use the
// Leibniz product / jet inverse, convert back. Never touches partitions.
JetElement oracle_multiply(const JetElement& a, const JetElement& b);
JetElement oracle_inverse(const JetElement& a);

// Change of trivialization side through the curve model.
JetElement oracle_convert_side(const JetElement& a, Side target);

} // namespace jetgroups
