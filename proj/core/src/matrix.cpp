#include "jetgroups/matrix.hpp"

#include <ostream>
#include <utility>

#include "jetgroups/errors.hpp"

namespace jetgroups {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw InputError("matrix: dimensions must be positive");
    entries_.resize(static_cast<std::size_t>(rows) * cols);
}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows <= 0 || cols <= 0) throw InputError("matrix: dimensions must be positive");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw InputError("matrix: entry count does not match dimensions");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool RationalMatrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix: shape mismatch in addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix: shape mismatch in subtraction");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return mat_mul(a, b); }

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix r = a;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) *= s;
    return r;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
    }
    return os << "]";
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix: inner dimensions do not match");
    RationalMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            const Rational& ail = a.at(i, l);
            if (ail.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rational& blj = b.at(l, j);
                if (!blj.is_zero()) r.at(i, j) += ail * blj;
            }
        }
    return r;
}

namespace {

// Gauss-Jordan on [a | rhs]; returns the transformed rhs block.
RationalMatrix eliminate(RationalMatrix a, RationalMatrix rhs) {
    const int n = a.rows();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw SingularMatrixError("matrix: singular");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            for (int j = 0; j < rhs.cols(); ++j) std::swap(rhs.at(pivot, j), rhs.at(col, j));
        }
        const Rational inv = Rational(1) / a.at(col, col);
        for (int j = 0; j < n; ++j) a.at(col, j) *= inv;
        for (int j = 0; j < rhs.cols(); ++j) rhs.at(col, j) *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const Rational f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
            for (int j = 0; j < rhs.cols(); ++j) rhs.at(r, j) -= f * rhs.at(col, j);
        }
    }
    return rhs;
}

} // namespace

RationalMatrix mat_inverse(const RationalMatrix& a) {
    if (!a.is_square()) throw InputError("matrix: inverse of a non-square matrix");
    return eliminate(a, RationalMatrix::identity(a.rows()));
}

RationalMatrix mat_solve(const RationalMatrix& a, const RationalMatrix& b) {
    if (!a.is_square()) throw InputError("matrix: solve needs a square matrix");
    if (a.rows() != b.rows()) throw InputError("matrix: solve shape mismatch");
    return eliminate(a, b);
}

} // namespace jetgroups
