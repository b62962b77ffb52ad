#include "jetgroups/taylor.hpp"

#include <utility>

#include "jetgroups/errors.hpp"
#include "jetgroups/numbers.hpp"

namespace jetgroups {

MatrixJet::MatrixJet(int k, std::vector<RationalMatrix> coeffs)
    : k_(k), coeffs_(std::move(coeffs)) {
    if (k_ < 0) throw InputError("matrix jet: negative order");
    if (coeffs_.size() != static_cast<std::size_t>(k_) + 1)
        throw InputError("matrix jet: expected k+1 coefficients");
    for (const auto& c : coeffs_)
        if (c.rows() != coeffs_[0].rows() || c.cols() != coeffs_[0].cols())
            throw InputError("matrix jet: coefficient shapes differ");
}

MatrixJet MatrixJet::constant(int k, const RationalMatrix& value) {
    std::vector<RationalMatrix> coeffs(static_cast<std::size_t>(k) + 1,
                                       RationalMatrix(value.rows(), value.cols()));
    coeffs[0] = value;
    return MatrixJet(k, std::move(coeffs));
}

MatrixJet MatrixJet::identity(int k, int n) { return constant(k, RationalMatrix::identity(n)); }

MatrixJet MatrixJet::zero(int k, int rows, int cols) {
    return MatrixJet(k, std::vector<RationalMatrix>(static_cast<std::size_t>(k) + 1,
                                                    RationalMatrix(rows, cols)));
}

MatrixJet& MatrixJet::operator+=(const MatrixJet& o) {
    if (k_ != o.k_) throw InputError("matrix jet: mixed orders in addition");
    for (int n = 0; n <= k_; ++n) coeff(n) += o.coeff(n);
    return *this;
}

MatrixJet& MatrixJet::operator-=(const MatrixJet& o) {
    if (k_ != o.k_) throw InputError("matrix jet: mixed orders in subtraction");
    for (int n = 0; n <= k_; ++n) coeff(n) -= o.coeff(n);
    return *this;
}

MatrixJet operator*(const Rational& s, const MatrixJet& a) {
    MatrixJet r = a;
    for (int n = 0; n <= r.k(); ++n) r.coeff(n) = s * r.coeff(n);
    return r;
}

bool operator==(const MatrixJet& a, const MatrixJet& b) {
    return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
}

MatrixJet mjet_mul(const MatrixJet& a, const MatrixJet& b) {
    if (a.k() != b.k()) throw InputError("matrix jet: mixed orders in product");
    if (a.cols() != b.rows()) throw InputError("matrix jet: inner dimensions do not match");
    std::vector<RationalMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(a.k()) + 1);
    for (int n = 0; n <= a.k(); ++n) {
        RationalMatrix c(a.rows(), b.cols());
        for (int i = 0; i <= n; ++i) {
            if (a.coeff(i).is_zero() || b.coeff(n - i).is_zero()) continue;
            c += Rational(binomial(n, i)) * (a.coeff(i) * b.coeff(n - i));
        }
        coeffs.push_back(std::move(c));
    }
    return MatrixJet(a.k(), std::move(coeffs));
}

MatrixJet mjet_inverse(const MatrixJet& a) {
    if (a.rows() != a.cols()) throw InputError("matrix jet: inverse needs square coefficients");
    const RationalMatrix inv0 = mat_inverse(a.coeff(0));  // throws SingularMatrixError
    std::vector<RationalMatrix> b;
    b.reserve(static_cast<std::size_t>(a.k()) + 1);
    b.push_back(inv0);
    for (int n = 1; n <= a.k(); ++n) {
        RationalMatrix s(a.rows(), a.cols());
        for (int i = 1; i <= n; ++i) {
            if (a.coeff(i).is_zero()) continue;
            s += Rational(binomial(n, i)) * (a.coeff(i) * b[static_cast<std::size_t>(n - i)]);
        }
        b.push_back(-(inv0 * s));
    }
    return MatrixJet(a.k(), std::move(b));
}

MatrixJet mjet_truncate(const MatrixJet& a, int k) {
    if (k < 0 || k > a.k()) throw InputError("matrix jet: bad truncation order");
    std::vector<RationalMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(k) + 1);
    for (int n = 0; n <= k; ++n) coeffs.push_back(a.coeff(n));
    return MatrixJet(k, std::move(coeffs));
}

MatrixJet mjet_derivative(const MatrixJet& a) {
    if (a.k() < 1) throw InputError("matrix jet: derivative of an order-0 jet");
    std::vector<RationalMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(a.k()));
    for (int n = 1; n <= a.k(); ++n) coeffs.push_back(a.coeff(n));
    return MatrixJet(a.k() - 1, std::move(coeffs));
}

MatrixJet log_derivative(const MatrixJet& a, Side side) {
    const MatrixJet d = mjet_derivative(a);
    const MatrixJet inv = mjet_inverse(mjet_truncate(a, a.k() - 1));
    return side == Side::right ? mjet_mul(d, inv) : mjet_mul(inv, d);
}

MatrixJet exp_jet(const MatrixJet& x) {
    if (x.rows() != x.cols()) throw InputError("matrix jet: exp needs square coefficients");
    if (!x.coeff(0).is_zero())
        throw InputError("matrix jet: exp needs a vanishing constant term");
    MatrixJet sum = MatrixJet::identity(x.k(), x.rows());
    MatrixJet power = MatrixJet::identity(x.k(), x.rows());
    for (int m = 1; m <= x.k(); ++m) {
        power = mjet_mul(power, x);
        sum += Rational(Integer(1), factorial(m)) * power;
    }
    return sum;
}

JetElement trivialize(const MatrixJet& a, Side side, const AlgebraPtr& algebra) {
    if (algebra->kind() != AlgebraKind::matrix)
        throw InputError("trivialize: needs a matrix algebra for coordinates");
    if (a.k() < 1) throw InputError("trivialize: jet order must be at least 1");
    const MatrixJet delta = log_derivative(a, side);
    const GroupPoint g = a.coeff(0).is_identity()
                             ? GroupPoint::identity()
                             : GroupPoint::matrix(algebra, a.coeff(0));
    std::vector<AlgebraElement> x;
    x.reserve(static_cast<std::size_t>(a.k()));
    for (int n = 1; n <= a.k(); ++n)
        x.emplace_back(algebra, algebra->coordinates(delta.coeff(n - 1)));
    return JetElement(algebra, a.k(), side, g, std::move(x));
}

MatrixJet from_trivialization(const JetElement& j) {
    const auto& algebra = *j.algebra();
    if (algebra.kind() != AlgebraKind::matrix)
        throw InputError("from_trivialization: needs a matrix algebra");
    const int size = algebra.basis()[0].rows();
    if (algebra.basis()[0].cols() != size)
        throw InputError("from_trivialization: representation must be square");
    std::vector<RationalMatrix> xmat;
    xmat.reserve(static_cast<std::size_t>(j.k()));
    for (int n = 1; n <= j.k(); ++n) xmat.push_back(algebra.realize(j.component(n).coeffs()));

    std::vector<RationalMatrix> c;
    c.reserve(static_cast<std::size_t>(j.k()) + 1);
    c.push_back(j.group().is_identity() ? RationalMatrix::identity(size)
                                        : j.group().matrix_value());
    for (int n = 0; n < j.k(); ++n) {
        RationalMatrix next(size, size);
        for (int i = 0; i <= n; ++i) {
            const RationalMatrix& xm = xmat[static_cast<std::size_t>(i)];
            if (xm.is_zero()) continue;
            if (j.side() == Side::right)
                next += Rational(binomial(n, i)) * (xm * c[static_cast<std::size_t>(n - i)]);
            else
                next += Rational(binomial(n, i)) * (c[static_cast<std::size_t>(n - i)] * xm);
        }
        c.push_back(std::move(next));
    }
    return MatrixJet(j.k(), std::move(c));
}

JetElement oracle_multiply(const JetElement& a, const JetElement& b) {
    if (a.side() != b.side()) throw InputError("oracle: operands in different trivializations");
    if (a.k() != b.k()) throw InputError("oracle: operands of different order");
    return trivialize(mjet_mul(from_trivialization(a), from_trivialization(b)), a.side(),
                      a.algebra());
}

JetElement oracle_inverse(const JetElement& a) {
    return trivialize(mjet_inverse(from_trivialization(a)), a.side(), a.algebra());
}

JetElement oracle_convert_side(const JetElement& a, Side target) {
    if (a.side() == target) return a;
    return trivialize(from_trivialization(a), target, a.algebra());
}

} // namespace jetgroups
