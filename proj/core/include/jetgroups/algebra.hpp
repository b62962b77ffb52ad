#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jetgroups/matrix.hpp"
#include "jetgroups/rational.hpp"
#include "jetgroups/report.hpp"

namespace jetgroups {

enum class AlgebraKind { structure_constants, matrix };

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

// A finite-dimensional Lie or left Leibniz algebra, given either by a
// structure-constant table c_{ij}^m or by a matrix basis closed under the
// commutator. Immutable after construction; loading validates structure
// (dimensions, basis independence, closure) but not the bracket axioms,
// which verify_algebra checks on demand.
class AlgebraSpec {
public:
    // table[i*dim + j] holds the coordinates of [e_i, e_j]; missing rows mean zero.
    static AlgebraPtr structure_constants(std::string name, int dim,
                                          std::vector<std::vector<Rational>> table,
                                          bool leibniz = false);
    static AlgebraPtr from_matrices(std::string name, std::vector<RationalMatrix> basis,
                                    bool leibniz = false);

    // abelian(n), heis3, sl2, so3, nilpotent_upper(n), leibniz2
    static AlgebraPtr builtin(const std::string& name);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    AlgebraKind kind() const { return kind_; }
    bool leibniz() const { return leibniz_; }

    // [e_i, e_j] in basis coordinates.
    const std::vector<Rational>& structure_row(int i, int j) const;

    // Matrix kind only.
    const std::vector<RationalMatrix>& basis() const;
    RationalMatrix realize(const std::vector<Rational>& coeffs) const;
    std::vector<Rational> coordinates(const RationalMatrix& m) const;

    // Structure-constant view of a matrix algebra (basis extraction).
    AlgebraPtr to_structure_constants() const;

private:
    AlgebraSpec() = default;

    std::string name_;
    int dim_ = 0;
    AlgebraKind kind_ = AlgebraKind::structure_constants;
    bool leibniz_ = false;
    std::vector<std::vector<Rational>> table_;  // dim*dim rows of dim coords
    std::vector<RationalMatrix> basis_;
    // coordinate extraction: rows of the flattened basis matrix that were
    // chosen as pivots, and the inverse of that square submatrix
    std::vector<int> pivot_rows_;
    RationalMatrix pivot_inverse_;
};

// Coefficient vector in the basis of a fixed algebra.
class AlgebraElement {
public:
    AlgebraElement(AlgebraPtr algebra, std::vector<Rational> coeffs);

    static AlgebraElement zero(const AlgebraPtr& algebra);
    static AlgebraElement basis(const AlgebraPtr& algebra, int i);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    bool is_zero() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator-(const AlgebraElement& a);
    friend AlgebraElement operator*(const Rational& s, const AlgebraElement& a);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    std::string str() const;

private:
    AlgebraPtr algebra_;
    std::vector<Rational> coeffs_;
};

// [x, y]; for Leibniz algebras ad_x y = [x, y] is the left bracketing.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

// Commutator route for matrix algebras (realize, commute, re-express);
// agrees with the structure-constant contraction by bilinearity.
AlgebraElement bracket_via_commutator(const AlgebraElement& x, const AlgebraElement& y);

// A group element acting on the algebra: the abstract identity, an
// invertible matrix of the representation space (matrix kind), or an
// explicit bracket automorphism in basis coordinates (structure kind).
class GroupPoint {
public:
    GroupPoint() = default;  // identity

    static GroupPoint identity() { return {}; }
    static GroupPoint matrix(const AlgebraPtr& algebra, const RationalMatrix& g);
    static GroupPoint automorphism(const AlgebraPtr& algebra, const RationalMatrix& a);

    bool is_identity() const { return kind_ == Kind::identity; }
    bool is_matrix() const { return kind_ == Kind::matrix; }
    bool is_automorphism() const { return kind_ == Kind::automorphism; }
    const RationalMatrix& matrix_value() const;

    GroupPoint inverse() const;
    friend GroupPoint compose(const GroupPoint& a, const GroupPoint& b);
    friend bool operator==(const GroupPoint& a, const GroupPoint& b);
    friend bool operator!=(const GroupPoint& a, const GroupPoint& b) { return !(a == b); }

private:
    enum class Kind { identity, matrix, automorphism };
    Kind kind_ = Kind::identity;
    RationalMatrix value_;
    RationalMatrix inverse_;

    friend AlgebraElement adjoint(const GroupPoint& g, const AlgebraElement& x);
};

// Ad_g x. Matrix kind: g X g^-1 re-expressed in the basis; automorphism:
// matrix applied to coordinates; identity: x itself.
AlgebraElement adjoint(const GroupPoint& g, const AlgebraElement& x);

// Checks antisymmetry + Jacobi (Lie) or the left Leibniz identity
// (Leibniz) exhaustively over basis triples; bilinearity extends the
// result to the whole algebra.
Report verify_algebra(const AlgebraPtr& a);

} // namespace jetgroups
