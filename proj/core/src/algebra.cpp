#include "jetgroups/algebra.hpp"

#include <utility>

#include "jetgroups/errors.hpp"

namespace jetgroups {

namespace {

std::vector<Rational> flatten(const RationalMatrix& m) {
    return m.entries();
}

// e_{ij} elementary matrix
RationalMatrix unit_matrix(int n, int i, int j) {
    RationalMatrix m(n, n);
    m.at(i, j) = 1;
    return m;
}

} // namespace

AlgebraPtr AlgebraSpec::structure_constants(std::string name, int dim,
                                            std::vector<std::vector<Rational>> table,
                                            bool leibniz) {
    if (dim < 1) throw InputError("algebra: dimension must be positive");
    if (table.size() != static_cast<std::size_t>(dim) * dim)
        throw InputError("algebra: structure table must have dim*dim rows");
    for (const auto& row : table)
        if (row.size() != static_cast<std::size_t>(dim))
            throw InputError("algebra: structure row length must equal dim");
    auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    spec->name_ = std::move(name);
    spec->dim_ = dim;
    spec->kind_ = AlgebraKind::structure_constants;
    spec->leibniz_ = leibniz;
    spec->table_ = std::move(table);
    return spec;
}

AlgebraPtr AlgebraSpec::from_matrices(std::string name, std::vector<RationalMatrix> basis,
                                      bool leibniz) {
    const int dim = static_cast<int>(basis.size());
    if (dim < 1) throw InputError("algebra: empty matrix basis");
    const int r = basis[0].rows(), c = basis[0].cols();
    for (const auto& b : basis)
        if (b.rows() != r || b.cols() != c)
            throw InputError("algebra: basis matrices must share one shape");

    auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    spec->name_ = std::move(name);
    spec->dim_ = dim;
    spec->kind_ = AlgebraKind::matrix;
    spec->leibniz_ = leibniz;
    spec->basis_ = std::move(basis);

    // Stack flattened basis matrices as columns, pick dim independent rows
    // by elimination, and invert that square block once.
    const int nrows = r * c;
    RationalMatrix stacked(nrows, dim);
    for (int j = 0; j < dim; ++j) {
        const auto flat = flatten(spec->basis_[static_cast<std::size_t>(j)]);
        for (int i = 0; i < nrows; ++i) stacked.at(i, j) = flat[static_cast<std::size_t>(i)];
    }
    RationalMatrix work = stacked;
    std::vector<int> pivots;
    std::vector<bool> used(static_cast<std::size_t>(nrows), false);
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int row = 0; row < nrows; ++row)
            if (!used[static_cast<std::size_t>(row)] && !work.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw InputError("algebra: basis matrices are linearly dependent");
        used[static_cast<std::size_t>(pivot)] = true;
        pivots.push_back(pivot);
        const Rational inv = Rational(1) / work.at(pivot, col);
        for (int row = 0; row < nrows; ++row) {
            if (used[static_cast<std::size_t>(row)] && row != pivot) continue;
            const Rational f = work.at(row, col) * inv;
            if (f.is_zero()) continue;
            for (int j2 = col; j2 < dim; ++j2) work.at(row, j2) -= f * work.at(pivot, j2);
        }
    }
    RationalMatrix square(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) square.at(i, j) = stacked.at(pivots[static_cast<std::size_t>(i)], j);
    spec->pivot_rows_ = std::move(pivots);
    spec->pivot_inverse_ = mat_inverse(square);

    // Closure under commutator doubles as the structure-table build.
    spec->table_.assign(static_cast<std::size_t>(dim) * dim,
                        std::vector<Rational>(static_cast<std::size_t>(dim)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const RationalMatrix comm = spec->basis_[static_cast<std::size_t>(i)] * spec->basis_[static_cast<std::size_t>(j)] -
                                        spec->basis_[static_cast<std::size_t>(j)] * spec->basis_[static_cast<std::size_t>(i)];
            try {
                spec->table_[static_cast<std::size_t>(i) * dim + j] = spec->coordinates(comm);
            } catch (const RepresentationError&) {
                throw InputError("algebra: basis is not closed under the commutator");
            }
        }
    return spec;
}

const std::vector<Rational>& AlgebraSpec::structure_row(int i, int j) const {
    return table_.at(static_cast<std::size_t>(i) * dim_ + j);
}

const std::vector<RationalMatrix>& AlgebraSpec::basis() const {
    if (kind_ != AlgebraKind::matrix) throw InputError("algebra: no matrix basis for this kind");
    return basis_;
}

RationalMatrix AlgebraSpec::realize(const std::vector<Rational>& coeffs) const {
    if (kind_ != AlgebraKind::matrix) throw InputError("algebra: realize needs a matrix algebra");
    if (coeffs.size() != static_cast<std::size_t>(dim_))
        throw InputError("algebra: wrong coefficient count");
    RationalMatrix m(basis_[0].rows(), basis_[0].cols());
    for (int i = 0; i < dim_; ++i) {
        if (coeffs[static_cast<std::size_t>(i)].is_zero()) continue;
        m += coeffs[static_cast<std::size_t>(i)] * basis_[static_cast<std::size_t>(i)];
    }
    return m;
}

std::vector<Rational> AlgebraSpec::coordinates(const RationalMatrix& m) const {
    if (kind_ != AlgebraKind::matrix) throw InputError("algebra: coordinates need a matrix algebra");
    if (m.rows() != basis_[0].rows() || m.cols() != basis_[0].cols())
        throw InputError("algebra: matrix shape does not match the basis");
    const auto flat = flatten(m);
    RationalMatrix rhs(dim_, 1);
    for (int i = 0; i < dim_; ++i) rhs.at(i, 0) = flat[static_cast<std::size_t>(pivot_rows_[static_cast<std::size_t>(i)])];
    const RationalMatrix x = pivot_inverse_ * rhs;
    std::vector<Rational> coeffs(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) coeffs[static_cast<std::size_t>(i)] = x.at(i, 0);
    // Confirm the matrix really lies in the span.
    if (realize(coeffs) != m) throw RepresentationError("algebra: matrix outside the basis span");
    return coeffs;
}

AlgebraPtr AlgebraSpec::to_structure_constants() const {
    if (kind_ != AlgebraKind::matrix)
        throw InputError("algebra: already in structure-constant form");
    return structure_constants(name_ + "_table", dim_, table_, leibniz_);
}

AlgebraPtr AlgebraSpec::builtin(const std::string& name) {
    auto parse_arg = [&](const std::string& prefix) -> int {
        const auto open = name.find('(');
        if (open != prefix.size() || name.back() != ')')
            throw InputError("algebra: unknown builtin \"" + name + "\"");
        const std::string arg = name.substr(open + 1, name.size() - open - 2);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("algebra: bad argument in \"" + name + "\"");
        return std::stoi(arg);
    };

    if (name.rfind("abelian(", 0) == 0) {
        const int n = parse_arg("abelian");
        if (n < 1 || n > 16) throw InputError("algebra: abelian dimension out of range");
        std::vector<std::vector<Rational>> table(static_cast<std::size_t>(n) * n,
                                                 std::vector<Rational>(static_cast<std::size_t>(n)));
        return structure_constants(name, n, std::move(table));
    }
    if (name == "heis3") {
        // e1 = E12, e2 = E23, e3 = E13 inside 3x3; [e1,e2] = e3 is central.
        return from_matrices(name, {unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)});
    }
    if (name == "sl2") {
        RationalMatrix e(2, 2), f(2, 2), h(2, 2);
        e.at(0, 1) = 1;
        f.at(1, 0) = 1;
        h.at(0, 0) = 1;
        h.at(1, 1) = -1;
        return from_matrices(name, {e, f, h});
    }
    if (name == "so3") {
        // Cross-product constants: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
        RationalMatrix l1(3, 3), l2(3, 3), l3(3, 3);
        l1.at(2, 1) = 1; l1.at(1, 2) = -1;
        l2.at(0, 2) = 1; l2.at(2, 0) = -1;
        l3.at(1, 0) = 1; l3.at(0, 1) = -1;
        return from_matrices(name, {l1, l2, l3});
    }
    if (name.rfind("nilpotent_upper(", 0) == 0) {
        const int n = parse_arg("nilpotent_upper");
        if (n < 2 || n > 6) throw InputError("algebra: nilpotent_upper size out of range");
        std::vector<RationalMatrix> basis;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) basis.push_back(unit_matrix(n, i, j));
        return from_matrices(name, std::move(basis));
    }
    if (name == "leibniz2") {
        // [e1,e1] = e2, everything else zero; left Leibniz but not Lie.
        std::vector<std::vector<Rational>> table(4, std::vector<Rational>(2));
        table[0][1] = 1;
        return structure_constants(name, 2, std::move(table), /*leibniz=*/true);
    }
    throw InputError("algebra: unknown builtin \"" + name + "\"");
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, std::vector<Rational> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    if (!algebra_) throw InputError("element: null algebra");
    if (coeffs_.size() != static_cast<std::size_t>(algebra_->dim()))
        throw InputError("element: coefficient count does not match the algebra dimension");
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& algebra) {
    return AlgebraElement(algebra, std::vector<Rational>(static_cast<std::size_t>(algebra->dim())));
}

AlgebraElement AlgebraElement::basis(const AlgebraPtr& algebra, int i) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(algebra->dim()));
    coeffs.at(static_cast<std::size_t>(i)) = 1;
    return AlgebraElement(algebra, std::move(coeffs));
}

bool AlgebraElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra() != b.algebra())
        throw InputError("element: operands belong to different algebras");
}

} // namespace

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    require_same_algebra(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    require_same_algebra(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
    std::vector<Rational> coeffs(a.coeffs_.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = -a.coeffs_[i];
    return AlgebraElement(a.algebra_, std::move(coeffs));
}

AlgebraElement operator*(const Rational& s, const AlgebraElement& a) {
    std::vector<Rational> coeffs(a.coeffs_.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = s * a.coeffs_[i];
    return AlgebraElement(a.algebra_, std::move(coeffs));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
}

std::string AlgebraElement::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += coeffs_[i].str();
    }
    return out + ")";
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_algebra(x, y);
    const auto& a = *x.algebra();
    std::vector<Rational> out(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) {
        if (x.coeff(i).is_zero()) continue;
        for (int j = 0; j < a.dim(); ++j) {
            if (y.coeff(j).is_zero()) continue;
            const Rational f = x.coeff(i) * y.coeff(j);
            const auto& row = a.structure_row(i, j);
            for (int m = 0; m < a.dim(); ++m) {
                if (row[static_cast<std::size_t>(m)].is_zero()) continue;
                out[static_cast<std::size_t>(m)] += f * row[static_cast<std::size_t>(m)];
            }
        }
    }
    return AlgebraElement(x.algebra(), std::move(out));
}

AlgebraElement bracket_via_commutator(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_algebra(x, y);
    const auto& a = *x.algebra();
    const RationalMatrix mx = a.realize(x.coeffs());
    const RationalMatrix my = a.realize(y.coeffs());
    return AlgebraElement(x.algebra(), a.coordinates(mx * my - my * mx));
}

GroupPoint GroupPoint::matrix(const AlgebraPtr& algebra, const RationalMatrix& g) {
    if (algebra->kind() != AlgebraKind::matrix)
        throw InputError("group point: matrix form needs a matrix algebra");
    if (g.rows() != algebra->basis()[0].rows() || g.cols() != algebra->basis()[0].cols())
        throw InputError("group point: matrix shape does not match the representation");
    GroupPoint p;
    p.kind_ = Kind::matrix;
    p.value_ = g;
    p.inverse_ = mat_inverse(g);  // also proves invertibility
    return p;
}

GroupPoint GroupPoint::automorphism(const AlgebraPtr& algebra, const RationalMatrix& a) {
    if (algebra->kind() != AlgebraKind::structure_constants)
        throw InputError("group point: automorphism form is for structure-constant algebras");
    const int d = algebra->dim();
    if (a.rows() != d || a.cols() != d)
        throw InputError("group point: automorphism must be dim x dim");
    GroupPoint p;
    p.kind_ = Kind::automorphism;
    p.value_ = a;
    p.inverse_ = mat_inverse(a);
    // A[e_i, e_j] = [A e_i, A e_j] on all basis pairs.
    auto apply = [&](const std::vector<Rational>& coeffs) {
        std::vector<Rational> out(static_cast<std::size_t>(d));
        for (int m = 0; m < d; ++m)
            for (int j = 0; j < d; ++j)
                if (!coeffs[static_cast<std::size_t>(j)].is_zero())
                    out[static_cast<std::size_t>(m)] += a.at(m, j) * coeffs[static_cast<std::size_t>(j)];
        return AlgebraElement(algebra, std::move(out));
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<Rational> ei(static_cast<std::size_t>(d)), ej(static_cast<std::size_t>(d));
            ei[static_cast<std::size_t>(i)] = 1;
            ej[static_cast<std::size_t>(j)] = 1;
            const AlgebraElement lhs = apply(algebra->structure_row(i, j));
            const AlgebraElement rhs = bracket(apply(ei), apply(ej));
            if (lhs != rhs)
                throw InputError("group point: matrix does not preserve the bracket");
        }
    return p;
}

const RationalMatrix& GroupPoint::matrix_value() const {
    if (kind_ == Kind::identity) throw InputError("group point: identity has no matrix value");
    return value_;
}

GroupPoint GroupPoint::inverse() const {
    GroupPoint p = *this;
    std::swap(p.value_, p.inverse_);
    return p;
}

GroupPoint compose(const GroupPoint& a, const GroupPoint& b) {
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;
    if (a.kind_ != b.kind_) throw InputError("group point: cannot compose different kinds");
    GroupPoint p;
    p.kind_ = a.kind_;
    p.value_ = a.value_ * b.value_;
    p.inverse_ = b.inverse_ * a.inverse_;
    return p;
}

bool operator==(const GroupPoint& a, const GroupPoint& b) {
    if (a.kind_ != b.kind_) {
        // identity compares equal to an identity matrix of either stored kind
        const GroupPoint* id = a.is_identity() ? &a : (b.is_identity() ? &b : nullptr);
        if (!id) return false;
        const GroupPoint& other = (id == &a) ? b : a;
        return other.value_.is_identity();
    }
    if (a.is_identity()) return true;
    return a.value_ == b.value_;
}

AlgebraElement adjoint(const GroupPoint& g, const AlgebraElement& x) {
    switch (g.kind_) {
        case GroupPoint::Kind::identity:
            return x;
        case GroupPoint::Kind::matrix: {
            const auto& a = *x.algebra();
            if (a.kind() != AlgebraKind::matrix)
                throw InputError("adjoint: matrix group point on an abstract algebra");
            const RationalMatrix conj = g.value_ * a.realize(x.coeffs()) * g.inverse_;
            return AlgebraElement(x.algebra(), a.coordinates(conj));
        }
        case GroupPoint::Kind::automorphism: {
            const auto& a = *x.algebra();
            if (a.kind() != AlgebraKind::structure_constants)
                throw InputError("adjoint: automorphism group point on a matrix algebra");
            std::vector<Rational> out(static_cast<std::size_t>(a.dim()));
            for (int i = 0; i < a.dim(); ++i)
                for (int j = 0; j < a.dim(); ++j) {
                    if (x.coeff(j).is_zero()) continue;
                    out[static_cast<std::size_t>(i)] += g.value_.at(i, j) * x.coeff(j);
                }
            return AlgebraElement(x.algebra(), std::move(out));
        }
    }
    throw InputError("adjoint: unreachable");
}

Report verify_algebra(const AlgebraPtr& a) {
    const int d = a->dim();
    auto e = [&](int i) { return AlgebraElement::basis(a, i); };

    if (!a->leibniz()) {
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j)
                if (!(bracket(e(i), e(j)) + bracket(e(j), e(i))).is_zero())
                    return Report::fail("antisymmetry fails at basis pair (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int l = 0; l < d; ++l) {
                    const AlgebraElement jac = bracket(e(i), bracket(e(j), e(l))) +
                                               bracket(e(j), bracket(e(l), e(i))) +
                                               bracket(e(l), bracket(e(i), e(j)));
                    if (!jac.is_zero())
                        return Report::fail("Jacobi fails at basis triple (" + std::to_string(i) +
                                            "," + std::to_string(j) + "," + std::to_string(l) + ")");
                }
    } else {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int l = 0; l < d; ++l) {
                    const AlgebraElement lhs = bracket(e(i), bracket(e(j), e(l)));
                    const AlgebraElement rhs =
                        bracket(bracket(e(i), e(j)), e(l)) + bracket(e(j), bracket(e(i), e(l)));
                    if (lhs != rhs)
                        return Report::fail("left Leibniz identity fails at basis triple (" +
                                            std::to_string(i) + "," + std::to_string(j) + "," +
                                            std::to_string(l) + ")");
                }
    }
    return Report::ok();
}

} // namespace jetgroups
