#include "jetgroups/checks.hpp"

#include <map>
#include <ostream>
#include <set>

#include "jetgroups/cocycles.hpp"
#include "jetgroups/errors.hpp"
#include "jetgroups/jet.hpp"
#include "jetgroups/numbers.hpp"
#include "jetgroups/partitions.hpp"
#include "jetgroups/random.hpp"
#include "jetgroups/tangent.hpp"
#include "jetgroups/taylor.hpp"

namespace jetgroups {

namespace {

CheckResult pass(std::string name, std::string detail = "") {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

std::string tag(const AlgebraPtr& algebra, const std::string& what) {
    return algebra->name() + ": " + what;
}

} // namespace

std::vector<CheckResult> check_partitions() {
    std::vector<CheckResult> results;

    // |P_n| = Bell(n), frozen sequence
    {
        const long expected[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 8 && ok; ++n) {
            const auto pn = enumerate_partitions(n);
            if (static_cast<long>(pn.size()) != expected[n] ||
                bell_number(n) != Integer(expected[n])) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n);
            }
        }
        std::set<std::string> p3;
        for (const auto& p : enumerate_partitions(3)) p3.insert(p.str());
        if (p3 != std::set<std::string>{"1|2|3", "12|3", "2|13", "1|23", "123"}) {
            ok = false;
            detail = "P_3 does not match the expected listing";
        }
        results.push_back(ok ? pass("partitions: |P_n| = Bell(n), n = 1..8")
                             : fail("partitions: |P_n| = Bell(n), n = 1..8", detail));
    }

    // count formula vs exhaustive enumeration
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 7 && ok; ++n) {
            Integer total = 0;
            std::map<std::vector<int>, long> histogram;
            for_each_partition(n, [&](const Partition& p) { ++histogram[p.sizes().parts]; });
            for_each_composition(n, [&](const Composition& c) {
                if (!ok) return;
                const Integer formula = count_with_sizes(c);
                total += formula;
                const auto built = partitions_with_sizes(n, c);
                const auto it = histogram.find(c.parts);
                const long filtered = it == histogram.end() ? 0 : it->second;
                if (formula != Integer(static_cast<long>(built.size())) ||
                    formula != Integer(filtered)) {
                    ok = false;
                    detail = "profile mismatch at n=" + std::to_string(n);
                }
            });
            if (ok && total != bell_number(n)) {
                ok = false;
                detail = "composition counts do not sum to Bell(" + std::to_string(n) + ")";
            }
        }
        results.push_back(ok ? pass("partitions: N_(i_1..i_l) counts every profile, n <= 7")
                             : fail("partitions: N_(i_1..i_l) counts every profile, n <= 7", detail));
    }

    // derivation hits P_{n+1} exactly once; parent undoes it
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 6 && ok; ++n) {
            std::multiset<std::string> derived;
            for_each_partition(n, [&](const Partition& p) {
                for (const auto& d : derived_partitions(p)) {
                    derived.insert(d.str());
                    if (parent_partition(d) != p) {
                        ok = false;
                        detail = "parent(derived) != id at " + p.str();
                    }
                }
            });
            std::multiset<std::string> next;
            for_each_partition(n + 1, [&](const Partition& p) { next.insert(p.str()); });
            if (ok && derived != next) {
                ok = false;
                detail = "derived partitions of P_" + std::to_string(n) + " do not tile P_" +
                         std::to_string(n + 1);
            }
        }
        results.push_back(ok ? pass("partitions: derivation bijection P_n -> P_{n+1}, n <= 6")
                             : fail("partitions: derivation bijection P_n -> P_{n+1}, n <= 6", detail));
    }

    // canonical anti-lex form: block maxima strictly increase
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 7 && ok; ++n)
            for_each_partition(n, [&](const Partition& p) {
                int last = 0;
                for (int r = 0; r < p.length(); ++r) {
                    const auto block = p.block(r);
                    if (block.back() <= last) {
                        ok = false;
                        detail = "non-ascending maxima in " + p.str();
                    }
                    last = block.back();
                }
            });
        results.push_back(ok ? pass("partitions: canonical form has ascending block maxima")
                             : fail("partitions: canonical form has ascending block maxima", detail));
    }

    return results;
}

std::vector<CheckResult> check_group_axioms(const AlgebraPtr& algebra, const CheckOptions& opts) {
    std::vector<CheckResult> results;
    Lcg rng(opts.seed);

    {
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= opts.max_jet_order && ok; ++k) {
            const JetElement e = JetElement::identity(algebra, k, Side::right);
            for (int t = 0; t < opts.triples && ok; ++t) {
                const JetElement a = random_jet(algebra, k, Side::right, rng);
                const JetElement b = random_jet(algebra, k, Side::right, rng);
                const JetElement c = random_jet(algebra, k, Side::right, rng);
                if (jet_multiply(jet_multiply(a, b), c) != jet_multiply(a, jet_multiply(b, c))) {
                    ok = false;
                    detail = "associativity fails at k=" + std::to_string(k);
                } else if (jet_multiply(a, e) != a || jet_multiply(e, a) != a) {
                    ok = false;
                    detail = "identity law fails at k=" + std::to_string(k);
                } else {
                    const JetElement inv = jet_inverse(a);
                    if (jet_multiply(a, inv) != e || jet_multiply(inv, a) != e) {
                        ok = false;
                        detail = "inverse law fails at k=" + std::to_string(k);
                    }
                }
            }
        }
        results.push_back(ok ? pass(tag(algebra, "jet group axioms (k <= " +
                                                     std::to_string(opts.max_jet_order) + ")"))
                             : fail(tag(algebra, "jet group axioms"), detail));
    }

    {
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= opts.max_jet_order && ok; ++k)
            for (int t = 0; t < 5 && ok; ++t) {
                const JetElement a = random_jet(algebra, k, Side::right, rng);
                const JetElement b = random_jet(algebra, k, Side::right, rng);
                if (jet_multiply(a, b, SumStrategy::partitions) !=
                        jet_multiply(a, b, SumStrategy::compositions) ||
                    jet_inverse(a, SumStrategy::partitions) !=
                        jet_inverse(a, SumStrategy::compositions)) {
                    ok = false;
                    detail = "strategies disagree at k=" + std::to_string(k);
                }
            }
        results.push_back(ok ? pass(tag(algebra, "partition sum equals weighted composition sum"))
                             : fail(tag(algebra, "partition sum equals weighted composition sum"),
                                    detail));
    }

    {
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= opts.max_tangent_order && ok; ++k) {
            const TangentElement e = TangentElement::identity(algebra, k, Side::right);
            for (int t = 0; t < opts.triples && ok; ++t) {
                const TangentElement a = random_tangent(algebra, k, Side::right, rng);
                const TangentElement b = random_tangent(algebra, k, Side::right, rng);
                const TangentElement c = random_tangent(algebra, k, Side::right, rng);
                if (tangent_multiply(tangent_multiply(a, b), c) !=
                    tangent_multiply(a, tangent_multiply(b, c))) {
                    ok = false;
                    detail = "associativity fails at k=" + std::to_string(k);
                } else if (tangent_multiply(a, e) != a || tangent_multiply(e, a) != a) {
                    ok = false;
                    detail = "identity law fails at k=" + std::to_string(k);
                } else {
                    const TangentElement inv = tangent_inverse(a);
                    if (tangent_multiply(a, inv) != e || tangent_multiply(inv, a) != e) {
                        ok = false;
                        detail = "inverse law fails at k=" + std::to_string(k);
                    }
                }
            }
        }
        results.push_back(ok ? pass(tag(algebra, "tangent group axioms (k <= " +
                                                     std::to_string(opts.max_tangent_order) + ")"))
                             : fail(tag(algebra, "tangent group axioms"), detail));
    }

    return results;
}

std::vector<CheckResult> check_oracle(const AlgebraPtr& algebra, const CheckOptions& opts) {
    std::vector<CheckResult> results;
    if (algebra->kind() != AlgebraKind::matrix) {
        results.push_back(pass(tag(algebra, "taylor oracle"), "skipped: needs a matrix algebra"));
        return results;
    }
    Lcg rng(opts.seed);

    bool ok = true;
    std::string detail;
    for (int k = 1; k <= opts.max_oracle_order && ok; ++k) {
        for (int t = 0; t < opts.trials && ok; ++t) {
            const JetElement a = random_jet(algebra, k, Side::right, rng);
            const JetElement b = random_jet(algebra, k, Side::right, rng);
            if (jet_multiply(a, b) != oracle_multiply(a, b)) {
                ok = false;
                detail = "multiplication disagrees with the curve model at k=" + std::to_string(k);
                break;
            }
            if (jet_inverse(a) != oracle_inverse(a)) {
                ok = false;
                detail = "inverse disagrees with the curve model at k=" + std::to_string(k);
                break;
            }
            if (trivialize(from_trivialization(a), Side::right, algebra) != a) {
                ok = false;
                detail = "trivialization round trip fails at k=" + std::to_string(k);
                break;
            }
            // left trivialization: native formulas vs converted oracle
            const JetElement al = oracle_convert_side(a, Side::left);
            const JetElement bl = oracle_convert_side(b, Side::left);
            if (jet_multiply(al, bl) != oracle_convert_side(jet_multiply(a, b), Side::left) ||
                jet_multiply(al, bl) != oracle_multiply(al, bl) ||
                jet_inverse(al) != oracle_inverse(al)) {
                ok = false;
                detail = "left trivialization disagrees at k=" + std::to_string(k);
                break;
            }
        }
    }
    results.push_back(ok ? pass(tag(algebra, "jet formulas match the taylor oracle (k <= " +
                                                 std::to_string(opts.max_oracle_order) + ")"))
                         : fail(tag(algebra, "jet formulas match the taylor oracle"), detail));
    return results;
}

std::vector<CheckResult> check_cocycles(const AlgebraPtr& algebra, const CheckOptions& opts) {
    std::vector<CheckResult> results;
    Lcg rng(opts.seed);

    {
        bool ok = true;
        std::string detail;
        for (int k = 2; k <= opts.max_cocycle_order && ok; ++k) {
            const Report r = verify_group_cocycle(algebra, k, opts.trials, opts.seed + k);
            if (!r.passed) {
                ok = false;
                detail = "k=" + std::to_string(k) + ": " + r.detail;
            }
        }
        results.push_back(ok ? pass(tag(algebra, "group cocycle identity and reconstruction (k <= " +
                                                     std::to_string(opts.max_cocycle_order) + ")"))
                             : fail(tag(algebra, "group cocycle identity and reconstruction"), detail));
    }

    // z_k decomposition one order beyond the cocycle verification range
    {
        bool ok = true;
        std::string detail;
        for (int k = 2; k <= 6 && ok; ++k)
            for (int t = 0; t < 10 && ok; ++t) {
                const JetElement a = random_jet(algebra, k, Side::right, rng);
                const JetElement b = random_jet(algebra, k, Side::right, rng);
                std::vector<AlgebraElement> xs(a.components().begin(), a.components().end() - 1);
                std::vector<AlgebraElement> ys(b.components().begin(), b.components().end() - 1);
                const JetElement low_a(algebra, k - 1, Side::right, a.group(), std::move(xs));
                const JetElement low_b(algebra, k - 1, Side::right, b.group(), std::move(ys));
                const AlgebraElement expected = a.component(k) +
                                                adjoint(a.group(), b.component(k)) +
                                                group_cocycle(k, low_a, low_b);
                if (jet_multiply(a, b).component(k) != expected) {
                    ok = false;
                    detail = "z_k decomposition fails at k=" + std::to_string(k);
                }
            }
        results.push_back(ok ? pass(tag(algebra, "z_k = x_k + Ad_g y_k + c_k (k <= 6)"))
                             : fail(tag(algebra, "z_k = x_k + Ad_g y_k + c_k (k <= 6)"), detail));
    }

    if (!algebra->leibniz()) {
        bool ok = true;
        std::string detail;
        for (int k = 2; k <= opts.max_cocycle_order && ok; ++k) {
            const Report r = verify_algebra_cocycle(algebra, k, opts.trials, opts.seed + 7 * k);
            if (!r.passed) {
                ok = false;
                detail = "k=" + std::to_string(k) + ": " + r.detail;
            }
        }
        // sigma_2 = 2[x,y]
        if (ok)
            for (int t = 0; t < opts.trials && ok; ++t) {
                const JetAlgebraElement a = random_jet_algebra(algebra, 1, rng);
                const JetAlgebraElement b = random_jet_algebra(algebra, 1, rng);
                const AlgebraElement two_bracket =
                    Rational(2) * bracket(a.component(1), b.component(1));
                if (algebra_cocycle(2, a, b) != two_bracket ||
                    polarized_group_cocycle(2, a, b) != two_bracket) {
                    ok = false;
                    detail = "sigma_2 != 2[x,y]";
                }
            }
        results.push_back(ok ? pass(tag(algebra, "algebra cocycle identity and polarization (k <= " +
                                                     std::to_string(opts.max_cocycle_order) + ")"))
                             : fail(tag(algebra, "algebra cocycle identity and polarization"), detail));
    }

    return results;
}

std::vector<CheckResult> check_golden(const CheckOptions& opts) {
    std::vector<CheckResult> results;

    // J_4 identity-fiber product, expanded termwise
    {
        bool ok = true;
        std::string detail;
        for (const char* name : {"sl2", "heis3", "so3", "leibniz2"}) {
            const AlgebraPtr algebra = AlgebraSpec::builtin(name);
            Lcg rng(opts.seed);
            for (int t = 0; t < 10 && ok; ++t) {
                std::vector<AlgebraElement> xs, ys;
                for (int n = 0; n < 4; ++n) {
                    xs.push_back(random_element(algebra, rng));
                    ys.push_back(random_element(algebra, rng));
                }
                const JetElement a = JetElement::fiber(algebra, Side::right, xs);
                const JetElement b = JetElement::fiber(algebra, Side::right, ys);
                const JetElement z = jet_multiply(a, b);
                auto ad = [](const AlgebraElement& u, const AlgebraElement& v) {
                    return bracket(u, v);
                };
                const AlgebraElement& x1 = xs[0];
                const AlgebraElement& x2 = xs[1];
                const AlgebraElement& x3 = xs[2];
                const AlgebraElement& y1 = ys[0];
                const AlgebraElement& y2 = ys[1];
                const AlgebraElement& y3 = ys[2];
                const AlgebraElement z1 = x1 + y1;
                const AlgebraElement z2 = x2 + y2 + ad(x1, y1);
                const AlgebraElement z3 = x3 + y3 + Rational(2) * ad(x1, y2) + ad(x2, y1) +
                                          ad(x1, ad(x1, y1));
                const AlgebraElement z4 = xs[3] + ys[3] + Rational(3) * ad(x1, y3) +
                                          Rational(3) * ad(x2, y2) +
                                          Rational(3) * ad(x1, ad(x1, y2)) + ad(x3, y1) +
                                          Rational(2) * ad(x2, ad(x1, y1)) +
                                          ad(x1, ad(x2, y1)) + ad(x1, ad(x1, ad(x1, y1)));
                if (z.component(1) != z1 || z.component(2) != z2 || z.component(3) != z3 ||
                    z.component(4) != z4) {
                    ok = false;
                    detail = std::string("J_4 expansion mismatch over ") + name;
                }
            }
        }
        results.push_back(ok ? pass("golden: J_4 identity-fiber product expansion")
                             : fail("golden: J_4 identity-fiber product expansion", detail));
    }

    // (e,x_3)(e,x_2)(e,x_1) = (e, x_1, x_2, x_3 + [x_2, x_1])
    {
        bool ok = true;
        std::string detail;
        for (const char* name : {"sl2", "heis3", "leibniz2"}) {
            const AlgebraPtr algebra = AlgebraSpec::builtin(name);
            Lcg rng(opts.seed + 1);
            for (int t = 0; t < 10 && ok; ++t) {
                const AlgebraElement x1 = random_element(algebra, rng);
                const AlgebraElement x2 = random_element(algebra, rng);
                const AlgebraElement x3 = random_element(algebra, rng);
                const JetElement prod = jet_multiply(
                    jet_multiply(JetElement::pure(algebra, 3, Side::right, 3, x3),
                                 JetElement::pure(algebra, 3, Side::right, 2, x2)),
                    JetElement::pure(algebra, 3, Side::right, 1, x1));
                if (prod.component(1) != x1 || prod.component(2) != x2 ||
                    prod.component(3) != x3 + bracket(x2, x1)) {
                    ok = false;
                    detail = std::string("triple pure product mismatch over ") + name;
                }
            }
        }
        results.push_back(ok ? pass("golden: (e,x_3)(e,x_2)(e,x_1) = (e,x_1,x_2,x_3+[x_2,x_1])")
                             : fail("golden: (e,x_3)(e,x_2)(e,x_1) = (e,x_1,x_2,x_3+[x_2,x_1])",
                                    detail));
    }

    // T^3 identity-fiber multiplication, expanded termwise
    {
        bool ok = true;
        std::string detail;
        for (const char* name : {"sl2", "heis3", "leibniz2"}) {
            const AlgebraPtr algebra = AlgebraSpec::builtin(name);
            Lcg rng(opts.seed + 2);
            for (int t = 0; t < 10 && ok; ++t) {
                const TangentElement a = random_tangent(algebra, 3, Side::right, rng, false);
                const TangentElement b = random_tangent(algebra, 3, Side::right, rng, false);
                const TangentElement z = tangent_multiply(a, b);
                auto at = [&](const TangentElement& e, const char* key) {
                    return e.component(parse_multi_index(key, 3));
                };
                const AlgebraElement z12 = at(a, "12") + at(b, "12") + bracket(at(a, "1"), at(b, "2"));
                const AlgebraElement z13 = at(a, "13") + at(b, "13") + bracket(at(a, "1"), at(b, "3"));
                const AlgebraElement z23 = at(a, "23") + at(b, "23") + bracket(at(a, "2"), at(b, "3"));
                const AlgebraElement z123 =
                    at(a, "123") + at(b, "123") + bracket(at(a, "1"), at(b, "23")) +
                    bracket(at(a, "2"), at(b, "13")) + bracket(at(a, "12"), at(b, "3")) +
                    bracket(at(a, "2"), bracket(at(a, "1"), at(b, "3")));
                if (at(z, "1") != at(a, "1") + at(b, "1") || at(z, "2") != at(a, "2") + at(b, "2") ||
                    at(z, "3") != at(a, "3") + at(b, "3") || at(z, "12") != z12 ||
                    at(z, "13") != z13 || at(z, "23") != z23 || at(z, "123") != z123) {
                    ok = false;
                    detail = std::string("T^3 expansion mismatch over ") + name;
                }
            }
        }
        results.push_back(ok ? pass("golden: T^3 identity-fiber multiplication expansion")
                             : fail("golden: T^3 identity-fiber multiplication expansion", detail));
    }

    // exp-curve components: trivialize(exp(x(t)) g)
    {
        bool ok = true;
        std::string detail;
        for (const char* name : {"sl2", "heis3"}) {
            const AlgebraPtr algebra = AlgebraSpec::builtin(name);
            Lcg rng(opts.seed + 3);
            for (int t = 0; t < 10 && ok; ++t) {
                std::vector<AlgebraElement> xs;
                for (int n = 0; n < 4; ++n) xs.push_back(random_element(algebra, rng));
                const int size = algebra->basis()[0].rows();
                std::vector<RationalMatrix> coeffs(5, RationalMatrix(size, size));
                for (int n = 1; n <= 4; ++n)
                    coeffs[static_cast<std::size_t>(n)] = algebra->realize(xs[static_cast<std::size_t>(n) - 1].coeffs());
                const MatrixJet xjet(4, std::move(coeffs));
                const GroupPoint g = random_group_point(algebra, rng);
                const MatrixJet curve =
                    mjet_mul(exp_jet(xjet), MatrixJet::constant(4, g.matrix_value()));
                const JetElement triv = trivialize(curve, Side::right, algebra);
                const Rational half(1L, 2L);
                const AlgebraElement expected3 = xs[2] + half * bracket(xs[0], xs[1]);
                const AlgebraElement expected4 = xs[3] + bracket(xs[0], xs[2]) +
                                                 half * bracket(xs[0], bracket(xs[0], xs[1]));
                if (!(triv.group() == g) || triv.component(1) != xs[0] ||
                    triv.component(2) != xs[1] || triv.component(3) != expected3 ||
                    triv.component(4) != expected4) {
                    ok = false;
                    detail = std::string("exp-curve trivialization mismatch over ") + name;
                }
            }
        }
        results.push_back(ok ? pass("golden: exp-curve jet components (x_3 + 1/2[x_1,x_2], ...)")
                             : fail("golden: exp-curve jet components (x_3 + 1/2[x_1,x_2], ...)",
                                    detail));
    }

    return results;
}

std::vector<CheckResult> check_pure(const AlgebraPtr& algebra, const CheckOptions& opts) {
    std::vector<CheckResult> results;
    Lcg rng(opts.seed);

    {
        bool ok = true;
        std::string detail;
        for (int k = 2; k <= 6 && ok; ++k)
            for (int i = 1; i <= k && ok; ++i)
                for (int j = i + 1; j <= k && ok; ++j)
                    for (int t = 0; t < 5 && ok; ++t) {
                        const AlgebraElement x = random_element(algebra, rng);
                        const AlgebraElement y = random_element(algebra, rng);
                        const JetElement closed = pure_product(algebra, k, i, x, j, y);
                        const JetElement direct =
                            jet_multiply(JetElement::pure(algebra, k, Side::right, i, x),
                                         JetElement::pure(algebra, k, Side::right, j, y));
                        if (closed != direct) {
                            ok = false;
                            detail = "closed form fails at (i,j,k)=(" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")";
                        }
                    }
        results.push_back(ok ? pass(tag(algebra, "pure-product closed form (1 <= i < j <= k <= 6)"))
                             : fail(tag(algebra, "pure-product closed form"), detail));
    }

    {
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= opts.max_tangent_order && ok; ++k)
            for (int t = 0; t < 10 && ok; ++t) {
                const TangentElement a = random_tangent(algebra, k, Side::right, rng, t % 2 == 0);
                const auto factors = factor_pure(a);  // fold-back checked inside
                const std::size_t expected =
                    ((std::size_t{1} << k) - 1) + (a.group().is_identity() ? 0 : 1);
                if (factors.size() != expected) {
                    ok = false;
                    detail = "unexpected factor count at k=" + std::to_string(k);
                }
            }
        results.push_back(ok ? pass(tag(algebra, "tangent pure factorization folds back (k <= " +
                                                     std::to_string(opts.max_tangent_order) + ")"))
                             : fail(tag(algebra, "tangent pure factorization folds back"), detail));
    }

    return results;
}

std::vector<CheckResult> check_fixed_point(const AlgebraPtr& algebra, const CheckOptions& opts) {
    std::vector<CheckResult> results;
    Lcg rng(opts.seed);

    bool ok = true;
    std::string detail;
    for (int k = 1; k <= opts.max_tangent_order && ok; ++k)
        for (int t = 0; t < opts.trials && ok; ++t) {
            const JetElement a = random_jet(algebra, k, Side::right, rng);
            const JetElement b = random_jet(algebra, k, Side::right, rng);
            const TangentElement ea = embed_jet(a);
            const TangentElement eb = embed_jet(b);
            if (!is_symmetric(ea)) {
                ok = false;
                detail = "embedding is not symmetric at k=" + std::to_string(k);
            } else if (project_jet(ea) != a) {
                ok = false;
                detail = "project(embed) != id at k=" + std::to_string(k);
            } else {
                const TangentElement prod = tangent_multiply(ea, eb);
                const TangentElement inv = tangent_inverse(ea);
                if (!is_symmetric(prod) || !is_symmetric(inv)) {
                    ok = false;
                    detail = "fixed-point set not closed at k=" + std::to_string(k);
                } else if (prod != embed_jet(jet_multiply(a, b)) ||
                           inv != embed_jet(jet_inverse(a))) {
                    ok = false;
                    detail = "embedding is not a homomorphism at k=" + std::to_string(k);
                }
            }
        }
    results.push_back(ok ? pass(tag(algebra, "S_k fixed points: subgroup isomorphic to J^kG (k <= " +
                                                 std::to_string(opts.max_tangent_order) + ")"))
                         : fail(tag(algebra, "S_k fixed points: subgroup isomorphic to J^kG"),
                                detail));
    return results;
}

std::vector<CheckResult> check_affine(const AlgebraPtr& algebra, const CheckOptions& opts) {
    std::vector<CheckResult> results;
    Lcg rng(opts.seed);

    bool ok = true;
    std::string detail;
    for (int k = 1; k <= opts.max_jet_order && ok; ++k)
        for (int t = 0; t < opts.triples && ok; ++t) {
            const JetElement x = random_jet(algebra, k, Side::right, rng, false);
            const JetElement y = random_jet(algebra, k, Side::right, rng, false);
            const JetElement y2 = random_jet(algebra, k, Side::right, rng, false);
            std::vector<AlgebraElement> sum;
            for (int n = 1; n <= k; ++n) sum.push_back(y.component(n) + y2.component(n));
            const JetElement both = jet_multiply(x, JetElement::fiber(algebra, Side::right, sum));
            const JetElement first = jet_multiply(x, y);
            const JetElement second = jet_multiply(x, y2);
            for (int n = 1; n <= k && ok; ++n)
                if (both.component(n) !=
                    first.component(n) + second.component(n) - x.component(n)) {
                    ok = false;
                    detail = "jet fiber affineness fails at k=" + std::to_string(k);
                }
        }
    // tangent fibers carry the same affine structure
    for (int k = 1; k <= 3 && ok; ++k)
        for (int t = 0; t < opts.trials && ok; ++t) {
            const TangentElement x = random_tangent(algebra, k, Side::right, rng, false);
            const TangentElement y = random_tangent(algebra, k, Side::right, rng, false);
            const TangentElement y2 = random_tangent(algebra, k, Side::right, rng, false);
            std::vector<AlgebraElement> sum;
            for (MultiIndex m = 1; m <= x.full_mask(); ++m)
                sum.push_back(y.component(m) + y2.component(m));
            const TangentElement both = tangent_multiply(
                x, TangentElement(algebra, k, Side::right, GroupPoint::identity(), sum));
            const TangentElement first = tangent_multiply(x, y);
            const TangentElement second = tangent_multiply(x, y2);
            for (MultiIndex m = 1; m <= x.full_mask() && ok; ++m)
                if (both.component(m) !=
                    first.component(m) + second.component(m) - x.component(m)) {
                    ok = false;
                    detail = "tangent fiber affineness fails at k=" + std::to_string(k);
                }
        }
    results.push_back(ok ? pass(tag(algebra, "fiber multiplication affine in the second argument"))
                         : fail(tag(algebra, "fiber multiplication affine in the second argument"),
                                detail));
    return results;
}

std::vector<CheckResult> check_all(const CheckOptions& opts) {
    std::vector<CheckResult> results = check_partitions();
    {
        const auto golden = check_golden(opts);
        results.insert(results.end(), golden.begin(), golden.end());
    }
    for (const char* name :
         {"sl2", "heis3", "so3", "nilpotent_upper(4)", "abelian(2)", "leibniz2"}) {
        const AlgebraPtr algebra = AlgebraSpec::builtin(name);
        for (auto&& suite : {check_group_axioms(algebra, opts), check_oracle(algebra, opts),
                             check_cocycles(algebra, opts), check_pure(algebra, opts),
                             check_fixed_point(algebra, opts), check_affine(algebra, opts)})
            results.insert(results.end(), suite.begin(), suite.end());
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

void print_results(std::ostream& os, const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        os << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << "\n";
    }
}

} // namespace jetgroups
