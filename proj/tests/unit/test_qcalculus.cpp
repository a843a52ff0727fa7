#include "doctest.h"
#include "qadhm/exactcore/qnumbers.hpp"
#include "qadhm/qcalculus/checks.hpp"

using namespace qadhm;

namespace {

NCPoly x(int g) { return NCPoly::gen(Chart::I, g); }
QLaurent q(int e) { return QLaurent::q(e); }

const Calculus& calc(PChoice p) {
    static const Calculus cq(PChoice::Q), cqi(PChoice::QInv);
    return p == PChoice::Q ? cq : cqi;
}

// dx_b x_a as a form, straight from the table
NCForm rule_form(const Calculus& c, int b, int a) { return c.times(NCForm::dx(b), x(a)); }
NCForm xdx(int a, int b) { return NCForm::from_poly(x(a), 1u << b); }

}  // namespace

TEST_CASE("table is unique and charge sparse") {
    for (PChoice p : {PChoice::Q, PChoice::QInv}) {
        const auto& t = calc(p).table();
        CHECK(t.unknowns == 36);
        CHECK(t.rank == 36);
        for (int b = 0; b < 4; ++b)
            for (int a = 0; a < 4; ++a)
                for (const auto& r : t.rule(b, a)) CHECK(charge_allowed(b, a, r.c, r.d));
    }
}

TEST_CASE("frozen rules, p = q") {
    const auto& c = calc(PChoice::Q);
    QLaurent t = q(2) - QLaurent(1);
    CHECK(rule_form(c, 0, 0) == q(2) * xdx(0, 0));
    CHECK(rule_form(c, 0, 2) == xdx(2, 0));
    CHECK(rule_form(c, 1, 0) == xdx(0, 1) + t * xdx(1, 0));
    CHECK(rule_form(c, 1, 2) == q(-2) * xdx(2, 1) + (t * q(-2)) * xdx(3, 0));
    CHECK(rule_form(c, 2, 1) == q(2) * xdx(1, 2) + t * xdx(3, 0));
    CHECK(rule_form(c, 3, 0) == xdx(0, 3) + t * xdx(1, 2) + (t * q(-2)) * xdx(2, 1) + (t * t * q(-2)) * xdx(3, 0));
    CHECK(rule_form(c, 3, 3) == q(2) * xdx(3, 3));
}

TEST_CASE("frozen rules, p = 1/q") {
    const auto& c = calc(PChoice::QInv);
    QLaurent t = q(2) - QLaurent(1);
    CHECK(rule_form(c, 0, 0) == q(-2) * xdx(0, 0));
    CHECK(rule_form(c, 0, 1) == xdx(1, 0) - (t * q(-2)) * xdx(0, 1));
    CHECK(rule_form(c, 0, 3) == xdx(3, 0) + (t * t * q(-2)) * xdx(0, 3) - t * xdx(1, 2) - (t * q(-2)) * xdx(2, 1));
    CHECK(rule_form(c, 2, 1) == q(2) * xdx(1, 2) - t * xdx(0, 3));
    CHECK(rule_form(c, 3, 3) == q(-2) * xdx(3, 3));
}

TEST_CASE("wedge rules") {
    for (PChoice p : {PChoice::Q, PChoice::QInv}) {
        const auto& c = calc(p);
        CHECK(c.table().squares_forced);
        auto w = [&](int b, int a) { return c.reduce_word({b, a}); };
        CHECK(w(1, 0) == std::map<unsigned, QLaurent>{{3u, -q(-2)}});
        CHECK(w(2, 0) == std::map<unsigned, QLaurent>{{5u, QLaurent(-1)}});
        CHECK(w(2, 1) == std::map<unsigned, QLaurent>{{9u, q(2) - QLaurent(1)}, {6u, -q(2)}});
        CHECK(w(3, 2) == std::map<unsigned, QLaurent>{{12u, -q(-2)}});
        CHECK(w(0, 0).empty());
    }
}

TEST_CASE("oracle identities") {
    for (PChoice p : {PChoice::Q, PChoice::QInv}) {
        auto checks = verify_table(calc(p), 3);
        for (const auto& ch : checks) {
            INFO(to_string(p) << " " << ch.name << ": " << ch.detail);
            if (ch.name == "dx21^dx12 = -dx12^dx21")
                CHECK_FALSE(ch.ok);  // the reduction carries an extra (q^2-1) dx11^dx22
            else
                CHECK(ch.ok);
        }
    }
}

TEST_CASE("partial derivative examples") {
    for (PChoice p : {PChoice::Q, PChoice::QInv}) {
        const auto& c = calc(p);
        CHECK(c.partial(0, x(0)) == NCPoly::one(Chart::I));
        CHECK(c.partial(0, x(3)).is_zero());
        CHECK(c.partial(0, x(2)).is_zero());
        CHECK(partial_commutation(c, 3).ok);
        CHECK(laplacian_orderings(c, 4).ok);
        CHECK(del_det(c, 3).ok);
        CHECK(propf(c, 3).ok);
    }
}

TEST_CASE("harmonics and eigenvalues") {
    for (PChoice p : {PChoice::Q, PChoice::QInv}) {
        const auto& c = calc(p);
        CHECK(harmonics_annihilated(c, 4).ok);
        CHECK(partials_on_harmonics(c, 3).ok);
        CHECK(delta_eigen(c, 3).ok);
        CHECK(tilde_eigen(c, 2, 2).ok);
        auto adj = eigen_adjudication(c, 2, 2);
        INFO(adj.detail);
        CHECK(adj.ok);
        for (int d = 0; d <= 4; ++d) CHECK(harmonic_kernel(c, d).ok);
        // box det = p^-1 [2]
        CHECK(laplacian(c, NCPoly::det(Chart::I)) == p_pow(p, -1) * NCPoly::scalar(Chart::I, qint(2)));
    }
    // the k = 1 recurrence resolves the two printed eigenvalue formulas
    for (PChoice p : {PChoice::Q, PChoice::QInv})
        for (int l2 = 0; l2 <= 6; ++l2) {
            QLaurent rec = p_pow(p, 2) * delta_eigenvalue(p, l2) + p_pow(p, -2) + QLaurent(1);
            CHECK(rec == tilde_eigenvalue(p, 1, l2));
            CHECK(rec != tilde_eigenvalue_alt(p, 1, l2));
        }
}

TEST_CASE("hodge star") {
    const auto& c = calc(PChoice::Q);
    auto s0 = hodge_star(c, NCForm::from_poly(NCPoly::one(Chart::I), 0));
    CHECK(s0.form == q(-1) * NCForm::vol());
    auto s1 = hodge_star(c, NCForm::dx(0));
    CHECK(s1.denom == qint(2));
    CHECK(s1.form == -NCForm::from_poly(NCPoly::one(Chart::I), 7u));
    CHECK_THROWS(hodge_star(c, c.wedge(NCForm::dx(0), NCForm::dx(1))));
    // 3-form star inverts the 1-form star
    for (int a = 0; a < 4; ++a) {
        auto s = hodge_star(c, NCForm::dx(a));
        auto back = hodge_star(c, s.form);
        CHECK(back.form == (s.denom * back.denom) * NCForm::dx(a));
    }
    NCPoly f = x(0) * x(3);
    CHECK(laplace_via_star(c, f) == laplacian(c, f));
    for (PChoice p : {PChoice::Q, PChoice::QInv}) CHECK(star_laplace(calc(p), 2, 2).ok);
}

TEST_CASE("self-dual splitting") {
    const auto& c = calc(PChoice::Q);
    CHECK(asd_membership(c.wedge(NCForm::dx(0), NCForm::dx(2))).kind == Duality::ASD);
    CHECK(asd_membership(c.wedge(NCForm::dx(0), NCForm::dx(1))).kind == Duality::SD);
    auto r = asd_membership(c.wedge(NCForm::dx(0), NCForm::dx(3)));
    CHECK(r.kind == Duality::Mixed);
    const QLaurent half(GaussRational(mpq_class(1, 2)));
    CHECK(r.sd[2] == NCPoly::scalar(Chart::I, half));
    CHECK(r.asd[2] == NCPoly::scalar(Chart::I, half));
}

TEST_CASE("wedge product with coefficients") {
    const auto& c = calc(PChoice::Q);
    // (x11 dx12) ^ (x21 dx22) computed two ways
    NCForm a = NCForm::from_poly(x(0), 2u), b = NCForm::from_poly(x(2), 8u);
    NCForm lhs = c.wedge(a, b);
    NCForm rhs = x(0) * c.wedge(c.times(NCForm::dx(1), x(2)), NCForm::dx(3));
    CHECK(lhs == rhs);
    // associativity on a few triples
    NCForm u = NCForm::from_poly(x(1), 1u), v = NCForm::from_poly(x(3), 4u), w = NCForm::from_poly(x(0) * x(2), 8u);
    CHECK(c.wedge(c.wedge(u, v), w) == c.wedge(u, c.wedge(v, w)));
}

TEST_CASE("penrose scalar transform") {
    CHECK(penrose_scalar({CechMonomial{1, 0, 0, 1, 1}}) == NCPoly::one(Chart::I));
    CHECK(penrose_scalar({CechMonomial{1, 1, 0, 2, 1}}) == x(0));
    CHECK(penrose_scalar({CechMonomial{1, 1, 1, 2, 2}}) == x(0) * x(3) + q(2) * (x(1) * x(2)));
    CHECK_THROWS(penrose_scalar({CechMonomial{1, 1, 1, 1, 2}}));
    CHECK_THROWS(penrose_scalar({CechMonomial{1, 2, 0, 0, 2}}));
    CHECK(penrose_bijection(calc(PChoice::Q), 3).ok);
}

TEST_CASE("conjugation identity") {
    for (PChoice p : {PChoice::Q, PChoice::QInv})
        for (int k = 0; k <= 4; ++k)
            for (int l2 = 0; l2 <= 4; ++l2) CHECK(conjugation_identity_check(p, k, l2));
    CHECK(tilde_eigenvalue(PChoice::Q, 0, 3).is_zero());
    CHECK(tilde_eigenvalue(PChoice::Q, 1, 0) == q(-1) * qint(2));
    CHECK(tilde_eigenvalue(PChoice::Q, 2, 2) == q(3) * qint(2) * qint(5));
}
