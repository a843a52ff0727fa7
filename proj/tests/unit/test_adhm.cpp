#include "doctest.h"
#include "qadhm/adhm/generators.hpp"
#include "qadhm/adhm/stability.hpp"

using namespace qadhm;

namespace {

GaussRational g(long v) { return GaussRational(v); }

QMatrix rowv(std::initializer_list<long> v) {
    QMatrix m(1, v.size());
    std::size_t k = 0;
    for (long x : v) m(0, k++) = g(x);
    return m;
}

ComplexADHMDatum remark_r2() {
    auto d = ComplexADHMDatum::zero(1, 2);
    d.i1 = rowv({1, 0});
    d.i2 = rowv({0, 1});
    return d;
}

ComplexADHMDatum remark_r3() {
    auto d = ComplexADHMDatum::zero(1, 3);
    d.i1 = rowv({1, 0, 0});
    d.i2 = rowv({0, 1, 0});
    d.j1 = rowv({0, 0, 1}).transpose();
    return d;
}

RealADHMDatum real_c1r2() {
    auto d = RealADHMDatum::zero(1, 2);
    d.i = rowv({1, 0});
    d.j = rowv({0, 1}).transpose();
    return d;
}

}  // namespace

TEST_CASE("residuals") {
    auto d = remark_r2();
    CHECK(is_solution(d));
    d.j1 = rowv({1, 0}).transpose();
    auto res = complex_residuals(d);
    CHECK(res[0] == d.i1 * d.j1);
    CHECK_FALSE(res[0].is_zero());

    auto rd = real_c1r2();
    CHECK(is_real_solution(rd, g(0)));
    auto z = RealADHMDatum::zero(1, 1);
    CHECK(is_real_solution(z, g(0)));
    CHECK(real_residuals(z, g(1))[1](0, 0) == g(-1));
    CHECK_THROWS(complex_residuals(ComplexADHMDatum{}));
}

TEST_CASE("pointwise stability") {
    QMatrix Z1(1, 1), Z2(2, 2);
    CHECK(is_stable(Z1, Z1, rowv({1})).ok);
    CHECK_FALSE(is_stable(Z1, Z1, rowv({0})).ok);
    QMatrix i(2, 1);
    i(0, 0) = g(1);
    auto w = is_stable(Z2, Z2, i);
    CHECK_FALSE(w.ok);
    CHECK(w.witness == i);
    CHECK(is_costable(Z1, Z1, rowv({1})).ok);
    CHECK_FALSE(is_costable(Z1, Z1, rowv({0})).ok);
    // a nilpotent shift makes e1 cyclic
    QMatrix N(2, 2);
    N(1, 0) = g(1);
    CHECK(is_stable(N, Z2, i).ok);
    auto cw = is_costable(N, Z2, i.transpose());
    CHECK_FALSE(cw.ok);
    CHECK(cw.witness.cols() == 1);
    CHECK((N * cw.witness).rank() <= 1);
    CHECK((i.transpose() * cw.witness).is_zero());
}

TEST_CASE("taxonomy of the two degenerate examples") {
    auto a = classify(remark_r2());
    CHECK(a.stable_everywhere);
    CHECK(a.semistable);
    CHECK_FALSE(a.costable_everywhere);
    CHECK_FALSE(a.semiregular);
    CHECK_FALSE(a.regular);
    CHECK(a.stability_gcd == "1");

    auto b = classify(remark_r3());
    CHECK(b.stable_everywhere);
    CHECK(b.semiregular);
    CHECK_FALSE(b.regular);
    // j~ = z (0,0,1)^T vanishes only at [0:1]
    REQUIRE(b.costable_failing_points.size() == 1);
    CHECK(b.costable_failing_points[0] == ProjPoint{g(0), g(1)});
}

TEST_CASE("rank one charge one has no C-stable solution") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto d = random_rc1_solution(s);
        REQUIRE(is_solution(d));
        auto rep = classify(d);
        CHECK_FALSE(rep.stable_everywhere);
        if (d.i1.is_zero() && d.i2.is_zero()) {
            CHECK_FALSE(rep.semistable);
        } else {
            // the failing point is [-i2 : i1]
            REQUIRE(rep.failing_points.size() == 1);
            auto [z, w] = rep.failing_points[0];
            CHECK(is_zero(z * d.i1(0, 0) + w * d.i2(0, 0)));
        }
    }
    CHECK_THROWS(c1_generator(1, 0));
}

TEST_CASE("derivative rank and dimension") {
    auto d = remark_r2();
    CHECK(derivative_matrix(d).rows() == 3);
    CHECK(derivative_matrix(d).cols() == 12);
    CHECK(derivative_rank(d) == 3);
    CHECK(dimension_audit(d) == 8);
    CHECK(derivative_rank(ComplexADHMDatum::zero(1, 2)) < 3);
    for (auto [r, c] : {std::pair{2, 1}, {2, 2}, {3, 1}})
        for (std::uint64_t s = 0; s < 3; ++s) {
            auto st = random_c_stable(c, r, s);
            CHECK(derivative_rank(st) == static_cast<std::size_t>(3 * c * c));
            CHECK(dimension_audit(st) == 4 * r * c);
        }
}

TEST_CASE("surjectivity does not force C-stability") {
    // i~ = (z + 2w) (1,0) vanishes at [-2:1], yet the derivative is onto
    auto d = ComplexADHMDatum::zero(1, 2);
    d.i1 = rowv({1, 0});
    d.i2 = rowv({2, 0});
    d.j1 = d.j2 = rowv({0, 1}).transpose();
    REQUIRE(is_solution(d));
    auto rep = classify(d);
    CHECK_FALSE(rep.stable_everywhere);
    REQUIRE(rep.failing_points.size() == 1);
    CHECK(rep.failing_points[0] == ProjPoint{g(-2), g(1)});
    REQUIRE(rep.witness_subspace);
    CHECK(rep.witness_subspace->cols() == 0);
    CHECK(derivative_rank(d) == 3);
}

TEST_CASE("stabilizer") {
    QMatrix Z1(1, 1), Z2(2, 2);
    CHECK(stabilizer_dim(Z1, Z1, QMatrix(1, 1)) == 1);
    CHECK(stabilizer_dim(Z2, Z2, QMatrix(2, 1)) == 4);
    auto st = random_c_stable(2, 2, 7);
    auto p = evaluate(st, g(1), g(0));
    CHECK(stabilizer_dim(p.B1, p.B2, p.i) == 0);
}

TEST_CASE("embedding of real data") {
    auto e = embed_real(real_c1r2());
    CHECK(e.i2 == rowv({0, -1}));
    CHECK(e.j2 == rowv({1, 0}).transpose());
    CHECK(is_solution(e));
    CHECK(is_real(e));
    CHECK(classify(e).regular);
    CHECK_THROWS(embed_real([] {
        auto d = real_c1r2();
        d.j = rowv({1, 0}).transpose();
        return d;
    }()));
    for (auto [r, c] : {std::pair{2, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        auto rd = random_real_regular(c, r, 11);
        auto cd = embed_real(rd);
        CHECK(is_real(cd));
        CHECK(classify(cd).regular);
    }
}

TEST_CASE("real strata") {
    CHECK(real_stratify(real_c1r2(), g(0)) == RealStratum::Regular);
    CHECK(real_stratify(RealADHMDatum::zero(1, 2), g(0)) == RealStratum::Irregular);
    // xi > 0 with r = 1: i i^+ = xi, j = 0
    auto d = RealADHMDatum::zero(1, 1);
    d.i(0, 0) = g(1);
    CHECK(real_stratify(d, g(1)) == RealStratum::Stable);
    CHECK(d.j.is_zero());
    CHECK_THROWS(real_stratify(d, g(0)));
}

TEST_CASE("c = 1 generator") {
    for (int r = 2; r <= 4; ++r)
        for (std::uint64_t s = 0; s < 5; ++s) {
            auto d = c1_generator(r, s);
            CHECK(is_solution(d));
            CHECK(classify(d).stable_everywhere);
            CHECK(c1_generator(r, s) == d);
        }
    std::array<GaussRational, 4> B{};
    CHECK(c1_candidate({g(1), g(0)}, {g(0), g(1)}, {g(0), g(0)}, {g(0), g(0)}, B));
    CHECK_FALSE(c1_candidate({g(1), g(0)}, {g(0), g(1)}, {g(0), g(1)}, {g(1), g(0)}, B));
}

TEST_CASE("group action and duality") {
    SeededRng rng(5);
    for (std::uint64_t s = 0; s < 4; ++s) {
        auto d = s % 2 ? random_c_stable(2, 2, s) : random_non_c_stable(2, 3, s);
        auto gm = rng.invertible(2);
        auto gd = act(gm, d);
        auto r0 = complex_residuals(d), r1 = complex_residuals(gd);
        auto gi = *gm.inverse();
        for (int k = 0; k < 3; ++k) CHECK(r1[k] == gm * r0[k] * gi);
        auto a = classify(d), b = classify(gd);
        CHECK(a.stable_everywhere == b.stable_everywhere);
        CHECK(a.costable_everywhere == b.costable_everywhere);
        CHECK(a.stability_gcd == b.stability_gcd);
        CHECK(a.failing_points == b.failing_points);
        if (!a.stable_everywhere && a.semistable) CHECK(a.failing_points.size() <= 4);
        auto p = evaluate(d, g(1), g(1));
        CHECK(is_stable(p.B1, p.B2, p.i).ok == is_costable(p.B1.transpose(), p.B2.transpose(), p.i.transpose()).ok);
    }
}

TEST_CASE("ordered monomials agree with word closure") {
    SeededRng rng(3);
    for (int c = 1; c <= 3; ++c)
        for (int t = 0; t < 10; ++t) {
            auto B1 = rng.matrix(c, c), B2 = rng.matrix(c, c);
            if (t % 3 == 0) B2 = QMatrix(c, c);
            auto i = rng.matrix(c, 1);
            bool closure = is_stable(B1, B2, i).ok;
            bool monomial = ordered_monomial_map(B1, B2, i).rank() == static_cast<std::size_t>(c);
            CHECK(closure == monomial);
        }
}
