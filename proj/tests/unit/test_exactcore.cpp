#include <random>

#include "doctest.h"
#include "qadhm/exactcore/gauss_rational.hpp"
#include "qadhm/exactcore/matrix.hpp"
#include "qadhm/exactcore/modp.hpp"
#include "qadhm/exactcore/pencil.hpp"
#include "qadhm/exactcore/polygcd.hpp"
#include "qadhm/exactcore/qnumbers.hpp"
#include "qadhm/exactcore/qrat.hpp"

using namespace qadhm;

namespace {

GaussRational rnd_g(std::mt19937_64& g) {
    std::uniform_int_distribution<long> d(-6, 6), den(1, 5);
    return GaussRational(mpq_class(d(g), den(g)), mpq_class(d(g), den(g))) ;
}

QLaurent rnd_l(std::mt19937_64& g) {
    std::uniform_int_distribution<int> e(-3, 3), n(0, 3);
    std::vector<QLaurent::Term> t;
    int k = n(g);
    for (int i = 0; i < k; ++i) t.emplace_back(e(g), rnd_g(g));
    return QLaurent::from_terms(t);
}

QRat rnd_r(std::mt19937_64& g) {
    QLaurent d = rnd_l(g);
    if (d.is_zero()) d = QLaurent(1);
    return QRat(rnd_l(g), d);
}

}  // namespace

TEST_CASE("gauss rational strings") {
    CHECK(GaussRational(1).str() == "1/1");
    CHECK(GaussRational(mpq_class(1, 2), mpq_class(-3, 4)).str() == "1/2-3/4*i");
    CHECK(GaussRational::parse("1/2-3/4*i") == GaussRational(mpq_class(1, 2), mpq_class(-3, 4)));
    CHECK(GaussRational::parse("-i") == -GaussRational::I());
    CHECK(GaussRational::parse("2*i") == GaussRational(mpq_class(0), mpq_class(2)));
    CHECK(GaussRational::parse("3") == GaussRational(3));
    CHECK(GaussRational::parse("-2/4") == GaussRational(-1, 2));
    CHECK_THROWS(GaussRational::parse("x"));
    CHECK((GaussRational::I() * GaussRational::I()) == GaussRational(-1));
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 g(7);
    for (int t = 0; t < 60; ++t) {
        GaussRational a = rnd_g(g), b = rnd_g(g), c = rnd_g(g);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussRational(1));
        QRat x = rnd_r(g), y = rnd_r(g), z = rnd_r(g);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) - y == x);
        if (!x.is_zero()) CHECK(x * x.inverse() == QRat(1));
    }
}

TEST_CASE("qrat canonical form") {
    QLaurent qm1 = QLaurent::q(1) - QLaurent(1);
    QLaurent qq = QLaurent::q(2) - QLaurent(1);
    QRat r(qq, qm1);  // (q^2-1)/(q-1) = q+1
    CHECK(r.is_laurent());
    CHECK(r.as_laurent() == QLaurent::q(1) + QLaurent(1));
    QRat s(QLaurent(1), QLaurent::q(-2) * QLaurent(GaussRational(3)));
    CHECK(s.as_laurent() == QLaurent::monomial(GaussRational(1, 3), 2));
    QRat u(QLaurent(1), qm1.shifted(3));
    CHECK(u.den() == qm1);
    CHECK(u.num() == QLaurent::q(-3));
}

TEST_CASE("q-numbers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == QLaurent(1));
    CHECK(qint(2) == QLaurent::q(1) + QLaurent::q(-1));
    CHECK(qbrace(2) == QLaurent::q(2) + QLaurent(1));
    for (int n = 1; n <= 12; ++n) {
        CHECK(qint(-n) == -qint(n));
        CHECK(qbrace(n) == qint(n).shifted(n - 1));
        // defining quotient
        QLaurent lhs = qint(n) * (QLaurent::q(1) - QLaurent::q(-1));
        CHECK(lhs == QLaurent::q(n) - QLaurent::q(-n));
    }
    CHECK(qbinom(4, 2) == QLaurent::from_terms({{0, 1}, {2, 1}, {4, 2}, {6, 1}, {8, 1}}));
    CHECK_THROWS(qbinom(2, 3));
    CHECK_THROWS(qbinom(2, -1));
    CHECK(qfact(3) == qint(2) * qint(3));
    // brace binomial is a ratio of brace factorials
    for (int n = 0; n <= 7; ++n)
        for (int r = 0; r <= n; ++r) {
            QLaurent num(1), den(1);
            for (int k = 1; k <= n; ++k) num *= qbrace(k);
            for (int k = 1; k <= r; ++k) den *= qbrace(k);
            for (int k = 1; k <= n - r; ++k) den *= qbrace(k);
            CHECK(num.divide_exact(den) == qbinom(n, r));
        }
}

TEST_CASE("rank kernel solve") {
    QMatrix id = QMatrix::identity(3);
    CHECK(id.rank() == 3);
    CHECK(QMatrix(3, 4).rank() == 0);
    QMatrix ones = QMatrix::from_rows({{1, 1}, {1, 1}});
    QMatrix k = ones.kernel();
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == -k(1, 0));
    CHECK((ones * k).is_zero());
    auto sol = ones.solve(QMatrix::from_rows({{2}, {2}}));
    REQUIRE(sol);
    CHECK((ones * *sol) == QMatrix::from_rows({{2}, {2}}));
    CHECK_FALSE(ones.solve(QMatrix::from_rows({{1}, {2}})));
    QMatrix a = QMatrix::from_rows({{2, 1}, {5, 3}});
    CHECK(a.det() == GaussRational(1));
    CHECK((a * *a.inverse()) == QMatrix::identity(2));
    CHECK_FALSE(ones.inverse());
}

TEST_CASE("rank equals rank of transpose; mod p bound") {
    std::mt19937_64 g(11);
    std::uniform_int_distribution<int> dim(1, 5), z(0, 2);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = static_cast<std::size_t>(dim(g)), c = static_cast<std::size_t>(dim(g));
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (z(g) != 0) m(i, j) = rnd_g(g);
        if (t % 3 == 0 && r > 1) m.set_block(r - 1, 0, m.block(0, 0, 1, c));  // force dependence
        CHECK(m.rank() == m.transpose().rank());
        CHECK(m.kernel().cols() == c - m.rank());
        auto mp = m.map([](const GaussRational& x) { return to_zp(x); });
        CHECK(mp.rank() <= m.rank());
    }
}

TEST_CASE("qrat matrices") {
    QLaurent q = QLaurent::q(1);
    Matrix<QRat> m = Matrix<QRat>::from_rows({{QRat(q), QRat(1)}, {QRat(1), QRat(q.invert_q())}});
    CHECK(m.rank() == 1);  // det = 1 - 1
    Matrix<QRat> n = Matrix<QRat>::from_rows({{QRat(q), QRat(1)}, {QRat(1), QRat(q)}});
    CHECK(n.rank() == 2);
    CHECK(n.det() == QRat(q * q - QLaurent(1)));
    auto inv = n.inverse();
    REQUIRE(inv);
    CHECK((n * *inv) == Matrix<QRat>::identity(2));
}

TEST_CASE("zp arithmetic") {
    Zp i = Zp::sqrt_minus_one();
    CHECK(i * i == Zp(-1));
    CHECK(to_zp(GaussRational::I()) == i);
    Zp t = random_zp(3);
    CHECK(to_zp(qint(3), t) == t * t + Zp(1) + t.inverse() * t.inverse());
    CHECK(Zp(5) * Zp(5).inverse() == Zp(1));
}

TEST_CASE("pencil evaluation is the linear combination") {
    Pencil<GaussRational> p({"z", "w"}, 2, 2);
    p.coeff("z") = QMatrix::from_rows({{1, 0}, {0, 2}});
    p.coeff("w") = QMatrix::from_rows({{0, 1}, {3, 0}});
    p.constant = QMatrix::from_rows({{0, 0}, {0, 1}});
    GaussRational z(2), w = GaussRational::I();
    QMatrix naive = p.constant + z * p.coeff("z") + w * p.coeff("w");
    CHECK(p.evaluate({z, w}) == naive);
    CHECK_THROWS(p.evaluate({z}));
}

TEST_CASE("homogeneous gcd") {
    HomPoly z = HomPoly::z(), w = HomPoly::w();
    CHECK(homogeneous_gcd({z, w}).deg == 0);
    HomPoly g = homogeneous_gcd({z * w, z * z});
    CHECK(g == z);
    HomPoly s = z * z + w * w;
    HomPoly lin = HomPoly::linear(GaussRational(1), GaussRational::I());
    CHECK(homogeneous_gcd({s, lin}) == lin);
    CHECK(homogeneous_gcd({w * w, w * z}) == w);
    CHECK_THROWS(homogeneous_gcd({}));
    auto pr = projective_roots(s);
    CHECK(pr.roots.size() == 2);
    for (const auto& [pt, m] : pr.roots) CHECK(s.eval(pt.first, pt.second).is_zero());
    HomPoly irr = z * z + HomPoly::constant(GaussRational(2)) * w * w;
    auto pi = projective_roots(irr * w);
    CHECK(pi.roots.size() == 1);
    CHECK(pi.rest.degree() == 2);
    CHECK(pi.factored == "w*(z^2 + 2*w^2)");
}

TEST_CASE("gaussian roots with denominators and multiplicity") {
    // (3t - (1+2i))^2 (t + 1/2)
    UPoly a(std::vector<GaussRational>{-GaussRational(mpq_class(1), mpq_class(2)), GaussRational(3)});
    UPoly b(std::vector<GaussRational>{GaussRational(1, 2), GaussRational(1)});
    auto roots = gaussian_roots(a * a * b);
    REQUIRE(roots.size() == 2);
    int total = 0;
    for (auto& [r, m] : roots) total += m;
    CHECK(total == 3);
}

TEST_CASE("hom det") {
    HomPoly z = HomPoly::z(), w = HomPoly::w();
    HomPoly d = hom_det({{z, w}, {w, z}});
    CHECK(d == z * z - w * w);
    CHECK(hom_det({{z, z}, {w, w}}).is_zero());
}
