#include "qadhm/adhm/datum.hpp"

#include <stdexcept>

namespace qadhm {

namespace {

void expect_shape(const QMatrix& m, int rows, int cols, const char* name) {
    if (m.rows() != static_cast<std::size_t>(rows) || m.cols() != static_cast<std::size_t>(cols))
        throw std::invalid_argument(std::string("ADHM datum: ") + name + " must be " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

}  // namespace

ComplexADHMDatum ComplexADHMDatum::zero(int c, int r) {
    if (c < 1 || r < 1) throw std::invalid_argument("ADHM datum: c and r must be positive");
    ComplexADHMDatum d;
    d.c = c;
    d.r = r;
    d.B11 = d.B12 = d.B21 = d.B22 = QMatrix(sz(c), sz(c));
    d.i1 = d.i2 = QMatrix(sz(c), sz(r));
    d.j1 = d.j2 = QMatrix(sz(r), sz(c));
    return d;
}

void ComplexADHMDatum::validate() const {
    if (c < 1 || r < 1) throw std::invalid_argument("ADHM datum: c and r must be positive");
    expect_shape(B11, c, c, "B11");
    expect_shape(B12, c, c, "B12");
    expect_shape(B21, c, c, "B21");
    expect_shape(B22, c, c, "B22");
    expect_shape(i1, c, r, "i1");
    expect_shape(i2, c, r, "i2");
    expect_shape(j1, r, c, "j1");
    expect_shape(j2, r, c, "j2");
}

bool operator==(const ComplexADHMDatum& a, const ComplexADHMDatum& b) {
    return a.c == b.c && a.r == b.r && a.B11 == b.B11 && a.B12 == b.B12 && a.B21 == b.B21 && a.B22 == b.B22 &&
           a.i1 == b.i1 && a.i2 == b.i2 && a.j1 == b.j1 && a.j2 == b.j2;
}

RealADHMDatum RealADHMDatum::zero(int c, int r) {
    if (c < 1 || r < 1) throw std::invalid_argument("ADHM datum: c and r must be positive");
    RealADHMDatum d;
    d.c = c;
    d.r = r;
    d.B1 = d.B2 = QMatrix(sz(c), sz(c));
    d.i = QMatrix(sz(c), sz(r));
    d.j = QMatrix(sz(r), sz(c));
    return d;
}

void RealADHMDatum::validate() const {
    if (c < 1 || r < 1) throw std::invalid_argument("ADHM datum: c and r must be positive");
    expect_shape(B1, c, c, "B1");
    expect_shape(B2, c, c, "B2");
    expect_shape(i, c, r, "i");
    expect_shape(j, r, c, "j");
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

std::array<QMatrix, 3> complex_residuals(const ComplexADHMDatum& d) {
    d.validate();
    return {commutator(d.B11, d.B12) + d.i1 * d.j1, commutator(d.B21, d.B22) + d.i2 * d.j2,
            commutator(d.B11, d.B22) + commutator(d.B21, d.B12) + d.i1 * d.j2 + d.i2 * d.j1};
}

bool is_solution(const ComplexADHMDatum& d) {
    for (const auto& m : complex_residuals(d))
        if (!m.is_zero()) return false;
    return true;
}

PointDatum evaluate(const ComplexADHMDatum& d, const GaussRational& z, const GaussRational& w) {
    d.validate();
    return {z * d.B11 + w * d.B21, z * d.B12 + w * d.B22, z * d.i1 + w * d.i2, z * d.j1 + w * d.j2};
}

QMatrix residual_at(const ComplexADHMDatum& d, const GaussRational& z, const GaussRational& w) {
    auto p = evaluate(d, z, w);
    return commutator(p.B1, p.B2) + p.i * p.j;
}

std::array<QMatrix, 2> real_residuals(const RealADHMDatum& d, const GaussRational& xi) {
    d.validate();
    QMatrix B1d = dagger(d.B1), B2d = dagger(d.B2);
    return {commutator(d.B1, d.B2) + d.i * d.j,
            commutator(d.B1, B1d) + commutator(d.B2, B2d) + d.i * dagger(d.i) - dagger(d.j) * d.j -
                xi * QMatrix::identity(sz(d.c))};
}

bool is_real_solution(const RealADHMDatum& d, const GaussRational& xi) {
    auto r = real_residuals(d, xi);
    return r[0].is_zero() && r[1].is_zero();
}

ComplexADHMDatum act(const QMatrix& g, const ComplexADHMDatum& d) {
    d.validate();
    if (g.rows() != sz(d.c) || g.cols() != sz(d.c)) throw std::invalid_argument("act: g must be c x c");
    auto gi = g.inverse();
    if (!gi) throw std::invalid_argument("act: g is singular");
    ComplexADHMDatum o = d;
    o.B11 = g * d.B11 * *gi;
    o.B12 = g * d.B12 * *gi;
    o.B21 = g * d.B21 * *gi;
    o.B22 = g * d.B22 * *gi;
    o.i1 = g * d.i1;
    o.i2 = g * d.i2;
    o.j1 = d.j1 * *gi;
    o.j2 = d.j2 * *gi;
    return o;
}

ComplexADHMDatum dagger(const ComplexADHMDatum& d) {
    d.validate();
    ComplexADHMDatum o = d;
    o.B11 = dagger(d.B22);
    o.B12 = -dagger(d.B21);
    o.B21 = -dagger(d.B12);
    o.B22 = dagger(d.B11);
    o.i1 = dagger(d.j2);
    o.i2 = -dagger(d.j1);
    o.j1 = -dagger(d.i2);
    o.j2 = dagger(d.i1);
    return o;
}

bool is_real(const ComplexADHMDatum& d) { return dagger(d) == d; }

ComplexADHMDatum embed_real(const RealADHMDatum& d) {
    d.validate();
    if (!is_real_solution(d, GaussRational(0)))
        throw std::invalid_argument("embed_real: datum does not solve the real ADHM equations with xi = 0");
    ComplexADHMDatum o;
    o.c = d.c;
    o.r = d.r;
    o.B11 = d.B1;
    o.B12 = d.B2;
    o.B21 = -dagger(d.B2);
    o.B22 = dagger(d.B1);
    o.i1 = d.i;
    o.i2 = -dagger(d.j);
    o.j1 = d.j;
    o.j2 = dagger(d.i);
    return o;
}

}  // namespace qadhm
