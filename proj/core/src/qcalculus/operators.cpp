#include "qadhm/qcalculus/operators.hpp"

#include <stdexcept>

#include "qadhm/exactcore/matrix.hpp"
#include "qadhm/exactcore/qnumbers.hpp"

namespace qadhm {

namespace {

NCPoly det_x() { return NCPoly::det(Chart::I); }

// *dx_a up to the common factor -1/[2]: the reduced 3-form word
const std::vector<int>& star_word(int a) {
    static const std::vector<int> words[4] = {{0, 1, 2}, {1, 3, 0}, {2, 0, 3}, {3, 2, 1}};
    return words[a];
}

const unsigned three_masks[4] = {7u, 11u, 13u, 14u};

}  // namespace

NCPoly laplacian(const Calculus& c, const NCPoly& f) {
    return c.partial(0, c.partial(3, f)) - c.partial(2, c.partial(1, f));
}

NCPoly laplacian_alt(const Calculus& c, const NCPoly& f) {
    return c.partial(3, c.partial(0, f)) - c.partial(1, c.partial(2, f));
}

NCPoly delta_op(const Calculus& c, const NCPoly& f) {
    auto P = c.partials(f);
    NCPoly out(Chart::I);
    for (int a = 0; a < 4; ++a) out += P[static_cast<std::size_t>(a)] * NCPoly::gen(Chart::I, a);
    return out;
}

NCPoly tilde_laplacian(const Calculus& c, const NCPoly& f) { return laplacian(c, f) * det_x(); }
NCPoly tilde_laplacian_left(const Calculus& c, const NCPoly& f) { return det_x() * laplacian(c, f); }

QLaurent delta_eigenvalue(PChoice p, int two_l) { return p_pow(p, two_l - 1) * qint(two_l); }

QLaurent tilde_eigenvalue(PChoice p, int k, int two_l) {
    return p_pow(p, 2 * k + two_l - 3) * qint(k) * qint(k + two_l + 1);
}

QLaurent tilde_eigenvalue_alt(PChoice p, int k, int two_l) {
    return p_pow(p, 2 * k + two_l - 3) * qint(k) * qint(k + two_l + 2);
}

std::optional<QRat> eigen_ratio(const NCPoly& f, const NCPoly& g) {
    if (f.is_zero()) throw std::invalid_argument("eigen_ratio: zero vector");
    const auto& [k0, f0] = *f.terms().begin();
    QLaurent g0 = g.coeff(k0);
    // g == (g0/f0) f  <=>  f0 g == g0 f
    if (f0 * g != g0 * f) return std::nullopt;
    return QRat(g0, f0);
}

StarResult hodge_star(const Calculus& c, const NCForm& w) {
    StarResult r;
    switch (w.degree()) {
        case 0:
            r.form = NCForm::from_poly(QLaurent::q(-1) * w.component(0), 15u);
            return r;
        case 1: {
            r.form = NCForm(3);
            for (int a = 0; a < 4; ++a) {
                NCPoly f = w.component(1u << a);
                if (f.is_zero()) continue;
                for (const auto& [m, cm] : c.reduce_word(star_word(a))) r.form += NCForm::from_poly((-cm) * f, m);
            }
            r.denom = qint(2);
            return r;
        }
        case 3: {
            // invert the 1-form star: S[t][a] is the mask-t coefficient of [2] * dx_a
            Matrix<QRat> S(4, 4);
            for (int a = 0; a < 4; ++a)
                for (const auto& [m, cm] : c.reduce_word(star_word(a)))
                    for (std::size_t t = 0; t < 4; ++t)
                        if (three_masks[t] == m) S(t, static_cast<std::size_t>(a)) = QRat(-cm);
            auto inv = S.inverse();
            if (!inv) throw std::runtime_error("hodge_star: 1-form star is not invertible");
            QRat det = S.det();
            if (!det.is_laurent()) throw std::runtime_error("hodge_star: unexpected determinant");
            r.form = NCForm(1);
            for (std::size_t t = 0; t < 4; ++t) {
                NCPoly f = w.component(three_masks[t]);
                if (f.is_zero()) continue;
                for (std::size_t a = 0; a < 4; ++a) {
                    QRat e = QRat(qint(2)) * det * (*inv)(a, t);
                    if (e.is_zero()) continue;
                    r.form += NCForm::from_poly(e.as_laurent() * f, 1u << a);
                }
            }
            r.denom = det.as_laurent();
            return r;
        }
        case 4:
            r.form = NCForm::from_poly(QLaurent::q(1) * w.component(15u), 0u);
            return r;
        default:
            throw std::invalid_argument("hodge_star: the star on 2-forms is not defined here");
    }
}

NCPoly laplace_via_star(const Calculus& c, const NCPoly& f) {
    StarResult s1 = hodge_star(c, c.d(f));
    NCForm top = c.d(s1.form);
    StarResult s4 = hodge_star(c, top);
    NCPoly num = s4.form.component(0);
    NCPoly out(Chart::I);
    for (const auto& [k, v] : num.terms()) out.add_term(k, v.divide_exact(s1.denom));
    return out;
}

std::string to_string(Duality d) {
    switch (d) {
        case Duality::SD: return "SD";
        case Duality::ASD: return "ASD";
        default: return "mixed";
    }
}

DualityReport asd_membership(const NCForm& w) {
    if (w.degree() != 2 && !w.is_zero()) throw std::invalid_argument("asd_membership: expects a 2-form");
    DualityReport r;
    const QLaurent half(GaussRational(mpq_class(1, 2)));
    NCPoly c03 = w.component(9u), c12 = w.component(6u);
    r.sd = {w.component(3u), w.component(12u), half * (c03 - c12)};
    r.asd = {w.component(5u), w.component(10u), half * (c03 + c12)};
    bool sd0 = r.sd[0].is_zero() && r.sd[1].is_zero() && r.sd[2].is_zero();
    bool asd0 = r.asd[0].is_zero() && r.asd[1].is_zero() && r.asd[2].is_zero();
    r.kind = sd0 ? Duality::ASD : (asd0 ? Duality::SD : Duality::Mixed);
    return r;
}

std::string CechMonomial::str() const {
    auto pw = [](const char* v, int e) {
        if (e == 0) return std::string();
        return std::string(v) + (e == 1 ? "" : "^" + std::to_string(e));
    };
    std::string num = pw("x", a) + pw("y", b);
    if (num.empty()) num = "1";
    std::string s = "(" + coef.str() + ") " + num + "/(" + pw("z", c) + pw("w", d) + ")";
    return s;
}

HarmonicIndex cech_index(const CechMonomial& m) {
    if (m.a < 0 || m.b < 0) throw std::invalid_argument("cech monomial: negative numerator exponent");
    if (m.c < 1 || m.d < 1) throw std::invalid_argument("cech monomial: z and w must both appear in the denominator");
    if (m.a + m.b - m.c - m.d != -2) throw std::invalid_argument("cech monomial: homogeneity must be -2");
    return HarmonicIndex{m.a + m.b, m.b - m.a, m.d - m.c, 0};
}

CechMonomial cech_monomial(const HarmonicIndex& idx) {
    validate(idx);
    if (!idx.in_range()) throw std::invalid_argument("cech_monomial: index out of range");
    CechMonomial m;
    m.a = (idx.two_l - idx.two_m) / 2;
    m.b = (idx.two_l + idx.two_m) / 2;
    m.c = (idx.two_l - idx.two_n) / 2 + 1;
    m.d = (idx.two_l + idx.two_n) / 2 + 1;
    return m;
}

NCPoly penrose_scalar(const std::vector<CechMonomial>& cocycle) {
    NCPoly out(Chart::I);
    for (const auto& m : cocycle) out += m.coef * harmonic(cech_index(m));
    return out;
}

bool conjugation_identity_check(PChoice p, int k, int two_l) {
    if (k < 0 || two_l < 0) throw std::invalid_argument("conjugation_identity_check: k and 2l must be >= 0");
    QLaurent lhs = tilde_eigenvalue(p, k, two_l);
    int k2 = -k - two_l - 1;  // the y-side det power
    QLaurent rhs = p_pow(p, -8) * p_pow(p, -2 * k2 - two_l + 3) * qint(k2) * qint(k2 + two_l + 1);
    return lhs == rhs;
}

}  // namespace qadhm
