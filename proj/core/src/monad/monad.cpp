#include "qadhm/monad/monad.hpp"

#include <functional>
#include <stdexcept>

#include "qadhm/adhm/generators.hpp"
#include "qadhm/exactcore/polygcd.hpp"

namespace qadhm {

namespace {

const std::vector<std::string> kVars{"x", "y", "z", "w"};

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

QMatrix identity_scaled(std::size_t n, long s) { return GaussRational(s) * QMatrix::identity(n); }

UPoly charpoly(const QMatrix& A) {
    // Faddeev-LeVerrier
    const std::size_t n = A.rows();
    std::vector<GaussRational> co(n + 1);
    co[n] = GaussRational(1);
    QMatrix M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = A * M + co[n - k + 1] * QMatrix::identity(n);
        QMatrix AM = A * M;
        GaussRational tr;
        for (std::size_t a = 0; a < n; ++a) tr += AM(a, a);
        co[n - k] = -(tr / GaussRational(static_cast<long>(k)));
    }
    return UPoly(co);
}

QMatrix flatten(const std::vector<QMatrix>& ms) {
    std::size_t n = 0;
    for (const auto& m : ms) n += m.rows() * m.cols();
    QMatrix v(n, 1);
    std::size_t off = 0;
    for (const auto& m : ms)
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = 0; b < m.cols(); ++b) v(off++, 0) = m(a, b);
    return v;
}

}  // namespace

void Monad::validate() const {
    if (c < 0 || r < 0) throw std::invalid_argument("monad: negative rank");
    std::size_t n = sz(2 * c + r);
    alpha.check_shapes();
    beta.check_shapes();
    if (alpha.vars != kVars || beta.vars != kVars) throw std::invalid_argument("monad: pencils must use variables x, y, z, w");
    if (alpha.rows() != n || alpha.cols() != sz(c)) throw std::invalid_argument("monad: alpha must be (2c+r) x c");
    if (beta.rows() != sz(c) || beta.cols() != n) throw std::invalid_argument("monad: beta must be c x (2c+r)");
}

Monad build_monad_unchecked(const ComplexADHMDatum& d) {
    d.validate();
    const std::size_t c = sz(d.c), r = sz(d.r), n = 2 * c + r;
    Monad m;
    m.r = d.r;
    m.c = d.c;
    m.alpha = QPencil(kVars, n, c);
    m.beta = QPencil(kVars, c, n);
    m.alpha.coeff("x").set_block(0, 0, QMatrix::identity(c));
    m.alpha.coeff("y").set_block(c, 0, QMatrix::identity(c));
    m.alpha.coeff("z") = QMatrix::vstack({d.B11, d.B12, d.j1});
    m.alpha.coeff("w") = QMatrix::vstack({d.B21, d.B22, d.j2});
    m.beta.coeff("x").set_block(0, c, QMatrix::identity(c));
    m.beta.coeff("y").set_block(0, 0, identity_scaled(c, -1));
    m.beta.coeff("z") = QMatrix::hstack({-d.B12, d.B11, d.i1});
    m.beta.coeff("w") = QMatrix::hstack({-d.B22, d.B21, d.i2});
    return m;
}

Monad build_monad(const ComplexADHMDatum& d) {
    auto res = complex_residuals(d);
    for (int k = 0; k < 3; ++k)
        if (!res[k].is_zero())
            throw std::invalid_argument("build_monad: residual c" + std::to_string(k + 1) + " is nonzero");
    return build_monad_unchecked(d);
}

std::vector<std::pair<std::pair<int, int>, QMatrix>> beta_alpha_terms(const Monad& m) {
    m.validate();
    auto al = [&](int k) -> const QMatrix& { return k == 4 ? m.alpha.constant : m.alpha.coeffs[sz(k)]; };
    auto be = [&](int k) -> const QMatrix& { return k == 4 ? m.beta.constant : m.beta.coeffs[sz(k)]; };
    std::vector<std::pair<std::pair<int, int>, QMatrix>> out;
    for (int a = 0; a < 5; ++a)
        for (int b = a; b < 5; ++b) {
            QMatrix t = be(a) * al(b);
            if (a != b) t += be(b) * al(a);
            out.push_back({{a, b}, t});
        }
    return out;
}

bool beta_alpha_vanishes(const Monad& m) {
    for (const auto& [k, t] : beta_alpha_terms(m))
        if (!t.is_zero()) return false;
    return true;
}

ExactnessAt check_exactness_at(const Monad& m, const P3Point& X) {
    m.validate();
    bool nz = false;
    for (const auto& v : X) nz = nz || !is_zero(v);
    if (!nz) throw std::invalid_argument("check_exactness_at: the zero vector is not a point of P^3");
    std::vector<GaussRational> pt(X.begin(), X.end());
    ExactnessAt e;
    e.rank_alpha = m.alpha.evaluate(pt).rank();
    e.rank_beta = m.beta.evaluate(pt).rank();
    e.fiber_dim = static_cast<long>(2 * m.c + m.r) - static_cast<long>(e.rank_alpha) - static_cast<long>(e.rank_beta);
    return e;
}

std::vector<P3Point> grid_points() {
    const std::array<GaussRational, 4> vals{GaussRational(0), GaussRational(1), GaussRational(-1), GaussRational::I()};
    std::vector<P3Point> out;
    for (int code = 1; code < 256; ++code) {
        P3Point p;
        for (int k = 0; k < 4; ++k) p[sz(k)] = vals[sz((code >> (2 * (3 - k))) & 3)];
        std::size_t lead = 0;
        while (is_zero(p[lead])) ++lead;
        GaussRational s = p[lead];
        for (auto& v : p) v = v / s;
        bool seen = false;
        for (const auto& q : out) seen = seen || q == p;
        if (!seen) out.push_back(p);
    }
    return out;
}

std::vector<P3Point> random_points(std::uint64_t seed, std::size_t n) {
    SeededRng rng(seed);
    std::vector<P3Point> out;
    while (out.size() < n) {
        P3Point p{rng.gauss(), rng.gauss(), rng.gauss(), rng.gauss()};
        bool nz = false;
        for (const auto& v : p) nz = nz || !is_zero(v);
        if (nz) out.push_back(p);
    }
    return out;
}

std::string point_str(const P3Point& X) {
    return "[" + X[0].str() + ":" + X[1].str() + ":" + X[2].str() + ":" + X[3].str() + "]";
}

std::string to_string(SheafKind k) {
    switch (k) {
        case SheafKind::LocallyFree: return "locally_free";
        case SheafKind::Reflexive: return "reflexive";
        default: return "torsion_free";
    }
}

SheafClassification classify_sheaf(const ComplexADHMDatum& d) {
    if (!is_solution(d)) throw std::invalid_argument("classify_sheaf: datum is not a solution");
    SheafClassification s;
    s.report = classify(d);
    if (!s.report.stable_everywhere) throw std::invalid_argument("classify_sheaf: datum is not C-stable, so it gives no sheaf");
    s.kind = s.report.regular ? SheafKind::LocallyFree : s.report.semiregular ? SheafKind::Reflexive : SheafKind::TorsionFree;
    Monad m = build_monad_unchecked(d);
    for (const auto& X : grid_points())
        if (check_exactness_at(m, X).rank_alpha < sz(d.c)) s.singular_sample.push_back(X);
    return s;
}

std::optional<P3Point> beta_bad_point(const ComplexADHMDatum& d) {
    auto rep = classify(d);
    if (rep.stable_everywhere) return std::nullopt;
    std::vector<ProjPoint> cands = rep.failing_points;
    if (!rep.semistable) cands = {{GaussRational(1), GaussRational(0)}, {GaussRational(0), GaussRational(1)}};
    const std::size_t c = sz(d.c);
    Monad m = build_monad_unchecked(d);
    for (const auto& [z, w] : cands) {
        auto p = evaluate(d, z, w);
        auto r1 = gaussian_roots(charpoly(p.B1)), r2 = gaussian_roots(charpoly(p.B2));
        for (const auto& [mu1, m1] : r1)
            for (const auto& [mu2, m2] : r2) {
                QMatrix M = QMatrix::hstack({p.B1 - mu1 * QMatrix::identity(c), p.B2 - mu2 * QMatrix::identity(c), p.i});
                if (M.rank() == c) continue;
                P3Point X{-mu1, -mu2, z, w};
                if (check_exactness_at(m, X).rank_beta < c) return X;
            }
    }
    return std::nullopt;
}

ComplexADHMDatum normalize_monad(const Monad& m) {
    m.validate();
    if (!m.alpha.constant.is_zero() || !m.beta.constant.is_zero())
        throw std::invalid_argument("normalize_monad: pencils must be linear in x, y, z, w");
    if (!beta_alpha_vanishes(m)) throw std::invalid_argument("normalize_monad: not a monad (beta alpha != 0)");
    const std::size_t c = sz(m.c), r = sz(m.r);
    const QMatrix &a1 = m.alpha.coeff("x"), &a2 = m.alpha.coeff("y");
    const QMatrix &b1 = m.beta.coeff("x"), &b2 = m.beta.coeff("y");
    auto hinv = (b1 * a2).inverse();
    if (!hinv) throw std::invalid_argument("normalize_monad: degenerate at infinity (beta_x alpha_y singular)");
    QMatrix W = QMatrix::vstack({b1, b2}).kernel();
    if (W.cols() != r) throw std::invalid_argument("normalize_monad: degenerate at infinity (dim W != r)");
    QMatrix P = r > 0 ? QMatrix::hstack({a1, a2, W}) : QMatrix::hstack({a1, a2});
    auto Pinv = P.inverse();
    if (!Pinv) throw std::invalid_argument("normalize_monad: degenerate at infinity (no adapted basis)");
    QMatrix az = *Pinv * m.alpha.coeff("z"), aw = *Pinv * m.alpha.coeff("w");
    QMatrix bz = *hinv * m.beta.coeff("z") * P, bw = *hinv * m.beta.coeff("w") * P;
    ComplexADHMDatum d = ComplexADHMDatum::zero(m.c, m.r);
    d.B11 = az.block(0, 0, c, c);
    d.B12 = az.block(c, 0, c, c);
    d.j1 = az.block(2 * c, 0, r, c);
    d.B21 = aw.block(0, 0, c, c);
    d.B22 = aw.block(c, 0, c, c);
    d.j2 = aw.block(2 * c, 0, r, c);
    d.i1 = bz.block(0, 2 * c, c, r);
    d.i2 = bw.block(0, 2 * c, c, r);
    if (!is_solution(d)) throw std::logic_error("normalize_monad: recovered datum fails the residual check");
    return d;
}

Monad transform_monad(const Monad& m, const QMatrix& L, const QMatrix& M, const QMatrix& R) {
    m.validate();
    auto Minv = M.inverse();
    if (!Minv || !L.inverse() || !R.inverse()) throw std::invalid_argument("transform_monad: singular change of basis");
    Monad o = m;
    for (std::size_t k = 0; k < 4; ++k) {
        o.alpha.coeffs[k] = M * m.alpha.coeffs[k] * R;
        o.beta.coeffs[k] = L * m.beta.coeffs[k] * *Minv;
    }
    o.alpha.constant = M * m.alpha.constant * R;
    o.beta.constant = L * m.beta.constant * *Minv;
    return o;
}

std::optional<std::pair<QMatrix, QMatrix>> find_intertwiner(const ComplexADHMDatum& a, const ComplexADHMDatum& b) {
    a.validate();
    b.validate();
    if (a.c != b.c || a.r != b.r) return std::nullopt;
    const std::size_t c = sz(a.c), r = sz(a.r), n = c * c + r * r;
    auto image = [&](const QMatrix& g, const QMatrix& h) {
        return flatten({g * a.B11 - b.B11 * g, g * a.B12 - b.B12 * g, g * a.B21 - b.B21 * g, g * a.B22 - b.B22 * g,
                        g * a.i1 - b.i1 * h, g * a.i2 - b.i2 * h, h * a.j1 - b.j1 * g, h * a.j2 - b.j2 * g});
    };
    QMatrix L;
    for (std::size_t k = 0; k < n; ++k) {
        QMatrix g(c, c), h(r, r);
        if (k < c * c) g(k / c, k % c) = GaussRational(1);
        else h((k - c * c) / r, (k - c * c) % r) = GaussRational(1);
        QMatrix col = image(g, h);
        if (k == 0) L = QMatrix(col.rows(), n);
        L.set_block(0, k, col);
    }
    QMatrix K = L.kernel();
    if (K.cols() == 0) return std::nullopt;
    SeededRng rng(K.cols());
    for (int t = 0; t < 20; ++t) {
        QMatrix v = t == 0 ? K.column(0) : K * rng.matrix(K.cols(), 1);
        QMatrix g(c, c), h(r, r);
        for (std::size_t k = 0; k < c * c; ++k) g(k / c, k % c) = v(k, 0);
        for (std::size_t k = 0; k < r * r; ++k) h(k / r, k % r) = v(c * c + k, 0);
        if (g.rank() == c && h.rank() == r) return std::make_pair(g, h);
    }
    return std::nullopt;
}

}  // namespace qadhm
