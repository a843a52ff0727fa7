#include "qadhm/exactcore/polygcd.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qadhm {

GaussRational HomPoly::eval(const GaussRational& z, const GaussRational& w) const {
    GaussRational s, zp(1);
    const auto& c = a.coeffs();
    std::vector<GaussRational> wp(static_cast<std::size_t>(deg) + 1, GaussRational(1));
    for (int k = 1; k <= deg; ++k) wp[static_cast<std::size_t>(k)] = wp[static_cast<std::size_t>(k - 1)] * w;
    for (std::size_t k = 0; k < c.size(); ++k) {
        s += c[k] * zp * wp[static_cast<std::size_t>(deg) - k];
        zp *= z;
    }
    return s;
}

namespace {

std::string mono(int ez, int ew) {
    std::string s;
    auto part = [&](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    part("z", ez);
    part("w", ew);
    return s;
}

}  // namespace

std::string HomPoly::str() const {
    if (a.is_zero()) return "0";
    std::string out;
    const auto& c = a.coeffs();
    for (int k = a.degree(); k >= 0; --k) {
        const GaussRational& v = c[static_cast<std::size_t>(k)];
        if (v.is_zero()) continue;
        bool neg = v.is_real() && sgn(v.re()) < 0;
        std::string cs = coeff_str(neg ? -v : v);
        std::string m = mono(k, deg - k);
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (m.empty()) out += cs;
        else if (cs == "1") out += m;
        else out += cs + "*" + m;
    }
    return out;
}

HomPoly HomPoly::linear(const GaussRational& a, const GaussRational& b) {
    return {UPoly(std::vector<GaussRational>{b, a}), 1};
}

HomPoly operator*(const HomPoly& f, const HomPoly& g) { return {f.a * g.a, f.deg + g.deg}; }

HomPoly operator+(const HomPoly& f, const HomPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.deg != g.deg) throw std::invalid_argument("HomPoly: adding different degrees");
    return {f.a + g.a, f.deg};
}

HomPoly operator-(const HomPoly& f, const HomPoly& g) {
    return f + HomPoly{-g.a, g.deg};
}

bool operator==(const HomPoly& f, const HomPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return f.deg == g.deg && f.a == g.a;
}

HomPoly homogeneous_gcd(const std::vector<HomPoly>& polys) {
    if (polys.empty()) throw std::invalid_argument("homogeneous_gcd: empty input");
    UPoly g;
    int wmin = -1;
    for (const auto& f : polys) {
        if (f.is_zero()) continue;
        if (f.a.degree() > f.deg) throw std::invalid_argument("homogeneous_gcd: degree smaller than z-degree");
        g = gcd(g, f.a);
        wmin = wmin < 0 ? f.w_multiplicity() : std::min(wmin, f.w_multiplicity());
        if (g.degree() == 0 && wmin == 0) break;
    }
    if (wmin < 0) throw std::invalid_argument("homogeneous_gcd: all inputs are zero");
    return {g, g.degree() + wmin};
}

namespace {

using cld = std::complex<long double>;

mpz_class lcm_den(const UPoly& f) {
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    return l;
}

std::vector<cld> durand_kerner(const std::vector<cld>& monic_coeffs) {
    const int n = static_cast<int>(monic_coeffs.size()) - 1;
    long double bound = 1;
    for (int k = 0; k < n; ++k) bound = std::max(bound, 1 + std::abs(monic_coeffs[static_cast<std::size_t>(k)]));
    std::vector<cld> z(static_cast<std::size_t>(n));
    cld seed(0.4L, 0.9L);
    for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::pow(seed, k) * (bound * 0.5L);
    auto ev = [&](cld x) {
        cld s = 1;
        for (int k = n - 1; k >= 0; --k) s = s * x + monic_coeffs[static_cast<std::size_t>(k)];
        return s;
    };
    for (int it = 0; it < 5000; ++it) {
        long double moved = 0;
        for (int i = 0; i < n; ++i) {
            cld den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            if (std::abs(den) == 0) den = cld(1e-30L, 0);
            cld step = ev(z[static_cast<std::size_t>(i)]) / den;
            z[static_cast<std::size_t>(i)] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-30L) break;
    }
    return z;
}

mpq_class round_ld(long double x) {
    long double r = std::nearbyint(x);
    // values here are modest; go through a decimal string to avoid overflow of long long
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0Lf", r);
    return mpq_class(mpz_class(buf));
}

}  // namespace

std::vector<std::pair<GaussRational, int>> gaussian_roots(const UPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("gaussian_roots: zero polynomial");
    std::vector<std::pair<GaussRational, int>> out;
    UPoly sf = f.squarefree();
    if (sf.degree() <= 0) return out;
    // Gaussian-integer model: any root r in Q(i) has L*r in Z[i]
    mpq_class scale(lcm_den(sf));
    UPoly g = GaussRational(scale) * sf;
    GaussRational L = g.lead();
    std::vector<cld> mc;
    for (const auto& c : sf.coeffs()) mc.emplace_back(c.re().get_d(), c.im().get_d());
    std::vector<cld> approx = durand_kerner(mc);
    std::vector<GaussRational> found;
    cld Ld(L.re().get_d(), L.im().get_d());
    for (const auto& z : approx) {
        cld lz = Ld * z;
        GaussRational cand = GaussRational(round_ld(lz.real()), round_ld(lz.imag())) / L;
        if (!sf.eval(cand).is_zero()) continue;
        if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
        found.push_back(cand);
    }
    for (const auto& r : found) {
        int mult = 0;
        UPoly h = f;
        UPoly lin(std::vector<GaussRational>{-r, GaussRational(1)});
        while (true) {
            auto [qq, rem] = h.divmod(lin);
            if (!rem.is_zero()) break;
            h = std::move(qq);
            ++mult;
        }
        out.emplace_back(r, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    return out;
}

ProjectiveRoots projective_roots(const HomPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("projective_roots: zero polynomial");
    ProjectiveRoots pr;
    std::vector<std::string> factors;
    auto power = [](std::string s, int m) { return m == 1 ? s : s + "^" + std::to_string(m); };
    int wm = f.w_multiplicity();
    if (wm > 0) {
        pr.roots.push_back({{GaussRational(1), GaussRational(0)}, wm});
        factors.push_back(power("w", wm));
    }
    UPoly rest = f.a.monic();
    for (const auto& [r, m] : gaussian_roots(f.a)) {
        pr.roots.push_back({{r, GaussRational(1)}, m});
        UPoly lin(std::vector<GaussRational>{-r, GaussRational(1)});
        for (int k = 0; k < m; ++k) rest = rest.div_exact(lin);
        std::string lf = r.is_zero() ? "z" : "(" + HomPoly::linear(GaussRational(1), -r).str() + ")";
        factors.push_back(power(lf, m));
    }
    pr.rest = rest;
    if (rest.degree() > 0) factors.push_back("(" + HomPoly{rest, rest.degree()}.str() + ")");
    std::string lc = f.a.lead().is_one() ? "" : coeff_str(f.a.lead());
    if (factors.empty()) pr.factored = lc.empty() ? "1" : lc;
    else {
        pr.factored = lc;
        for (const auto& s : factors) pr.factored += (pr.factored.empty() ? "" : "*") + s;
    }
    return pr;
}

HomPoly hom_det(const std::vector<std::vector<HomPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return HomPoly::constant(GaussRational(1));
    int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        int dj = -1;
        for (std::size_t i = 0; i < n; ++i)
            if (!m[i][j].is_zero()) { dj = m[i][j].deg; break; }
        if (dj < 0) return {UPoly(), 0};
        total += dj;
    }
    // Bareiss over Q(i)[t]: every division is exact
    std::vector<std::vector<UPoly>> a(n, std::vector<UPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].a;
    UPoly prev(GaussRational(1));
    bool neg = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t sel = n;
        for (std::size_t i = k; i < n; ++i)
            if (!a[i][k].is_zero()) { sel = i; break; }
        if (sel == n) return {UPoly(), total};
        if (sel != k) {
            std::swap(a[sel], a[k]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).div_exact(prev);
            a[i][k] = UPoly();
        }
        prev = a[k][k];
    }
    UPoly d = a[n - 1][n - 1];
    if (neg) d = -d;
    return {d, total};
}

}  // namespace qadhm
