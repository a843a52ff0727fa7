#include "qadhm/adhm/generators.hpp"

#include <stdexcept>

#include "qadhm/adhm/stability.hpp"

namespace qadhm {

long SeededRng::uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
}

GaussRational SeededRng::gauss(int height) {
    long a = uniform(-height, height), b = uniform(-height, height), d = uniform(1, 2);
    return GaussRational(mpq_class(a, d), mpq_class(b, d));
}

GaussRational SeededRng::nonzero_gauss(int height) {
    while (true) {
        auto g = gauss(height);
        if (!is_zero(g)) return g;
    }
}

QMatrix SeededRng::matrix(std::size_t rows, std::size_t cols, int height) {
    QMatrix m(rows, cols);
    for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t b = 0; b < cols; ++b) m(a, b) = gauss(height);
    return m;
}

QMatrix SeededRng::invertible(std::size_t n, int height) {
    while (true) {
        QMatrix g = matrix(n, n, height);
        if (g.rank() == n) return g;
    }
}

namespace {

QMatrix row(const std::vector<GaussRational>& v) {
    QMatrix m(1, v.size());
    for (std::size_t k = 0; k < v.size(); ++k) m(0, k) = v[k];
    return m;
}

// distinct diagonal entries so the commuting B's are as generic as possible
QMatrix distinct_diagonal(SeededRng& rng, std::size_t c) {
    while (true) {
        QMatrix m(c, c);
        bool ok = true;
        for (std::size_t a = 0; a < c && ok; ++a) {
            m(a, a) = rng.gauss(4);
            for (std::size_t b = 0; b < a; ++b)
                if (m(a, a) == m(b, b)) ok = false;
        }
        if (ok) return m;
    }
}

void require_r2(int r, const char* who) {
    if (r < 2) throw std::invalid_argument(std::string(who) + ": needs r >= 2 (no C-stable solutions exist for r = 1)");
}

}  // namespace

std::optional<ComplexADHMDatum> c1_candidate(const std::vector<GaussRational>& x, const std::vector<GaussRational>& y,
                                             const std::vector<GaussRational>& z, const std::vector<GaussRational>& w,
                                             const std::array<GaussRational, 4>& B) {
    const std::size_t r = x.size();
    if (y.size() != r || z.size() != r || w.size() != r) throw std::invalid_argument("c1_candidate: vectors must share length r");
    ComplexADHMDatum d = ComplexADHMDatum::zero(1, static_cast<int>(r));
    d.B11(0, 0) = B[0];
    d.B12(0, 0) = B[1];
    d.B21(0, 0) = B[2];
    d.B22(0, 0) = B[3];
    d.i1 = row(x);
    d.i2 = row(y);
    d.j1 = row(z).transpose();
    d.j2 = row(w).transpose();
    if (!is_solution(d)) return std::nullopt;
    return d;
}

ComplexADHMDatum c1_generator(int r, std::uint64_t seed) {
    require_r2(r, "c1_generator");
    SeededRng rng(seed);
    const std::size_t n = static_cast<std::size_t>(r);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<GaussRational> x(n), y(n), z(n), w(n);
        for (auto& v : x) v = rng.gauss();
        for (auto& v : y) v = rng.gauss();
        if (QMatrix::vstack({row(x), row(y)}).rank() != 2) continue;
        // the three quadrics are linear in (z, w) once x, y are fixed
        QMatrix L(3, 2 * n);
        for (std::size_t k = 0; k < n; ++k) {
            L(0, k) = x[k];
            L(1, n + k) = y[k];
            L(2, k) = y[k];
            L(2, n + k) = x[k];
        }
        QMatrix K = L.kernel();
        QMatrix coeff = rng.matrix(K.cols(), 1);
        QMatrix zw = K * coeff;
        for (std::size_t k = 0; k < n; ++k) {
            z[k] = zw(k, 0);
            w[k] = zw(n + k, 0);
        }
        std::array<GaussRational, 4> B{rng.gauss(), rng.gauss(), rng.gauss(), rng.gauss()};
        auto d = c1_candidate(x, y, z, w, B);
        if (d && classify(*d).stable_everywhere) return *d;
    }
    throw std::runtime_error("c1_generator: no candidate passed the filters");
}

ComplexADHMDatum random_c_stable(int c, int r, std::uint64_t seed) {
    if (c == 1) return c1_generator(r, seed);
    require_r2(r, "random_c_stable");
    SeededRng rng(seed);
    const std::size_t cc = static_cast<std::size_t>(c), rr = static_cast<std::size_t>(r);
    for (int attempt = 0; attempt < 100; ++attempt) {
        ComplexADHMDatum d = ComplexADHMDatum::zero(c, r);
        d.B11 = distinct_diagonal(rng, cc);
        d.B12 = distinct_diagonal(rng, cc);
        d.B21 = distinct_diagonal(rng, cc);
        d.B22 = distinct_diagonal(rng, cc);
        d.i1 = rng.matrix(cc, rr);
        d.i2 = rng.matrix(cc, rr);
        d = act(rng.invertible(cc), d);
        if (is_solution(d) && classify(d).stable_everywhere) return d;
    }
    throw std::runtime_error("random_c_stable: no candidate passed the filters");
}

ComplexADHMDatum random_non_c_stable(int c, int r, std::uint64_t seed) {
    SeededRng rng(seed);
    const std::size_t cc = static_cast<std::size_t>(c), rr = static_cast<std::size_t>(r);
    for (int attempt = 0; attempt < 100; ++attempt) {
        ComplexADHMDatum d = ComplexADHMDatum::zero(c, r);
        d.B11 = distinct_diagonal(rng, cc);
        d.B12 = distinct_diagonal(rng, cc);
        d.B21 = distinct_diagonal(rng, cc);
        d.B22 = distinct_diagonal(rng, cc);
        d.i1 = rng.matrix(cc, rr);
        d.i2 = rng.gauss() * d.i1;
        QMatrix K = d.i1.kernel();
        if (K.cols() > 0) {
            d.j1 = K * rng.matrix(K.cols(), cc);
            d.j2 = K * rng.matrix(K.cols(), cc);
        }
        d = act(rng.invertible(cc), d);
        if (is_solution(d) && !classify(d).stable_everywhere) return d;
    }
    throw std::runtime_error("random_non_c_stable: no candidate passed the filters");
}

RealADHMDatum random_real_regular(int c, int r, std::uint64_t seed) {
    require_r2(r, "random_real_regular");
    SeededRng rng(seed);
    const std::size_t cc = static_cast<std::size_t>(c), rr = static_cast<std::size_t>(r);
    for (int attempt = 0; attempt < 100; ++attempt) {
        RealADHMDatum d = RealADHMDatum::zero(c, r);
        d.B1 = distinct_diagonal(rng, cc);
        d.B2 = distinct_diagonal(rng, cc);
        QMatrix u(cc, 1);
        for (std::size_t a = 0; a < cc; ++a) u(a, 0) = rng.nonzero_gauss();
        // a^+ b = 0 and |a| = |b| make ij = 0 and ii^+ = j^+j
        std::size_t p1 = static_cast<std::size_t>(rng.uniform(0, r - 1)), p2 = static_cast<std::size_t>(rng.uniform(0, r - 2));
        if (p2 >= p1) ++p2;
        GaussRational al = rng.nonzero_gauss(), be = rng.gauss();
        QMatrix a(rr, 1), b(rr, 1);
        a(p1, 0) = al;
        a(p2, 0) = be;
        b(p1, 0) = -be.conj();
        b(p2, 0) = al.conj();
        d.i = u * dagger(a);
        d.j = b * dagger(u);
        if (is_real_solution(d, GaussRational(0)) && real_stratify(d, GaussRational(0)) == RealStratum::Regular) return d;
    }
    throw std::runtime_error("random_real_regular: no candidate passed the filters");
}

ComplexADHMDatum random_rc1_solution(std::uint64_t seed) {
    SeededRng rng(seed);
    ComplexADHMDatum d = ComplexADHMDatum::zero(1, 1);
    d.B11(0, 0) = rng.gauss();
    d.B12(0, 0) = rng.gauss();
    d.B21(0, 0) = rng.gauss();
    d.B22(0, 0) = rng.gauss();
    bool i_zero = seed % 5 == 0;
    do {
        auto& p = i_zero ? d.j1 : d.i1;
        auto& s = i_zero ? d.j2 : d.i2;
        p(0, 0) = rng.gauss();
        s(0, 0) = rng.gauss();
    } while (i_zero ? (d.j1.is_zero() && d.j2.is_zero()) : (d.i1.is_zero() && d.i2.is_zero()));
    return d;
}

}  // namespace qadhm
