#include "qadhm/exactcore/modp.hpp"

#include <random>
#include <stdexcept>

namespace qadhm {

Zp::Zp(long x) {
    long long m = static_cast<long long>(x % static_cast<long long>(P));
    if (m < 0) m += static_cast<long long>(P);
    v = static_cast<std::uint64_t>(m);
}

Zp Zp::pow(std::uint64_t e) const {
    Zp r = raw(1), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Zp Zp::inverse() const {
    if (v == 0) throw std::domain_error("Zp: inverse of zero");
    return pow(P - 2);
}

Zp Zp::sqrt_minus_one() {
    static const Zp root = [] {
        // a^((p-1)/4) for a non-residue a squares to -1
        for (std::uint64_t a = 2;; ++a) {
            Zp c = raw(a).pow((P - 1) / 4);
            if (c * c == Zp(-1)) return c;
        }
    }();
    return root;
}

namespace {

Zp mpz_to_zp(const mpz_class& z) {
    static_assert(sizeof(unsigned long) == 8, "needs 64-bit unsigned long");
    return Zp::raw(mpz_fdiv_ui(z.get_mpz_t(), Zp::P));
}

}  // namespace

Zp to_zp(const mpq_class& x) {
    Zp d = mpz_to_zp(x.get_den());
    if (d.is_zero()) throw std::domain_error("Zp: denominator divisible by p");
    return mpz_to_zp(x.get_num()) / d;
}

Zp to_zp(const GaussRational& x) {
    Zp r = to_zp(x.re());
    if (sgn(x.im()) != 0) r += Zp::sqrt_minus_one() * to_zp(x.im());
    return r;
}

Zp to_zp(const QLaurent& f, Zp t) {
    Zp s;
    if (f.is_zero()) return s;
    Zp ti = t.inverse();
    for (const auto& [e, c] : f.terms()) s += to_zp(c) * (e >= 0 ? t.pow(static_cast<std::uint64_t>(e)) : ti.pow(static_cast<std::uint64_t>(-e)));
    return s;
}

Zp to_zp(const QRat& f, Zp t) {
    Zp d = to_zp(f.den(), t);
    if (d.is_zero()) throw std::domain_error("Zp: specialization hits a pole");
    return to_zp(f.num(), t) / d;
}

Zp random_zp(std::uint64_t seed) {
    std::mt19937_64 gen(seed ^ 0x5deece66dULL);
    std::uniform_int_distribution<std::uint64_t> dist(2, Zp::P - 1);
    return Zp::raw(dist(gen));
}

}  // namespace qadhm
