#pragma once

#include <cstdint>
#include <string>

#include "qadhm/exactcore/gauss_rational.hpp"
#include "qadhm/exactcore/qlaurent.hpp"
#include "qadhm/exactcore/qrat.hpp"

namespace qadhm {

// Prime field F_p with p = 1 mod 4, so Z[i] maps into it via i -> sqrt(-1).
// Used as a ring-homomorphic image: a nonzero minor mod p is a nonzero minor
// over Q(i)(q), so ranks computed here are certified lower bounds.
struct Zp {
    static constexpr std::uint64_t P = 4611686018427387817ULL;
    std::uint64_t v = 0;

    Zp() = default;
    Zp(long x);  // NOLINT(implicit)
    static Zp raw(std::uint64_t x) { Zp z; z.v = x % P; return z; }

    Zp operator-() const { return raw(v == 0 ? 0 : P - v); }
    Zp& operator+=(Zp o) { v += o.v; if (v >= P) v -= P; return *this; }
    Zp& operator-=(Zp o) { v = v >= o.v ? v - o.v : v + P - o.v; return *this; }
    Zp& operator*=(Zp o) {
        v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * o.v) % P);
        return *this;
    }
    Zp& operator/=(Zp o) { return *this *= o.inverse(); }
    friend Zp operator+(Zp a, Zp b) { return a += b; }
    friend Zp operator-(Zp a, Zp b) { return a -= b; }
    friend Zp operator*(Zp a, Zp b) { return a *= b; }
    friend Zp operator/(Zp a, Zp b) { return a /= b; }
    friend bool operator==(Zp a, Zp b) { return a.v == b.v; }
    friend bool operator!=(Zp a, Zp b) { return a.v != b.v; }

    Zp pow(std::uint64_t e) const;
    Zp inverse() const;  // throws on zero
    bool is_zero() const { return v == 0; }
    std::string str() const { return std::to_string(v); }

    static Zp sqrt_minus_one();
};

inline bool is_zero(Zp z) { return z.v == 0; }

// Specialization maps.  Throw std::domain_error if a denominator dies mod p.
Zp to_zp(const mpq_class& x);
Zp to_zp(const GaussRational& x);
Zp to_zp(const QLaurent& f, Zp t);
Zp to_zp(const QRat& f, Zp t);

// deterministic pseudo-random specialization point for q
Zp random_zp(std::uint64_t seed);

}  // namespace qadhm
