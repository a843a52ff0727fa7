#pragma once

#include "qadhm/exactcore/gauss_rational.hpp"
#include "qadhm/exactcore/qlaurent.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qadhm {

// Dense univariate polynomial over Q(i); c[k] is the coefficient of t^k.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<GaussRational> c);
    UPoly(const GaussRational& c0) : UPoly(std::vector<GaussRational>{c0}) {}  // NOLINT(implicit)

    static UPoly t(int k = 1);
    // f = q^shift * result with result(0) != 0 (unless f == 0)
    static UPoly from_laurent(const QLaurent& f, int* shift);
    QLaurent to_laurent(int shift = 0) const;

    const std::vector<GaussRational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const GaussRational& lead() const { return c_.back(); }
    GaussRational coeff(int k) const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const GaussRational& s, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    std::pair<UPoly, UPoly> divmod(const UPoly& b) const;
    UPoly div_exact(const UPoly& b) const;  // throws on nonzero remainder
    UPoly monic() const;
    UPoly derivative() const;
    GaussRational eval(const GaussRational& x) const;
    UPoly squarefree() const;  // monic squarefree part

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<GaussRational> c_;
};

UPoly gcd(UPoly a, UPoly b);  // monic; gcd(0,0) = 0

}  // namespace qadhm
