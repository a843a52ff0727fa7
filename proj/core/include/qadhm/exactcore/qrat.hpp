#pragma once

#include "qadhm/exactcore/qlaurent.hpp"

#include <string>

namespace qadhm {

// Element of Q(i)(q).  Canonical form: den is an honest polynomial with
// nonzero constant term and leading coefficient 1, coprime to num.  Powers of
// q live in num, so Laurent elements have den == 1.
class QRat {
public:
    QRat() : den_(GaussRational(1)) {}
    QRat(const QLaurent& n) : num_(n), den_(GaussRational(1)) {}  // NOLINT(implicit)
    QRat(const GaussRational& c) : QRat(QLaurent(c)) {}           // NOLINT(implicit)
    QRat(long c) : QRat(QLaurent(c)) {}                           // NOLINT(implicit)
    QRat(const QLaurent& n, const QLaurent& d);

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    QLaurent as_laurent() const;  // throws unless is_laurent()

    QRat inverse() const;
    QRat operator-() const { return QRat(-num_, den_, Raw{}); }
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }
    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b) { return a * b.inverse(); }
    friend bool operator==(const QRat& a, const QRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    QRat invert_q() const { return QRat(num_.invert_q(), den_.invert_q()); }
    GaussRational at_one() const;  // throws if the denominator vanishes at q=1

    std::string str() const;

private:
    struct Raw {};
    QRat(QLaurent n, QLaurent d, Raw) : num_(std::move(n)), den_(std::move(d)) {}
    QLaurent num_;
    QLaurent den_;
};

inline bool is_zero(const QRat& x) { return x.is_zero(); }

}  // namespace qadhm
