#include "qadhm/exactcore/qrat.hpp"

#include <stdexcept>

#include "qadhm/exactcore/upoly.hpp"

namespace qadhm {

QRat::QRat(const QLaurent& n, const QLaurent& d) {
    if (d.is_zero()) throw std::domain_error("QRat: zero denominator");
    if (n.is_zero()) {
        den_ = QLaurent(GaussRational(1));
        return;
    }
    int sd = 0, sn = 0;
    UPoly D = UPoly::from_laurent(d, &sd);
    if (D.degree() == 0) {
        num_ = n.shifted(-sd);
        num_ *= D.lead().inverse();
        den_ = QLaurent(GaussRational(1));
        return;
    }
    UPoly N = UPoly::from_laurent(n, &sn);
    sn -= sd;
    UPoly g = gcd(N, D);
    if (g.degree() > 0) {
        N = N.div_exact(g);
        D = D.div_exact(g);
    }
    GaussRational lc = D.lead().inverse();
    num_ = (lc * N).to_laurent(sn);
    den_ = D.monic().to_laurent(0);
}

QLaurent QRat::as_laurent() const {
    if (!is_laurent()) throw std::domain_error("QRat: not a Laurent polynomial: " + str());
    return num_;
}

QRat QRat::inverse() const {
    if (is_zero()) throw std::domain_error("QRat: division by zero");
    return QRat(den_, num_);
}

QRat operator+(const QRat& a, const QRat& b) {
    if (a.is_laurent() && b.is_laurent()) return QRat(a.num_ + b.num_, QLaurent(GaussRational(1)), QRat::Raw{});
    if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
    return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) {
    if (a.is_laurent() && b.is_laurent()) return QRat(a.num_ - b.num_, QLaurent(GaussRational(1)), QRat::Raw{});
    if (a.den_ == b.den_) return QRat(a.num_ - b.num_, a.den_);
    return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) {
    if (a.is_zero() || b.is_zero()) return QRat();
    if (a.is_laurent() && b.is_laurent()) return QRat(a.num_ * b.num_, QLaurent(GaussRational(1)), QRat::Raw{});
    return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

GaussRational QRat::at_one() const {
    GaussRational d = den_.at_one();
    if (d.is_zero()) throw std::domain_error("QRat: pole at q=1");
    return num_.at_one() / d;
}

std::string QRat::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qadhm
