#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qadhm {

// Element of Q(i).  Both parts are kept canonical by gmpxx, so equality is
// structural.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v) {}  // NOLINT(implicit)
    GaussRational(const mpq_class& re) : re_(re) { re_.canonicalize(); }  // NOLINT(implicit)
    GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    GaussRational(long num, long den);

    static GaussRational I() { return GaussRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussRational inverse() const;

    GaussRational operator-() const { return GaussRational(-re_, -im_); }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    // Total order used only for deterministic containers (not a field order).
    friend bool lex_less(const GaussRational& a, const GaussRational& b) {
        int c = cmp(a.re_, b.re_);
        return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
    }

    // "a/b" or "a/b+c/d*i"; the denominator is always printed.
    std::string str() const;
    // Accepts the canonical form plus the shorthands "3", "-i", "2*i", "1/2-i".
    static GaussRational parse(std::string_view s);

    std::size_t hash() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& g);

inline bool is_zero(const GaussRational& g) { return g.is_zero(); }

}  // namespace qadhm

template <>
struct std::hash<qadhm::GaussRational> {
    std::size_t operator()(const qadhm::GaussRational& g) const { return g.hash(); }
};
