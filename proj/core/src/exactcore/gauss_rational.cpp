#include "qadhm/exactcore/gauss_rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qadhm {

GaussRational::GaussRational(long num, long den) : re_(num, den) {
    if (den == 0) throw std::domain_error("GaussRational: zero denominator");
    re_.canonicalize();
}

GaussRational GaussRational::inverse() const {
    mpq_class n = norm();
    if (sgn(n) == 0) throw std::domain_error("GaussRational: division by zero");
    return GaussRational(mpq_class(re_ / n), mpq_class(-im_ / n));
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw std::domain_error("GaussRational: division by zero");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

namespace {

std::string qstr(const mpq_class& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// parses "a", "a/b" (no sign handling beyond a leading '-')
mpq_class parse_q(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("GaussRational: empty rational");
    std::string t(s);
    mpq_class v;
    if (v.set_str(t, 10) != 0) throw std::invalid_argument("GaussRational: bad rational '" + t + "'");
    if (v.get_den() == 0) throw std::invalid_argument("GaussRational: zero denominator");
    v.canonicalize();
    return v;
}

}  // namespace

std::string GaussRational::str() const {
    std::string out = qstr(re_);
    if (sgn(im_) != 0) {
        if (sgn(im_) > 0) out += "+";
        out += qstr(im_) + "*i";
    }
    return out;
}

GaussRational GaussRational::parse(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("GaussRational: empty string");

    // split at the sign that starts the imaginary part (not at position 0)
    std::size_t split = std::string::npos;
    if (t.back() == 'i') {
        for (std::size_t k = t.size() - 1; k > 0; --k) {
            if (t[k] == '+' || t[k] == '-') {
                split = k;
                break;
            }
        }
        if (split == std::string::npos) split = 0;
    }
    auto imag_part = [](std::string u) -> mpq_class {
        // u is like "+3/4*i", "-i", "i", "2*i"
        u.pop_back();
        if (!u.empty() && u.back() == '*') u.pop_back();
        if (u.empty() || u == "+") return mpq_class(1);
        if (u == "-") return mpq_class(-1);
        if (u.front() == '+') u.erase(0, 1);
        return parse_q(u);
    };
    if (split == std::string::npos) return GaussRational(parse_q(t), mpq_class(0));
    mpq_class re = split == 0 ? mpq_class(0) : parse_q(std::string_view(t).substr(0, split));
    return GaussRational(re, imag_part(t.substr(split)));
}

std::size_t GaussRational::hash() const {
    auto h1 = std::hash<std::string>{}(re_.get_str());
    auto h2 = std::hash<std::string>{}(im_.get_str());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const GaussRational& g) { return os << g.str(); }

}  // namespace qadhm
