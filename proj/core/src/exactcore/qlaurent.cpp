#include "qadhm/exactcore/qlaurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "qadhm/exactcore/upoly.hpp"

namespace qadhm {

QLaurent::QLaurent(const GaussRational& c) {
    if (!c.is_zero()) terms_.emplace_back(0, c);
}

QLaurent QLaurent::monomial(const GaussRational& c, int e) {
    QLaurent r;
    if (!c.is_zero()) r.terms_.emplace_back(e, c);
    return r;
}

QLaurent QLaurent::from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.first < b.first; });
    QLaurent r;
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first) {
            r.terms_.back().second += t.second;
            if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

bool QLaurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool QLaurent::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
}

int QLaurent::min_exp() const {
    if (terms_.empty()) throw std::logic_error("QLaurent: min_exp of zero");
    return terms_.front().first;
}

int QLaurent::max_exp() const {
    if (terms_.empty()) throw std::logic_error("QLaurent: max_exp of zero");
    return terms_.back().first;
}

GaussRational QLaurent::coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return GaussRational();
}

GaussRational QLaurent::lead() const {
    if (terms_.empty()) throw std::logic_error("QLaurent: lead of zero");
    return terms_.back().second;
}

QLaurent QLaurent::operator-() const {
    QLaurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

// merge b into a with sign
void merge_into(std::vector<QLaurent::Term>& a, const std::vector<QLaurent::Term>& b, bool negate) {
    std::vector<QLaurent::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, negate ? -b[j].second : b[j].second);
            ++j;
        } else {
            GaussRational s = negate ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

}  // namespace

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    if (o.terms_.empty()) return *this;
    merge_into(terms_, o.terms_, false);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    if (o.terms_.empty()) return *this;
    merge_into(terms_, o.terms_, true);
    return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const auto& m = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
        const auto& o = a.terms_.size() == 1 ? b : a;
        r.terms_.reserve(o.terms_.size());
        for (const auto& t : o.terms_) r.terms_.emplace_back(t.first + m.first, t.second * m.second);
        return r;
    }
    int lo = a.terms_.front().first + b.terms_.front().first;
    int hi = a.terms_.back().first + b.terms_.back().first;
    std::vector<GaussRational> acc(static_cast<std::size_t>(hi - lo + 1));
    std::vector<char> touched(acc.size(), 0);
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            auto k = static_cast<std::size_t>(x.first + y.first - lo);
            acc[k] += x.second * y.second;
            touched[k] = 1;
        }
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (touched[k] && !acc[k].is_zero()) r.terms_.emplace_back(static_cast<int>(k) + lo, std::move(acc[k]));
    return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) { return *this = *this * o; }

QLaurent& QLaurent::operator*=(const GaussRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

QLaurent QLaurent::shifted(int k) const {
    QLaurent r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
}

QLaurent QLaurent::invert_q() const {
    QLaurent r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
}

QLaurent QLaurent::conj() const {
    QLaurent r = *this;
    for (auto& t : r.terms_) t.second = t.second.conj();
    return r;
}

QLaurent QLaurent::pow(unsigned n) const {
    QLaurent r(GaussRational(1)), b = *this;
    while (n) {
        if (n & 1u) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

GaussRational QLaurent::eval(const GaussRational& at) const {
    GaussRational s;
    if (terms_.empty()) return s;
    GaussRational inv = at.is_zero() ? GaussRational() : at.inverse();
    for (const auto& t : terms_) {
        GaussRational pw(1);
        const GaussRational& base = t.first >= 0 ? at : inv;
        if (t.first < 0 && at.is_zero()) throw std::domain_error("QLaurent: evaluation at q=0");
        for (int k = 0; k < std::abs(t.first); ++k) pw *= base;
        s += t.second * pw;
    }
    return s;
}

GaussRational QLaurent::at_one() const {
    GaussRational s;
    for (const auto& t : terms_) s += t.second;
    return s;
}

QLaurent QLaurent::divide_exact(const QLaurent& b) const {
    if (b.is_zero()) throw std::domain_error("QLaurent: division by zero");
    if (is_zero()) return {};
    if (b.is_monomial()) {
        QLaurent r = shifted(-b.terms_[0].first);
        r *= b.terms_[0].second.inverse();
        return r;
    }
    int sa = 0, sb = 0;
    UPoly pa = UPoly::from_laurent(*this, &sa), pb = UPoly::from_laurent(b, &sb);
    auto [quo, rem] = pa.divmod(pb);
    if (!rem.is_zero()) throw std::domain_error("QLaurent: inexact division");
    return quo.to_laurent(sa - sb);
}

bool QLaurent::divides(const QLaurent& b) const {
    if (is_zero()) return b.is_zero();
    if (is_monomial() || b.is_zero()) return true;
    int sa = 0, sb = 0;
    UPoly pa = UPoly::from_laurent(*this, &sa), pb = UPoly::from_laurent(b, &sb);
    return pb.divmod(pa).second.is_zero();
}

std::string coeff_str(const GaussRational& c) {
    auto q = [](const mpq_class& v) { return v.get_str(); };
    if (c.is_real()) return q(c.re());
    if (sgn(c.re()) == 0) {
        if (c.im() == 1) return "i";
        if (c.im() == -1) return "-i";
        return q(c.im()) + "*i";
    }
    return "(" + c.str() + ")";
}

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // highest power first reads most naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = coeff_str(c);
        bool neg = c.is_real() && sgn(c.re()) < 0;
        if (neg) cs = coeff_str(-c);
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        std::string mono = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    return out;
}

std::size_t QLaurent::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& [e, c] : terms_) {
        h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace qadhm
