#include "qadhm/exactcore/upoly.hpp"

#include <stdexcept>

namespace qadhm {

UPoly::UPoly(std::vector<GaussRational> c) : c_(std::move(c)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::t(int k) {
    std::vector<GaussRational> c(static_cast<std::size_t>(k) + 1);
    c.back() = GaussRational(1);
    return UPoly(std::move(c));
}

UPoly UPoly::from_laurent(const QLaurent& f, int* shift) {
    if (f.is_zero()) {
        if (shift) *shift = 0;
        return {};
    }
    int lo = f.min_exp();
    std::vector<GaussRational> c(static_cast<std::size_t>(f.max_exp() - lo + 1));
    for (const auto& [e, v] : f.terms()) c[static_cast<std::size_t>(e - lo)] = v;
    if (shift) *shift = lo;
    return UPoly(std::move(c));
}

QLaurent UPoly::to_laurent(int shift) const {
    std::vector<QLaurent::Term> t;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) t.emplace_back(static_cast<int>(k) + shift, c_[k]);
    return QLaurent::from_terms(std::move(t));
}

GaussRational UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(k)];
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussRational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
}

UPoly operator*(const GaussRational& s, const UPoly& a) {
    if (s.is_zero()) return {};
    UPoly r = a;
    for (auto& v : r.c_) v *= s;
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& b) const {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
    if (degree() < b.degree()) return {UPoly(), *this};
    std::vector<GaussRational> r = c_;
    std::vector<GaussRational> quo(static_cast<std::size_t>(degree() - b.degree() + 1));
    GaussRational inv = b.lead().inverse();
    int db = b.degree();
    for (int k = degree(); k >= db; --k) {
        GaussRational f = r[static_cast<std::size_t>(k)] * inv;
        if (f.is_zero()) continue;
        quo[static_cast<std::size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(quo)), UPoly(std::move(r))};
}

UPoly UPoly::div_exact(const UPoly& b) const {
    auto [q, r] = divmod(b);
    if (!r.is_zero()) throw std::domain_error("UPoly: inexact division");
    return q;
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return lead().inverse() * *this;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussRational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = GaussRational(static_cast<long>(k)) * c_[k];
    return UPoly(std::move(d));
}

GaussRational UPoly::eval(const GaussRational& x) const {
    GaussRational s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
}

UPoly UPoly::squarefree() const {
    if (degree() <= 0) return monic();
    return div_exact(gcd(*this, derivative())).monic();
}

std::string UPoly::str(const std::string& var) const {
    std::string out;
    for (char ch : to_laurent().str()) {
        if (ch == 'q') out += var;
        else out.push_back(ch);
    }
    return out;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace qadhm
