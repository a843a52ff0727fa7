#include "qadhm/qspacetime/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace qadhm {

std::string to_string(Chart c) {
    switch (c) {
        case Chart::I: return "I";
        case Chart::J: return "J";
        case Chart::IJ: return "IJ";
    }
    return "?";
}

std::string gen_name(Chart c, int idx) {
    static const char* n[4] = {"11", "12", "21", "22"};
    return std::string(c == Chart::J ? "y" : "x") + n[idx];
}

namespace {

struct Rule {
    QLaurent c;
    int u, v;
};

// x_h x_g (h > g) rewritten as a sum of ordered products x_u x_v
using RuleTable = std::map<std::pair<int, int>, std::vector<Rule>>;

const RuleTable& rules(Chart c) {
    static const RuleTable rx = [] {
        RuleTable r;
        r[{1, 0}] = {{QLaurent(1), 0, 1}};
        r[{2, 0}] = {{QLaurent::q(2), 0, 2}};
        r[{2, 1}] = {{QLaurent::q(2), 1, 2}};
        r[{3, 0}] = {{QLaurent(1), 0, 3}, {QLaurent::q(2) - QLaurent(1), 1, 2}};
        r[{3, 1}] = {{QLaurent::q(2), 1, 3}};
        r[{3, 2}] = {{QLaurent(1), 2, 3}};
        return r;
    }();
    static const RuleTable ry = [] {
        RuleTable r;
        r[{1, 0}] = {{QLaurent::q(2), 0, 1}};
        r[{2, 0}] = {{QLaurent(1), 0, 2}};
        r[{2, 1}] = {{QLaurent::q(-2), 1, 2}};
        r[{3, 0}] = {{QLaurent(1), 0, 3}, {QLaurent(1) - QLaurent::q(-2), 1, 2}};
        r[{3, 1}] = {{QLaurent(1), 1, 3}};
        r[{3, 2}] = {{QLaurent::q(2), 2, 3}};
        return r;
    }();
    return c == Chart::J ? ry : rx;
}

struct ExpsHash {
    std::size_t operator()(const Exps& e) const {
        std::size_t h = 0;
        for (int v : e) h = h * 131 + static_cast<std::size_t>(v);
        return h;
    }
};
struct PairHash {
    std::size_t operator()(const std::pair<Exps, Exps>& p) const {
        return ExpsHash{}(p.first) * 1000003u ^ ExpsHash{}(p.second);
    }
};

using Lin = std::vector<std::pair<Exps, QLaurent>>;

void accumulate(std::map<Exps, QLaurent>& acc, const Exps& e, const QLaurent& c) {
    auto it = acc.find(e);
    if (it == acc.end()) {
        if (!c.is_zero()) acc.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

Lin to_lin(const std::map<Exps, QLaurent>& m) { return Lin(m.begin(), m.end()); }

int ci(Chart c) { return c == Chart::J ? 1 : 0; }

// normal form of monomial(e) * x_g
const Lin& rmul(Chart c, const Exps& e, int g) {
    thread_local std::unordered_map<Exps, Lin, ExpsHash> cache[2][4];
    auto& slot = cache[ci(c)][g];
    auto it = slot.find(e);
    if (it != slot.end()) return it->second;
    int last = -1;
    for (int k = 3; k >= 0; --k)
        if (e[static_cast<std::size_t>(k)] > 0) { last = k; break; }
    Lin out;
    if (g >= last) {
        Exps f = e;
        ++f[static_cast<std::size_t>(g)];
        out.emplace_back(f, QLaurent(1));
    } else {
        Exps mp = e;
        --mp[static_cast<std::size_t>(last)];
        std::map<Exps, QLaurent> acc;
        for (const auto& r : rules(c).at({last, g})) {
            Lin first = rmul(c, mp, r.u);  // copy: recursion may rehash the cache
            for (const auto& [e2, c2] : first) {
                Lin second = rmul(c, e2, r.v);
                for (const auto& [e3, c3] : second) accumulate(acc, e3, r.c * c2 * c3);
            }
        }
        out = to_lin(acc);
    }
    return slot.emplace(e, std::move(out)).first->second;
}

Chart base_chart(Chart c) { return c == Chart::J ? Chart::J : Chart::I; }

// normal form in chart I of det(x) * monomial(e)
const Lin& det_times(const Exps& e) {
    thread_local std::unordered_map<Exps, Lin, ExpsHash> cache;
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    std::map<Exps, QLaurent> acc;
    for (const auto& [a, c1] : mono_mul(Chart::I, {1, 0, 0, 1}, e)) accumulate(acc, a, c1);
    for (const auto& [a, c1] : mono_mul(Chart::I, {0, 1, 1, 0}, e)) accumulate(acc, a, -c1);
    return cache.emplace(e, to_lin(acc)).first->second;
}

void add_to(NCPoly::Terms& t, const MonoKey& k, const QLaurent& c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

// rewrite every x11...x22-containing monomial through det, highest x11 power first
void ij_reduce(NCPoly::Terms& t) {
    while (true) {
        auto best = t.end();
        for (auto it = t.begin(); it != t.end(); ++it) {
            const Exps& e = it->first.e;
            if (e[0] >= 1 && e[3] >= 1 && (best == t.end() || e[0] > best->first.e[0])) best = it;
        }
        if (best == t.end()) return;
        MonoKey key = best->first;
        QLaurent coef = best->second;
        t.erase(best);
        Exps mp = key.e;
        --mp[0];
        --mp[3];
        const Lin& d = det_times(mp);
        QLaurent u;
        for (const auto& [e, c] : d)
            if (e == key.e) u = c;
        if (!u.is_monomial()) throw std::logic_error("chart IJ: leading coefficient of det*m is not a unit");
        QLaurent f = coef.divide_exact(u);
        add_to(t, MonoKey{key.k + 1, mp}, f);
        for (const auto& [e, c] : d)
            if (!(e == key.e)) add_to(t, MonoKey{key.k, e}, -(f * c));
    }
}

}  // namespace

const std::vector<std::pair<Exps, QLaurent>>& mono_mul(Chart c, const Exps& e1, const Exps& e2) {
    Chart b = base_chart(c);
    thread_local std::unordered_map<std::pair<Exps, Exps>, Lin, PairHash> cache[2];
    auto& slot = cache[ci(b)];
    auto key = std::make_pair(e1, e2);
    auto it = slot.find(key);
    if (it != slot.end()) return it->second;
    std::map<Exps, QLaurent> cur;
    cur.emplace(e1, QLaurent(1));
    for (int g = 0; g < 4; ++g)
        for (int r = 0; r < e2[static_cast<std::size_t>(g)]; ++r) {
            std::map<Exps, QLaurent> nxt;
            for (const auto& [e, c] : cur) {
                Lin step = rmul(b, e, g);
                for (const auto& [e3, c3] : step) accumulate(nxt, e3, c * c3);
            }
            cur = std::move(nxt);
        }
    return slot.emplace(key, to_lin(cur)).first->second;
}

int det_shift_exponent(const Exps& e, int j) { return (2 * e[2] - 2 * e[1]) * j; }

std::vector<Exps> monomials_of_degree(int d) {
    std::vector<Exps> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            for (int c = d - a - b; c >= 0; --c) out.push_back({a, b, c, d - a - b - c});
    std::sort(out.begin(), out.end());
    return out;
}

int count_monomials(int d) { return (d + 1) * (d + 2) * (d + 3) / 6; }

NCPoly NCPoly::scalar(Chart c, const QLaurent& v) {
    NCPoly p(c);
    if (!v.is_zero()) p.terms_.emplace(MonoKey{}, v);
    return p;
}

NCPoly NCPoly::gen(Chart c, int idx) {
    if (idx < 0 || idx > 3) throw std::out_of_range("NCPoly: generator index");
    Exps e{0, 0, 0, 0};
    e[static_cast<std::size_t>(idx)] = 1;
    return monomial(c, e);
}

NCPoly NCPoly::monomial(Chart c, const Exps& e, const QLaurent& coef, int k) {
    for (int v : e)
        if (v < 0) throw std::invalid_argument("NCPoly: negative exponent");
    if (k != 0 && c != Chart::IJ) throw std::invalid_argument("NCPoly: det power outside chart IJ");
    NCPoly p(c);
    if (coef.is_zero()) return p;
    p.terms_.emplace(MonoKey{k, e}, coef);
    if (c == Chart::IJ) ij_reduce(p.terms_);
    return p;
}

NCPoly NCPoly::det(Chart c) {
    if (c == Chart::IJ) return det_power(1);
    NCPoly p(c);
    if (c == Chart::I) {
        p.add_term({0, {1, 0, 0, 1}}, QLaurent(1));
        p.add_term({0, {0, 1, 1, 0}}, QLaurent(-1));
    } else {
        // y11 y22 - y21 y12, normalized
        p = word(c, {0, 3}) - word(c, {2, 1});
    }
    return p;
}

NCPoly NCPoly::det_power(int k) {
    NCPoly p(Chart::IJ);
    p.terms_.emplace(MonoKey{k, {0, 0, 0, 0}}, QLaurent(1));
    return p;
}

NCPoly NCPoly::word(Chart c, const std::vector<int>& gens, const QLaurent& coef) {
    NCPoly p = scalar(c, coef);
    for (int g : gens) p = p * NCPoly::gen(c, g);
    return p;
}

QLaurent NCPoly::coeff(const MonoKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? QLaurent() : it->second;
}

int NCPoly::degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.degree() + 2 * k.k);
    return d;
}

bool NCPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
        int dk = k.degree() + 2 * k.k;
        if (d >= 0 && dk != d) return false;
        d = dk;
    }
    return true;
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (o.chart_ != chart_) throw std::invalid_argument("NCPoly: chart mismatch in +");
    for (const auto& [k, c] : o.terms_) add_to(terms_, k, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    if (o.chart_ != chart_) throw std::invalid_argument("NCPoly: chart mismatch in -");
    for (const auto& [k, c] : o.terms_) add_to(terms_, k, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const QLaurent& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    if (a.chart_ != b.chart_) throw std::invalid_argument("NCPoly: chart mismatch in *");
    NCPoly r(a.chart_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            QLaurent c = ca * cb;
            if (a.chart_ == Chart::IJ && kb.k != 0) c = c.shifted(det_shift_exponent(ka.e, kb.k));
            for (const auto& [e, cm] : mono_mul(a.chart_, ka.e, kb.e)) add_to(r.terms_, MonoKey{ka.k + kb.k, e}, c * cm);
        }
    if (r.chart_ == Chart::IJ) ij_reduce(r.terms_);
    return r;
}

NCPoly NCPoly::pow(unsigned n) const {
    NCPoly r = one(chart_);
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
}

NCPoly NCPoly::at_q_one() const {
    NCPoly r(chart_);
    for (const auto& [k, c] : terms_) add_to(r.terms_, k, QLaurent(c.at_one()));
    return r;
}

NCPoly NCPoly::conj_coeffs() const {
    NCPoly r(chart_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.conj());
    return r;
}

NCPoly NCPoly::homogeneous_part(int d) const {
    NCPoly r(chart_);
    for (const auto& [k, c] : terms_)
        if (k.degree() + 2 * k.k == d) r.terms_.emplace(k, c);
    return r;
}

NCPoly NCPoly::to_IJ() const {
    if (chart_ == Chart::IJ) return *this;
    if (chart_ != Chart::I) throw std::invalid_argument("NCPoly: only chart I embeds directly into IJ");
    NCPoly r(Chart::IJ);
    r.terms_ = terms_;
    ij_reduce(r.terms_);
    return r;
}

void NCPoly::add_term(const MonoKey& key, const QLaurent& c) { add_to(terms_, key, c); }

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string m;
        auto app = [&](const std::string& s) { m += (m.empty() ? "" : "*") + s; };
        if (k.k != 0) app(k.k == 1 ? "det" : "det^" + std::to_string(k.k));
        for (int g = 0; g < 4; ++g) {
            int e = k.e[static_cast<std::size_t>(g)];
            if (e == 0) continue;
            app(gen_name(chart_, g) + (e > 1 ? "^" + std::to_string(e) : ""));
        }
        std::string cs = c.str();
        bool single = c.is_monomial();
        bool neg = single && cs[0] == '-';
        if (neg) cs = (-c).str();
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (m.empty()) out += single ? cs : "(" + cs + ")";
        else if (cs == "1") out += m;
        else out += (single ? cs : "(" + cs + ")") + "*" + m;
    }
    return out;
}

}  // namespace qadhm
