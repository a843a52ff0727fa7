#include "qadhm/qcalculus/forms.hpp"

#include <stdexcept>

namespace qadhm {

namespace {

const char* G[4] = {"11", "12", "21", "22"};

void add_to(NCForm::Terms& t, const NCForm::Key& k, const QLaurent& c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

Exps unit(int g) {
    Exps e{0, 0, 0, 0};
    e[static_cast<std::size_t>(g)] = 1;
    return e;
}

// last letter of the normal word of x^e (highest generator present)
int last_gen(const Exps& e) {
    for (int g = 3; g >= 0; --g)
        if (e[static_cast<std::size_t>(g)] > 0) return g;
    return -1;
}

}  // namespace

int popcount4(unsigned mask) {
    int n = 0;
    for (int g = 0; g < 4; ++g) n += (mask >> g) & 1u;
    return n;
}

std::vector<int> mask_word(unsigned mask) {
    std::vector<int> w;
    for (int g = 0; g < 4; ++g)
        if (mask & (1u << g)) w.push_back(g);
    return w;
}

std::string mask_str(unsigned mask) {
    if (mask == 0) return "1";
    std::string s;
    for (int g : mask_word(mask)) s += (s.empty() ? "dx" : "^dx") + std::string(G[g]);
    return s;
}

// ---- NCForm

NCForm::NCForm(int degree) : degree_(degree) {
    if (degree < 0 || degree > 4) throw std::invalid_argument("NCForm: degree must be 0..4");
}

NCForm NCForm::from_poly(const NCPoly& f, unsigned mask) {
    if (f.chart() != Chart::I) throw std::invalid_argument("NCForm: coefficients must live in chart I");
    if (mask > 15) throw std::invalid_argument("NCForm: bad wedge mask");
    NCForm w(popcount4(mask));
    for (const auto& [k, c] : f.terms()) w.terms_.emplace(Key{mask, k.e}, c);
    return w;
}

NCForm NCForm::dx(int g) { return from_poly(NCPoly::one(Chart::I), 1u << g); }
NCForm NCForm::vol() { return from_poly(NCPoly::one(Chart::I), 15u); }

NCPoly NCForm::component(unsigned mask) const {
    NCPoly f(Chart::I);
    for (const auto& [k, c] : terms_)
        if (k.first == mask) f.add_term(MonoKey{0, k.second}, c);
    return f;
}

std::vector<unsigned> NCForm::masks() const {
    std::vector<unsigned> out;
    for (const auto& [k, c] : terms_)
        if (out.empty() || out.back() != k.first) out.push_back(k.first);
    return out;
}

void NCForm::add(unsigned mask, const Exps& e, const QLaurent& c) {
    if (popcount4(mask) != degree_) throw std::invalid_argument("NCForm: degree mismatch in add");
    add_to(terms_, Key{mask, e}, c);
}

NCForm& NCForm::operator+=(const NCForm& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    if (o.degree_ != degree_) throw std::invalid_argument("NCForm: adding forms of different degree");
    for (const auto& [k, c] : o.terms_) add_to(terms_, k, c);
    return *this;
}

NCForm& NCForm::operator-=(const NCForm& o) { return *this += -o; }

NCForm NCForm::operator-() const {
    NCForm r(degree_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

NCForm operator*(const QLaurent& c, const NCForm& w) {
    NCForm r(w.degree_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : w.terms_) r.terms_.emplace(k, c * v);
    return r;
}

NCForm operator*(const NCPoly& f, const NCForm& w) {
    if (f.chart() != Chart::I) throw std::invalid_argument("NCForm: coefficients must live in chart I");
    NCForm r(w.degree_);
    for (const auto& [kf, cf] : f.terms())
        for (const auto& [kw, cw] : w.terms_)
            for (const auto& [e, cm] : mono_mul(Chart::I, kf.e, kw.second)) add_to(r.terms_, NCForm::Key{kw.first, e}, cf * cw * cm);
    return r;
}

std::string NCForm::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (unsigned m : masks()) {
        if (!s.empty()) s += " + ";
        std::string c = component(m).str();
        s += (m == 0 ? c : "(" + c + ") " + mask_str(m));
    }
    return s;
}

// ---- Calculus

Calculus::Calculus(PChoice p) : Calculus(derive_table(p)) {}
Calculus::Calculus(CalculusTable t) : table_(std::make_shared<const CalculusTable>(std::move(t))) {}

const std::map<unsigned, QLaurent>& Calculus::reduce_word(const std::vector<int>& w) const {
    auto it = word_cache_.find(w);
    if (it != word_cache_.end()) return it->second;
    std::map<unsigned, QLaurent> out;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] < w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
        unsigned mask = 0;
        for (int g : w) mask |= 1u << g;
        out[mask] = QLaurent(1);
    } else {
        for (const auto& r : table_->pair_rule(w[i], w[i + 1])) {
            std::vector<int> w2(w);
            w2[i] = r.lo;
            w2[i + 1] = r.hi;
            for (const auto& [m, c] : reduce_word(w2)) {
                QLaurent& slot = out[m];
                slot += r.coef * c;
                if (slot.is_zero()) out.erase(m);
            }
        }
    }
    return word_cache_.emplace(w, std::move(out)).first->second;
}

const NCForm& Calculus::dx_times(int b, const Exps& e) const {
    auto key = std::make_pair(b, e);
    auto it = dx_cache_.find(key);
    if (it != dx_cache_.end()) return it->second;
    NCForm out(1);
    int g = last_gen(e);
    if (g < 0) {
        out = NCForm::dx(b);
    } else {
        Exps ep = e;
        --ep[static_cast<std::size_t>(g)];
        const NCForm prev = dx_times(b, ep);
        for (const auto& [k, c] : prev.terms()) {
            int d0 = mask_word(k.first)[0];
            for (const auto& r : table_->rule(d0, g))
                for (const auto& [m2, cm] : mono_mul(Chart::I, k.second, unit(r.c))) out.add(1u << r.d, m2, c * r.coef * cm);
        }
    }
    return dx_cache_.emplace(key, std::move(out)).first->second;
}

NCForm Calculus::times(const NCForm& w, const NCPoly& f) const {
    if (f.chart() != Chart::I) throw std::invalid_argument("Calculus: chart I only");
    NCForm out(w.degree());
    // move the wedge word through the monomial one dx at a time, rightmost first
    struct Piece {
        Exps e;
        std::vector<int> word;
        QLaurent c;
    };
    for (const auto& [kw, cw] : w.terms()) {
        std::vector<int> word = mask_word(kw.first);
        for (const auto& [kf, cf] : f.terms()) {
            std::vector<Piece> cur{{kf.e, {}, QLaurent(1)}};
            for (auto l = word.rbegin(); l != word.rend(); ++l) {
                std::vector<Piece> nxt;
                for (const auto& pc : cur)
                    for (const auto& [k, c] : dx_times(*l, pc.e).terms()) {
                        std::vector<int> wd{mask_word(k.first)[0]};
                        wd.insert(wd.end(), pc.word.begin(), pc.word.end());
                        nxt.push_back({k.second, wd, pc.c * c});
                    }
                cur = std::move(nxt);
            }
            for (const auto& pc : cur)
                for (const auto& [m, cm] : reduce_word(pc.word))
                    for (const auto& [e, ce] : mono_mul(Chart::I, kw.second, pc.e)) out.add(m, e, cw * cf * pc.c * cm * ce);
        }
    }
    return out;
}

NCForm Calculus::wedge(const NCForm& a, const NCForm& b) const {
    int deg = a.degree() + b.degree();
    if (deg > 4) return NCForm(4);
    NCForm out(deg);
    for (unsigned mb : b.masks()) {
        NCPoly g = b.component(mb);
        std::vector<int> tail = mask_word(mb);
        NCForm moved = times(a, g);  // a * g, still of degree a.degree()
        for (const auto& [k, c] : moved.terms()) {
            std::vector<int> w = mask_word(k.first);
            w.insert(w.end(), tail.begin(), tail.end());
            for (const auto& [m, cm] : reduce_word(w)) out.add(m, k.second, c * cm);
        }
    }
    return out;
}

const std::array<NCPoly, 4>& Calculus::partials_of(const Exps& e) const {
    auto it = partial_cache_.find(e);
    if (it != partial_cache_.end()) return it->second;
    std::array<NCPoly, 4> out{NCPoly(Chart::I), NCPoly(Chart::I), NCPoly(Chart::I), NCPoly(Chart::I)};
    int g = last_gen(e);
    if (g >= 0) {
        Exps ep = e;
        --ep[static_cast<std::size_t>(g)];
        const std::array<NCPoly, 4> prev = partials_of(ep);
        // d(m x_g) = (dm) x_g + m dx_g
        for (int a = 0; a < 4; ++a) {
            if (prev[static_cast<std::size_t>(a)].is_zero()) continue;
            for (const auto& r : table_->rule(a, g))
                out[static_cast<std::size_t>(r.d)] += r.coef * (prev[static_cast<std::size_t>(a)] * NCPoly::gen(Chart::I, r.c));
        }
        out[static_cast<std::size_t>(g)] += NCPoly::monomial(Chart::I, ep);
    }
    return partial_cache_.emplace(e, std::move(out)).first->second;
}

std::array<NCPoly, 4> Calculus::partials(const NCPoly& f) const {
    if (f.chart() != Chart::I) throw std::invalid_argument("partials: chart I only");
    std::array<NCPoly, 4> out{NCPoly(Chart::I), NCPoly(Chart::I), NCPoly(Chart::I), NCPoly(Chart::I)};
    for (const auto& [k, c] : f.terms()) {
        const auto& pe = partials_of(k.e);
        for (std::size_t a = 0; a < 4; ++a)
            if (!pe[a].is_zero()) out[a] += c * pe[a];
    }
    return out;
}

NCForm Calculus::d(const NCPoly& f) const {
    auto P = partials(f);
    NCForm out(1);
    for (int a = 0; a < 4; ++a) out += NCForm::from_poly(P[static_cast<std::size_t>(a)], 1u << a);
    return out;
}

NCForm Calculus::d(const NCForm& w) const {
    if (w.degree() >= 4) return NCForm(4);
    NCForm out(w.degree() + 1);
    for (const auto& [k, c] : w.terms()) {
        const auto& P = partials_of(k.second);
        std::vector<int> word = mask_word(k.first);
        for (int a = 0; a < 4; ++a) {
            if (P[static_cast<std::size_t>(a)].is_zero()) continue;
            std::vector<int> w2{a};
            w2.insert(w2.end(), word.begin(), word.end());
            for (const auto& [m, cm] : reduce_word(w2)) out += NCForm::from_poly((c * cm) * P[static_cast<std::size_t>(a)], m);
        }
    }
    return out;
}

}  // namespace qadhm
