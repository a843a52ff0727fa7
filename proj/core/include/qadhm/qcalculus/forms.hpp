#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qadhm/qcalculus/table.hpp"
#include "qadhm/qspacetime/ncpoly.hpp"

namespace qadhm {

// Differential form on chart I: sum of coef * x^e * dx_w where w is a strictly
// increasing wedge word, stored as a bit mask (bit g <=> dx_g present).
class NCForm {
public:
    using Key = std::pair<unsigned, Exps>;
    using Terms = std::map<Key, QLaurent>;

    explicit NCForm(int degree = 0);
    static NCForm from_poly(const NCPoly& f, unsigned mask);  // f * dx_mask
    static NCForm dx(int g);
    static NCForm vol();  // dx11^dx12^dx21^dx22

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    NCPoly component(unsigned mask) const;  // coefficient polynomial of dx_mask
    std::vector<unsigned> masks() const;

    void add(unsigned mask, const Exps& e, const QLaurent& c);
    NCForm& operator+=(const NCForm& o);
    NCForm& operator-=(const NCForm& o);
    NCForm operator-() const;
    friend NCForm operator+(NCForm a, const NCForm& b) { return a += b; }
    friend NCForm operator-(NCForm a, const NCForm& b) { return a -= b; }
    friend NCForm operator*(const QLaurent& c, const NCForm& w);
    friend NCForm operator*(const NCPoly& f, const NCForm& w);  // left multiplication needs no rewriting
    friend bool operator==(const NCForm& a, const NCForm& b) { return a.degree_ == b.degree_ && a.terms_ == b.terms_; }
    friend bool operator!=(const NCForm& a, const NCForm& b) { return !(a == b); }

    std::string str() const;

private:
    int degree_;
    Terms terms_;
};

int popcount4(unsigned mask);
std::string mask_str(unsigned mask);  // "dx11^dx22"
std::vector<int> mask_word(unsigned mask);

// Everything that needs the rewrite table.  The table is immutable; the
// memo tables are per instance, so do not share one instance across threads.
class Calculus {
public:
    explicit Calculus(PChoice p);
    explicit Calculus(CalculusTable t);

    const CalculusTable& table() const { return *table_; }
    PChoice p() const { return table_->p; }

    // reduce a wedge word (any order, repeats allowed) to ordered masks
    const std::map<unsigned, QLaurent>& reduce_word(const std::vector<int>& w) const;

    // dx_b * x^e as a left-normalized 1-form
    const NCForm& dx_times(int b, const Exps& e) const;
    NCForm times(const NCForm& w, const NCPoly& f) const;     // w * f
    NCForm wedge(const NCForm& a, const NCForm& b) const;     // general product

    const std::array<NCPoly, 4>& partials_of(const Exps& e) const;
    std::array<NCPoly, 4> partials(const NCPoly& f) const;
    NCPoly partial(int a, const NCPoly& f) const { return partials(f)[static_cast<std::size_t>(a)]; }

    NCForm d(const NCPoly& f) const;
    NCForm d(const NCForm& w) const;

private:
    std::shared_ptr<const CalculusTable> table_;
    mutable std::map<std::vector<int>, std::map<unsigned, QLaurent>> word_cache_;
    mutable std::map<std::pair<int, Exps>, NCForm> dx_cache_;
    mutable std::map<Exps, std::array<NCPoly, 4>> partial_cache_;
};

}  // namespace qadhm
