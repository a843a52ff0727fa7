#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qadhm/exactcore/qlaurent.hpp"

namespace qadhm {

// I: generators x11,x12,x21,x22.  J: y11,y12,y21,y22.  IJ: left powers of
// det(x) (any integer) times x-monomials that never contain both x11 and x22.
enum class Chart { I, J, IJ };

std::string to_string(Chart c);

using Exps = std::array<int, 4>;  // exponents of generators 11,12,21,22

struct MonoKey {
    int k = 0;  // power of det(x); only nonzero in chart IJ
    Exps e{0, 0, 0, 0};
    friend bool operator<(const MonoKey& a, const MonoKey& b) {
        return a.k != b.k ? a.k < b.k : a.e < b.e;
    }
    friend bool operator==(const MonoKey& a, const MonoKey& b) { return a.k == b.k && a.e == b.e; }
    int degree() const { return e[0] + e[1] + e[2] + e[3]; }
};

// Normal-form element of the quantum Minkowski algebra (or a chart of it).
class NCPoly {
public:
    using Terms = std::map<MonoKey, QLaurent>;

    explicit NCPoly(Chart c = Chart::I) : chart_(c) {}

    static NCPoly one(Chart c) { return scalar(c, QLaurent(1)); }
    static NCPoly scalar(Chart c, const QLaurent& v);
    static NCPoly gen(Chart c, int idx);  // idx 0..3 = 11,12,21,22
    static NCPoly monomial(Chart c, const Exps& e, const QLaurent& coef = QLaurent(1), int k = 0);
    // x11 x22 - x12 x21 in I; y11 y22 - y21 y12 in J; det^1 in IJ
    static NCPoly det(Chart c);
    static NCPoly det_power(int k);  // chart IJ
    // Normal form of an arbitrary word of generators.
    static NCPoly word(Chart c, const std::vector<int>& gens, const QLaurent& coef = QLaurent(1));

    Chart chart() const { return chart_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QLaurent coeff(const MonoKey& k) const;
    int degree() const;      // max total degree in generators (IJ counts det as 2), -1 for zero
    bool is_homogeneous() const;

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const QLaurent& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const QLaurent& c, NCPoly a) { return a *= c; }
    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        return a.chart_ == b.chart_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    NCPoly pow(unsigned n) const;
    NCPoly at_q_one() const;  // coefficients evaluated at q = 1
    NCPoly conj_coeffs() const;
    NCPoly homogeneous_part(int d) const;

    // chart I element viewed in chart IJ (canonical form)
    NCPoly to_IJ() const;

    // adds c * (k, e) without normalizing: caller guarantees e is a normal monomial
    void add_term(const MonoKey& key, const QLaurent& c);

    std::string str() const;

private:
    Chart chart_;
    Terms terms_;
};

// Multiplication table entry: normal form of monomial(e1) * monomial(e2) in chart I or J.
const std::vector<std::pair<Exps, QLaurent>>& mono_mul(Chart c, const Exps& e1, const Exps& e2);

// Commutation of monomials with det(x): m * det^j = q^{(2 e21 - 2 e12) j} det^j * m.
int det_shift_exponent(const Exps& e, int j);

// all exponent tuples of total degree d, in lexicographic order
std::vector<Exps> monomials_of_degree(int d);
int count_monomials(int d);

std::string gen_name(Chart c, int idx);

}  // namespace qadhm
