#pragma once

#include "qadhm/exactcore/gauss_rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qadhm {

// Laurent polynomial in the formal parameter q with Q(i) coefficients.
// Terms are kept sorted by exponent, zero coefficients never stored.
class QLaurent {
public:
    using Term = std::pair<int, GaussRational>;

    QLaurent() = default;
    QLaurent(const GaussRational& c);  // NOLINT(implicit)
    QLaurent(long c) : QLaurent(GaussRational(c)) {}  // NOLINT(implicit)

    static QLaurent monomial(const GaussRational& c, int e);
    static QLaurent q(int e = 1) { return monomial(GaussRational(1), e); }
    static QLaurent from_terms(std::vector<Term> terms);  // merges and drops zeros

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    int min_exp() const;
    int max_exp() const;
    GaussRational coeff(int e) const;
    GaussRational lead() const;  // coefficient of the top exponent

    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent& operator*=(const QLaurent& o);
    QLaurent& operator*=(const GaussRational& c);

    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

    QLaurent shifted(int k) const;  // times q^k
    QLaurent invert_q() const;      // q -> 1/q
    QLaurent conj() const;          // conjugate coefficients, q fixed
    QLaurent pow(unsigned n) const;
    GaussRational eval(const GaussRational& at) const;  // at must be nonzero if negative exponents
    GaussRational at_one() const;

    // Exact division; throws if b does not divide *this in Q(i)[q,1/q].
    QLaurent divide_exact(const QLaurent& b) const;
    bool divides(const QLaurent& b) const;  // does *this divide b

    std::string str() const;
    std::size_t hash() const;

private:
    std::vector<Term> terms_;
};

inline bool is_zero(const QLaurent& f) { return f.is_zero(); }

// printable coefficient: "3", "-1/2", "(1/2+1*i)"
std::string coeff_str(const GaussRational& c);

}  // namespace qadhm
