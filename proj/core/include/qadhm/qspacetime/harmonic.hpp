#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qadhm/exactcore/matrix.hpp"
#include "qadhm/exactcore/modp.hpp"
#include "qadhm/exactcore/qrat.hpp"
#include "qadhm/qspacetime/ncpoly.hpp"

namespace qadhm {

// Half-integers stored doubled.  m splits the exponents ((l-m) and (l+m)
// factors), n picks the residue (coefficient of s^(l-n)).
struct HarmonicIndex {
    int two_l = 0, two_m = 0, two_n = 0;
    int k = 0;  // power of det(x)

    bool in_range() const { return two_m >= -two_l && two_m <= two_l && two_n >= -two_l && two_n <= two_l; }
    std::string str() const;
};

void validate(const HarmonicIndex& idx);  // parity and l >= 0; throws std::invalid_argument

// all in-range (m,n) for a given 2l, m outer, n inner, ascending
std::vector<HarmonicIndex> harmonic_indices(int two_l, int k = 0);

// X^l_{m,n}: coefficient of s^(l-n) in (x11 s + x21)^(l-m) (x12 s + x22)^(l+m).
NCPoly harmonic(const HarmonicIndex& idx);
// The same element summed term by term with brace binomials (the q-binomial theorem route).
NCPoly harmonic_b9(const HarmonicIndex& idx);
// Y^l_{m,n}: coefficient of t^(l-m) in (y11 t + y12)^(l-n) (y21 t + y22)^(l+n), chart J.
NCPoly harmonic_Y(const HarmonicIndex& idx);
// det(x)^k X^l_{m,n} in chart I (k >= 0)
NCPoly basis_element(const HarmonicIndex& idx);

// Column j holds the coefficients of polys[j] on the given monomial basis.
template <class T, class F>
Matrix<T> coordinate_matrix(const std::vector<NCPoly>& polys, const std::vector<MonoKey>& basis, F&& conv);

std::vector<MonoKey> degree_basis(int d);  // chart I monomials of degree d

// Ranks over Q(i)(q) certified from below by two independent F_p specializations;
// 'certified_full' is set when that lower bound already equals the column count.
struct SliceRank {
    std::size_t rank = 0;
    std::size_t cols = 0;
    std::size_t rows = 0;
    bool certified_full = false;
};
SliceRank generic_rank(const std::vector<NCPoly>& polys, const std::vector<MonoKey>& basis);
// exact rank after q -> 1
std::size_t classical_rank(const std::vector<NCPoly>& polys, const std::vector<MonoKey>& basis);

struct DetCommutatorReport {
    bool two_expressions_agree = false;  // x22 x11 - x21 x12 == x11 x22 - x12 x21
    bool x11_central = false, x22_central = false;
    bool x12_q2 = false;      // det x12 = q^2 x12 det
    bool x21_qm2 = false;     // det x21 = q^-2 x21 det
    bool central_at_q1 = false;
    bool ok() const {
        return two_expressions_agree && x11_central && x22_central && x12_q2 && x21_qm2 && central_at_q1;
    }
};
DetCommutatorReport det_commutators();

struct DetMultReport {
    int degree = 0;
    SliceRank slice;
    bool leading_ok = false;  // every monomial's image has lead (n11+1,.,.,n22+1) with unit coefficient
    bool full() const { return slice.certified_full && leading_ok; }
};
DetMultReport det_mult_rank(int d);

struct BasisReport {
    int degree = 0;
    std::size_t count = 0;       // number of det^k X^l with 2k+2l = d
    std::size_t monomials = 0;
    SliceRank generic;
    std::size_t classical = 0;   // rank at q = 1
    bool ok() const { return count == monomials && generic.certified_full && classical == monomials; }
};
BasisReport basis_independence(int d);

// y_a -> det(x)^-1 x_a inside chart IJ
NCPoly substitute_y(const NCPoly& fy);

struct OastResult {
    bool proportional = false;
    QRat lambda;
    std::string detail;
};
// det(x)^k X^l_{m,n} == lambda * det(y)^(-k-2l) Y^l_{m,n} after normalization in chart IJ
OastResult oast_check(const HarmonicIndex& idx);

// -------- template definitions

template <class T, class F>
Matrix<T> coordinate_matrix(const std::vector<NCPoly>& polys, const std::vector<MonoKey>& basis, F&& conv) {
    std::map<MonoKey, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    Matrix<T> m(basis.size(), polys.size());
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (const auto& [k, c] : polys[j].terms()) {
            auto it = pos.find(k);
            if (it == pos.end()) throw std::invalid_argument("coordinate_matrix: term outside basis");
            m(it->second, j) = conv(c);
        }
    return m;
}

}  // namespace qadhm
