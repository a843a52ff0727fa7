#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qadhm/adhm/stability.hpp"
#include "qadhm/qcalculus/forms.hpp"
#include "qadhm/qspacetime/ncpoly.hpp"

namespace qadhm {

// Matrix of algebra elements acting on column vectors by left multiplication.
struct ModuleOperator {
    std::size_t rows = 0, cols = 0;
    Chart chart = Chart::I;
    std::vector<NCPoly> e;  // row-major
    std::string blocks;     // e.g. "V+V+W <- V"

    static ModuleOperator zero(std::size_t rows, std::size_t cols, Chart chart);
    NCPoly& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const NCPoly& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
    bool is_zero() const;
    int max_degree() const;
    std::size_t term_count() const;
    std::vector<NCPoly> apply(const std::vector<NCPoly>& v) const;

    friend ModuleOperator operator*(const ModuleOperator& a, const ModuleOperator& b);
    friend ModuleOperator operator+(const ModuleOperator& a, const ModuleOperator& b);
    friend ModuleOperator operator-(const ModuleOperator& a, const ModuleOperator& b);
    friend ModuleOperator operator*(const GaussRational& s, const ModuleOperator& a);
    friend bool operator==(const ModuleOperator& a, const ModuleOperator& b);
    friend bool operator!=(const ModuleOperator& a, const ModuleOperator& b) { return !(a == b); }
};

struct QOps {
    ModuleOperator alpha1, alpha2, beta1, beta2;
    ModuleOperator alpha_bar() const;  // (alpha1 alpha2)
    ModuleOperator beta_bar() const;   // (-beta2; beta1)
};
// chart I: L_kl = B_kl - x_kl; chart J: B11 - y22, B12 + y12, B21 + y21, B22 - y11.
// alpha_k = (L_k1; L_k2; j_k), beta_k = (-L_k2, L_k1, i_k)
QOps build_q_ops(const ComplexADHMDatum& d, Chart chart);
ModuleOperator scalar_operator(const QMatrix& m, Chart chart);

struct IdsReport {
    bool holds = false;               // all three identities vanish
    bool equal_residuals = false;     // each identity is exactly residual (x) 1
    std::size_t terms[3] = {0, 0, 0}; // normal-form term counts
};
IdsReport verify_ids(const ComplexADHMDatum& d, Chart chart = Chart::I);

struct BpaqReport {
    ModuleOperator product;
    GaussRational factor;  // p1 q2 - p2 q1
    bool matches = false;
};
BpaqReport beta_p_alpha_q(const ComplexADHMDatum& d, const ProjPoint& P, const ProjPoint& Q, Chart chart = Chart::I);

struct XiReport {
    ModuleOperator b1a2;
    bool leading_is_det = false;  // degree-2 part is det . 1_V
    bool degree_ok = false;       // entries of degree <= 2
};
XiReport xi_leading(const ComplexADHMDatum& d, Chart chart = Chart::I);

struct SliceSurjectivity {
    int dmax = 0;
    std::optional<bool> surjective;  // empty when neither certificate could be built
    std::string certificate;         // "preimages" or "annihilator"
    std::size_t domain_dim = 0, codomain_dim = 0, target_dim = 0;
    std::size_t zp_rank = 0, zp_rank_with_target = 0;  // one F_p specialization of q
    bool specialization_agrees = false;
};
// Is V (x) M_{<= dmax} inside beta_P(W~ (x) M_{<= dmax+c-1})?  Decided exactly: explicit preimages
// of V (x) 1 over Q(i)(q), or a functional phi (x) chi vanishing on the whole image.
SliceSurjectivity beta_surjective_truncated(const ComplexADHMDatum& d, const ProjPoint& P, int dmax,
                                            Chart chart = Chart::I);

struct CurvatureReport {
    std::vector<NCForm> entries;           // (2c+r)^2, row-major: d(alpha_bar) ^ d(beta_bar)
    std::vector<NCForm> displayed_factor;  // d(alpha_bar) ^ (d beta2; -d beta1), the right factor as printed
    std::vector<NCForm> expected;          // the printed final matrix, block-diagonal in V
    bool matches_display = false;          // displayed_factor == expected
    bool matches_with_defined_sign = false;// entries == -expected
    bool all_asd = false;
    std::vector<std::string> non_asd;      // "(i,j): SD part ..."
};
CurvatureReport curvature_asd(const ComplexADHMDatum& d, const Calculus& calc);

// P psi = psi - alpha_bar Xi^-1 beta_bar psi with Xi = beta1 alpha2 (x) 1, solved on degree slices.
// Throws "truncation insufficient" when the slice system has no solution.
std::vector<NCPoly> projection_truncated(const ComplexADHMDatum& d, const std::vector<NCPoly>& psi, int dmax);

}  // namespace qadhm
