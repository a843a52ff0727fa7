#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qadhm/exactcore/qrat.hpp"
#include "qadhm/qcalculus/forms.hpp"
#include "qadhm/qspacetime/harmonic.hpp"

namespace qadhm {

// box = d11 d22 - d21 d12 (compositions, rightmost acts first)
NCPoly laplacian(const Calculus& c, const NCPoly& f);
// the other printed ordering, d22 d11 - d12 d21
NCPoly laplacian_alt(const Calculus& c, const NCPoly& f);
// Delta f = sum (d_a f) x_a
NCPoly delta_op(const Calculus& c, const NCPoly& f);
// det(x) box, with det multiplied on the right (the operator D_x); see README
NCPoly tilde_laplacian(const Calculus& c, const NCPoly& f);
NCPoly tilde_laplacian_left(const Calculus& c, const NCPoly& f);

QLaurent delta_eigenvalue(PChoice p, int two_l);              // p^(2l-1) [2l]
QLaurent tilde_eigenvalue(PChoice p, int k, int two_l);       // p^(2k+2l-3) [k][k+2l+1]
QLaurent tilde_eigenvalue_alt(PChoice p, int k, int two_l);   // the competing p^(2k+2l-3) [k][k+2l+2]

// lambda with g == lambda f, if any (f nonzero)
std::optional<QRat> eigen_ratio(const NCPoly& f, const NCPoly& g);

// Hodge star on 0-, 1-, 3- and 4-forms.  The result is form / denom because
// 1/[2] is not a Laurent polynomial.
struct StarResult {
    NCForm form;
    QLaurent denom{1};
};
StarResult hodge_star(const Calculus& c, const NCForm& w);  // degree 2 throws
NCPoly laplace_via_star(const Calculus& c, const NCPoly& f);  // * d * d f

enum class Duality { SD, ASD, Mixed };
std::string to_string(Duality d);
// coordinates in (dx11^dx12, dx21^dx22, dx11^dx22 - dx12^dx21) and
// (dx11^dx21, dx12^dx22, dx11^dx22 + dx12^dx21)
struct DualityReport {
    Duality kind = Duality::ASD;
    std::array<NCPoly, 3> sd{NCPoly(Chart::I), NCPoly(Chart::I), NCPoly(Chart::I)};
    std::array<NCPoly, 3> asd{NCPoly(Chart::I), NCPoly(Chart::I), NCPoly(Chart::I)};
};
DualityReport asd_membership(const NCForm& w);  // degree 2 only

// x^a y^b / (z^c w^d) with a + b - c - d = -2 and c, d >= 1
struct CechMonomial {
    QLaurent coef{1};
    int a = 0, b = 0, c = 1, d = 1;
    std::string str() const;
};
HarmonicIndex cech_index(const CechMonomial& m);  // throws std::invalid_argument when malformed
CechMonomial cech_monomial(const HarmonicIndex& idx);
NCPoly penrose_scalar(const std::vector<CechMonomial>& cocycle);

bool conjugation_identity_check(PChoice p, int k, int two_l);

}  // namespace qadhm
