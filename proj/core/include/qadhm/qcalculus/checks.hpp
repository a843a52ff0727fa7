#pragma once

#include <string>
#include <vector>

#include "qadhm/qcalculus/operators.hpp"

namespace qadhm {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

bool all_ok(const std::vector<Check>& cs);
std::string failures(const std::vector<Check>& cs);  // names of failing checks, comma separated

// Identities the derived table must reproduce, plus d^2 = 0 up to max_degree.
std::vector<Check> verify_table(const Calculus& c, int max_degree = 4);

// (delcommut1)-(delcommut2) as operator identities on every monomial of degree <= max_degree.
Check partial_commutation(const Calculus& c, int max_degree);
// both printed orderings of the Laplacian, monomials up to max_degree
Check laplacian_orderings(const Calculus& c, int max_degree);
// box X = 0 for all 2l <= two_l_max
Check harmonics_annihilated(const Calculus& c, int two_l_max);
// the four partial-derivative formulas on every X^l with 2l <= two_l_max
Check partials_on_harmonics(const Calculus& c, int two_l_max);
// del-det lines on every monomial of degree <= max_degree
Check del_det(const Calculus& c, int max_degree);
// propf1 / propf2 on monomials of degree <= max_degree
Check propf(const Calculus& c, int max_degree);
// Delta X^l = p^(2l-1)[2l] X^l
Check delta_eigen(const Calculus& c, int two_l_max);
// tilde box (det^k X^l) = p^(2k+2l-3)[k][k+2l+1] det^k X^l
Check tilde_eigen(const Calculus& c, int k_max, int two_l_max);
// measured eigenvalue against both printed formulas; ok iff only [k+2l+1] matches whenever k > 0
Check eigen_adjudication(const Calculus& c, int k_max, int two_l_max);
// dim ker box on the degree-d slice equals (d+1)^2
Check harmonic_kernel(const Calculus& c, int d);
// *d*d f == box f on monomials of degree <= max_degree and X^l with 2l <= two_l_max
Check star_laplace(const Calculus& c, int max_degree, int two_l_max);
// penrose_scalar: index map bijective onto the harmonic indices, image harmonic, slices injective
Check penrose_bijection(const Calculus& c, int two_l_max);

}  // namespace qadhm
