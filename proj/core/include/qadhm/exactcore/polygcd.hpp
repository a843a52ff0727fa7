#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qadhm/exactcore/matrix.hpp"
#include "qadhm/exactcore/upoly.hpp"

namespace qadhm {

// Homogeneous f(z,w) = sum_k a_k z^k w^(deg-k); a is the dehomogenization at w=1.
struct HomPoly {
    UPoly a;
    int deg = 0;

    bool is_zero() const { return a.is_zero(); }
    int w_multiplicity() const { return deg - a.degree(); }  // order of vanishing at [1:0]
    GaussRational eval(const GaussRational& z, const GaussRational& w) const;
    std::string str() const;  // expanded, e.g. "z^2 + w^2"

    static HomPoly z() { return {UPoly::t(1), 1}; }
    static HomPoly w() { return {UPoly(GaussRational(1)), 1}; }
    static HomPoly constant(const GaussRational& c) { return {UPoly(c), 0}; }
    // a*z + b*w
    static HomPoly linear(const GaussRational& a, const GaussRational& b);
};

HomPoly operator*(const HomPoly& f, const HomPoly& g);
HomPoly operator+(const HomPoly& f, const HomPoly& g);  // degrees must agree unless one is zero
HomPoly operator-(const HomPoly& f, const HomPoly& g);
bool operator==(const HomPoly& f, const HomPoly& g);

// Monic gcd (leading coefficient in z, after removing the w-power, is 1).
// Zero inputs are skipped; empty or all-zero input throws.
HomPoly homogeneous_gcd(const std::vector<HomPoly>& polys);

// Projective roots lying over Q(i), with multiplicities.  'rest' is the monic
// factor left after removing them (constant when everything split).
struct ProjectiveRoots {
    std::vector<std::pair<std::pair<GaussRational, GaussRational>, int>> roots;  // ([z:w], mult)
    UPoly rest;
    std::string factored;  // e.g. "w*(z - i*w)^2*(z^2 + 2*w^2)"
};
ProjectiveRoots projective_roots(const HomPoly& f);

// Roots in Q(i) of a nonzero univariate polynomial, with multiplicity.
std::vector<std::pair<GaussRational, int>> gaussian_roots(const UPoly& f);

// det of a square matrix of homogeneous polynomials (each column homogeneous)
HomPoly hom_det(const std::vector<std::vector<HomPoly>>& m);

}  // namespace qadhm
