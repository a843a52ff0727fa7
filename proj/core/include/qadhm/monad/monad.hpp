#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qadhm/adhm/datum.hpp"
#include "qadhm/adhm/stability.hpp"
#include "qadhm/exactcore/pencil.hpp"

namespace qadhm {

using QPencil = Pencil<GaussRational>;  // variables x, y, z, w
using P3Point = std::array<GaussRational, 4>;

// O(-1)^c --alpha--> O^(2c+r) --beta--> O(1)^c
struct Monad {
    int r = 0, c = 0;
    QPencil alpha;  // (2c+r) x c
    QPencil beta;   // c x (2c+r)
    void validate() const;
};

// alpha = (zB11+wB21+x; zB12+wB22+y; zj1+wj2), beta = (-zB12-wB22-y, zB11+wB21+x, zi1+wi2).
// Throws std::invalid_argument naming the first nonzero residual.
Monad build_monad(const ComplexADHMDatum& d);
// same formulas with no residual check (for perturbation tests)
Monad build_monad_unchecked(const ComplexADHMDatum& d);

// coefficient of each quadratic monomial in beta*alpha; keys are variable index pairs a <= b
// (index 4 is the constant term)
std::vector<std::pair<std::pair<int, int>, QMatrix>> beta_alpha_terms(const Monad& m);
bool beta_alpha_vanishes(const Monad& m);

struct ExactnessAt {
    std::size_t rank_alpha = 0, rank_beta = 0;
    long fiber_dim = 0;  // (2c+r) - rank alpha - rank beta
};
ExactnessAt check_exactness_at(const Monad& m, const P3Point& X);  // throws at the zero vector

// Every point with coordinates in {0, 1, -1, i}, normalized so the first nonzero entry is 1.
std::vector<P3Point> grid_points();
std::vector<P3Point> random_points(std::uint64_t seed, std::size_t n);
std::string point_str(const P3Point& X);

enum class SheafKind { TorsionFree, Reflexive, LocallyFree };
std::string to_string(SheafKind k);
struct SheafClassification {
    SheafKind kind = SheafKind::TorsionFree;
    std::vector<P3Point> singular_sample;  // grid points with rank alpha < c
    StabilityReport report;
};
// throws unless d is a C-stable solution
SheafClassification classify_sheaf(const ComplexADHMDatum& d);

// A point where beta fails to be onto, built from a failing point of the stability pencil
// and a common left eigenvector over Q(i); nothing when d is C-stable or no such
// eigenvector has Gaussian rational eigenvalues.
std::optional<P3Point> beta_bad_point(const ComplexADHMDatum& d);

// Reverse construction: brings alpha_x, alpha_y, beta_x, beta_y to standard form and reads off the datum.
// Errors: "not a monad" (beta alpha != 0), "degenerate at infinity" (beta_x alpha_y singular).
ComplexADHMDatum normalize_monad(const Monad& m);

// alpha -> M alpha R, beta -> L beta M^-1
Monad transform_monad(const Monad& m, const QMatrix& L, const QMatrix& M, const QMatrix& R);

// (g, h) in GL(V) x GL(W) with g.B.g^-1 = B', g i h^-1 = i', h j g^-1 = j', if one exists
std::optional<std::pair<QMatrix, QMatrix>> find_intertwiner(const ComplexADHMDatum& a, const ComplexADHMDatum& b);

}  // namespace qadhm
