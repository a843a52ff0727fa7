#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qadhm/adhm/datum.hpp"
#include "qadhm/exactcore/polygcd.hpp"

namespace qadhm {

// Smallest subspace containing Im(i) and invariant under B1, B2 (columns form a basis).
QMatrix invariant_closure(const QMatrix& B1, const QMatrix& B2, const QMatrix& i);

struct StabilityWitness {
    bool ok = false;
    // basis of the violating subspace: the proper invariant subspace containing Im i
    // (stability) or the nonzero invariant subspace inside ker j (costability)
    QMatrix witness;
};
StabilityWitness is_stable(const QMatrix& B1, const QMatrix& B2, const QMatrix& i);
StabilityWitness is_costable(const QMatrix& B1, const QMatrix& B2, const QMatrix& j);

// Columns B1^m B2^n i for 0 <= m,n <= c-1; kept only as a comparison oracle.
QMatrix ordered_monomial_map(const QMatrix& B1, const QMatrix& B2, const QMatrix& i);

using ProjPoint = std::pair<GaussRational, GaussRational>;  // [z:w]

struct PencilGcd {
    bool identically_zero = false;  // every minor vanishes: fails at every point
    HomPoly gcd;                    // valid when !identically_zero
    std::vector<ProjPoint> roots;   // roots over Q(i)
    std::string factored;           // "1" when nothing fails
    std::size_t minors_examined = 0;
    bool everywhere() const { return !identically_zero && gcd.deg == 0; }
};
// gcd of the c x c minors of the Krylov pencil [words(B~1,B~2) i~]
PencilGcd stability_gcd(const ComplexADHMDatum& d);
// same for the transposed triple with j~
PencilGcd costability_gcd(const ComplexADHMDatum& d);

struct StabilityReport {
    bool stable_everywhere = false;
    bool costable_everywhere = false;
    bool semistable = false;
    bool semiregular = false;
    bool regular = false;
    std::vector<ProjPoint> failing_points;          // stability fails here (over Q(i))
    std::vector<ProjPoint> costable_failing_points;
    std::string stability_gcd = "0", costability_gcd = "0";
    std::optional<QMatrix> witness_subspace;        // at the first failing point, when there is one
};
StabilityReport classify(const ComplexADHMDatum& d);

// The 3c^2 x (4c^2+4cr) matrix of the derivative of [B~1,B~2]+i~j~.
QMatrix derivative_matrix(const ComplexADHMDatum& d);
std::size_t derivative_rank(const ComplexADHMDatum& d);
// (4c^2 + 4rc) - rank - c^2
long dimension_audit(const ComplexADHMDatum& d);

// dim {X : [B1,X] = [B2,X] = 0, X i = 0}
std::size_t stabilizer_dim(const QMatrix& B1, const QMatrix& B2, const QMatrix& i);

enum class RealStratum { Stable, Costable, Regular, Irregular };
std::string to_string(RealStratum s);
// throws std::invalid_argument if d does not solve the real equations with this xi
RealStratum real_stratify(const RealADHMDatum& d, const GaussRational& xi);

}  // namespace qadhm
