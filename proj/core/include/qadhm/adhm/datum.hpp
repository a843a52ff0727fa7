#pragma once

#include <array>
#include <string>

#include "qadhm/exactcore/matrix.hpp"

namespace qadhm {

// (B_kl, i_k, j_k): B's are c x c, i's c x r, j's r x c.
struct ComplexADHMDatum {
    int c = 1, r = 1;
    QMatrix B11, B12, B21, B22, i1, i2, j1, j2;

    static ComplexADHMDatum zero(int c, int r);
    void validate() const;  // throws std::invalid_argument on a shape mismatch
    friend bool operator==(const ComplexADHMDatum& a, const ComplexADHMDatum& b);
    friend bool operator!=(const ComplexADHMDatum& a, const ComplexADHMDatum& b) { return !(a == b); }
};

struct RealADHMDatum {
    int c = 1, r = 1;
    QMatrix B1, B2, i, j;

    static RealADHMDatum zero(int c, int r);
    void validate() const;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);

// ([B11,B12]+i1j1, [B21,B22]+i2j2, [B11,B22]+[B21,B12]+i1j2+i2j1)
std::array<QMatrix, 3> complex_residuals(const ComplexADHMDatum& d);
bool is_solution(const ComplexADHMDatum& d);
// [B~1,B~2] + i~ j~ at [z:w]
QMatrix residual_at(const ComplexADHMDatum& d, const GaussRational& z, const GaussRational& w);

// ([B1,B2]+ij, [B1,B1^+]+[B2,B2^+]+ii^+-j^+j-xi)
std::array<QMatrix, 2> real_residuals(const RealADHMDatum& d, const GaussRational& xi);
bool is_real_solution(const RealADHMDatum& d, const GaussRational& xi);

// Evaluation at [z:w]: (z B11 + w B21, z B12 + w B22, z i1 + w i2, z j1 + w j2)
struct PointDatum {
    QMatrix B1, B2, i, j;
};
PointDatum evaluate(const ComplexADHMDatum& d, const GaussRational& z, const GaussRational& w);

// g . (B, i, j) = (g B g^-1, g i, j g^-1); throws if g is singular
ComplexADHMDatum act(const QMatrix& g, const ComplexADHMDatum& d);
// the involution fixing real data
ComplexADHMDatum dagger(const ComplexADHMDatum& d);
bool is_real(const ComplexADHMDatum& d);

// (B1, B2, -B2^+, B1^+, i, -j^+, j, i^+); throws unless d solves the real equations with xi = 0
ComplexADHMDatum embed_real(const RealADHMDatum& d);

}  // namespace qadhm
