#pragma once

#include <cstdint>
#include <array>
#include <optional>
#include <random>
#include <vector>

#include "qadhm/adhm/datum.hpp"

namespace qadhm {

// Deterministic across platforms: only raw mt19937_64 output is consumed.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}
    long uniform(long lo, long hi);  // inclusive
    // (a + b i)/d with |a|,|b| <= height, d in {1,2}
    GaussRational gauss(int height = 3);
    GaussRational nonzero_gauss(int height = 3);
    QMatrix matrix(std::size_t rows, std::size_t cols, int height = 3);
    QMatrix invertible(std::size_t n, int height = 2);
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

// c = 1 solutions from the three quadrics in (x, y, z, w); always C-stable.  Throws for r < 2.
ComplexADHMDatum c1_generator(int r, std::uint64_t seed);
// Candidate from explicit vectors: i1 = x, i2 = y, j1 = z^T, j2 = w^T, B = scalars.
// Returns nothing when the residual filter rejects it.
std::optional<ComplexADHMDatum> c1_candidate(const std::vector<GaussRational>& x, const std::vector<GaussRational>& y,
                                             const std::vector<GaussRational>& z, const std::vector<GaussRational>& w,
                                             const std::array<GaussRational, 4>& B);

// C-stable solution for r >= 2 (c = 1 via c1_generator, otherwise commuting
// diagonal B's with generic i and j = 0, moved by a random g).  Verified by classify.
ComplexADHMDatum random_c_stable(int c, int r, std::uint64_t seed);
// Solution whose i~ vanishes at one point: i2 = lambda i1, columns of j in ker i1.
ComplexADHMDatum random_non_c_stable(int c, int r, std::uint64_t seed);
// Real solution with xi = 0 that is stable and costable (r >= 2).
RealADHMDatum random_real_regular(int c, int r, std::uint64_t seed);
// Solution of the r = c = 1 equations: either j = 0 or (one seed in five) i = 0.
ComplexADHMDatum random_rc1_solution(std::uint64_t seed);

}  // namespace qadhm
