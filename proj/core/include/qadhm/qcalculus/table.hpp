#pragma once

#include <array>
#include <string>
#include <vector>

#include "qadhm/exactcore/qlaurent.hpp"
#include "qadhm/exactcore/qnumbers.hpp"

namespace qadhm {

// Generator indices 0..3 stand for 11', 12', 21', 22' throughout.

// dx_b x_a = sum coef * x_c dx_d   (left-normalized: coefficients in front)
struct XRule {
    int c = 0, d = 0;
    QLaurent coef;
};

// dx_b ^ dx_a (b >= a) = sum coef * dx_lo ^ dx_hi with lo < hi
struct WedgeRule {
    int lo = 0, hi = 0;
    QLaurent coef;
};

struct CalculusTable {
    PChoice p = PChoice::Q;
    std::array<std::vector<XRule>, 16> dx_x;      // index 4*b + a
    std::array<std::vector<WedgeRule>, 16> wedge;  // index 4*b + a, filled for b >= a
    // bookkeeping from the derivation
    std::size_t unknowns = 0, equations = 0, rank = 0;
    std::string leibniz = "d(fg) = (df) g + f (dg)";
    std::vector<std::string> constraint_groups;
    bool squares_forced = false;  // dx_a ^ dx_a = 0 came out of the relations rather than being imposed

    const std::vector<XRule>& rule(int b, int a) const { return dx_x[static_cast<std::size_t>(4 * b + a)]; }
    const std::vector<WedgeRule>& pair_rule(int b, int a) const { return wedge[static_cast<std::size_t>(4 * b + a)]; }
};

// Whether x_c dx_d may appear in dx_b x_a: row and column index multisets must match.
bool charge_allowed(int b, int a, int c, int d);

// Solves the linear constraint system for the rule coefficients.
// Throws std::runtime_error "inconsistent constraints: <group>" or "underdetermined: <params>".
CalculusTable derive_table(PChoice p);

std::string rule_str(const CalculusTable& t, int b, int a);
std::string wedge_str(const CalculusTable& t, int b, int a);

}  // namespace qadhm
