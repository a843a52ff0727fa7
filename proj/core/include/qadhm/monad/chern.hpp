#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

namespace qadhm {

// a0 + a1 H + a2 H^2 + a3 H^3 in Q[H]/(H^4)
struct ChernClass {
    std::array<mpq_class, 4> a{};

    static ChernClass constant(const mpq_class& v);
    static ChernClass exp_h(long k);  // ch O(k)
    static ChernClass td_p3();        // 1 + 2H + 11/6 H^2 + H^3
    ChernClass twist(long k) const { return *this * exp_h(k); }
    mpq_class integral() const { return a[3]; }

    friend ChernClass operator+(const ChernClass& x, const ChernClass& y);
    friend ChernClass operator-(const ChernClass& x, const ChernClass& y);
    friend ChernClass operator*(const ChernClass& x, const ChernClass& y);
    friend ChernClass operator*(const mpq_class& s, const ChernClass& x);
    friend bool operator==(const ChernClass& x, const ChernClass& y) { return x.a == y.a; }
    friend bool operator!=(const ChernClass& x, const ChernClass& y) { return !(x == y); }
    std::string str() const;  // e.g. "2 - H^2"
};

// (2c+r) - c ch O(-1) - c ch O(1)
ChernClass chern_of_monad(long r, long c);
mpq_class chi_of(const ChernClass& ch);  // integral of ch . td
mpq_class chi_line(long k);              // (k+1)(k+2)(k+3)/6

// chi(E(k)) through Riemann-Roch and through additivity over the monad
mpq_class chi_twist(long r, long c, long k);
mpq_class chi_twist_additive(long r, long c, long k);

// Euler sequence: 0 -> Omega^1 -> O(-1)^4 -> O -> 0
ChernClass ch_omega1();
// 0 -> Omega^3 = O(-4) -> O(-3)^4 -> Omega^2 -> 0, twisted by 1
ChernClass ch_omega2_1();
// 2c disjoint lines: ch O_C from Riemann-Roch with chi(O_C) = 2c
ChernClass ch_ideal_of_lines(long lines);

struct AppendixB {
    long r = 0, c = 0;
    // Riemann-Roch route / additivity route
    mpq_class chi_e_m1, chi_e_omega1, chi_e_omega2_1;
    mpq_class add_e_m1, add_e_omega1, add_e_omega2_1;
    ChernClass omega1;
    ChernClass ideal_lines;       // 2c lines
    ChernClass obstruction;       // ch(ideal) - (1 - c H^2)
    mpq_class obstruction_margin; // its H^3 coefficient
};
AppendixB appendix_b_suite(long r, long c);

}  // namespace qadhm
