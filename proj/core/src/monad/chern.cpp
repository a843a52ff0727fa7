#include "qadhm/monad/chern.hpp"

#include <sstream>

namespace qadhm {

ChernClass ChernClass::constant(const mpq_class& v) {
    ChernClass c;
    c.a[0] = v;
    return c;
}

ChernClass ChernClass::exp_h(long k) {
    ChernClass c;
    mpq_class kk(k);
    c.a[0] = 1;
    c.a[1] = kk;
    c.a[2] = kk * kk / 2;
    c.a[3] = kk * kk * kk / 6;
    return c;
}

ChernClass ChernClass::td_p3() {
    ChernClass c;
    c.a = {mpq_class(1), mpq_class(2), mpq_class(11, 6), mpq_class(1)};
    return c;
}

ChernClass operator+(const ChernClass& x, const ChernClass& y) {
    ChernClass o;
    for (int k = 0; k < 4; ++k) o.a[k] = x.a[k] + y.a[k];
    return o;
}

ChernClass operator-(const ChernClass& x, const ChernClass& y) {
    ChernClass o;
    for (int k = 0; k < 4; ++k) o.a[k] = x.a[k] - y.a[k];
    return o;
}

ChernClass operator*(const ChernClass& x, const ChernClass& y) {
    ChernClass o;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j) o.a[i + j] += x.a[i] * y.a[j];
    return o;
}

ChernClass operator*(const mpq_class& s, const ChernClass& x) {
    ChernClass o;
    for (int k = 0; k < 4; ++k) o.a[k] = s * x.a[k];
    return o;
}

std::string ChernClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (a[k] == 0) continue;
        mpq_class v = a[k];
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        mpq_class m = abs(v);
        if (k == 0 || m != 1) os << m.get_str() << (k > 0 && m.get_den() != 1 ? " " : "");
        if (k >= 1) os << "H";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return first ? "0" : os.str();
}

ChernClass chern_of_monad(long r, long c) {
    mpq_class cc(c);
    return ChernClass::constant(mpq_class(2 * c + r)) - cc * ChernClass::exp_h(-1) - cc * ChernClass::exp_h(1);
}

mpq_class chi_of(const ChernClass& ch) { return (ch * ChernClass::td_p3()).integral(); }

mpq_class chi_line(long k) {
    mpq_class v((k + 1) * (k + 2) * (k + 3), 6);
    v.canonicalize();
    return v;
}

mpq_class chi_twist(long r, long c, long k) { return chi_of(chern_of_monad(r, c).twist(k)); }

mpq_class chi_twist_additive(long r, long c, long k) {
    return mpq_class(2 * c + r) * chi_line(k) - mpq_class(c) * chi_line(k - 1) - mpq_class(c) * chi_line(k + 1);
}

ChernClass ch_omega1() { return mpq_class(4) * ChernClass::exp_h(-1) - ChernClass::constant(1); }

ChernClass ch_omega2_1() { return mpq_class(4) * ChernClass::exp_h(-2) - ChernClass::exp_h(-3); }

ChernClass ch_ideal_of_lines(long lines) {
    // ch O_C = d H^2 + (chi(O_C) - 2d) H^3 since td_1 = 2H
    ChernClass oc;
    oc.a[2] = lines;
    oc.a[3] = mpq_class(lines) - 2 * mpq_class(lines);
    return ChernClass::constant(1) - oc;
}

AppendixB appendix_b_suite(long r, long c) {
    AppendixB b;
    b.r = r;
    b.c = c;
    ChernClass E = chern_of_monad(r, c);
    b.omega1 = ch_omega1();
    b.chi_e_m1 = chi_of(E.twist(-1));
    b.chi_e_omega1 = chi_of(E * b.omega1);
    b.chi_e_omega2_1 = chi_of(E * ch_omega2_1());
    // additivity: Omega^1 = 4 O(-1) - O, Omega^2(1) = 4 O(-2) - O(-3)
    b.add_e_m1 = chi_twist_additive(r, c, -1);
    b.add_e_omega1 = 4 * chi_twist_additive(r, c, -1) - chi_twist_additive(r, c, 0);
    b.add_e_omega2_1 = 4 * chi_twist_additive(r, c, -2) - chi_twist_additive(r, c, -3);
    b.ideal_lines = ch_ideal_of_lines(2 * c);
    ChernClass expected = ChernClass::constant(1);
    expected.a[2] = -c;
    b.obstruction = b.ideal_lines - expected;
    b.obstruction_margin = b.obstruction.a[3];
    return b;
}

}  // namespace qadhm
