// Acceptance runner: one line per criterion, "criterion N: PASS|FAIL <what was measured>".
// Exit status is 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qadhm/adhm/generators.hpp"
#include "qadhm/adhm/stability.hpp"
#include "qadhm/monad/chern.hpp"
#include "qadhm/monad/monad.hpp"
#include "qadhm/qcalculus/checks.hpp"
#include "qadhm/qinstanton/qops.hpp"
#include "qadhm/qspacetime/harmonic.hpp"

using namespace qadhm;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream msg;
    void note(bool ok, const std::string& what) {
        pass = pass && ok;
        if (msg.tellp() > 0) msg << "; ";
        msg << what << (ok ? "" : " [failed]");
    }
};

GaussRational g(long v) { return GaussRational(v); }

QMatrix rowv(std::initializer_list<long> v) {
    QMatrix m(1, v.size());
    std::size_t k = 0;
    for (long x : v) m(0, k++) = g(x);
    return m;
}

ComplexADHMDatum remark_r2() {
    auto d = ComplexADHMDatum::zero(1, 2);
    d.i1 = rowv({1, 0});
    d.i2 = rowv({0, 1});
    return d;
}

ComplexADHMDatum remark_r3() {
    auto d = ComplexADHMDatum::zero(1, 3);
    d.i1 = rowv({1, 0, 0});
    d.i2 = rowv({0, 1, 0});
    d.j1 = rowv({0, 0, 1}).transpose();
    return d;
}

ComplexADHMDatum instanton1() {
    RealADHMDatum rd = RealADHMDatum::zero(1, 2);
    rd.i = rowv({1, 0});
    rd.j = rowv({0, 1}).transpose();
    return embed_real(rd);
}

const Calculus& calc(PChoice p) {
    static const Calculus cq(PChoice::Q), cqi(PChoice::QInv);
    return p == PChoice::Q ? cq : cqi;
}

// one entry nudged off the solution locus
ComplexADHMDatum perturb(ComplexADHMDatum d, std::uint64_t seed) {
    SeededRng rng(seed);
    QMatrix* slots[] = {&d.B11, &d.B12, &d.B21, &d.B22, &d.i1, &d.i2, &d.j1, &d.j2};
    QMatrix& m = *slots[rng.uniform(0, 7)];
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m.rows()) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m.cols()) - 1));
    m(i, j) = m(i, j) + rng.nonzero_gauss();
    return d;
}

std::string frac(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

const std::pair<int, int> kShapes[] = {{2, 1}, {2, 2}, {3, 1}};  // (r, c)

// ---- 1
Outcome stability_taxonomy() {
    Outcome o;
    auto a = classify(remark_r2());
    o.note(a.stable_everywhere && !a.semiregular, "r=2 example C-stable and not C-semiregular");
    auto b = classify(remark_r3());
    o.note(b.semiregular && !b.regular, "r=3 example C-semiregular and not C-regular");
    std::size_t found = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto d = random_rc1_solution(s);
        auto rep = classify(d);
        if (!is_solution(d) || rep.stable_everywhere) continue;
        if (d.i1.is_zero() && d.i2.is_zero()) {
            found += !rep.semistable;  // i~ vanishes identically
        } else if (rep.failing_points.size() == 1) {
            auto [z, w] = rep.failing_points[0];
            found += is_zero(z * d.i1(0, 0) + w * d.i2(0, 0));
        }
    }
    o.note(found == 100, "r=c=1: exact root of i~ found for " + frac(found, 100) + " seeded solutions");
    std::size_t reg = 0, total = 0;
    for (int r : {2, 3})
        for (int c : {1, 2}) {
            auto d = embed_real(random_real_regular(c, r, static_cast<std::uint64_t>(10 * r + c)));
            ++total;
            reg += classify(d).regular;
        }
    o.note(reg == total, "embed_real gives C-regular data " + frac(reg, total));
    return o;
}

// ---- 2
Outcome smoothness() {
    Outcome o;
    std::size_t good = 0, total = 0;
    for (auto [r, c] : kShapes)
        for (std::uint64_t s = 0; s < 20; ++s) {
            auto d = random_c_stable(c, r, s);
            ++total;
            good += derivative_rank(d) == static_cast<std::size_t>(3 * c * c) && dimension_audit(d) == 4L * r * c;
        }
    o.note(good == total, "C-stable: rank 3c^2 and dimension 4rc for " + frac(good, total));
    std::size_t low = 0, n = 0;
    std::ostringstream per;
    for (auto [r, c] : kShapes) {
        std::size_t lo = 0, cnt = 0;
        for (std::uint64_t s = 0; s < 7 && n < 20; ++s, ++n, ++cnt) {
            auto d = random_non_c_stable(c, r, 500 + s);
            lo += derivative_rank(d) < static_cast<std::size_t>(3 * c * c);
        }
        low += lo;
        per << " (r,c)=(" << r << "," << c << "):" << frac(lo, cnt);
    }
    o.note(low == n, "non-C-stable: rank < 3c^2 for " + frac(low, n) + per.str() +
                         "; surjectivity at a point where i~ vanishes comes from j");
    return o;
}

// ---- 3
Outcome monad_equivalence() {
    Outcome o;
    std::size_t agree = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto [r, c] = kShapes[s % 3];
        auto d = s % 4 == 0 ? random_non_c_stable(c, r, s) : random_c_stable(c, r, s);
        if (s % 2) d = perturb(d, s);
        agree += beta_alpha_vanishes(build_monad_unchecked(d)) == is_solution(d);
    }
    o.note(agree == 100, "beta alpha = 0 iff residuals vanish on " + frac(agree, 100) + " data (half perturbed)");

    auto a = classify_sheaf(remark_r2());
    std::size_t on_line = 0;
    for (const auto& X : grid_points()) on_line += is_zero(X[0]) && is_zero(X[1]);
    bool line = a.singular_sample.size() == on_line;
    for (const auto& X : a.singular_sample) line = line && is_zero(X[0]) && is_zero(X[1]);
    o.note(line, "r=2 singular locus = {x=y=0} on the grid (" + std::to_string(on_line) + " points)");
    auto b = classify_sheaf(remark_r3());
    const P3Point apex{g(0), g(0), g(0), g(1)};
    bool pt = b.singular_sample.size() == 1 && b.singular_sample[0] == apex;
    o.note(pt, "r=3 singular locus = {[0:0:0:1]} on the grid");

    std::size_t rt = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto [r, c] = kShapes[s % 3];
        auto d = random_c_stable(c, r, 300 + s);
        auto back = normalize_monad(build_monad(d));
        rt += is_solution(back) && find_intertwiner(d, back).has_value();
    }
    o.note(rt == 20, "normalize(build(d)) equivalent to d for " + frac(rt, 20));
    return o;
}

// ---- 4
Outcome appendix_b() {
    Outcome o;
    std::size_t m1 = 0, om1 = 0, om2 = 0, cases = 0;
    std::string first_om1;
    for (long r = 1; r <= 4; ++r)
        for (long c = 1; c <= 4; ++c) {
            auto s = appendix_b_suite(r, c);
            ++cases;
            m1 += s.chi_e_m1 == -c && s.add_e_m1 == -c;
            bool w1 = s.chi_e_omega1 == -c - 2 * r && s.add_e_omega1 == -c - 2 * r;
            om1 += w1;
            if (!w1 && first_om1.empty())
                first_om1 = " (e.g. r=" + std::to_string(r) + ",c=" + std::to_string(c) + ": both routes give " +
                            s.chi_e_omega1.get_str() + ", claim " + std::to_string(-c - 2 * r) + ")";
            om2 += s.chi_e_omega2_1 == -c && s.add_e_omega2_1 == -c;
        }
    o.note(m1 == cases, "chi(E(-1)) = -c both routes " + frac(m1, cases));
    o.note(om1 == cases, "chi(E x Omega^1) = -c-2r both routes " + frac(om1, cases) + first_om1);
    o.note(om2 == cases, "chi(E x Omega^2(1)) = -c both routes " + frac(om2, cases));
    ChernClass want;
    want.a = {mpq_class(3), mpq_class(-4), mpq_class(2), mpq_class(2, 3)};
    ChernClass got = ch_omega1();
    o.note(got == want, "ch(Omega^1) from the Euler sequence is " + got.str() + " (claim " + want.str() +
                            "; chi(Omega^1) = " + chi_of(got).get_str() + ")");
    return o;
}

// ---- 5
NCPoly random_poly(std::mt19937_64& gen, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg), c(-2, 2), e(-2, 2), nterms(1, 3), letter(0, 3);
    NCPoly p(Chart::I);
    int n = nterms(gen);
    for (int t = 0; t < n; ++t) {
        int d = deg(gen);
        std::vector<int> word;
        for (int k = 0; k < d; ++k) word.push_back(letter(gen));
        int cv = c(gen);
        p += NCPoly::word(Chart::I, word, QLaurent::monomial(GaussRational(cv == 0 ? 1 : cv), e(gen)));
    }
    return p;
}

Outcome quantum_algebra() {
    Outcome o;
    std::mt19937_64 gen(2024);
    std::size_t assoc = 0;
    for (int t = 0; t < 200; ++t) {
        NCPoly a = random_poly(gen, 2), b = random_poly(gen, 2), c = random_poly(gen, 2);
        assoc += (a * b) * c == a * (b * c);
    }
    o.note(assoc == 200, "associativity " + frac(assoc, 200) + " triples up to degree 6");
    std::size_t basis = 0;
    for (int d = 0; d <= 5; ++d) {
        auto rep = basis_independence(d);
        basis += rep.ok() && rep.count == static_cast<std::size_t>(count_monomials(d));
    }
    o.note(basis == 6, "det^k X^l basis matches monomial count and rank for d<=5: " + frac(basis, 6));
    o.note(det_commutators().ok(), "det q-commutation table");
    std::size_t full = 0;
    for (int d = 0; d <= 6; ++d) full += det_mult_rank(d).full();
    o.note(full == 7, "det multiplication slice rank full for d<=6: " + frac(full, 7));
    return o;
}

// ---- 6
Outcome calculus_derivation() {
    Outcome o;
    for (PChoice p : {PChoice::Q, PChoice::QInv}) {
        const auto& t = calc(p).table();
        o.note(t.rank == t.unknowns && t.squares_forced,
               "p=" + to_string(p) + ": table unique (" + std::to_string(t.rank) + "/" + std::to_string(t.unknowns) + ")");
        auto checks = verify_table(calc(p), 4);
        std::size_t ok = 0;
        for (const auto& c : checks) ok += c.ok;
        std::string bad = failures(checks);
        o.note(ok == checks.size(), "p=" + to_string(p) + ": oracles and d^2=0 to degree 4 " + frac(ok, checks.size()) +
                                        (bad.empty() ? "" : " (fails: " + bad + ")"));
    }
    return o;
}

// ---- 7
Outcome eigentheory() {
    Outcome o;
    for (PChoice p : {PChoice::Q, PChoice::QInv}) {
        const auto& c = calc(p);
        std::string tag = "p=" + to_string(p) + ": ";
        o.note(harmonics_annihilated(c, 5).ok, tag + "box X^l = 0 for 2l<=5");
        o.note(partials_on_harmonics(c, 4).ok, tag + "partials on X^l for 2l<=4");
        o.note(tilde_eigen(c, 3, 4).ok, tag + "det-box eigenvalue p^(2k+2l-3)[k][k+2l+1] for k<=3, 2l<=4");
        o.note(eigen_adjudication(c, 3, 4).ok, tag + "[k+2l+1] confirmed and [k+2l+2] rejected");
        o.note(delta_eigen(c, 4).ok, tag + "Delta eigenvalue p^(2l-1)[2l]");
        // 15 monomials of degree <= 2 and the 30 X^l with 2l <= 3
        o.note(star_laplace(c, 2, 3).ok, tag + "*d*d = box on 45 elements");
    }
    return o;
}

// ---- 8
Outcome penrose_oast() {
    Outcome o;
    for (PChoice p : {PChoice::Q, PChoice::QInv})
        o.note(penrose_bijection(calc(p), 4).ok, "p=" + to_string(p) + ": penrose_scalar bijective, harmonic, slice-injective for 2l<=4");
    std::size_t prop = 0, n = 0;
    for (int l2 = 0; l2 <= 3; ++l2)
        for (int k = 0; k <= 2; ++k)
            for (const auto& idx : harmonic_indices(l2, k)) {
                ++n;
                prop += oast_check(idx).proportional;
            }
    o.note(prop == n, "oast: single scalar for " + frac(prop, n) + " indices");
    std::size_t conj = 0;
    for (PChoice p : {PChoice::Q, PChoice::QInv})
        for (int k = 0; k <= 4; ++k)
            for (int l2 = 0; l2 <= 4; ++l2) conj += conjugation_identity_check(p, k, l2);
    o.note(conj == 50, "conjugation identity " + frac(conj, 50));
    return o;
}

// ---- 9
Outcome quantum_instanton() {
    Outcome o;
    std::size_t agree = 0, total = 0;
    for (auto [r, c] : kShapes)
        for (std::uint64_t s = 0; s < 50; ++s) {
            auto d = s % 5 == 0 ? random_non_c_stable(c, r, 700 + s) : random_c_stable(c, r, 700 + s);
            if (s % 2) d = perturb(d, 900 + s);
            auto ids = verify_ids(d, s % 3 == 0 ? Chart::J : Chart::I);
            ++total;
            agree += ids.holds == is_solution(d) && ids.equal_residuals;
        }
    o.note(agree == total, "operator identities iff residuals vanish " + frac(agree, total));

    std::vector<ProjPoint> P = {{g(1), g(0)}, {g(0), g(1)}, {g(1), g(1)}, {g(1), g(-1)}, {g(2), g(1)}};
    std::size_t bp = 0, bn = 0;
    for (const auto& d : {instanton1(), random_c_stable(2, 2, 5), random_c_stable(1, 3, 6)})
        for (std::size_t a = 0; a < P.size(); ++a)
            for (std::size_t b = 0; b < P.size(); ++b, ++bn) bp += beta_p_alpha_q(d, P[a], P[b]).matches;
    o.note(bp == bn, "beta_P alpha_Q = (p1q2 - p2q1) 1 " + frac(bp, bn));

    auto cr = curvature_asd(instanton1(), calc(PChoice::Q));
    std::string bad;
    for (const auto& s : cr.non_asd) bad += (bad.empty() ? "" : ", ") + s;
    o.note(cr.matches_display, std::string("curvature equals the displayed matrix") +
                                   (cr.matches_with_defined_sign ? " (only up to a global sign)" : ""));
    o.note(cr.all_asd, "every curvature entry ASD" + (bad.empty() ? std::string() : " (non-ASD " + bad + ")"));

    // C-stable: surjective on a 12-point grid; non-C-stable: deficient at the computed bad point
    std::vector<ProjPoint> grid = {{g(1), g(0)},  {g(0), g(1)},  {g(1), g(1)},  {g(1), g(-1)},
                                   {g(1), GaussRational(mpq_class(0), mpq_class(1))},
                                   {g(1), GaussRational(mpq_class(0), mpq_class(-1))},
                                   {g(1), g(2)},  {g(2), g(1)},  {g(1), g(-2)}, {g(2), g(-1)},
                                   {g(1), g(3)},  {g(3), g(1)}};
    std::size_t surj = 0, sn = 0;
    std::vector<std::pair<ComplexADHMDatum, int>> stable = {{instanton1(), 4}, {random_c_stable(1, 3, 8), 3},
                                                            {random_c_stable(2, 2, 9), 2}};
    for (const auto& [d, dmax] : stable)
        for (const auto& p : grid) {
            ++sn;
            auto s = beta_surjective_truncated(d, p, dmax);
            surj += s.surjective.value_or(false) && s.specialization_agrees;
        }
    o.note(surj == sn, "beta_P surjective on slices for C-stable data " + frac(surj, sn));
    std::size_t def = 0, dn = 0;
    for (const auto& d : {random_non_c_stable(1, 2, 1), random_non_c_stable(2, 2, 2), random_non_c_stable(1, 3, 3)}) {
        auto rep = classify(d);
        if (rep.failing_points.empty()) continue;
        ++dn;
        auto s = beta_surjective_truncated(d, rep.failing_points[0], 2);
        def += s.surjective.has_value() && !*s.surjective && s.specialization_agrees;
    }
    o.note(dn == 3 && def == dn, "beta_P deficient at the bad point for non-C-stable data " + frac(def, dn));
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> only;
    app.add_option("--only", only, "criterion numbers to run (default: all)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> all = {
        {1, "stability taxonomy", stability_taxonomy},
        {2, "smoothness and dimension", smoothness},
        {3, "monad equivalence", monad_equivalence},
        {4, "Euler characteristics", appendix_b},
        {5, "quantum algebra", quantum_algebra},
        {6, "calculus derivation", calculus_derivation},
        {7, "harmonicity and eigentheory", eigentheory},
        {8, "Penrose transform and chart change", penrose_oast},
        {9, "quantum instanton", quantum_instanton},
    };
    bool every = true;
    for (const auto& c : all) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.note(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        every = every && o.pass;
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " " << c.title << " | "
                  << o.msg.str() << " (" << static_cast<int>(secs * 1000) << " ms)" << std::endl;
    }
    return every ? 0 : 1;
}
