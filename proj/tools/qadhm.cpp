// qadhm: command-line front end.  Every command prints one JSON report.
// Exit codes: 0 asserted identities hold, 1 some identity fails, 2 error object.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qadhm/adhm/generators.hpp"
#include "qadhm/adhm/stability.hpp"
#include "qadhm/io/expr.hpp"
#include "qadhm/io/json.hpp"
#include "qadhm/monad/chern.hpp"
#include "qadhm/monad/monad.hpp"
#include "qadhm/qcalculus/checks.hpp"
#include "qadhm/qinstanton/qops.hpp"
#include "qadhm/qspacetime/harmonic.hpp"

using namespace qadhm;
using io::json;

namespace {

constexpr int kDesk = 8;  // hard ceiling for degree caps

struct RunConfig {
    std::string p_choice = "q";
    std::uint64_t seed = 1;
    int degree_cap = kDesk;
    int grid_size = 12;
    std::string output;
};

struct Report {
    json body;
    bool ok = true;
};

using Command = std::function<Report()>;

// "3/2", "-1/2", "2" -> doubled integer
int doubled(const std::string& s, const char* what) {
    auto fail = [&]() -> int { throw io::SchemaError(std::string(what) + " must be an integer or half-integer, got '" + s + "'"); };
    try {
        std::size_t slash = s.find('/');
        if (slash == std::string::npos) {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) fail();
            return 2 * v;
        }
        if (s.substr(slash + 1) != "2") fail();
        std::size_t used = 0;
        std::string num = s.substr(0, slash);
        int v = std::stoi(num, &used);
        if (used != num.size() || v % 2 == 0) fail();
        return v;
    } catch (const std::logic_error&) {
        return fail();
    }
}

std::string half_str(int two) { return two % 2 == 0 ? std::to_string(two / 2) : std::to_string(two) + "/2"; }

const Calculus& calculus(PChoice p) {
    static const Calculus cq(PChoice::Q), cqi(PChoice::QInv);
    return p == PChoice::Q ? cq : cqi;
}

json poly_out(const NCPoly& f) {
    json j = io::to_json(f);
    j["str"] = f.str();
    return j;
}

json residual_flags(const ComplexADHMDatum& d) {
    json z = json::array();
    for (const auto& m : complex_residuals(d)) z.push_back(m.is_zero());
    return z;
}

bool stable_at(const ComplexADHMDatum& d, const ProjPoint& P) {
    auto pd = evaluate(d, P.first, P.second);
    return is_stable(pd.B1, pd.B2, pd.i).ok;
}

// fixed sample of P^1; failing points of the datum are put in front by the caller
std::vector<ProjPoint> p1_sample() {
    auto g = [](long re, long im = 0) { return GaussRational(mpq_class(re), mpq_class(im)); };
    auto h = [](long n, long d) {
        mpq_class v(n, d);
        v.canonicalize();
        return GaussRational(v);
    };
    return {{g(1), g(0)},  {g(0), g(1)},  {g(1), g(1)},  {g(1), g(-1)}, {g(1), g(0, 1)}, {g(1), g(0, -1)},
            {g(1), g(2)},  {g(2), g(1)},  {g(1), g(-2)}, {g(1), h(1, 2)}, {g(1), g(1, 1)}, {g(1), g(3)},
            {g(3), g(-1)}, {g(1), g(2, 1)}, {g(2), g(-3)}, {g(1), g(-3)}};
}

// ---- adhm

Report adhm_check(const std::string& file) {
    json in = io::read_file(file);
    if (in.value("kind", "") == "real") {
        RealADHMDatum d = io::real_datum_from_json(in);
        GaussRational xi = in.contains("xi") ? io::gauss_from_json(in["xi"]) : GaussRational(0);
        auto res = real_residuals(d, xi);
        bool sol = res[0].is_zero() && res[1].is_zero();
        json body = {{"kind", "real"}, {"xi", xi.str()}, {"residuals_zero", {res[0].is_zero(), res[1].is_zero()}},
                     {"is_solution", sol}};
        if (sol) body["stratum"] = to_string(real_stratify(d, xi));
        if (sol && xi.is_zero()) body["stability"] = io::to_json(classify(embed_real(d)));
        return {body, sol};
    }
    ComplexADHMDatum d = io::complex_datum_from_json(in);
    bool sol = is_solution(d);
    json body = {{"kind", "complex"}, {"residuals_zero", residual_flags(d)}, {"is_solution", sol}};
    if (sol) body["stability"] = io::to_json(classify(d));
    return {body, sol};
}

Report adhm_embed(const std::string& file) {
    json in = io::read_file(file);
    RealADHMDatum rd = io::real_datum_from_json(in);
    ComplexADHMDatum d = embed_real(rd);
    bool sol = is_solution(d), real = is_real(d);
    return {{{"datum", io::to_json(d)}, {"is_solution", sol}, {"is_real", real}, {"stability", io::to_json(classify(d))}},
            sol && real};
}

Report adhm_random(int r, int c, std::uint64_t seed, const std::string& kind) {
    if (kind == "real") {
        RealADHMDatum d = random_real_regular(c, r, seed);
        return {{{"datum", io::to_json(d)}, {"seed", seed}, {"is_solution", is_real_solution(d, GaussRational(0))}},
                is_real_solution(d, GaussRational(0))};
    }
    ComplexADHMDatum d;
    if (kind == "stable") d = random_c_stable(c, r, seed);
    else if (kind == "nonstable") d = random_non_c_stable(c, r, seed);
    else if (kind == "rc1") {
        if (r != 1 || c != 1) throw std::invalid_argument("kind rc1 needs -r 1 -c 1");
        d = random_rc1_solution(seed);
    } else
        throw io::SchemaError("unknown --kind '" + kind + "'");
    bool sol = is_solution(d);
    return {{{"datum", io::to_json(d)}, {"seed", seed}, {"is_solution", sol}}, sol};
}

Report adhm_rank(const std::string& file) {
    ComplexADHMDatum d = io::complex_datum_from_json(io::read_file(file));
    if (!is_solution(d)) throw std::invalid_argument("adhm rank: datum does not solve the complex equations");
    auto rank = derivative_rank(d);
    long dim = dimension_audit(d);
    bool cstable = classify(d).stable_everywhere;
    auto c2 = static_cast<std::size_t>(3 * d.c * d.c);
    bool surj = rank == c2;
    long expected_dim = 4L * d.r * d.c;
    json body = {{"derivative_rank", rank},      {"expected_rank", c2},
                 {"surjective", surj},           {"dimension", dim},
                 {"expected_dimension", expected_dim}, {"c_stable", cstable},
                 {"surjective_iff_c_stable", surj == cstable}};
    // asserted: C-stable data give a surjective derivative and dimension 4rc
    bool ok = !cstable || (surj && dim == expected_dim);
    return {body, ok};
}

// ---- monad

Report monad_build(const std::string& file) {
    ComplexADHMDatum d = io::complex_datum_from_json(io::read_file(file));
    Monad m = build_monad_unchecked(d);
    bool sol = is_solution(d), ba = beta_alpha_vanishes(m);
    json body = {{"monad", io::to_json(m)}, {"beta_alpha_zero", ba}, {"residuals_zero", sol}};
    bool ok = ba;
    if (ba) {
        try {
            ComplexADHMDatum back = normalize_monad(m);
            bool eq = find_intertwiner(d, back).has_value();
            body["round_trip_equivalent"] = eq;
            ok = ok && eq;
        } catch (const std::invalid_argument& e) {
            body["round_trip_equivalent"] = nullptr;
            body["round_trip_error"] = e.what();
        }
    }
    return {body, ok};
}

Report monad_classify(const std::string& file) {
    ComplexADHMDatum d = io::complex_datum_from_json(io::read_file(file));
    SheafClassification s = classify_sheaf(d);
    json body = io::to_json(s);
    body["singular_count"] = s.singular_sample.size();
    return {body, true};
}

Report monad_chern(long r, long c, long k, bool suite) {
    if (r < 0 || c < 0) throw std::invalid_argument("monad chern: r and c must be non-negative");
    mpq_class a = chi_twist(r, c, k), b = chi_twist_additive(r, c, k);
    json body = {{"r", r}, {"c", c}, {"k", k}, {"chi", a.get_str()}, {"chi_additive", b.get_str()},
                 {"routes_agree", a == b}, {"ch", io::to_json(chern_of_monad(r, c))}};
    bool ok = a == b;
    if (suite) {
        AppendixB s = appendix_b_suite(r, c);
        body["suite"] = {{"chi_e_m1", s.chi_e_m1.get_str()},
                         {"chi_e_omega1", s.chi_e_omega1.get_str()},
                         {"chi_e_omega2_1", s.chi_e_omega2_1.get_str()},
                         {"additive_e_m1", s.add_e_m1.get_str()},
                         {"additive_e_omega1", s.add_e_omega1.get_str()},
                         {"additive_e_omega2_1", s.add_e_omega2_1.get_str()},
                         {"ch_omega1", io::to_json(s.omega1)},
                         {"ch_ideal_of_lines", io::to_json(s.ideal_lines)},
                         {"obstruction", io::to_json(s.obstruction)},
                         {"obstruction_margin", s.obstruction_margin.get_str()}};
        ok = ok && s.chi_e_m1 == s.add_e_m1 && s.chi_e_omega1 == s.add_e_omega1 && s.chi_e_omega2_1 == s.add_e_omega2_1;
    }
    return {body, ok};
}

// ---- q

Report q_normalize(const std::string& expr) {
    NCPoly f = io::parse_expr(expr);
    return {{{"input", expr}, {"normal_form", poly_out(f)}, {"degree", f.degree()}, {"homogeneous", f.is_homogeneous()}},
            true};
}

Report q_partial(const std::string& expr, PChoice p) {
    NCPoly f = io::parse_expr(expr);
    auto ds = calculus(p).partials(f);
    static const char* names[] = {"d11", "d12", "d21", "d22"};
    json parts;
    for (int a = 0; a < 4; ++a) parts[names[a]] = poly_out(ds[static_cast<std::size_t>(a)]);
    return {{{"input", expr}, {"p", to_string(p)}, {"partials", parts}}, true};
}

Report q_laplace(const std::string& expr, PChoice p) {
    NCPoly f = io::parse_expr(expr);
    const Calculus& c = calculus(p);
    NCPoly a = laplacian(c, f), b = laplacian_alt(c, f);
    return {{{"input", expr}, {"p", to_string(p)}, {"box", poly_out(a)}, {"box_other_ordering", poly_out(b)},
             {"orderings_agree", a == b}, {"harmonic", a.is_zero()}},
            a == b};
}

Report q_harmonic(const std::string& l, const std::string& m, const std::string& n, int k, PChoice p) {
    HarmonicIndex idx{doubled(l, "-l"), doubled(m, "-m"), doubled(n, "-n"), k};
    validate(idx);
    if (!idx.in_range()) throw std::invalid_argument("harmonic: need |m|, |n| <= l");
    if (k < 0) throw std::invalid_argument("harmonic: k must be non-negative");
    if (idx.two_l + 2 * k > 2 * kDesk) throw std::invalid_argument("harmonic: total degree above the desk cap");
    HarmonicIndex base = idx;
    base.k = 0;
    NCPoly X = harmonic(base), B9 = harmonic_b9(base);
    auto ratio = eigen_ratio(X, B9);
    const Calculus& c = calculus(p);
    bool box_zero = laplacian(c, X).is_zero();
    OastResult oa = oast_check(idx);
    json body = {{"index", {{"l", half_str(idx.two_l)}, {"m", half_str(idx.two_m)}, {"n", half_str(idx.two_n)}, {"k", k}}},
                 {"p", to_string(p)},
                 {"X", poly_out(X)},
                 {"element", poly_out(basis_element(idx))},
                 {"box_zero", box_zero},
                 {"b9_ratio", ratio ? io::to_json(*ratio) : json(nullptr)},
                 {"Y", poly_out(harmonic_Y(base))},
                 {"oast_proportional", oa.proportional},
                 {"oast_lambda", oa.proportional ? io::to_json(oa.lambda) : json(nullptr)}};
    return {body, box_zero && ratio.has_value() && oa.proportional};
}

Report q_eigen(int k, const std::string& l, PChoice p) {
    int two_l = doubled(l, "-l");
    if (k < 0 || two_l < 0) throw std::invalid_argument("eigen: need k >= 0 and l >= 0");
    if (2 * k + two_l > 2 * kDesk) throw std::invalid_argument("eigen: degree 2k+2l above twice the desk cap");
    QLaurent lam = tilde_eigenvalue(p, k, two_l), alt = tilde_eigenvalue_alt(p, k, two_l);
    const Calculus& c = calculus(p);
    json measured = json::array();
    bool all = true;
    for (const auto& idx : harmonic_indices(two_l, k)) {
        NCPoly f = basis_element(idx);
        NCPoly g = tilde_laplacian(c, f);
        bool match = g == lam * f;
        all = all && match;
        measured.push_back({{"m", half_str(idx.two_m)}, {"n", half_str(idx.two_n)}, {"matches", match},
                            {"matches_competing", g == alt * f}});
    }
    return {{{"k", k},
             {"l", half_str(two_l)},
             {"p", to_string(p)},
             {"eigenvalue", io::to_json(lam)},
             {"eigenvalue_str", lam.str()},
             {"competing_formula", io::to_json(alt)},
             {"measured", measured}},
            all};
}

Report q_table(PChoice p, int max_degree) {
    const Calculus& c = calculus(p);
    auto checks = verify_table(c, max_degree);
    json cs = json::array();
    for (const auto& ch : checks) cs.push_back({{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
    return {{{"table", io::to_json(c.table())}, {"checks", cs}, {"failures", failures(checks)}}, all_ok(checks)};
}

Report q_penrose(const std::string& file, std::optional<PChoice> p_override) {
    json in = io::read_file(file);
    PChoice p = p_override ? *p_override : parse_pchoice(in.value("p", std::string("q")));
    const json& cj = in.at("cocycle");
    if (!cj.is_array() || cj.empty()) throw io::SchemaError("cocycle must be a non-empty array");
    std::vector<CechMonomial> co;
    json idxs = json::array();
    for (const auto& t : cj) {
        CechMonomial m;
        m.coef = t.contains("coef") ? io::laurent_from_json(t["coef"]) : QLaurent(1);
        for (const char* key : {"a", "b", "c", "d"})
            if (!t.contains(key) || !t[key].is_number_integer()) throw io::SchemaError(std::string("cocycle term needs integer '") + key + "'");
        m.a = t["a"];
        m.b = t["b"];
        m.c = t["c"];
        m.d = t["d"];
        HarmonicIndex h = cech_index(m);
        idxs.push_back({{"term", m.str()}, {"l", half_str(h.two_l)}, {"m", half_str(h.two_m)}, {"n", half_str(h.two_n)}});
        co.push_back(m);
    }
    NCPoly f = penrose_scalar(co);
    bool harm = laplacian(calculus(p), f).is_zero();
    return {{{"p", to_string(p)}, {"indices", idxs}, {"image", poly_out(f)}, {"harmonic", harm}}, harm};
}

// ---- inst

Chart parse_chart(const std::string& s) {
    if (s == "I") return Chart::I;
    if (s == "J") return Chart::J;
    throw io::SchemaError("chart must be I or J");
}

Report inst_verify(const std::string& file, Chart chart) {
    ComplexADHMDatum d = io::complex_datum_from_json(io::read_file(file));
    IdsReport ids = verify_ids(d, chart);
    json body = {{"chart", to_string(chart)},
                 {"ids_hold", ids.holds},
                 {"ids_equal_residuals", ids.equal_residuals},
                 {"ids_terms", {ids.terms[0], ids.terms[1], ids.terms[2]}},
                 {"residuals_zero", residual_flags(d)},
                 {"bpaq", nullptr},
                 {"xi", nullptr}};
    if (!ids.holds) return {body, false};  // the remaining identities presuppose a solution
    auto pts = p1_sample();
    json bp = json::array();
    bool all_bp = true;
    for (std::size_t a = 0; a + 1 < 6; a += 2) {
        BpaqReport b = beta_p_alpha_q(d, pts[a], pts[a + 1], chart);
        all_bp = all_bp && b.matches;
        bp.push_back({{"P", io::to_json(pts[a])}, {"Q", io::to_json(pts[a + 1])}, {"factor", b.factor.str()},
                      {"matches", b.matches}});
    }
    XiReport xi = xi_leading(d, chart);
    body["bpaq"] = bp;
    body["xi"] = {{"leading_is_det", xi.leading_is_det}, {"degree_ok", xi.degree_ok}, {"b1a2", io::to_json(xi.b1a2)}};
    return {body, ids.equal_residuals && all_bp};
}

Report inst_curvature(const std::string& file, PChoice p) {
    ComplexADHMDatum d = io::complex_datum_from_json(io::read_file(file));
    if (!is_solution(d)) throw std::invalid_argument("inst curvature: datum does not solve the complex equations");
    CurvatureReport cr = curvature_asd(d, calculus(p));
    json entries = json::array(), expected = json::array();
    for (const auto& w : cr.entries) entries.push_back(w.str());
    for (const auto& w : cr.expected) expected.push_back(w.str());
    return {{{"p", to_string(p)},
             {"size", 2 * d.c + d.r},
             {"entries", entries},
             {"expected", expected},
             {"matches_display", cr.matches_display},
             {"matches_with_defined_sign", cr.matches_with_defined_sign},
             {"all_asd", cr.all_asd},
             {"non_asd", cr.non_asd}},
            cr.all_asd && cr.matches_display};
}

Report inst_slices(const std::string& file, int dmax, const RunConfig& cfg, Chart chart) {
    if (dmax < 0 || dmax > cfg.degree_cap) throw std::invalid_argument("--dmax must lie in [0, degree cap]");
    ComplexADHMDatum d = io::complex_datum_from_json(io::read_file(file));
    if (!is_solution(d)) throw std::invalid_argument("inst slices: datum does not solve the complex equations");
    StabilityReport st = classify(d);
    std::vector<ProjPoint> pts = st.failing_points;
    for (const auto& P : p1_sample()) {
        if (static_cast<int>(pts.size()) >= cfg.grid_size) break;
        bool dup = false;
        for (const auto& Q : pts) dup = dup || (P.first * Q.second == P.second * Q.first);
        if (!dup) pts.push_back(P);
    }
    json rows = json::array();
    bool ok = true;
    for (const auto& P : pts) {
        SliceSurjectivity s = beta_surjective_truncated(d, P, dmax, chart);
        bool stable = stable_at(d, P);
        bool decided = s.surjective.has_value();
        bool agree = decided && *s.surjective == stable;
        ok = ok && agree && s.specialization_agrees;
        rows.push_back({{"P", io::to_json(P)},
                        {"stable_at_P", stable},
                        {"surjective", decided ? json(*s.surjective) : json(nullptr)},
                        {"certificate", s.certificate},
                        {"domain_dim", s.domain_dim},
                        {"codomain_dim", s.codomain_dim},
                        {"target_dim", s.target_dim},
                        {"zp_rank", s.zp_rank},
                        {"zp_rank_with_target", s.zp_rank_with_target},
                        {"specialization_agrees", s.specialization_agrees}});
    }
    return {{{"dmax", dmax}, {"chart", to_string(chart)}, {"c_stable", st.stable_everywhere}, {"slices", rows}}, ok};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qadhm: exact ADHM data, monads and the quantum instanton toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    RunConfig cfg;
    app.add_option("--p", cfg.p_choice, "p choice for the calculus: q or qinv")->check(CLI::IsMember({"q", "qinv"}));
    app.add_option("--seed", cfg.seed, "seed for generators");
    app.add_option("--degree-cap", cfg.degree_cap, "largest degree any slice may reach")->check(CLI::Range(0, kDesk));
    app.add_option("--grid-size", cfg.grid_size, "number of P^1 points for slice checks")->check(CLI::Range(1, 16));
    app.add_option("-o,--output", cfg.output, "write the report here instead of stdout");

    Command run;
    auto pchoice = [&] { return parse_pchoice(cfg.p_choice); };

    std::string file, expr, kind = "stable", chart = "I";
    long r = 2, c = 1, k = 0;
    int ik = 0, dmax = 2, table_degree = 4;
    std::string l = "0", m = "0", n = "0";
    bool suite = false;

    auto* adhm = app.add_subcommand("adhm", "complex and real ADHM data")->require_subcommand(1);
    auto* a_check = adhm->add_subcommand("check", "residuals and stability report");
    a_check->add_option("FILE", file)->required();
    a_check->callback([&] { run = [&] { return adhm_check(file); }; });
    auto* a_embed = adhm->add_subcommand("embed", "embed a real datum (xi = 0) as a complex one");
    a_embed->add_option("FILE", file)->required();
    a_embed->callback([&] { run = [&] { return adhm_embed(file); }; });
    auto* a_random = adhm->add_subcommand("random", "seeded random datum");
    a_random->add_option("-r", r)->required();
    a_random->add_option("-c", c)->required();
    a_random->add_option("--seed", cfg.seed);
    a_random->add_option("--kind", kind, "stable | nonstable | real | rc1")
        ->check(CLI::IsMember({"stable", "nonstable", "real", "rc1"}));
    a_random->callback([&] { run = [&] { return adhm_random(static_cast<int>(r), static_cast<int>(c), cfg.seed, kind); }; });
    auto* a_rank = adhm->add_subcommand("rank", "derivative rank and dimension audit");
    a_rank->add_option("FILE", file)->required();
    a_rank->callback([&] { run = [&] { return adhm_rank(file); }; });

    auto* mon = app.add_subcommand("monad", "monads on P^3")->require_subcommand(1);
    auto* m_build = mon->add_subcommand("build", "monad of a datum, beta alpha and round trip");
    m_build->add_option("FILE", file)->required();
    m_build->callback([&] { run = [&] { return monad_build(file); }; });
    auto* m_class = mon->add_subcommand("classify", "torsion-free / reflexive / locally free");
    m_class->add_option("FILE", file)->required();
    m_class->callback([&] { run = [&] { return monad_classify(file); }; });
    auto* m_chern = mon->add_subcommand("chern", "chi(E(k)) by Riemann-Roch and by additivity");
    m_chern->add_option("-r", r)->required();
    m_chern->add_option("-c", c)->required();
    m_chern->add_option("-k", k)->required()->allow_extra_args(false);
    m_chern->add_flag("--suite", suite, "also twist by Omega^1 and Omega^2(1)");
    m_chern->callback([&] { run = [&] { return monad_chern(r, c, k, suite); }; });

    auto* q = app.add_subcommand("q", "quantum Minkowski space and its calculus")->require_subcommand(1);
    q->footer(io::kExprGrammar);
    auto* q_norm = q->add_subcommand("normalize", "normal form of EXPR");
    q_norm->add_option("EXPR", expr)->required();
    q_norm->callback([&] { run = [&] { return q_normalize(expr); }; });
    auto* q_part = q->add_subcommand("partial", "the four q-partial derivatives of EXPR");
    q_part->add_option("EXPR", expr)->required();
    q_part->callback([&] { run = [&] { return q_partial(expr, pchoice()); }; });
    auto* q_lap = q->add_subcommand("laplace", "quantum Laplacian of EXPR, both orderings");
    q_lap->add_option("EXPR", expr)->required();
    q_lap->callback([&] { run = [&] { return q_laplace(expr, pchoice()); }; });
    auto* q_harm = q->add_subcommand("harmonic", "X^l_{m,n}; l, m, n may be half-integers like 3/2");
    q_harm->add_option("-l", l)->required();
    q_harm->add_option("-m", m)->required();
    q_harm->add_option("-n", n)->required();
    q_harm->add_option("-k", ik, "power of det");
    q_harm->callback([&] { run = [&] { return q_harmonic(l, m, n, ik, pchoice()); }; });
    auto* q_eig = q->add_subcommand("eigen", "eigenvalue of det-box on det^k X^l");
    q_eig->add_option("-k", ik)->required();
    q_eig->add_option("-l", l)->required();
    q_eig->callback([&] { run = [&] { return q_eigen(ik, l, pchoice()); }; });
    auto* q_tab = q->add_subcommand("table", "derive and audit the calculus rewrite table");
    q_tab->add_option("--max-degree", table_degree, "degree bound for d^2 = 0")->check(CLI::Range(0, kDesk));
    q_tab->callback([&] { run = [&] { return q_table(pchoice(), table_degree); }; });
    auto* q_pen = q->add_subcommand("penrose", "scalar transform of a Cech cocycle file");
    q_pen->add_option("FILE", file)->required();
    q_pen->callback([&] {
        run = [&] {
            std::optional<PChoice> p;
            if (app.get_option("--p")->count() > 0) p = pchoice();
            return q_penrose(file, p);
        };
    });

    auto* inst = app.add_subcommand("inst", "quantum instanton operators")->require_subcommand(1);
    auto* i_ver = inst->add_subcommand("verify", "operator identities, beta_P alpha_Q, Xi leading term");
    i_ver->add_option("FILE", file)->required();
    i_ver->add_option("--chart", chart, "I or J");
    i_ver->callback([&] { run = [&] { return inst_verify(file, parse_chart(chart)); }; });
    auto* i_curv = inst->add_subcommand("curvature", "curvature matrix and ASD test (chart I)");
    i_curv->add_option("FILE", file)->required();
    i_curv->callback([&] { run = [&] { return inst_curvature(file, pchoice()); }; });
    auto* i_sl = inst->add_subcommand("slices", "truncated surjectivity of beta_P on a grid of P");
    i_sl->add_option("FILE", file)->required();
    i_sl->add_option("--dmax", dmax)->required();
    i_sl->add_option("--chart", chart, "I or J");
    i_sl->callback([&] { run = [&] { return inst_slices(file, dmax, cfg, parse_chart(chart)); }; });

    auto emit = [&](const json& j) {
        std::string text = io::dump(j);
        if (cfg.output.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(cfg.output);
        if (!out) {
            std::cout << io::dump(io::error_object("io", "cannot write '" + cfg.output + "'"));
            return;
        }
        out << text;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << io::dump(io::error_object("usage", e.what()));
        return 2;
    }

    std::string name;
    for (const CLI::App* a = &app; !a->get_subcommands().empty();) {
        a = a->get_subcommands().front();
        name += (name.empty() ? "" : " ") + a->get_name();
    }

    try {
        Report rep = run();
        json out = rep.body;
        out["command"] = name;
        out["ok"] = rep.ok;
        emit(out);
        return rep.ok ? 0 : 1;
    } catch (const io::SchemaError& e) {
        emit(io::error_object("schema", e.what()));
    } catch (const json::exception& e) {
        emit(io::error_object("schema", e.what()));
    } catch (const std::exception& e) {
        emit(io::error_object("precondition", e.what()));
    }
    return 2;
}
