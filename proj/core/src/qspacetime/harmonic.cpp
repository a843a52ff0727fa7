#include "qadhm/qspacetime/harmonic.hpp"

#include <stdexcept>

#include "qadhm/exactcore/qnumbers.hpp"

namespace qadhm {

std::string HarmonicIndex::str() const {
    auto half = [](int v) { return v % 2 == 0 ? std::to_string(v / 2) : std::to_string(v) + "/2"; };
    return "(k=" + std::to_string(k) + ", l=" + half(two_l) + ", m=" + half(two_m) + ", n=" + half(two_n) + ")";
}

void validate(const HarmonicIndex& idx) {
    if (idx.two_l < 0) throw std::invalid_argument("harmonic index: l must be >= 0");
    auto par = [](int v) { return ((v % 2) + 2) % 2; };
    if (par(idx.two_m) != par(idx.two_l) || par(idx.two_n) != par(idx.two_l))
        throw std::invalid_argument("harmonic index: m and n must differ from l by integers " + idx.str());
}

std::vector<HarmonicIndex> harmonic_indices(int two_l, int k) {
    std::vector<HarmonicIndex> out;
    for (int m = -two_l; m <= two_l; m += 2)
        for (int n = -two_l; n <= two_l; n += 2) out.push_back({two_l, m, n, k});
    return out;
}

namespace {

// coefficients (by s-power) of (A s + B)^a (C s + D)^b
std::vector<NCPoly> s_expand(Chart ch, int A, int B, int a, int C, int D, int b) {
    std::vector<NCPoly> cur{NCPoly::one(ch)};
    auto step = [&](int G1, int G0) {
        NCPoly g1 = NCPoly::gen(ch, G1), g0 = NCPoly::gen(ch, G0);
        std::vector<NCPoly> nxt(cur.size() + 1, NCPoly(ch));
        for (std::size_t e = 0; e < cur.size(); ++e) {
            nxt[e + 1] += cur[e] * g1;
            nxt[e] += cur[e] * g0;
        }
        cur = std::move(nxt);
    };
    for (int r = 0; r < a; ++r) step(A, B);
    for (int r = 0; r < b; ++r) step(C, D);
    return cur;
}

}  // namespace

NCPoly harmonic(const HarmonicIndex& idx) {
    validate(idx);
    if (!idx.in_range()) return NCPoly(Chart::I);
    int a = (idx.two_l - idx.two_m) / 2, b = (idx.two_l + idx.two_m) / 2, s = (idx.two_l - idx.two_n) / 2;
    auto coeffs = s_expand(Chart::I, 0, 2, a, 1, 3, b);
    return coeffs[static_cast<std::size_t>(s)];
}

NCPoly harmonic_b9(const HarmonicIndex& idx) {
    validate(idx);
    NCPoly out(Chart::I);
    if (!idx.in_range()) return out;
    int lm = (idx.two_l - idx.two_m) / 2, lpm = (idx.two_l + idx.two_m) / 2, ln = (idx.two_l - idx.two_n) / 2;
    int mn = (idx.two_m + idx.two_n) / 2;
    for (int r = 0; r <= lm; ++r) {
        int t = ln - r;
        if (t < 0 || t > lpm || r + mn < 0) continue;
        // x11^r x21^(l-m-r) x12^(l-n-r) x22^(r+m+n), normalized as a word
        std::vector<int> w;
        w.insert(w.end(), static_cast<std::size_t>(r), 0);
        w.insert(w.end(), static_cast<std::size_t>(lm - r), 2);
        w.insert(w.end(), static_cast<std::size_t>(t), 1);
        w.insert(w.end(), static_cast<std::size_t>(r + mn), 3);
        out += NCPoly::word(Chart::I, w, qbinom(lm, r) * qbinom(lpm, t));
    }
    return out;
}

NCPoly harmonic_Y(const HarmonicIndex& idx) {
    validate(idx);
    if (!idx.in_range()) return NCPoly(Chart::J);
    int a = (idx.two_l - idx.two_n) / 2, b = (idx.two_l + idx.two_n) / 2, s = (idx.two_l - idx.two_m) / 2;
    auto coeffs = s_expand(Chart::J, 0, 1, a, 2, 3, b);
    return coeffs[static_cast<std::size_t>(s)];
}

NCPoly basis_element(const HarmonicIndex& idx) {
    if (idx.k < 0) throw std::invalid_argument("basis_element: negative det power outside chart IJ");
    return NCPoly::det(Chart::I).pow(static_cast<unsigned>(idx.k)) * harmonic(idx);
}

std::vector<MonoKey> degree_basis(int d) {
    std::vector<MonoKey> out;
    for (const auto& e : monomials_of_degree(d)) out.push_back(MonoKey{0, e});
    return out;
}

SliceRank generic_rank(const std::vector<NCPoly>& polys, const std::vector<MonoKey>& basis) {
    SliceRank sr;
    sr.rows = basis.size();
    sr.cols = polys.size();
    for (std::uint64_t seed : {1u, 2u}) {
        Zp t = random_zp(seed);
        auto m = coordinate_matrix<Zp>(polys, basis, [&](const QLaurent& c) { return to_zp(c, t); });
        sr.rank = std::max(sr.rank, m.rank());
        if (sr.rank == sr.cols) break;
    }
    sr.certified_full = sr.rank == sr.cols;
    return sr;
}

std::size_t classical_rank(const std::vector<NCPoly>& polys, const std::vector<MonoKey>& basis) {
    return coordinate_matrix<GaussRational>(polys, basis, [](const QLaurent& c) { return c.at_one(); }).rank();
}

DetCommutatorReport det_commutators() {
    DetCommutatorReport r;
    NCPoly det = NCPoly::det(Chart::I);
    auto x = [](int g) { return NCPoly::gen(Chart::I, g); };
    r.two_expressions_agree = (x(3) * x(0) - x(2) * x(1)) == det;
    r.x11_central = det * x(0) == x(0) * det;
    r.x22_central = det * x(3) == x(3) * det;
    r.x12_q2 = det * x(1) == QLaurent::q(2) * (x(1) * det);
    r.x21_qm2 = det * x(2) == QLaurent::q(-2) * (x(2) * det);
    bool central = true;
    for (int g = 0; g < 4; ++g) central = central && (det * x(g) - x(g) * det).at_q_one().is_zero();
    r.central_at_q1 = central;
    return r;
}

DetMultReport det_mult_rank(int d) {
    if (d < 0) throw std::invalid_argument("det_mult_rank: negative degree");
    DetMultReport rep;
    rep.degree = d;
    NCPoly det = NCPoly::det(Chart::I);
    std::vector<NCPoly> imgs;
    bool lead = true;
    for (const auto& e : monomials_of_degree(d)) {
        NCPoly img = det * NCPoly::monomial(Chart::I, e);
        Exps target{e[0] + 1, e[1], e[2], e[3] + 1};
        const auto& top = *img.terms().rbegin();  // lexicographically largest exponent tuple
        lead = lead && top.first.e == target && top.second.is_monomial();
        imgs.push_back(std::move(img));
    }
    rep.leading_ok = lead;
    rep.slice = generic_rank(imgs, degree_basis(d + 2));
    return rep;
}

BasisReport basis_independence(int d) {
    BasisReport rep;
    rep.degree = d;
    std::vector<NCPoly> elems;
    for (int k = 0; 2 * k <= d; ++k)
        for (const auto& idx : harmonic_indices(d - 2 * k, k)) elems.push_back(basis_element(idx));
    rep.count = elems.size();
    auto basis = degree_basis(d);
    rep.monomials = basis.size();
    rep.generic = generic_rank(elems, basis);
    rep.classical = classical_rank(elems, basis);
    return rep;
}

NCPoly substitute_y(const NCPoly& fy) {
    if (fy.chart() != Chart::J) throw std::invalid_argument("substitute_y: expects a chart J element");
    NCPoly out(Chart::IJ);
    NCPoly dinv = NCPoly::det_power(-1);
    std::array<NCPoly, 4> ys;
    for (int g = 0; g < 4; ++g) ys[static_cast<std::size_t>(g)] = dinv * NCPoly::gen(Chart::IJ, g);
    for (const auto& [key, c] : fy.terms()) {
        NCPoly term = NCPoly::scalar(Chart::IJ, c);
        for (int g = 0; g < 4; ++g)
            for (int r = 0; r < key.e[static_cast<std::size_t>(g)]; ++r) term = term * ys[static_cast<std::size_t>(g)];
        out += term;
    }
    return out;
}

OastResult oast_check(const HarmonicIndex& idx) {
    validate(idx);
    OastResult res;
    NCPoly lhs = NCPoly::det_power(idx.k) * harmonic(HarmonicIndex{idx.two_l, idx.two_m, idx.two_n, 0}).to_IJ();
    NCPoly rhs = NCPoly::det_power(idx.k + idx.two_l) * substitute_y(harmonic_Y(HarmonicIndex{idx.two_l, idx.two_m, idx.two_n, 0}));
    if (lhs.is_zero() || rhs.is_zero()) {
        res.proportional = lhs.is_zero() && rhs.is_zero();
        res.lambda = QRat();
        res.detail = res.proportional ? "both sides vanish" : "exactly one side vanishes";
        return res;
    }
    const auto& [k0, r0] = *rhs.terms().begin();
    QLaurent l0 = lhs.coeff(k0);
    if (l0.is_zero()) {
        res.detail = "rhs term " + rhs.str() + " has no lhs partner";
        return res;
    }
    res.lambda = QRat(l0, r0);
    std::map<MonoKey, int> keys;
    for (const auto& [k, c] : lhs.terms()) keys[k] = 1;
    for (const auto& [k, c] : rhs.terms()) keys[k] = 1;
    for (const auto& [k, one] : keys) {
        if (lhs.coeff(k) * r0 != rhs.coeff(k) * l0) {
            res.detail = "terms disagree at det^" + std::to_string(k.k) + " monomial: lhs " + lhs.coeff(k).str() +
                         ", rhs " + rhs.coeff(k).str();
            return res;
        }
    }
    res.proportional = true;
    res.detail = "lambda = " + res.lambda.str();
    return res;
}

}  // namespace qadhm
