#include "qadhm/qinstanton/qops.hpp"

#include <map>
#include <stdexcept>

#include "qadhm/exactcore/modp.hpp"
#include "qadhm/exactcore/polygcd.hpp"
#include "qadhm/exactcore/qrat.hpp"
#include "qadhm/qcalculus/operators.hpp"

namespace qadhm {

namespace {

NCPoly sc(Chart c, const GaussRational& v) { return NCPoly::scalar(c, QLaurent(v)); }

// generator and sign attached to B_kl in each chart (k,l in {1,2}, index 2(k-1)+(l-1))
struct GenSign {
    int gen;
    long sign;
};
GenSign chart_term(Chart c, int kl) {
    static const GenSign I[4] = {{0, -1}, {1, -1}, {2, -1}, {3, -1}};
    static const GenSign J[4] = {{3, -1}, {1, 1}, {2, 1}, {0, -1}};
    if (c == Chart::IJ) throw std::invalid_argument("build_q_ops: use chart I or J");
    return c == Chart::I ? I[kl] : J[kl];
}

// B (x) 1 + sign * 1 (x) gen, as a c x c block
ModuleOperator L_block(const QMatrix& B, Chart chart, int kl) {
    auto gs = chart_term(chart, kl);
    ModuleOperator m = scalar_operator(B, chart);
    NCPoly g = QLaurent(GaussRational(gs.sign)) * NCPoly::gen(chart, gs.gen);
    for (std::size_t a = 0; a < m.rows; ++a) m.at(a, a) += g;
    return m;
}

void put(ModuleOperator& dst, std::size_t r0, std::size_t c0, const ModuleOperator& src, long sign = 1) {
    for (std::size_t a = 0; a < src.rows; ++a)
        for (std::size_t b = 0; b < src.cols; ++b)
            dst.at(r0 + a, c0 + b) = sign == 1 ? src.at(a, b) : -src.at(a, b);
}

std::vector<MonoKey> monos_upto(int D) {
    std::vector<MonoKey> out;
    for (int d = 0; d <= D; ++d)
        for (const auto& e : monomials_of_degree(d)) out.push_back(MonoKey{0, e});
    return out;
}

std::map<MonoKey, std::size_t> index_of(const std::vector<MonoKey>& ms) {
    std::map<MonoKey, std::size_t> ix;
    for (std::size_t k = 0; k < ms.size(); ++k) ix[ms[k]] = k;
    return ix;
}

UPoly charpoly(const QMatrix& A) {
    const std::size_t n = A.rows();
    std::vector<GaussRational> co(n + 1);
    co[n] = GaussRational(1);
    QMatrix M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = A * M + co[n - k + 1] * QMatrix::identity(n);
        QMatrix AM = A * M;
        GaussRational tr;
        for (std::size_t a = 0; a < n; ++a) tr += AM(a, a);
        co[n - k] = -(tr / GaussRational(static_cast<long>(k)));
    }
    return UPoly(co);
}

// evaluation of normal-form monomials at commuting scalars that satisfy the chart relations
QLaurent eval_character(const NCPoly& f, const std::array<GaussRational, 4>& a) {
    QLaurent s;
    for (const auto& [key, c] : f.terms()) {
        GaussRational v(1);
        for (int g = 0; g < 4; ++g)
            for (int t = 0; t < key.e[static_cast<std::size_t>(g)]; ++t) v = v * a[static_cast<std::size_t>(g)];
        if (!is_zero(v)) s += QLaurent(v) * c;
    }
    return s;
}

// scalars for x (chart I) or y (chart J) making the generator part of L~1, L~2 equal to -mu1, -mu2
std::array<GaussRational, 4> character_for(Chart chart, const ProjPoint& P, const GaussRational& mu1,
                                           const GaussRational& mu2) {
    const auto& [p1, p2] = P;
    std::array<GaussRational, 4> a{};
    bool first = !is_zero(p1);
    const GaussRational& p = first ? p1 : p2;
    if (chart == Chart::I) {
        // -(p1 x11 + p2 x21) = -mu1, -(p1 x12 + p2 x22) = -mu2
        a[first ? 0 : 2] = mu1 / p;
        a[first ? 1 : 3] = mu2 / p;
    } else if (first) {
        // -p1 y22 + p2 y21 = -mu1, p1 y12 - p2 y11 = -mu2 with y11 = y21 = 0
        a[3] = mu1 / p1;
        a[1] = -mu2 / p1;
    } else {
        a[2] = -mu1 / p2;
        a[0] = mu2 / p2;
    }
    return a;
}

ModuleOperator combo(const GaussRational& s, const ModuleOperator& a, const GaussRational& t, const ModuleOperator& b) {
    return s * a + t * b;
}

}  // namespace

ModuleOperator ModuleOperator::zero(std::size_t rows, std::size_t cols, Chart chart) {
    ModuleOperator m;
    m.rows = rows;
    m.cols = cols;
    m.chart = chart;
    m.e.assign(rows * cols, NCPoly(chart));
    return m;
}

bool ModuleOperator::is_zero() const {
    for (const auto& x : e)
        if (!x.is_zero()) return false;
    return true;
}

int ModuleOperator::max_degree() const {
    int d = -1;
    for (const auto& x : e) d = std::max(d, x.degree());
    return d;
}

std::size_t ModuleOperator::term_count() const {
    std::size_t n = 0;
    for (const auto& x : e) n += x.terms().size();
    return n;
}

std::vector<NCPoly> ModuleOperator::apply(const std::vector<NCPoly>& v) const {
    if (v.size() != cols) throw std::invalid_argument("ModuleOperator: vector has wrong length");
    std::vector<NCPoly> out(rows, NCPoly(chart));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

ModuleOperator operator*(const ModuleOperator& a, const ModuleOperator& b) {
    if (a.cols != b.rows || a.chart != b.chart) throw std::invalid_argument("ModuleOperator: product shape mismatch");
    ModuleOperator m = ModuleOperator::zero(a.rows, b.cols, a.chart);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (!b.at(k, j).is_zero()) m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

ModuleOperator operator+(const ModuleOperator& a, const ModuleOperator& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("ModuleOperator: sum shape mismatch");
    ModuleOperator m = a;
    for (std::size_t k = 0; k < m.e.size(); ++k) m.e[k] += b.e[k];
    return m;
}

ModuleOperator operator-(const ModuleOperator& a, const ModuleOperator& b) { return a + GaussRational(-1) * b; }

ModuleOperator operator*(const GaussRational& s, const ModuleOperator& a) {
    ModuleOperator m = a;
    for (auto& x : m.e) x = QLaurent(s) * x;
    return m;
}

bool operator==(const ModuleOperator& a, const ModuleOperator& b) {
    return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
}

ModuleOperator scalar_operator(const QMatrix& m, Chart chart) {
    ModuleOperator o = ModuleOperator::zero(m.rows(), m.cols(), chart);
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b)
            if (!is_zero(m(a, b))) o.at(a, b) = sc(chart, m(a, b));
    return o;
}

ModuleOperator QOps::alpha_bar() const {
    ModuleOperator m = ModuleOperator::zero(alpha1.rows, 2 * alpha1.cols, alpha1.chart);
    put(m, 0, 0, alpha1);
    put(m, 0, alpha1.cols, alpha2);
    m.blocks = "V+V+W <- V+V";
    return m;
}

ModuleOperator QOps::beta_bar() const {
    ModuleOperator m = ModuleOperator::zero(2 * beta1.rows, beta1.cols, beta1.chart);
    put(m, 0, 0, beta2, -1);
    put(m, beta1.rows, 0, beta1);
    m.blocks = "V+V <- V+V+W";
    return m;
}

QOps build_q_ops(const ComplexADHMDatum& d, Chart chart) {
    d.validate();
    const std::size_t c = static_cast<std::size_t>(d.c), r = static_cast<std::size_t>(d.r), n = 2 * c + r;
    const QMatrix* Bs[4] = {&d.B11, &d.B12, &d.B21, &d.B22};
    QOps ops;
    for (int k = 0; k < 2; ++k) {
        ModuleOperator Lk1 = L_block(*Bs[2 * k], chart, 2 * k), Lk2 = L_block(*Bs[2 * k + 1], chart, 2 * k + 1);
        ModuleOperator al = ModuleOperator::zero(n, c, chart), be = ModuleOperator::zero(c, n, chart);
        put(al, 0, 0, Lk1);
        put(al, c, 0, Lk2);
        put(al, 2 * c, 0, scalar_operator(k == 0 ? d.j1 : d.j2, chart));
        put(be, 0, 0, Lk2, -1);
        put(be, 0, c, Lk1);
        put(be, 0, 2 * c, scalar_operator(k == 0 ? d.i1 : d.i2, chart));
        al.blocks = "V+V+W <- V";
        be.blocks = "V <- V+V+W";
        (k == 0 ? ops.alpha1 : ops.alpha2) = al;
        (k == 0 ? ops.beta1 : ops.beta2) = be;
    }
    return ops;
}

IdsReport verify_ids(const ComplexADHMDatum& d, Chart chart) {
    QOps o = build_q_ops(d, chart);
    auto res = complex_residuals(d);
    ModuleOperator ids[3] = {o.beta1 * o.alpha1, o.beta2 * o.alpha2, o.beta2 * o.alpha1 + o.beta1 * o.alpha2};
    IdsReport rep;
    rep.holds = true;
    rep.equal_residuals = true;
    for (int k = 0; k < 3; ++k) {
        rep.terms[k] = ids[k].term_count();
        rep.holds = rep.holds && ids[k].is_zero();
        rep.equal_residuals = rep.equal_residuals && ids[k] == scalar_operator(res[static_cast<std::size_t>(k)], chart);
    }
    return rep;
}

BpaqReport beta_p_alpha_q(const ComplexADHMDatum& d, const ProjPoint& P, const ProjPoint& Q, Chart chart) {
    if (!is_solution(d)) throw std::invalid_argument("beta_p_alpha_q: datum is not a solution");
    QOps o = build_q_ops(d, chart);
    BpaqReport rep;
    rep.product = combo(P.first, o.beta1, P.second, o.beta2) * combo(Q.first, o.alpha1, Q.second, o.alpha2);
    rep.factor = P.first * Q.second - P.second * Q.first;
    rep.matches = rep.product == rep.factor * (o.beta1 * o.alpha2);
    return rep;
}

XiReport xi_leading(const ComplexADHMDatum& d, Chart chart) {
    if (!is_solution(d)) throw std::invalid_argument("xi_leading: datum is not a solution");
    QOps o = build_q_ops(d, chart);
    XiReport rep;
    rep.b1a2 = o.beta1 * o.alpha2;
    rep.degree_ok = rep.b1a2.max_degree() <= 2;
    rep.leading_is_det = true;
    NCPoly det = NCPoly::det(chart);
    for (std::size_t a = 0; a < rep.b1a2.rows; ++a)
        for (std::size_t b = 0; b < rep.b1a2.cols; ++b) {
            NCPoly top = rep.b1a2.at(a, b).homogeneous_part(2);
            rep.leading_is_det = rep.leading_is_det && (a == b ? top == det : top.is_zero());
        }
    return rep;
}

SliceSurjectivity beta_surjective_truncated(const ComplexADHMDatum& d, const ProjPoint& P, int dmax, Chart chart) {
    d.validate();
    if (dmax < 0) throw std::invalid_argument("beta_surjective_truncated: dmax must be >= 0");
    if (is_zero(P.first) && is_zero(P.second)) throw std::invalid_argument("beta_surjective_truncated: P = [0:0]");
    const std::size_t c = static_cast<std::size_t>(d.c), r = static_cast<std::size_t>(d.r), n = 2 * c + r;
    QOps o = build_q_ops(d, chart);
    ModuleOperator bP = combo(P.first, o.beta1, P.second, o.beta2);

    SliceSurjectivity rep;
    rep.dmax = dmax;
    const int D = dmax + static_cast<int>(c) - 1;
    auto dom = monos_upto(D), cod = monos_upto(D + 1);
    auto cix = index_of(cod);
    rep.domain_dim = n * dom.size();
    rep.codomain_dim = c * cod.size();
    rep.target_dim = c * monos_upto(dmax).size();

    // columns of beta_P on e_j (x) m, as sparse (row, coefficient) lists
    auto column = [&](std::size_t j, const MonoKey& m) {
        std::vector<std::pair<std::size_t, QLaurent>> col;
        NCPoly mono = NCPoly::monomial(chart, m.e);
        for (std::size_t i = 0; i < c; ++i) {
            if (bP.at(i, j).is_zero()) continue;
            NCPoly img = bP.at(i, j) * mono;
            for (const auto& [key, coef] : img.terms()) col.push_back({i * cod.size() + cix.at(key), coef});
        }
        return col;
    };

    // one F_p specialization: rank of beta_P and of beta_P with the target adjoined
    {
        Zp t = random_zp(17);
        Matrix<Zp> M(rep.codomain_dim, rep.domain_dim + rep.target_dim);
        std::size_t col = 0;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& m : dom) {
                for (const auto& [row, coef] : column(j, m)) M(row, col) += to_zp(coef, t);
                ++col;
            }
        Matrix<Zp> B = M.block(0, 0, rep.codomain_dim, rep.domain_dim);
        rep.zp_rank = B.rank();
        std::size_t tcount = monos_upto(dmax).size();
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t k = 0; k < tcount; ++k) M(i * cod.size() + k, col++) = Zp(1);
        rep.zp_rank_with_target = M.rank();
    }

    // certificate 1: preimages of V (x) 1 of degree <= c-1; right multiplication then covers every target
    {
        auto sdom = monos_upto(static_cast<int>(c) - 1);
        std::size_t rows = rep.codomain_dim;
        Matrix<QRat> A(rows, n * sdom.size());
        std::size_t col = 0;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& m : sdom) {
                for (const auto& [row, coef] : column(j, m)) A(row, col) = QRat(coef);
                ++col;
            }
        Matrix<QRat> rhs(rows, c);
        for (std::size_t i = 0; i < c; ++i) rhs(i * cod.size() + cix.at(MonoKey{}), i) = QRat(1);
        auto sol = A.solve(rhs);
        if (sol && A * *sol == rhs) {
            rep.surjective = true;
            rep.certificate = "preimages";
        }
    }

    // certificate 2: phi (x) chi with phi B~k = mu_k phi, phi i~ = 0 and chi a character of the chart algebra
    if (!rep.surjective) {
        QMatrix Bt1 = P.first * d.B11 + P.second * d.B21, Bt2 = P.first * d.B12 + P.second * d.B22;
        QMatrix it = P.first * d.i1 + P.second * d.i2;
        for (const auto& [mu1, m1] : gaussian_roots(charpoly(Bt1))) {
            for (const auto& [mu2, m2] : gaussian_roots(charpoly(Bt2))) {
                QMatrix M = QMatrix::hstack({Bt1 - mu1 * QMatrix::identity(c), Bt2 - mu2 * QMatrix::identity(c), it});
                QMatrix K = M.transpose().kernel();
                if (K.cols() == 0) continue;
                QMatrix phi = K.column(0);
                auto chi = character_for(chart, P, mu1, mu2);
                bool vanishes = true;
                for (std::size_t j = 0; j < n && vanishes; ++j)
                    for (const auto& m : dom) {
                        NCPoly mono = NCPoly::monomial(chart, m.e);
                        QLaurent s;
                        for (std::size_t i = 0; i < c; ++i)
                            if (!is_zero(phi(i, 0)) && !bP.at(i, j).is_zero())
                                s += QLaurent(phi(i, 0)) * eval_character(bP.at(i, j) * mono, chi);
                        if (!s.is_zero()) {
                            vanishes = false;
                            break;
                        }
                    }
                if (vanishes) {
                    rep.surjective = false;
                    rep.certificate = "annihilator";
                    break;
                }
            }
            if (rep.surjective) break;
        }
    }
    bool zp_onto = rep.zp_rank == rep.zp_rank_with_target;
    rep.specialization_agrees = rep.surjective.has_value() && *rep.surjective == zp_onto;
    return rep;
}

CurvatureReport curvature_asd(const ComplexADHMDatum& d, const Calculus& calc) {
    if (!is_solution(d)) throw std::invalid_argument("curvature_asd: datum is not a solution");
    const std::size_t c = static_cast<std::size_t>(d.c), r = static_cast<std::size_t>(d.r), n = 2 * c + r;
    QOps o = build_q_ops(d, Chart::I);
    ModuleOperator A = o.alpha_bar(), B = o.beta_bar();
    auto dmat = [&](const ModuleOperator& m) {
        std::vector<NCForm> out;
        for (const auto& x : m.e) out.push_back(calc.d(x));
        return out;
    };
    std::vector<NCForm> dA = dmat(A), dB = dmat(B);
    // the right factor as printed: rows (d beta2; -d beta1) = -d(beta_bar)
    std::vector<NCForm> dBp;
    for (const auto& w : dB) dBp.push_back(-w);
    auto wedge_mat = [&](const std::vector<NCForm>& L, const std::vector<NCForm>& R) {
        std::vector<NCForm> out(n * n, NCForm(2));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < 2 * c; ++j) {
                    const NCForm &a = L[i * 2 * c + j], &b = R[j * n + k];
                    if (a.is_zero() || b.is_zero()) continue;
                    out[i * n + k] += calc.wedge(a, b);
                }
        return out;
    };
    CurvatureReport rep;
    rep.entries = wedge_mat(dA, dB);
    rep.displayed_factor = wedge_mat(dA, dBp);

    auto w2 = [&](int a, int b) { return calc.wedge(NCForm::dx(a), NCForm::dx(b)); };
    NCForm s = w2(0, 3) + w2(1, 2);
    const QLaurent two(2);
    NCForm blocks[2][2] = {{-s, two * w2(0, 2)}, {-(two * w2(1, 3)), s}};
    rep.expected.assign(n * n, NCForm(2));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t v = 0; v < c; ++v) rep.expected[(a * c + v) * n + (b * c + v)] = blocks[a][b];
    rep.matches_display = rep.displayed_factor == rep.expected;
    rep.matches_with_defined_sign = true;
    for (std::size_t k = 0; k < n * n; ++k)
        rep.matches_with_defined_sign = rep.matches_with_defined_sign && rep.entries[k] == -rep.expected[k];
    rep.all_asd = true;
    for (std::size_t k = 0; k < n * n; ++k) {
        auto dr = asd_membership(rep.entries[k]);
        if (dr.kind == Duality::ASD) continue;
        rep.all_asd = false;
        std::string sd;
        for (const auto& p : dr.sd) sd += (sd.empty() ? "" : ", ") + p.str();
        rep.non_asd.push_back("(" + std::to_string(k / n + 1) + "," + std::to_string(k % n + 1) + "): SD part (" + sd + ")");
    }
    return rep;
}

std::vector<NCPoly> projection_truncated(const ComplexADHMDatum& d, const std::vector<NCPoly>& psi, int dmax) {
    if (!is_solution(d)) throw std::invalid_argument("projection_truncated: datum is not a solution");
    const std::size_t c = static_cast<std::size_t>(d.c), r = static_cast<std::size_t>(d.r), n = 2 * c + r;
    if (psi.size() != n) throw std::invalid_argument("projection_truncated: psi must have 2c+r entries");
    for (const auto& f : psi)
        if (f.chart() != Chart::I || f.degree() > dmax)
            throw std::invalid_argument("projection_truncated: psi must be a chart I element of degree <= dmax");
    QOps o = build_q_ops(d, Chart::I);
    ModuleOperator Xi = o.beta1 * o.alpha2;
    std::vector<NCPoly> rhs = o.beta_bar().apply(psi);  // 2c entries, degree <= dmax+1

    // Xi raises degree by exactly two, so phi lives in degree <= dmax-1
    auto dom = monos_upto(dmax - 1), cod = monos_upto(dmax + 1);
    auto cix = index_of(cod);
    Matrix<QRat> A(c * cod.size(), c * dom.size());
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t k = 0; k < dom.size(); ++k) {
            NCPoly mono = NCPoly::monomial(Chart::I, dom[k].e);
            for (std::size_t i = 0; i < c; ++i) {
                if (Xi.at(i, j).is_zero()) continue;
                NCPoly img = Xi.at(i, j) * mono;
                for (const auto& [key, coef] : img.terms())
                    A(i * cod.size() + cix.at(key), j * dom.size() + k) = QRat(coef);
            }
        }
    Matrix<QRat> b(c * cod.size(), 2);
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t i = 0; i < c; ++i)
            for (const auto& [key, coef] : rhs[h * c + i].terms()) b(i * cod.size() + cix.at(key), h) = QRat(coef);
    auto sol = dom.empty() ? std::optional<Matrix<QRat>>() : A.solve(b);
    if (dom.empty()) {
        if (b.is_zero()) sol = Matrix<QRat>(0, 2);
    }
    if (!sol || !(A * *sol == b))
        throw std::runtime_error("projection_truncated: truncation insufficient (Xi phi = beta_bar psi has no solution of degree <= " +
                                 std::to_string(dmax - 1) + ")");
    std::vector<NCPoly> phi(2 * c, NCPoly(Chart::I));
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t k = 0; k < dom.size(); ++k) {
                const QRat& v = (*sol)(j * dom.size() + k, h);
                if (v.is_zero()) continue;
                if (!v.is_laurent()) throw std::runtime_error("projection_truncated: solution is not Laurent in q");
                phi[h * c + j] += NCPoly::monomial(Chart::I, dom[k].e, v.as_laurent());
            }
    std::vector<NCPoly> corr = o.alpha_bar().apply(phi), out(n, NCPoly(Chart::I));
    for (std::size_t k = 0; k < n; ++k) out[k] = psi[k] - corr[k];
    return out;
}

}  // namespace qadhm
