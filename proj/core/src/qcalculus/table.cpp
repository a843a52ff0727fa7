#include "qadhm/qcalculus/table.hpp"

#include <map>
#include <stdexcept>

#include "qadhm/exactcore/matrix.hpp"
#include "qadhm/exactcore/qrat.hpp"

namespace qadhm {

namespace {

const char* G[4] = {"11", "12", "21", "22"};
int row_of(int g) { return g / 2; }
int col_of(int g) { return g % 2; }

struct Unknowns {
    std::vector<std::array<int, 4>> list;  // (b,a,c,d)
    std::map<std::array<int, 4>, std::size_t> index;
    Unknowns() {
        for (int b = 0; b < 4; ++b)
            for (int a = 0; a < 4; ++a)
                for (int c = 0; c < 4; ++c)
                    for (int d = 0; d < 4; ++d)
                        if (charge_allowed(b, a, c, d)) {
                            index[{b, a, c, d}] = list.size();
                            list.push_back({b, a, c, d});
                        }
    }
    std::string name(std::size_t k) const {
        const auto& u = list[k];
        return std::string("dx") + G[u[0]] + "*x" + G[u[1]] + "->x" + G[u[2]] + "*dx" + G[u[3]];
    }
};

// Affine expression in the unknowns; the last slot is the constant.
using Lin = std::vector<QRat>;
// 1-form of degree one in x: (c,d) -> expression, meaning sum expr * x_c dx_d
using Form = std::map<std::pair<int, int>, Lin>;

struct Builder {
    const Unknowns& u;
    std::size_t n;
    explicit Builder(const Unknowns& uu) : u(uu), n(uu.list.size()) {}

    Lin zero() const { return Lin(n + 1); }
    Form dxx(int b, int a) const {
        Form f;
        for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d) {
                auto it = u.index.find({b, a, c, d});
                if (it == u.index.end()) continue;
                Lin l = zero();
                l[it->second] = QRat(1);
                f[{c, d}] = l;
            }
        return f;
    }
    Form xdx(int c, int d) const {
        Lin l = zero();
        l[n] = QRat(1);
        return Form{{{c, d}, l}};
    }
    static void axpy(Form& acc, const QRat& s, const Form& f) {
        for (const auto& [k, l] : f) {
            auto it = acc.find(k);
            if (it == acc.end()) it = acc.emplace(k, Lin(l.size())).first;
            for (std::size_t i = 0; i < l.size(); ++i)
                if (!l[i].is_zero()) it->second[i] += s * l[i];
        }
    }
};

Form combo(std::initializer_list<std::pair<QRat, Form>> parts) {
    Form acc;
    for (const auto& [s, f] : parts) Builder::axpy(acc, s, f);
    return acc;
}

}  // namespace

bool charge_allowed(int b, int a, int c, int d) {
    auto same = [](int x1, int x2, int y1, int y2) { return (x1 == y1 && x2 == y2) || (x1 == y2 && x2 == y1); };
    return same(row_of(a), row_of(b), row_of(c), row_of(d)) && same(col_of(a), col_of(b), col_of(c), col_of(d));
}

CalculusTable derive_table(PChoice pc) {
    Unknowns u;
    Builder B(u);
    const QRat p2 = QRat(p_pow(pc, 2));
    std::vector<std::pair<std::string, std::vector<Form>>> groups;

    // (dx_A s + dx_B)(x_C s + x_D) = p^2 (x_C s + x_D)(dx_A s + dx_B), split by powers of s
    auto s_constraint = [&](const std::string& label, int A, int Bi, int C, int D) {
        std::vector<Form> fs;
        fs.push_back(combo({{QRat(1), B.dxx(A, C)}, {-p2, B.xdx(C, A)}}));
        fs.push_back(combo({{QRat(1), B.dxx(A, D)}, {QRat(1), B.dxx(Bi, C)}, {-p2, B.xdx(C, Bi)}, {-p2, B.xdx(D, A)}}));
        fs.push_back(combo({{QRat(1), B.dxx(Bi, D)}, {-p2, B.xdx(D, Bi)}}));
        groups.emplace_back(label, std::move(fs));
    };
    s_constraint("d1", 0, 2, 0, 2);
    s_constraint("d2", 1, 3, 1, 3);
    if (pc == PChoice::Q)
        s_constraint("d3'", 0, 2, 1, 3);
    else
        s_constraint("d3''", 1, 3, 0, 2);

    // d applied to the defining relations, as sums c * x_i x_j
    const QRat one(1);
    const QRat q2(QLaurent::q(2)), qm2(QLaurent::q(-2));
    std::vector<std::vector<std::tuple<QRat, int, int>>> rels = {
        {{one, 0, 1}, {-one, 1, 0}},
        {{one, 2, 3}, {-one, 3, 2}},
        {{one, 0, 3}, {-one, 3, 0}, {one, 2, 1}, {-one, 1, 2}},
        {{one, 0, 2}, {-qm2, 2, 0}},
        {{one, 1, 3}, {-qm2, 3, 1}},
        {{one, 2, 1}, {-q2, 1, 2}},
    };
    {
        std::vector<Form> fs;
        for (const auto& r : rels) {
            Form acc;
            for (const auto& [c, i, j] : r) {
                Builder::axpy(acc, c, B.dxx(i, j));
                Builder::axpy(acc, c, B.xdx(i, j));
            }
            fs.push_back(std::move(acc));
        }
        groups.emplace_back("d(relations)", std::move(fs));
    }
    // d(det) = p^-1 q (x11 dx22 - x12 dx21) + p^-1 q^-1 (x22 dx11 - x21 dx12)
    {
        QRat a(QLaurent::q(1) * p_pow(pc, -1)), b(QLaurent::q(-1) * p_pow(pc, -1));
        Form lhs = combo({{one, B.dxx(0, 3)}, {one, B.xdx(0, 3)}, {-one, B.dxx(1, 2)}, {-one, B.xdx(1, 2)}});
        Form rhs = combo({{a, B.xdx(0, 3)}, {-a, B.xdx(1, 2)}, {b, B.xdx(3, 0)}, {-b, B.xdx(2, 1)}});
        groups.emplace_back("ddet", std::vector<Form>{combo({{one, lhs}, {-one, rhs}})});
    }

    auto assemble = [&](std::size_t upto) {
        std::vector<std::vector<QRat>> rows;
        std::vector<QRat> rhs;
        for (std::size_t g = 0; g < upto; ++g)
            for (const auto& f : groups[g].second)
                for (const auto& [k, l] : f) {
                    bool any = false;
                    for (const auto& v : l) any = any || !v.is_zero();
                    if (!any) continue;
                    rows.emplace_back(l.begin(), l.end() - 1);
                    rhs.push_back(-l.back());
                }
        Matrix<QRat> A = Matrix<QRat>::from_rows(rows);
        Matrix<QRat> b(rhs.size(), 1);
        for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
        return std::make_pair(A, b);
    };

    auto [A, b] = assemble(groups.size());
    auto sol = A.solve(b);
    if (!sol) {
        // name the first group whose addition breaks consistency
        for (std::size_t g = 1; g <= groups.size(); ++g) {
            auto [Ag, bg] = assemble(g);
            if (!Ag.solve(bg)) throw std::runtime_error("inconsistent constraints: " + groups[g - 1].first);
        }
        throw std::runtime_error("inconsistent constraints");
    }
    auto [rr, piv] = A.rref();
    if (piv.size() < u.list.size()) {
        std::string free;
        std::size_t pi = 0;
        for (std::size_t k = 0; k < u.list.size(); ++k) {
            if (pi < piv.size() && piv[pi] == k) {
                ++pi;
                continue;
            }
            free += (free.empty() ? "" : ", ") + u.name(k);
        }
        throw std::runtime_error("underdetermined: " + free);
    }

    CalculusTable t;
    t.p = pc;
    t.unknowns = u.list.size();
    t.equations = A.rows();
    t.rank = piv.size();
    for (const auto& g : groups) t.constraint_groups.push_back(g.first);
    for (std::size_t k = 0; k < u.list.size(); ++k) {
        const QRat& v = (*sol)(k, 0);
        if (v.is_zero()) continue;
        if (!v.is_laurent()) throw std::runtime_error("derive_table: non-Laurent coefficient for " + u.name(k));
        const auto& e = u.list[k];
        t.dx_x[static_cast<std::size_t>(4 * e[0] + e[1])].push_back({e[2], e[3], v.as_laurent()});
    }

    // 2-forms: d of each rule gives dx_b^dx_a + sum C dx_c^dx_d = 0.  Reduce every
    // pair to the ordered ones; add dx_a^dx_a = 0 only if the relations miss it.
    std::vector<std::vector<QRat>> R;
    for (int bb = 0; bb < 4; ++bb)
        for (int a = 0; a < 4; ++a) {
            std::vector<QRat> v(16);
            v[static_cast<std::size_t>(4 * bb + a)] += QRat(1);
            for (const auto& r : t.rule(bb, a)) v[static_cast<std::size_t>(4 * r.c + r.d)] += QRat(r.coef);
            R.push_back(v);
        }
    std::vector<std::pair<int, int>> ordered;
    for (int a = 0; a < 4; ++a)
        for (int bb = a + 1; bb < 4; ++bb) ordered.push_back({a, bb});

    auto reduce_all = [&](const std::vector<std::vector<QRat>>& rel) {
        Matrix<QRat> M(16, rel.size() + ordered.size());
        for (std::size_t k = 0; k < rel.size(); ++k)
            for (std::size_t i = 0; i < 16; ++i) M(i, k) = rel[k][i];
        for (std::size_t k = 0; k < ordered.size(); ++k)
            M(static_cast<std::size_t>(4 * ordered[k].first + ordered[k].second), rel.size() + k) = QRat(1);
        Matrix<QRat> Rm(16, rel.size());
        for (std::size_t k = 0; k < rel.size(); ++k)
            for (std::size_t i = 0; i < 16; ++i) Rm(i, k) = rel[k][i];
        if (M.rank() != 16 || Rm.rank() != 10)
            throw std::runtime_error("inconsistent constraints: 2-form relations do not leave the six ordered pairs independent");
        std::array<std::vector<WedgeRule>, 16> out;
        for (int bb = 0; bb < 4; ++bb)
            for (int a = 0; a <= bb; ++a) {
                Matrix<QRat> e(16, 1);
                e(static_cast<std::size_t>(4 * bb + a), 0) = QRat(1);
                auto z = M.solve(e);
                if (!z) throw std::runtime_error("inconsistent constraints: 2-form reduction");
                for (std::size_t k = 0; k < ordered.size(); ++k) {
                    const QRat& c = (*z)(rel.size() + k, 0);
                    if (c.is_zero()) continue;
                    if (!c.is_laurent()) throw std::runtime_error("derive_table: non-Laurent wedge coefficient");
                    out[static_cast<std::size_t>(4 * bb + a)].push_back({ordered[k].first, ordered[k].second, c.as_laurent()});
                }
            }
        return out;
    };
    t.wedge = reduce_all(R);
    t.squares_forced = true;
    for (int a = 0; a < 4; ++a) t.squares_forced = t.squares_forced && t.pair_rule(a, a).empty();
    if (!t.squares_forced) {
        for (int a = 0; a < 4; ++a) {
            std::vector<QRat> v(16);
            v[static_cast<std::size_t>(5 * a)] = QRat(1);
            R.push_back(v);
        }
        t.wedge = reduce_all(R);
    }
    return t;
}

std::string rule_str(const CalculusTable& t, int b, int a) {
    std::string s = std::string("dx") + G[b] + " x" + G[a] + " = ";
    const auto& rs = t.rule(b, a);
    if (rs.empty()) return s + "0";
    for (std::size_t k = 0; k < rs.size(); ++k) {
        if (k) s += " + ";
        s += "(" + rs[k].coef.str() + ") x" + G[rs[k].c] + " dx" + G[rs[k].d];
    }
    return s;
}

std::string wedge_str(const CalculusTable& t, int b, int a) {
    std::string s = std::string("dx") + G[b] + "^dx" + G[a] + " = ";
    const auto& rs = t.pair_rule(b, a);
    if (rs.empty()) return s + "0";
    for (std::size_t k = 0; k < rs.size(); ++k) {
        if (k) s += " + ";
        s += "(" + rs[k].coef.str() + ") dx" + G[rs[k].lo] + "^dx" + G[rs[k].hi];
    }
    return s;
}

}  // namespace qadhm
