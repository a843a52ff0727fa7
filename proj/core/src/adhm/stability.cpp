#include "qadhm/adhm/stability.hpp"

#include <functional>
#include <stdexcept>

namespace qadhm {

namespace {

using HomMatrix = std::vector<std::vector<HomPoly>>;

// independent columns of m, in order (m may have zero columns)
QMatrix column_basis(const QMatrix& m) {
    if (m.cols() == 0 || m.rows() == 0) return QMatrix(m.rows(), 0);
    auto [rr, piv] = m.rref();
    QMatrix out(m.rows(), piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t a = 0; a < m.rows(); ++a) out(a, k) = m(a, piv[k]);
    return out;
}

QMatrix hcat(const std::vector<QMatrix>& ms, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& m : ms) cols += m.cols();
    QMatrix out(rows, cols);
    std::size_t off = 0;
    for (const auto& m : ms) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t a = 0; a < rows; ++a) out(a, off + j) = m(a, j);
        off += m.cols();
    }
    return out;
}

HomMatrix pencil(const QMatrix& A, const QMatrix& B) {
    HomMatrix m(A.rows(), std::vector<HomPoly>(A.cols()));
    for (std::size_t a = 0; a < A.rows(); ++a)
        for (std::size_t b = 0; b < A.cols(); ++b) m[a][b] = HomPoly::linear(A(a, b), B(a, b));
    return m;
}

HomMatrix hmul(const HomMatrix& A, const HomMatrix& B) {
    std::size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
    HomMatrix out(n, std::vector<HomPoly>(m));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            HomPoly s;
            for (std::size_t t = 0; t < k; ++t) {
                if (A[a][t].is_zero() || B[t][b].is_zero()) continue;
                s = s + A[a][t] * B[t][b];
            }
            out[a][b] = s;
        }
    return out;
}

std::vector<std::vector<HomPoly>> krylov_columns(const ComplexADHMDatum& d) {
    const std::size_t c = static_cast<std::size_t>(d.c);
    HomMatrix B1 = pencil(d.B11, d.B21), B2 = pencil(d.B12, d.B22), I = pencil(d.i1, d.i2);
    std::vector<HomMatrix> level{I}, all{I};
    for (std::size_t len = 1; len < c; ++len) {
        std::vector<HomMatrix> nxt;
        for (const auto& M : level) {
            nxt.push_back(hmul(B1, M));
            nxt.push_back(hmul(B2, M));
        }
        all.insert(all.end(), nxt.begin(), nxt.end());
        level = std::move(nxt);
    }
    std::vector<std::vector<HomPoly>> cols;
    for (const auto& M : all)
        for (std::size_t j = 0; j < (M.empty() ? 0 : M[0].size()); ++j) {
            std::vector<HomPoly> col(c);
            bool nonzero = false;
            for (std::size_t a = 0; a < c; ++a) {
                col[a] = M[a][j];
                nonzero = nonzero || !col[a].is_zero();
            }
            if (nonzero) cols.push_back(std::move(col));
        }
    return cols;
}

PencilGcd gcd_of_minors(const ComplexADHMDatum& d) {
    const std::size_t c = static_cast<std::size_t>(d.c);
    auto cols = krylov_columns(d);
    PencilGcd res;
    bool have = false;
    std::vector<std::size_t> pick(c);
    // lexicographic c-subsets, stopping once the gcd is a constant
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) -> bool {
        if (depth == c) {
            std::vector<std::vector<HomPoly>> m(c, std::vector<HomPoly>(c));
            for (std::size_t a = 0; a < c; ++a)
                for (std::size_t b = 0; b < c; ++b) m[a][b] = cols[pick[b]][a];
            ++res.minors_examined;
            HomPoly det = hom_det(m);
            if (det.is_zero()) return false;
            res.gcd = have ? homogeneous_gcd({res.gcd, det}) : homogeneous_gcd({det});
            have = true;
            return res.gcd.deg == 0;
        }
        for (std::size_t k = start; k + (c - depth) <= cols.size(); ++k) {
            pick[depth] = k;
            if (rec(depth + 1, k + 1)) return true;
        }
        return false;
    };
    rec(0, 0);
    if (!have) {
        res.identically_zero = true;
        res.factored = "0";
        return res;
    }
    if (res.gcd.deg == 0) {
        res.factored = "1";
        return res;
    }
    auto pr = projective_roots(res.gcd);
    for (const auto& [pt, mult] : pr.roots) res.roots.push_back(pt);
    res.factored = pr.factored;
    return res;
}

ComplexADHMDatum transposed(const ComplexADHMDatum& d) {
    ComplexADHMDatum t = d;
    t.B11 = d.B11.transpose();
    t.B12 = d.B12.transpose();
    t.B21 = d.B21.transpose();
    t.B22 = d.B22.transpose();
    t.i1 = d.j1.transpose();
    t.i2 = d.j2.transpose();
    t.j1 = d.i1.transpose();
    t.j2 = d.i2.transpose();
    return t;
}

QMatrix flatten_col(const QMatrix& m) {
    QMatrix v(m.rows() * m.cols(), 1);
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) v(a * m.cols() + b, 0) = m(a, b);
    return v;
}

}  // namespace

QMatrix invariant_closure(const QMatrix& B1, const QMatrix& B2, const QMatrix& i) {
    const std::size_t c = B1.rows();
    QMatrix basis = column_basis(i);
    while (true) {
        if (basis.cols() == c) return basis;
        QMatrix next = column_basis(hcat({basis, B1 * basis, B2 * basis}, c));
        if (next.cols() == basis.cols()) return basis;
        basis = next;
    }
}

StabilityWitness is_stable(const QMatrix& B1, const QMatrix& B2, const QMatrix& i) {
    if (!B1.is_square() || B2.rows() != B1.rows() || B2.cols() != B1.cols() || i.rows() != B1.rows())
        throw std::invalid_argument("is_stable: inconsistent shapes");
    StabilityWitness w;
    QMatrix cl = invariant_closure(B1, B2, i);
    w.ok = cl.cols() == B1.rows();
    if (!w.ok) w.witness = cl;
    return w;
}

StabilityWitness is_costable(const QMatrix& B1, const QMatrix& B2, const QMatrix& j) {
    if (j.cols() != B1.rows()) throw std::invalid_argument("is_costable: inconsistent shapes");
    StabilityWitness w;
    QMatrix cl = invariant_closure(B1.transpose(), B2.transpose(), j.transpose());
    w.ok = cl.cols() == B1.rows();
    if (!w.ok) {
        // the annihilator of the closure is B-invariant and lies in ker j
        w.witness = cl.cols() == 0 ? QMatrix::identity(B1.rows()) : cl.transpose().kernel();
    }
    return w;
}

QMatrix ordered_monomial_map(const QMatrix& B1, const QMatrix& B2, const QMatrix& i) {
    const std::size_t c = B1.rows();
    std::vector<QMatrix> blocks;
    QMatrix p1 = QMatrix::identity(c);
    for (std::size_t m = 0; m < c; ++m) {
        QMatrix p2 = QMatrix::identity(c);
        for (std::size_t n = 0; n < c; ++n) {
            blocks.push_back(p1 * p2 * i);
            p2 = p2 * B2;
        }
        p1 = p1 * B1;
    }
    return hcat(blocks, c);
}

PencilGcd stability_gcd(const ComplexADHMDatum& d) {
    d.validate();
    return gcd_of_minors(d);
}

PencilGcd costability_gcd(const ComplexADHMDatum& d) {
    d.validate();
    return gcd_of_minors(transposed(d));
}

StabilityReport classify(const ComplexADHMDatum& d) {
    StabilityReport rep;
    PencilGcd st = stability_gcd(d), co = costability_gcd(d);
    rep.stable_everywhere = st.everywhere();
    rep.semistable = !st.identically_zero;
    rep.costable_everywhere = co.everywhere();
    rep.regular = rep.stable_everywhere && rep.costable_everywhere;
    rep.semiregular = rep.stable_everywhere && !co.identically_zero;
    rep.failing_points = st.roots;
    rep.costable_failing_points = co.roots;
    rep.stability_gcd = st.factored;
    rep.costability_gcd = co.factored;
    std::optional<ProjPoint> at;
    if (!st.roots.empty()) at = st.roots.front();
    else if (st.identically_zero) at = ProjPoint{GaussRational(1), GaussRational(0)};
    if (at) {
        auto p = evaluate(d, at->first, at->second);
        auto w = is_stable(p.B1, p.B2, p.i);
        if (!w.ok) rep.witness_subspace = w.witness;
    }
    return rep;
}

QMatrix derivative_matrix(const ComplexADHMDatum& d) {
    d.validate();
    const std::size_t c = static_cast<std::size_t>(d.c), r = static_cast<std::size_t>(d.r);
    const std::size_t n0 = 2 * c * c + 2 * c * r;
    auto partial = [&](int k) {
        const QMatrix& Bk1 = k == 1 ? d.B11 : d.B21;
        const QMatrix& Bk2 = k == 1 ? d.B12 : d.B22;
        const QMatrix& ik = k == 1 ? d.i1 : d.i2;
        const QMatrix& jk = k == 1 ? d.j1 : d.j2;
        QMatrix P(c * c, n0);
        std::size_t col = 0;
        auto put = [&](const QMatrix& img) {
            QMatrix v = flatten_col(img);
            for (std::size_t a = 0; a < c * c; ++a) P(a, col) = v(a, 0);
            ++col;
        };
        for (std::size_t a = 0; a < c; ++a)
            for (std::size_t b = 0; b < c; ++b) {
                QMatrix e(c, c);
                e(a, b) = GaussRational(1);
                put(commutator(e, Bk2));
            }
        for (std::size_t a = 0; a < c; ++a)
            for (std::size_t b = 0; b < c; ++b) {
                QMatrix e(c, c);
                e(a, b) = GaussRational(1);
                put(commutator(Bk1, e));
            }
        for (std::size_t a = 0; a < c; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                QMatrix e(c, r);
                e(a, b) = GaussRational(1);
                put(e * jk);
            }
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < c; ++b) {
                QMatrix e(r, c);
                e(a, b) = GaussRational(1);
                put(ik * e);
            }
        return P;
    };
    QMatrix P1 = partial(1), P2 = partial(2);
    QMatrix D(3 * c * c, 2 * n0);
    D.set_block(0, 0, P1);
    D.set_block(c * c, 0, P2);
    D.set_block(c * c, n0, P1);
    D.set_block(2 * c * c, n0, P2);
    return D;
}

std::size_t derivative_rank(const ComplexADHMDatum& d) { return derivative_matrix(d).rank(); }

long dimension_audit(const ComplexADHMDatum& d) {
    long c = d.c, r = d.r;
    return 4 * c * c + 4 * r * c - static_cast<long>(derivative_rank(d)) - c * c;
}

std::size_t stabilizer_dim(const QMatrix& B1, const QMatrix& B2, const QMatrix& i) {
    const std::size_t c = B1.rows(), r = i.cols();
    QMatrix M(2 * c * c + c * r, c * c);
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b) {
            QMatrix X(c, c);
            X(a, b) = GaussRational(1);
            QMatrix v = QMatrix::vstack({flatten_col(commutator(B1, X)), flatten_col(commutator(B2, X)), flatten_col(X * i)});
            for (std::size_t t = 0; t < v.rows(); ++t) M(t, a * c + b) = v(t, 0);
        }
    return c * c - M.rank();
}

std::string to_string(RealStratum s) {
    switch (s) {
        case RealStratum::Stable: return "stable";
        case RealStratum::Costable: return "costable";
        case RealStratum::Regular: return "regular";
        default: return "irregular";
    }
}

RealStratum real_stratify(const RealADHMDatum& d, const GaussRational& xi) {
    if (!is_real_solution(d, xi)) throw std::invalid_argument("real_stratify: datum does not solve the real equations");
    bool st = is_stable(d.B1, d.B2, d.i).ok, co = is_costable(d.B1, d.B2, d.j).ok;
    if (st && co) return RealStratum::Regular;
    if (st) return RealStratum::Stable;
    if (co) return RealStratum::Costable;
    return RealStratum::Irregular;
}

}  // namespace qadhm
