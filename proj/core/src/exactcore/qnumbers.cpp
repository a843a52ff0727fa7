#include "qadhm/exactcore/qnumbers.hpp"

#include <stdexcept>
#include <vector>

namespace qadhm {

QLaurent qint(int n) {
    if (n < 0) return -qint(-n);
    std::vector<QLaurent::Term> t;
    for (int e = -(n - 1); e <= n - 1; e += 2) t.emplace_back(e, GaussRational(1));
    return QLaurent::from_terms(std::move(t));
}

QLaurent qbrace(int n) {
    if (n < 0) throw std::invalid_argument("qbrace: negative argument");
    std::vector<QLaurent::Term> t;
    for (int e = 0; e < n; ++e) t.emplace_back(2 * e, GaussRational(1));
    return QLaurent::from_terms(std::move(t));
}

QLaurent qfact(int n) {
    if (n < 0) throw std::invalid_argument("qfact: negative argument");
    QLaurent r(GaussRational(1));
    for (int k = 2; k <= n; ++k) r *= qint(k);
    return r;
}

QLaurent qbinom(int n, int r) {
    if (n < 0 || r < 0 || r > n) {
        throw std::invalid_argument("qbinom: need 0 <= r <= n, got n=" + std::to_string(n) +
                                    " r=" + std::to_string(r));
    }
    // Pascal rule {n,r} = {n-1,r-1} + q^{2r}{n-1,r}
    std::vector<QLaurent> row{QLaurent(GaussRational(1))};
    for (int m = 1; m <= n; ++m) {
        std::vector<QLaurent> next(static_cast<std::size_t>(m) + 1);
        for (int k = 0; k <= m; ++k) {
            QLaurent v;
            if (k >= 1) v += row[static_cast<std::size_t>(k - 1)];
            if (k <= m - 1) v += row[static_cast<std::size_t>(k)].shifted(2 * k);
            next[static_cast<std::size_t>(k)] = std::move(v);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(r)];
}

std::string to_string(PChoice p) { return p == PChoice::Q ? "q" : "qinv"; }

PChoice parse_pchoice(const std::string& s) {
    if (s == "q") return PChoice::Q;
    if (s == "qinv" || s == "q_inverse" || s == "q^-1") return PChoice::QInv;
    throw std::invalid_argument("p choice must be 'q' or 'qinv', got '" + s + "'");
}

}  // namespace qadhm
