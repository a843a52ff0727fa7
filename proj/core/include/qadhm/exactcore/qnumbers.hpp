#pragma once

#include "qadhm/exactcore/qlaurent.hpp"

#include <string>

namespace qadhm {

// [n] = (q^n - q^-n)/(q - q^-1), any integer n
QLaurent qint(int n);
// {n} = (q^{2n} - 1)/(q^2 - 1), n >= 0
QLaurent qbrace(int n);
// [n]! built from quantum integers, n >= 0
QLaurent qfact(int n);
// brace binomial {n}!/({r}!{n-r}!); this is the coefficient in (a+b)^n when ba = q^2 ab
QLaurent qbinom(int n, int r);

// The calculus depends on p, which is either q or 1/q.
enum class PChoice { Q, QInv };

inline int p_sign(PChoice p) { return p == PChoice::Q ? 1 : -1; }
inline QLaurent p_pow(PChoice p, int k) { return QLaurent::q(p_sign(p) * k); }
std::string to_string(PChoice p);
PChoice parse_pchoice(const std::string& s);

}  // namespace qadhm
