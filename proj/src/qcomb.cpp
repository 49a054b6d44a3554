#include "mpqg/qcomb.hpp"

#include <vector>

namespace mpqg {

FieldElem qint(unsigned n, const FieldElem& a) {
    FieldElem sum;
    FieldElem p(1);
    for (unsigned k = 0; k < n; ++k) {
        sum += p;
        p = p * a;
    }
    return sum;
}

FieldElem qfact(unsigned n, const FieldElem& a) {
    FieldElem out(1);
    for (unsigned k = 2; k <= n; ++k) out = out * qint(k, a);
    return out;
}

FieldElem qbinom(unsigned n, unsigned k, const FieldElem& a) {
    if (k > n) throw std::domain_error("qbinom: k > n");
    if (k == 0 || k == n) return FieldElem(1);
    // row-by-row Pascal: binom(m,j) = binom(m-1,j) + a^(m-j) binom(m-1,j-1)
    std::vector<FieldElem> row(k + 1);
    row[0] = FieldElem(1);
    for (unsigned m = 1; m <= n; ++m) {
        unsigned jmax = std::min(m, k);
        for (unsigned j = jmax; j >= 1; --j) {
            FieldElem up = j <= m - 1 ? row[j] : FieldElem(0);
            row[j] = up + a.pow_int(static_cast<long>(m - j)) * row[j - 1];
        }
    }
    return row[k];
}

bool gauss_product_check(unsigned n, const FieldElem& a, const FieldElem& z,
                         const FieldElem& v) {
    FieldElem lhs;
    for (unsigned k = 0; k <= n; ++k) {
        FieldElem term = qbinom(n, k, v) * v.pow_int(static_cast<long>(k) * (static_cast<long>(k) - 1) / 2) *
                         a.pow_int(static_cast<long>(n - k)) * z.pow_int(static_cast<long>(k));
        lhs += (k % 2 == 0) ? term : -term;
    }
    FieldElem rhs(1);
    for (unsigned k = 0; k < n; ++k) rhs = rhs * (a - v.pow_int(static_cast<long>(k)) * z);
    return lhs.eq(rhs);
}

}  // namespace mpqg
