#include "mpqg/cartan.hpp"

#include <algorithm>
#include <set>

namespace mpqg {

std::vector<CartanViolation> validate(const CartanDatum& datum) {
    std::vector<CartanViolation> out;
    int n = datum.rank();
    if (static_cast<int>(datum.A.size()) != n) {
        out.push_back({-1, -1, "A and d sizes disagree"});
        return out;
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(datum.A[i].size()) != n) {
            out.push_back({i, -1, "row length"});
            return out;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (datum.A[i][i] != 2) out.push_back({i, i, "a_ii != 2"});
        if (datum.d[i] <= 0) out.push_back({i, i, "d_i <= 0"});
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (datum.A[i][j] > 0) out.push_back({i, j, "a_ij > 0 off-diagonal"});
            if ((datum.A[i][j] == 0) != (datum.A[j][i] == 0))
                out.push_back({i, j, "a_ij = 0 iff a_ji = 0 fails"});
            if (datum.d[i] * datum.A[i][j] != datum.d[j] * datum.A[j][i])
                out.push_back({i, j, "d_i a_ij != d_j a_ji"});
        }
    return out;
}

CartanDatum cartan_by_name(const std::string& name) {
    if (name == "A1") return {{{2}}, {1}, "A1"};
    if (name == "A2") return {{{2, -1}, {-1, 2}}, {1, 1}, "A2"};
    if (name == "B2") return {{{2, -1}, {-2, 2}}, {2, 1}, "B2"};
    if (name == "G2") return {{{2, -1}, {-3, 2}}, {3, 1}, "G2"};
    if (name == "A1xA1") return {{{2, 0}, {0, 2}}, {1, 1}, "A1xA1"};
    throw std::domain_error("unknown Cartan type " + name +
                            " (expected A1, A2, B2, G2 or A1xA1)");
}

bool is_finite_type(const CartanDatum& datum) {
    if (!validate(datum).empty()) return false;
    int n = datum.rank();
    // leading principal minors of the symmetrized matrix must be positive
    std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[i][j] = Rat(datum.d[i] * datum.A[i][j]);
    for (int k = 1; k <= n; ++k) {
        // determinant of the leading k x k block by elimination
        std::vector<std::vector<Rat>> b(k, std::vector<Rat>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) b[i][j] = s[i][j];
        Rat det(1);
        for (int c = 0; c < k; ++c) {
            int piv = -1;
            for (int i = c; i < k; ++i)
                if (b[i][c] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return false;
            if (piv != c) {
                std::swap(b[c], b[piv]);
                det = -det;
            }
            det *= b[c][c];
            for (int i = c + 1; i < k; ++i) {
                Rat f = b[i][c] / b[c][c];
                for (int j = c; j < k; ++j) b[i][j] -= f * b[c][j];
            }
        }
        if (det <= 0) return false;
    }
    return true;
}

std::vector<std::vector<Rat>> inverse_cartan(const CartanDatum& datum) {
    int n = datum.rank();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(datum.A[i][j]);
        m[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("Cartan matrix is singular (not finite type)");
        std::swap(m[c], m[piv]);
        Rat p = m[c][c];
        for (int k = 0; k < 2 * n; ++k) m[c][k] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int k = 0; k < 2 * n; ++k) m[i][k] -= f * m[c][k];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

LatticeVec LatticeVec::simple_root(int i, int n) {
    std::vector<Rat> c(n, Rat(0));
    c[i] = 1;
    return {Basis::Root, std::move(c)};
}

LatticeVec LatticeVec::fundamental(int i, int n) {
    std::vector<Rat> c(n, Rat(0));
    c[i] = 1;
    return {Basis::Weight, std::move(c)};
}

LatticeVec LatticeVec::add(const LatticeVec& o, const CartanDatum& cd) const {
    if (basis == o.basis) {
        LatticeVec out = *this;
        for (size_t k = 0; k < coords.size(); ++k) out.coords[k] += o.coords[k];
        return out;
    }
    auto a = root_coords(*this, cd), b = root_coords(o, cd);
    for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return LatticeVec::root(std::move(a));
}

LatticeVec LatticeVec::sub(const LatticeVec& o, const CartanDatum& cd) const {
    return add(o.scale(Rat(-1)), cd);
}

LatticeVec LatticeVec::scale(const Rat& k) const {
    LatticeVec out = *this;
    for (auto& c : out.coords) c *= k;
    return out;
}

bool LatticeVec::eq(const LatticeVec& o, const CartanDatum& cd) const {
    return root_coords(*this, cd) == root_coords(o, cd);
}

std::vector<Rat> root_coords(const LatticeVec& v, const CartanDatum& cd) {
    if (v.basis == Basis::Root) return v.coords;
    if (!is_finite_type(cd))
        throw std::domain_error("weight-basis coordinates need finite type (exact A^{-1})");
    auto inv = inverse_cartan(cd);
    int n = cd.rank();
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += inv[i][j] * v.coords[j];
    return out;
}

std::vector<Rat> weight_coords(const LatticeVec& v, const CartanDatum& cd) {
    if (v.basis == Basis::Weight) return v.coords;
    int n = cd.rank();
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += Rat(cd.A[i][j]) * v.coords[j];
    return out;
}

FieldElem q_pair(const LatticeVec& mu, const LatticeVec& nu, const ParamMatrix& P,
                 const CartanDatum& cd) {
    auto a = root_coords(mu, cd), b = root_coords(nu, cd);
    return P.q_pair(a, b);
}

InvariantForm::InvariantForm(const CartanDatum& cd) : cd_(cd) {
    rho_ = LatticeVec::weight(std::vector<Rat>(cd.rank(), Rat(1)));
}

Rat InvariantForm::pair(const LatticeVec& mu, const LatticeVec& nu) const {
    auto a = root_coords(mu, cd_), b = root_coords(nu, cd_);
    Rat out(0);
    int n = cd_.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out += a[i] * Rat(cd_.d[i] * cd_.A[i][j]) * b[j];
    return out;
}

std::map<int, FieldElem> preset(PresetKind kind, const ParamMatrix& P) {
    std::map<int, FieldElem> sub;
    int n = P.rank();
    if (kind == PresetKind::OneParameter) {
        // q := v; q_ii = v^(2 d_i) already holds, so only the x's move.
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                sub[P.x_id(i, j)] =
                    FieldElem::from_monomial(Monomial::var(P.v_id(), Rat(P.sym(i) * P.a(i, j))));
        return sub;
    }
    // two-parameter: q_ij = r^<j,i> s^(-<i,j>) with <i,j> = d_i a_ij (i<j),
    // d_i (i=j), 0 (i>j). On our variables: v -> r^(1/2) s^(-1/2) and
    // x_ij -> s^(-d_i a_ij).
    sub[P.v_id()] = FieldElem::from_monomial(Monomial::var(P.r_id(), Rat(1, 2)) *
                                             Monomial::var(P.s_id(), Rat(-1, 2)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            sub[P.x_id(i, j)] =
                FieldElem::from_monomial(Monomial::var(P.s_id(), Rat(-P.sym(i) * P.a(i, j))));
    return sub;
}

std::vector<std::vector<int>> positive_roots(const CartanDatum& cd) {
    if (!is_finite_type(cd)) throw std::domain_error("positive_roots needs finite type");
    int n = cd.rank();
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto beta = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            int pairing = 0;  // beta(h_i) = sum_k a_ik beta_k
            for (int k = 0; k < n; ++k) pairing += cd.A[i][k] * beta[k];
            auto im = beta;
            im[i] -= pairing;
            if (roots.count(im)) continue;
            roots.insert(im);
            queue.push_back(im);
        }
    }
    std::vector<std::vector<int>> out;
    for (const auto& r : roots) {
        bool pos = true, nonzero = false;
        for (int c : r) {
            if (c < 0) pos = false;
            if (c != 0) nonzero = true;
        }
        if (pos && nonzero) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

long kostant_rec(const std::vector<std::vector<int>>& roots, size_t idx, std::vector<int> rest) {
    bool zero = std::all_of(rest.begin(), rest.end(), [](int c) { return c == 0; });
    if (zero) return 1;
    if (idx == roots.size()) return 0;
    long total = 0;
    // multiplicity of roots[idx], bounded by the remaining degree
    std::vector<int> r = rest;
    for (;;) {
        total += kostant_rec(roots, idx + 1, r);
        bool ok = true;
        for (size_t k = 0; k < r.size(); ++k) {
            r[k] -= roots[idx][k];
            if (r[k] < 0) ok = false;
        }
        if (!ok) break;
    }
    return total;
}

}  // namespace

long kostant_count(const CartanDatum& cd, const std::vector<int>& beta) {
    return kostant_rec(positive_roots(cd), 0, beta);
}

}  // namespace mpqg
