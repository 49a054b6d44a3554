#include "mpqg/param.hpp"

#include <algorithm>

namespace mpqg {

ParamMatrix::ParamMatrix(std::vector<std::vector<int>> A, std::vector<int> d,
                         std::vector<std::string> extra)
    : n_(static_cast<int>(d.size())), A_(std::move(A)), d_(std::move(d)) {
    names_.push_back("v");
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            names_.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1));
    r_id_ = static_cast<int>(names_.size());
    names_.push_back("r");
    s_id_ = static_cast<int>(names_.size());
    names_.push_back("s");
    for (auto& e : extra) names_.push_back(std::move(e));
}

int ParamMatrix::x_id(int i, int j) const {
    if (!(0 <= i && i < j && j < n_)) throw std::domain_error("x_id requires i < j");
    // row-major offset among pairs (i,j), i<j
    int off = 0;
    for (int r = 0; r < i; ++r) off += n_ - 1 - r;
    return 1 + off + (j - i - 1);
}

int ParamMatrix::extra_id(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::domain_error("unknown variable " + name);
    return static_cast<int>(it - names_.begin());
}

Monomial ParamMatrix::q_mono(int i, int j) const {
    if (i == j) return Monomial::var(v_id(), Rat(2 * d_[i]));
    if (i < j) return Monomial::var(x_id(i, j));
    // q_ji for i>j: v^(2 d_j a_ji... ) with the (j,i) pair ordered
    int lo = j, hi = i;
    return Monomial::var(v_id(), Rat(2 * d_[lo] * A_[lo][hi])) * Monomial::var(x_id(lo, hi), Rat(-1));
}

FieldElem ParamMatrix::q_half(int i, int j) const {
    return FieldElem::from_monomial(q_mono(i, j).pow(Rat(1, 2)));
}

Monomial ParamMatrix::q_pair_mono(std::span<const Rat> mu, std::span<const Rat> nu) const {
    Rat ve(0);
    Monomial out;
    for (int i = 0; i < n_; ++i) {
        ve += Rat(2 * d_[i]) * mu[i] * nu[i];
        for (int j = i + 1; j < n_; ++j) {
            ve += Rat(2 * d_[i] * A_[i][j]) * mu[j] * nu[i];
            Rat xe = mu[i] * nu[j] - mu[j] * nu[i];
            if (xe != 0) out = out * Monomial::var(x_id(i, j), xe);
        }
    }
    if (ve != 0) out = out * Monomial::var(v_id(), ve);
    return out;
}

Monomial ParamMatrix::tau_mono(const Monomial& m) const {
    Rat ve(0);
    Monomial out;
    int nx = n_ * (n_ - 1) / 2;
    for (const auto& [id, e] : m.exps()) {
        if (id == v_id()) {
            ve += e;
        } else if (id >= 1 && id <= nx) {
            // recover the pair (i,j) from the x-variable id
            int off = id - 1, i = 0;
            while (off >= n_ - 1 - i) off -= n_ - 1 - i, ++i;
            int j = i + 1 + off;
            ve += Rat(2 * d_[i] * A_[i][j]) * e;
            out = out * Monomial::var(id, -e);
        } else {
            throw std::domain_error("tau is undefined on variable " + names_[id]);
        }
    }
    if (ve != 0) out = out * Monomial::var(v_id(), ve);
    return out;
}

FieldElem ParamMatrix::tau(const FieldElem& x) const {
    Poly n2, d2;
    for (const auto& [m, c] : x.num()) poly_add_term(n2, tau_mono(m), c);
    for (const auto& [m, c] : x.den()) poly_add_term(d2, tau_mono(m), c);
    return FieldElem::from_poly(n2) / FieldElem::from_poly(d2);
}

FieldElem ParamMatrix::pairing_scalar(int i) const {
    FieldElem qii = q(i, i);
    return qii / (FieldElem(1) - qii);
}

}  // namespace mpqg
