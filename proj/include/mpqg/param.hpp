#pragma once

#include <span>
#include <vector>

#include "mpqg/field.hpp"

namespace mpqg {

/// The deformation parameters q_ij of a symmetrizable Cartan matrix,
/// realized inside the generic coefficient field:
///
///   q_ii = v^(2 d_i),   q_ij = x_ij (i<j),   q_ji = v^(2 d_i a_ij) x_ij^(-1),
///
/// so that q_ij q_ji = q_ii^(a_ij) holds by construction. The involution
/// tau fixes v and the rationals and sends x_ij to v^(2 d_i a_ij) x_ij^(-1),
/// i.e. tau(q_ij) = q_ji.
///
/// Variable table: id 0 is v; the x_ij (i<j, row-major) follow; then the
/// preset symbols r, s; then any caller-registered extra symbols.
class ParamMatrix {
public:
    ParamMatrix(std::vector<std::vector<int>> A, std::vector<int> d,
                std::vector<std::string> extra = {});

    int rank() const { return n_; }
    int a(int i, int j) const { return A_[i][j]; }
    int sym(int i) const { return d_[i]; }
    const std::vector<std::vector<int>>& cartan() const { return A_; }
    const std::vector<int>& syms() const { return d_; }

    int v_id() const { return 0; }
    int x_id(int i, int j) const;  // requires i < j
    int r_id() const { return r_id_; }
    int s_id() const { return s_id_; }
    int extra_id(const std::string& name) const;
    std::span<const std::string> names() const { return names_; }

    Monomial q_mono(int i, int j) const;
    FieldElem q(int i, int j) const { return FieldElem::from_monomial(q_mono(i, j)); }
    FieldElem q_half(int i, int j) const;  // q_ij^(1/2)

    /// Bicharacter q_{mu nu} on rational root-basis coordinates.
    Monomial q_pair_mono(std::span<const Rat> mu, std::span<const Rat> nu) const;
    FieldElem q_pair(std::span<const Rat> mu, std::span<const Rat> nu) const {
        return FieldElem::from_monomial(q_pair_mono(mu, nu));
    }

    /// The field involution with tau(q_ij) = q_ji. Defined on the generic
    /// variables {v, x_ij}; elements involving preset or extra symbols are
    /// rejected.
    FieldElem tau(const FieldElem& x) const;

    /// q_ii / (1 - q_ii), the pairing normalization scalar.
    FieldElem pairing_scalar(int i) const;

private:
    Monomial tau_mono(const Monomial& m) const;
    int n_;
    std::vector<std::vector<int>> A_;
    std::vector<int> d_;
    std::vector<std::string> names_;
    int r_id_, s_id_;
};

}  // namespace mpqg
