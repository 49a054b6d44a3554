#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpqg/param.hpp"

namespace mpqg {

/// A symmetrizable generalized Cartan matrix with its symmetrizers.
struct CartanDatum {
    std::vector<std::vector<int>> A;
    std::vector<int> d;
    std::string label;

    int rank() const { return static_cast<int>(d.size()); }
    ParamMatrix params(std::vector<std::string> extra = {}) const {
        return ParamMatrix(A, d, std::move(extra));
    }
};

struct CartanViolation {
    int i, j;
    std::string what;
};

/// Empty iff the datum is a valid symmetrizable generalized Cartan matrix
/// (a_ii = 2, off-diagonal <= 0, a_ij = 0 iff a_ji = 0, d_i a_ij = d_j a_ji).
std::vector<CartanViolation> validate(const CartanDatum& datum);

/// Built-in rank <= 2 data; name in {A1, A2, B2, G2, A1xA1}.
CartanDatum cartan_by_name(const std::string& name);

/// Positive definiteness of the symmetrized matrix (d_i a_ij).
bool is_finite_type(const CartanDatum& datum);

/// Exact inverse of A; throws for singular (non-finite-type) matrices.
std::vector<std::vector<Rat>> inverse_cartan(const CartanDatum& datum);

enum class Basis { Root, Weight };

/// A lattice (or rational-lattice) vector tagged with the basis its
/// coordinates refer to: simple roots, or fundamental weights.
struct LatticeVec {
    Basis basis = Basis::Root;
    std::vector<Rat> coords;

    static LatticeVec root(std::vector<Rat> c) { return {Basis::Root, std::move(c)}; }
    static LatticeVec weight(std::vector<Rat> c) { return {Basis::Weight, std::move(c)}; }
    static LatticeVec simple_root(int i, int n);
    static LatticeVec fundamental(int i, int n);
    static LatticeVec zero(int n) { return {Basis::Root, std::vector<Rat>(n, Rat(0))}; }

    LatticeVec add(const LatticeVec& o, const CartanDatum& cd) const;
    LatticeVec sub(const LatticeVec& o, const CartanDatum& cd) const;
    LatticeVec scale(const Rat& k) const;
    bool eq(const LatticeVec& o, const CartanDatum& cd) const;
};

/// Root-basis coordinates; weight-basis input needs finite type (exact A^{-1}).
std::vector<Rat> root_coords(const LatticeVec& v, const CartanDatum& cd);
/// Weight-basis coordinates lambda(h_i) = sum_k a_ik * (root coords)_k.
std::vector<Rat> weight_coords(const LatticeVec& v, const CartanDatum& cd);

/// The bicharacter q_{mu nu}, extended to the weight lattice for finite type.
FieldElem q_pair(const LatticeVec& mu, const LatticeVec& nu, const ParamMatrix& P,
                 const CartanDatum& cd);

/// The standard invariant form (alpha_i, alpha_j) = d_i a_ij and the Weyl
/// vector rho with rho(h_i) = 1.
class InvariantForm {
public:
    explicit InvariantForm(const CartanDatum& cd);
    Rat pair(const LatticeVec& mu, const LatticeVec& nu) const;
    const LatticeVec& rho() const { return rho_; }

private:
    CartanDatum cd_;
    LatticeVec rho_;
};

enum class PresetKind { OneParameter, TwoParameter };

/// Variable substitution realizing the named specialization of the generic
/// parameters: one-parameter sends q_ij to q^(d_i a_ij) with q = v;
/// two-parameter sends q_ij to r^<j,i> s^(-<i,j>).
std::map<int, FieldElem> preset(PresetKind kind, const ParamMatrix& P);

/// All positive roots (root-basis integer coordinates), by reflection
/// closure; finite type only.
std::vector<std::vector<int>> positive_roots(const CartanDatum& cd);

/// Kostant partition count: multisets of positive roots summing to beta.
long kostant_count(const CartanDatum& cd, const std::vector<int>& beta);

}  // namespace mpqg
