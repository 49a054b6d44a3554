#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mpqg/rational.hpp"

namespace mpqg {

/// A power product with exact rational exponents. Fractional powers are
/// first-class: v^(1/2) is a monomial like any other.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(int id, const Rat& exp = Rat(1));

    bool is_one() const { return exps_.empty(); }
    const std::map<int, Rat>& exps() const { return exps_; }
    Rat exponent(int id) const;
    Rat total_degree() const;

    Monomial operator*(const Monomial& o) const;
    Monomial pow(const Rat& k) const;
    Monomial inv() const { return pow(Rat(-1)); }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    /// Graded lexicographic: total degree first, then earlier variables
    /// with higher exponents compare larger.
    bool operator<(const Monomial& o) const;

    std::string str(std::span<const std::string> names) const;

private:
    std::map<int, Rat> exps_;  // var id -> exponent, no zeros stored
};

/// Sparse polynomial: monomial -> nonzero rational coefficient.
using Poly = std::map<Monomial, Rat>;

Poly poly_one();
bool poly_is_zero(const Poly& p);
void poly_add_term(Poly& p, const Monomial& m, const Rat& c);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& c);

/// Element of the fraction field of rational-exponent Laurent polynomials
/// over Q. Canonical form: nonzero denominator, common monomial content
/// removed, denominator monic in the graded-lex leading term. Fractions are
/// not fully reduced; equality is decided by cross-multiplication.
class FieldElem {
public:
    FieldElem() : num_(), den_(poly_one()) {}
    FieldElem(long v);
    FieldElem(const Rat& v);
    static FieldElem from_monomial(const Monomial& m, const Rat& coeff = Rat(1));
    static FieldElem variable(int id, const Rat& exp = Rat(1));
    static FieldElem from_poly(Poly p);

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    /// True when the element is c * (single monomial) with denominator 1.
    bool is_monomial() const;
    /// Requires is_monomial(); returns the monomial and coefficient parts.
    const Monomial& monomial() const;
    const Rat& coefficient() const;

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inv() const;
    FieldElem pow_int(long e) const;

    /// Exact equality (cross-multiplication).
    bool eq(const FieldElem& o) const;
    bool operator==(const FieldElem& o) const { return eq(o); }

    /// Substitute variables by monomial elements (e.g. parameter presets).
    /// Non-integer exponents require the image to be a coefficient-1 monomial.
    FieldElem substitute(const std::map<int, FieldElem>& images) const;

    /// Exact evaluation at a rational assignment. Every variable occurring in
    /// the element must be assigned. Fractional exponents require the assigned
    /// base to be an exact power (std::domain_error otherwise); a vanishing
    /// denominator raises eval_error.
    Rat specialize(const std::map<int, Rat>& assignment) const;

    /// Canonical string form: terms in descending graded-lex order,
    /// exponents printed as p/q, coefficients as exact rationals.
    std::string str(std::span<const std::string> names) const;

private:
    void normalize();
    Poly num_, den_;
};

}  // namespace mpqg
