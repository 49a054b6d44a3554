#pragma once

#include "mpqg/field.hpp"

namespace mpqg {

/// (n)_a = 1 + a + ... + a^(n-1); (0)_a = 0.
FieldElem qint(unsigned n, const FieldElem& a);

/// (n)_a! = (n)_a (n-1)_a ... (1)_a; (0)_a! = 1.
FieldElem qfact(unsigned n, const FieldElem& a);

/// Gaussian binomial, computed by the Pascal recursion so that the result
/// is polynomial in a. Throws std::domain_error when k > n.
FieldElem qbinom(unsigned n, unsigned k, const FieldElem& a);

/// True iff  sum_k (-1)^k binom(n,k)_v v^{k(k-1)/2} a^{n-k} z^k
///        == prod_{k=0}^{n-1} (a - v^k z)  exactly.
bool gauss_product_check(unsigned n, const FieldElem& a, const FieldElem& z, const FieldElem& v);

}  // namespace mpqg
