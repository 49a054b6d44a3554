#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mpqg {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when a value cannot be evaluated at an assignment
/// (vanishing denominator), as opposed to a malformed request.
struct eval_error : std::runtime_error {
    explicit eval_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// base^e for integer e (e may be negative; 0^negative throws).
Rat rat_pow(const Rat& base, long e);

/// Exact base^(p/q). Requires |base|^(1/q) to be rational; throws
/// std::domain_error otherwise (and for even roots of negatives).
Rat rat_pow_exact(const Rat& base, const Rat& e);

std::string rat_str(const Rat& r);

}  // namespace mpqg
