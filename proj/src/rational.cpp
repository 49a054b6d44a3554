#include "mpqg/rational.hpp"

namespace mpqg {

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw eval_error("0 raised to a negative power");
        return Rat(0);
    }
    bool neg = e < 0;
    unsigned long n = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    out.canonicalize();
    if (neg) out = Rat(1) / out;
    return out;
}

namespace {

// Exact k-th root of a canonical integer; false when none exists.
bool int_root(const Int& a, unsigned long k, Int& out) {
    if (a == 0) {
        out = 0;
        return true;
    }
    if (a < 0) {
        if (k % 2 == 0) return false;
        Int r;
        if (!int_root(Int(-a), k, r)) return false;
        out = -r;
        return true;
    }
    Int r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    if (!exact) return false;
    out = r;
    return true;
}

}  // namespace

Rat rat_pow_exact(const Rat& base, const Rat& e) {
    if (is_integer(e)) {
        if (!e.get_num().fits_slong_p()) throw std::domain_error("exponent too large");
        return rat_pow(base, e.get_num().get_si());
    }
    if (base == 0) {
        if (e > 0) return Rat(0);
        throw eval_error("0 raised to a negative power");
    }
    unsigned long q = static_cast<unsigned long>(e.get_den().get_ui());
    if (!e.get_den().fits_ulong_p()) throw std::domain_error("exponent denominator too large");
    Int rn, rd;
    if (!int_root(Int(base.get_num()), q, rn) || !int_root(Int(base.get_den()), q, rd))
        throw std::domain_error("assigned base is not an exact " + std::to_string(q) +
                                "-th power: " + rat_str(base));
    Rat root(rn, rd);
    root.canonicalize();
    if (!e.get_num().fits_slong_p()) throw std::domain_error("exponent too large");
    return rat_pow(root, e.get_num().get_si());
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace mpqg
