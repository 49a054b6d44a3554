#include "mpqg/field.hpp"

#include <sstream>

namespace mpqg {

Monomial Monomial::var(int id, const Rat& exp) {
    Monomial m;
    if (exp != 0) m.exps_[id] = exp;
    return m;
}

Rat Monomial::exponent(int id) const {
    auto it = exps_.find(id);
    return it == exps_.end() ? Rat(0) : it->second;
}

Rat Monomial::total_degree() const {
    Rat d(0);
    for (const auto& [id, e] : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out = *this;
    for (const auto& [id, e] : o.exps_) {
        auto it = out.exps_.find(id);
        if (it == out.exps_.end()) {
            out.exps_.emplace(id, e);
        } else {
            it->second += e;
            if (it->second == 0) out.exps_.erase(it);
        }
    }
    return out;
}

Monomial Monomial::pow(const Rat& k) const {
    Monomial out;
    if (k == 0) return out;
    for (const auto& [id, e] : exps_) out.exps_[id] = e * k;
    return out;
}

bool Monomial::operator<(const Monomial& o) const {
    Rat da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    // lex: scan variables ascending; the monomial with the higher exponent
    // on the earliest differing variable is the larger one.
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        int ida = a == exps_.end() ? INT32_MAX : a->first;
        int idb = b == o.exps_.end() ? INT32_MAX : b->first;
        if (ida != idb) {
            // the one owning the earlier variable has nonzero exponent there
            if (ida < idb) return a->second < 0;
            return b->second > 0;
        }
        if (a->second != b->second) return a->second < b->second;
        ++a;
        ++b;
    }
    return false;
}

std::string Monomial::str(std::span<const std::string> names) const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, e] : exps_) {
        if (!first) os << "*";
        first = false;
        if (id >= 0 && static_cast<size_t>(id) < names.size())
            os << names[id];
        else
            os << "t" << id;
        if (e != 1) os << "^" << rat_str(e);
    }
    return os.str();
}

Poly poly_one() {
    Poly p;
    p.emplace(Monomial(), Rat(1));
    return p;
}

bool poly_is_zero(const Poly& p) { return p.empty(); }

void poly_add_term(Poly& p, const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b) poly_add_term(out, m, c);
    return out;
}

Poly poly_neg(const Poly& a) {
    Poly out;
    for (const auto& [m, c] : a) out.emplace(m, -c);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) poly_add_term(out, ma * mb, ca * cb);
    return out;
}

Poly poly_scale(const Poly& a, const Rat& c) {
    Poly out;
    if (c == 0) return out;
    for (const auto& [m, cc] : a) out.emplace(m, cc * c);
    return out;
}

FieldElem::FieldElem(long v) : den_(poly_one()) {
    if (v != 0) num_.emplace(Monomial(), Rat(v));
}

FieldElem::FieldElem(const Rat& v) : den_(poly_one()) {
    if (v != 0) num_.emplace(Monomial(), v);
}

FieldElem FieldElem::from_monomial(const Monomial& m, const Rat& coeff) {
    FieldElem x;
    if (coeff != 0) x.num_.emplace(m, coeff);
    return x;
}

FieldElem FieldElem::variable(int id, const Rat& exp) {
    return from_monomial(Monomial::var(id, exp));
}

FieldElem FieldElem::from_poly(Poly p) {
    FieldElem x;
    x.num_ = std::move(p);
    x.normalize();
    return x;
}

bool FieldElem::is_one() const { return num_ == den_; }

bool FieldElem::is_monomial() const {
    return num_.size() == 1 && den_.size() == 1 && den_.begin()->first.is_one();
}

const Monomial& FieldElem::monomial() const {
    if (!is_monomial()) throw std::domain_error("not a monomial element");
    return num_.begin()->first;
}

const Rat& FieldElem::coefficient() const {
    if (!is_monomial()) throw std::domain_error("not a monomial element");
    return num_.begin()->second;
}

void FieldElem::normalize() {
    if (den_.empty()) throw std::domain_error("zero denominator");
    if (num_.empty()) {
        den_ = poly_one();
        return;
    }
    // common monomial content: per variable, min exponent over all terms of
    // num and den jointly (0 for variables missing from a term).
    std::map<int, Rat> lo;
    bool any = false;
    auto scan = [&](const Poly& p) {
        for (const auto& [m, c] : p) {
            for (const auto& [id, e] : m.exps()) {
                auto it = lo.find(id);
                if (it == lo.end())
                    lo[id] = any && e > 0 ? Rat(0) : e;
                else if (e < it->second)
                    it->second = e;
            }
            for (auto& [id, mn] : lo)
                if (mn > 0 && m.exponent(id) == 0) mn = 0;
            any = true;
        }
    };
    scan(num_);
    scan(den_);
    for (auto it = lo.begin(); it != lo.end();)
        it = it->second == 0 ? lo.erase(it) : std::next(it);
    if (!lo.empty()) {
        Monomial shift;
        for (const auto& [id, e] : lo) shift = shift * Monomial::var(id, -e);
        Poly n2, d2;
        for (const auto& [m, c] : num_) n2.emplace(m * shift, c);
        for (const auto& [m, c] : den_) d2.emplace(m * shift, c);
        num_ = std::move(n2);
        den_ = std::move(d2);
    }
    // monic denominator: leading (graded-lex largest) coefficient 1
    const Rat lead = den_.rbegin()->second;
    if (lead != 1) {
        for (auto& [m, c] : num_) c /= lead;
        for (auto& [m, c] : den_) c /= lead;
    }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    FieldElem out;
    if (den_ == o.den_) {
        out.num_ = poly_add(num_, o.num_);
        out.den_ = den_;
    } else {
        out.num_ = poly_add(poly_mul(num_, o.den_), poly_mul(o.num_, den_));
        out.den_ = poly_mul(den_, o.den_);
    }
    out.normalize();
    return out;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator-() const {
    FieldElem out = *this;
    out.num_ = poly_neg(out.num_);
    return out;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    FieldElem out;
    out.num_ = poly_mul(num_, o.num_);
    out.den_ = poly_mul(den_, o.den_);
    out.normalize();
    return out;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("division by zero field element");
    FieldElem out;
    out.num_ = den_;
    out.den_ = num_;
    out.normalize();
    return out;
}

FieldElem FieldElem::pow_int(long e) const {
    if (e == 0) return FieldElem(1);
    if (e < 0) return inv().pow_int(-e);
    FieldElem out(1);
    FieldElem b = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) out = out * b;
        b = b * b;
        n >>= 1;
    }
    return out;
}

bool FieldElem::eq(const FieldElem& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return poly_mul(num_, o.den_) == poly_mul(o.num_, den_);
}

namespace {

FieldElem subst_poly(const Poly& p, const std::map<int, FieldElem>& images) {
    FieldElem acc;
    for (const auto& [m, c] : p) {
        FieldElem term{c};
        for (const auto& [id, e] : m.exps()) {
            auto it = images.find(id);
            if (it == images.end()) {
                term = term * FieldElem::variable(id, e);
                continue;
            }
            const FieldElem& img = it->second;
            if (is_integer(e)) {
                if (!e.get_num().fits_slong_p()) throw std::domain_error("exponent too large");
                term = term * img.pow_int(e.get_num().get_si());
            } else {
                if (!img.is_monomial() || img.coefficient() != 1)
                    throw std::domain_error(
                        "fractional power of a non-monomial substitution image");
                term = term * FieldElem::from_monomial(img.monomial().pow(e));
            }
        }
        acc += term;
    }
    return acc;
}

Rat eval_poly(const Poly& p, const std::map<int, Rat>& assignment) {
    Rat acc(0);
    for (const auto& [m, c] : p) {
        Rat term = c;
        for (const auto& [id, e] : m.exps()) {
            auto it = assignment.find(id);
            if (it == assignment.end())
                throw std::domain_error("unassigned variable id " + std::to_string(id));
            term *= rat_pow_exact(it->second, e);
        }
        acc += term;
    }
    return acc;
}

}  // namespace

FieldElem FieldElem::substitute(const std::map<int, FieldElem>& images) const {
    return subst_poly(num_, images) / subst_poly(den_, images);
}

Rat FieldElem::specialize(const std::map<int, Rat>& assignment) const {
    Rat d = eval_poly(den_, assignment);
    if (d == 0) throw eval_error("denominator vanishes at the assignment");
    return eval_poly(num_, assignment) / d;
}

namespace {

void poly_str(std::ostringstream& os, const Poly& p, std::span<const std::string> names) {
    if (p.empty()) {
        os << "0";
        return;
    }
    bool first = true;
    // descending graded-lex order
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const Rat& c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rat ac = abs(c);
        if (it->first.is_one()) {
            os << rat_str(ac);
        } else {
            if (ac != 1) os << rat_str(ac) << "*";
            os << it->first.str(names);
        }
    }
}

}  // namespace

std::string FieldElem::str(std::span<const std::string> names) const {
    std::ostringstream os;
    bool trivial_den = den_.size() == 1 && den_.begin()->first.is_one() && den_.begin()->second == 1;
    if (trivial_den) {
        poly_str(os, num_, names);
    } else {
        os << "(";
        poly_str(os, num_, names);
        os << ")/(";
        poly_str(os, den_, names);
        os << ")";
    }
    return os.str();
}

}  // namespace mpqg
