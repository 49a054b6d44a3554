#include "mpqg/shuffle.hpp"

#include <sstream>

#include "mpqg/qcomb.hpp"

namespace mpqg {

std::vector<int> word_degree(const Word& w, int rank) {
    std::vector<int> deg(rank, 0);
    for (int c : w) deg[c] += 1;
    return deg;
}

ShuffleElem ShuffleElem::single(Word w, FieldElem c) {
    ShuffleElem x;
    if (!c.is_zero()) x.terms_.emplace(std::move(w), std::move(c));
    return x;
}

void ShuffleElem::add_term(const Word& w, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ShuffleElem ShuffleElem::operator+(const ShuffleElem& o) const {
    ShuffleElem out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

ShuffleElem ShuffleElem::operator-(const ShuffleElem& o) const {
    ShuffleElem out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
    return out;
}

ShuffleElem ShuffleElem::scale(const FieldElem& c) const {
    ShuffleElem out;
    if (c.is_zero()) return out;
    for (const auto& [w, cc] : terms_) out.terms_.emplace(w, cc * c);
    return out;
}

bool ShuffleElem::eq(const ShuffleElem& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
        if (a->first != b->first) return false;
        if (!a->second.eq(b->second)) return false;
    }
    return true;
}

bool ShuffleElem::is_homogeneous(int rank) const {
    if (terms_.empty()) return true;
    auto deg = word_degree(terms_.begin()->first, rank);
    for (const auto& [w, c] : terms_)
        if (word_degree(w, rank) != deg) return false;
    return true;
}

std::vector<int> ShuffleElem::degree(int rank) const {
    if (terms_.empty()) throw std::domain_error("degree of zero element");
    return word_degree(terms_.begin()->first, rank);
}

std::string ShuffleElem::str(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(names) << ")*w[";
        for (size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k] + 1;
        os << "]";
    }
    return os.str();
}

ShuffleElem concat(const ShuffleElem& x, const ShuffleElem& y) {
    ShuffleElem out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

ShuffleElem delete_last(int i, const ShuffleElem& x) {
    ShuffleElem out;
    for (const auto& [w, c] : x.terms()) {
        if (w.empty() || w.back() != i) continue;
        Word v(w.begin(), w.end() - 1);
        out.add_term(v, c);
    }
    return out;
}

ShuffleElem delete_first(int i, const ShuffleElem& x) {
    ShuffleElem out;
    for (const auto& [w, c] : x.terms()) {
        if (w.empty() || w.front() != i) continue;
        Word v(w.begin() + 1, w.end());
        out.add_term(v, c);
    }
    return out;
}

ShuffleElem ShuffleCache::shuffle_words(const Word& a, const Word& b) {
    if (a.empty()) return ShuffleElem::single(b);
    if (b.empty()) return ShuffleElem::single(a);
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    int i = a.back(), j = b.back();
    Word x(a.begin(), a.end() - 1);
    Word y(b.begin(), b.end() - 1);
    // (xw_i * y) w_j
    ShuffleElem left = shuffle_words(a, y);
    ShuffleElem out;
    for (const auto& [w, c] : left.terms()) {
        Word ww = w;
        ww.push_back(j);
        out.add_term(ww, c);
    }
    // q_{alpha_i, |y| + alpha_j} (x * yw_j) w_i
    std::vector<Rat> ei(P_.rank(), Rat(0)), degb(P_.rank(), Rat(0));
    ei[i] = 1;
    for (int c : b) degb[c] += 1;
    FieldElem coeff = P_.q_pair(ei, degb);
    ShuffleElem right = shuffle_words(x, b);
    for (const auto& [w, c] : right.terms()) {
        Word ww = w;
        ww.push_back(i);
        out.add_term(ww, c * coeff);
    }
    memo_.emplace(std::move(key), out);
    return out;
}

ShuffleElem ShuffleCache::shuffle(const ShuffleElem& x, const ShuffleElem& y) {
    ShuffleElem out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            ShuffleElem s = shuffle_words(a, b);
            for (const auto& [w, c] : s.terms()) out.add_term(w, c * ca * cb);
        }
    return out;
}

ShuffleElem ShuffleCache::shuffle_power(int i, unsigned m) {
    ShuffleElem out = ShuffleElem::unit();
    for (unsigned k = 0; k < m; ++k) out = shuffle(out, ShuffleElem::letter(i));
    return out;
}

ShuffleElem ShuffleCache::serre_shuffle(int i, int j) {
    if (i == j) throw std::domain_error("serre_shuffle requires i != j");
    unsigned N = static_cast<unsigned>(1 - P_.a(i, j));
    FieldElem qii = P_.q(i, i), qij = P_.q(i, j);
    ShuffleElem acc;
    for (unsigned k = 0; k <= N; ++k) {
        FieldElem c = qbinom(N, k, qii) *
                      qii.pow_int(static_cast<long>(k) * (static_cast<long>(k) - 1) / 2) *
                      qij.pow_int(static_cast<long>(k));
        if (k % 2 == 1) c = -c;
        ShuffleElem term = shuffle(shuffle(shuffle_power(i, N - k), ShuffleElem::letter(j)),
                                   shuffle_power(i, k));
        acc = acc + term.scale(c);
    }
    return acc;
}

ShuffleElem ShuffleCache::mixed_power_closed_form(int i, int j, unsigned m, unsigned l) {
    if (i == j) throw std::domain_error("mixed_power_closed_form requires i != j");
    FieldElem qii = P_.q(i, i), qij = P_.q(i, j), qji = P_.q(j, i);
    ShuffleElem acc;
    for (unsigned k = 0; k <= m; ++k)
        for (unsigned t = 0; t <= l; ++t) {
            FieldElem c = qij.pow_int(k) * qji.pow_int(static_cast<long>(l - t)) *
                          qii.pow_int(static_cast<long>(k) * static_cast<long>(l - t)) *
                          qbinom(m, k, qii) * qbinom(l, t, qii) *
                          qfact(m - k + l - t, qii) * qfact(k + t, qii);
            Word w;
            for (unsigned s = 0; s < m - k + l - t; ++s) w.push_back(i);
            w.push_back(j);
            for (unsigned s = 0; s < k + t; ++s) w.push_back(i);
            acc.add_term(w, c);
        }
    return acc;
}

}  // namespace mpqg
