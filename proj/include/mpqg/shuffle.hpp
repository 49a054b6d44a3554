#pragma once

#include <map>
#include <vector>

#include "mpqg/param.hpp"

namespace mpqg {

/// A word over the alphabet I = {0, ..., rank-1}.
using Word = std::vector<int>;

/// Letter-count vector of a word (its degree in Q+).
std::vector<int> word_degree(const Word& w, int rank);

/// Finitely supported FieldElem-linear combination of words. No zero
/// coefficients are stored.
class ShuffleElem {
public:
    ShuffleElem() = default;
    static ShuffleElem unit() { return single(Word{}); }
    static ShuffleElem letter(int i) { return single(Word{i}); }
    static ShuffleElem single(Word w, FieldElem c = FieldElem(1));

    const std::map<Word, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& w, const FieldElem& c);

    ShuffleElem operator+(const ShuffleElem& o) const;
    ShuffleElem operator-(const ShuffleElem& o) const;
    ShuffleElem scale(const FieldElem& c) const;
    bool eq(const ShuffleElem& o) const;

    /// True when every word has the same letter-count vector.
    bool is_homogeneous(int rank) const;
    std::vector<int> degree(int rank) const;  // requires nonzero homogeneous

    std::string str(std::span<const std::string> names) const;

private:
    std::map<Word, FieldElem> terms_;
};

/// Word-level shuffle memo; one instance per logical computation keeps the
/// external behavior that of a pure function.
class ShuffleCache {
public:
    explicit ShuffleCache(ParamMatrix P) : P_(std::move(P)) {}
    const ParamMatrix& params() const { return P_; }

    /// Quantum shuffle product: bilinear extension of
    ///   xw_i * yw_j = (xw_i * y)w_j + q_{alpha_i, |y|+alpha_j}(x * yw_j)w_i.
    ShuffleElem shuffle(const ShuffleElem& x, const ShuffleElem& y);
    ShuffleElem shuffle_words(const Word& a, const Word& b);

    /// w_i^{*m} by iterated shuffle.
    ShuffleElem shuffle_power(int i, unsigned m);

    /// The alternating Serre sum
    ///   sum_k (-1)^k binom(1-a_ij,k)_{q_ii} q_ii^{k(k-1)/2} q_ij^k
    ///         w_i^{*(1-a_ij-k)} * w_j * w_i^{*k};
    /// vanishes identically. Returned so callers can assert the zero.
    ShuffleElem serre_shuffle(int i, int j);

    /// The closed form of w_i^{*m} * w_j * w_i^{*l} as a double sum in
    /// q-binomials and q-factorials, evaluated directly (no recursion).
    ShuffleElem mixed_power_closed_form(int i, int j, unsigned m, unsigned l);

private:
    ParamMatrix P_;
    std::map<std::pair<Word, Word>, ShuffleElem> memo_;
};

/// Concatenation product of the free algebra.
ShuffleElem concat(const ShuffleElem& x, const ShuffleElem& y);

/// D_i: strips a trailing letter i; kills words ending otherwise and the unit.
ShuffleElem delete_last(int i, const ShuffleElem& x);

/// Left-handed analogue: strips a leading letter i.
ShuffleElem delete_first(int i, const ShuffleElem& x);

}  // namespace mpqg
