#include <random>

#include "doctest.h"
#include "mpqg/cartan.hpp"
#include "mpqg/qcomb.hpp"
#include "mpqg/shuffle.hpp"

using namespace mpqg;

namespace {

Word random_word(std::mt19937_64& rng, int rank, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen), letter(0, rank - 1);
    Word w(len(rng));
    for (auto& c : w) c = letter(rng);
    return w;
}

}  // namespace

TEST_CASE("concatenation") {
    ShuffleElem w1 = ShuffleElem::letter(0), w2 = ShuffleElem::letter(1);
    CHECK(concat(w1, w2).eq(ShuffleElem::single({0, 1})));
    ShuffleElem x = concat(w1, w2) + w1;
    CHECK(concat(ShuffleElem::unit(), x).eq(x));
    CHECK(concat(w1 + w2, w1).eq(ShuffleElem::single({0, 0}) + ShuffleElem::single({1, 0})));
}

TEST_CASE("shuffle base cases") {
    CartanDatum cd = cartan_by_name("A2");
    ParamMatrix P = cd.params();
    ShuffleCache sh(P);
    ShuffleElem wi = ShuffleElem::letter(0), wj = ShuffleElem::letter(1);
    ShuffleElem expect = ShuffleElem::single({0, 1}) + ShuffleElem::single({1, 0}, P.q(0, 1));
    CHECK(sh.shuffle(wi, wj).eq(expect));
    ShuffleElem sq = ShuffleElem::single({0, 0}, FieldElem(1) + P.q(0, 0));
    CHECK(sh.shuffle(wi, wi).eq(sq));
    ShuffleElem x = expect + wi;
    CHECK(sh.shuffle(ShuffleElem::unit(), x).eq(x));
    CHECK(sh.shuffle(x, ShuffleElem::unit()).eq(x));
}

TEST_CASE("shuffle powers collapse to q-factorials") {
    ParamMatrix P = cartan_by_name("A2").params();
    ShuffleCache sh(P);
    CHECK(sh.shuffle_power(0, 0).eq(ShuffleElem::unit()));
    FieldElem qii = P.q(0, 0);
    CHECK(sh.shuffle_power(0, 2).eq(ShuffleElem::single({0, 0}, FieldElem(1) + qii)));
    for (unsigned m = 3; m <= 4; ++m) {
        Word w(m, 0);
        CHECK(sh.shuffle_power(0, m).eq(ShuffleElem::single(w, qfact(m, qii))));
    }
}

TEST_CASE("delete operators") {
    ShuffleElem x = ShuffleElem::single({1, 0});
    CHECK(delete_last(0, x).eq(ShuffleElem::single({1})));
    CHECK(delete_last(0, ShuffleElem::single({0, 1})).is_zero());
    CHECK(delete_first(0, ShuffleElem::single({0, 1})).eq(ShuffleElem::single({1})));
    CHECK(delete_first(0, ShuffleElem::single({1, 0})).is_zero());
    CHECK(delete_first(0, ShuffleElem::letter(0)).eq(ShuffleElem::unit()));
    CHECK(delete_last(0, ShuffleElem::unit()).is_zero());
}

TEST_CASE("delete_first and delete_last commute") {
    ParamMatrix P = cartan_by_name("B2").params();
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 50; ++t) {
        Word w = random_word(rng, 2, 6);
        if (w.size() < 2) continue;
        ShuffleElem x = ShuffleElem::single(w);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(delete_first(i, delete_last(j, x)).eq(delete_last(j, delete_first(i, x))));
    }
}

TEST_CASE("twisted Leibniz rule for the last-letter delete") {
    // D_i(x * y) = q_{alpha_i, |y|} D_i(x) * y + x * D_i(y), homogeneous x, y
    CartanDatum cd = cartan_by_name("B2");
    ParamMatrix P = cd.params();
    ShuffleCache sh(P);
    std::mt19937_64 rng(424242);
    for (int t = 0; t < 40; ++t) {
        Word a = random_word(rng, 2, 4), b = random_word(rng, 2, 4);
        ShuffleElem x = ShuffleElem::single(a), y = ShuffleElem::single(b);
        std::vector<Rat> degb(2, Rat(0));
        for (int c : b) degb[c] += 1;
        for (int i = 0; i < 2; ++i) {
            std::vector<Rat> ei(2, Rat(0));
            ei[i] = 1;
            FieldElem coeff = P.q_pair(ei, degb);
            ShuffleElem lhs = delete_last(i, sh.shuffle(x, y));
            ShuffleElem rhs =
                sh.shuffle(delete_last(i, x), y).scale(coeff) + sh.shuffle(x, delete_last(i, y));
            CHECK(lhs.eq(rhs));
        }
    }
}

TEST_CASE("shuffle associativity on random homogeneous triples") {
    ParamMatrix P = cartan_by_name("A2").params();
    ShuffleCache sh(P);
    std::mt19937_64 rng(8675309);
    int done = 0;
    while (done < 100) {
        Word a = random_word(rng, 2, 2), b = random_word(rng, 2, 2), c = random_word(rng, 2, 2);
        if (a.size() + b.size() + c.size() > 6) continue;
        ++done;
        ShuffleElem x = ShuffleElem::single(a), y = ShuffleElem::single(b), z = ShuffleElem::single(c);
        CHECK(sh.shuffle(sh.shuffle(x, y), z).eq(sh.shuffle(x, sh.shuffle(y, z))));
    }
}

TEST_CASE("shuffle respects the grading") {
    ParamMatrix P = cartan_by_name("G2").params();
    ShuffleCache sh(P);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 30; ++t) {
        Word a = random_word(rng, 2, 3), b = random_word(rng, 2, 3);
        ShuffleElem s = sh.shuffle(ShuffleElem::single(a), ShuffleElem::single(b));
        if (s.is_zero()) continue;
        CHECK(s.is_homogeneous(2));
        auto deg = s.degree(2);
        auto da = word_degree(a, 2), db = word_degree(b, 2);
        CHECK(deg[0] == da[0] + db[0]);
        CHECK(deg[1] == da[1] + db[1]);
    }
}

TEST_CASE("serre sums vanish in the shuffle algebra") {
    for (const char* name : {"A1xA1", "A2", "B2"}) {
        ParamMatrix P = cartan_by_name(name).params();
        ShuffleCache sh(P);
        CHECK(sh.serre_shuffle(0, 1).is_zero());
        CHECK(sh.serre_shuffle(1, 0).is_zero());
    }
    CHECK_THROWS_AS(ShuffleCache(cartan_by_name("A2").params()).serre_shuffle(1, 1),
                    std::domain_error);
}

TEST_CASE("mixed power closed form equals the recursion") {
    for (const char* name : {"A1xA1", "A2", "B2", "G2"}) {
        ParamMatrix P = cartan_by_name(name).params();
        ShuffleCache sh(P);
        CHECK(sh.mixed_power_closed_form(0, 1, 0, 0).eq(ShuffleElem::letter(1)));
        ShuffleElem expect = ShuffleElem::single({0, 1}) + ShuffleElem::single({1, 0}, P.q(0, 1));
        CHECK(sh.mixed_power_closed_form(0, 1, 1, 0).eq(expect));
        for (unsigned m = 0; m <= 3; ++m)
            for (unsigned l = 0; l <= 3; ++l) {
                ShuffleElem direct = sh.shuffle(
                    sh.shuffle(sh.shuffle_power(0, m), ShuffleElem::letter(1)), sh.shuffle_power(0, l));
                CHECK(sh.mixed_power_closed_form(0, 1, m, l).eq(direct));
            }
    }
}
