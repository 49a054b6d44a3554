#include <random>

#include "doctest.h"
#include "mpqg/cartan.hpp"

using namespace mpqg;

TEST_CASE("cartan validation") {
    CHECK(validate(cartan_by_name("A2")).empty());
    CHECK(validate(cartan_by_name("B2")).empty());
    CHECK(validate(cartan_by_name("G2")).empty());
    CartanDatum bad{{{2, -1}, {0, 2}}, {1, 1}, "bad"};
    auto v = validate(bad);
    CHECK(!v.empty());
}

TEST_CASE("finite type detection and exact inverse") {
    CHECK(is_finite_type(cartan_by_name("A2")));
    CHECK(is_finite_type(cartan_by_name("G2")));
    CHECK(is_finite_type(cartan_by_name("A1xA1")));
    CartanDatum affine{{{2, -2}, {-2, 2}}, {1, 1}, "A1affine"};
    CHECK(!is_finite_type(affine));

    auto inv = inverse_cartan(cartan_by_name("A2"));
    CHECK(inv[0][0] == Rat(2, 3));
    CHECK(inv[0][1] == Rat(1, 3));
    CHECK(inv[1][0] == Rat(1, 3));
    CHECK(inv[1][1] == Rat(2, 3));
}

TEST_CASE("q_pair on simple roots") {
    CartanDatum cd = cartan_by_name("A2");
    ParamMatrix P = cd.params();
    auto a1 = LatticeVec::simple_root(0, 2);
    auto a2 = LatticeVec::simple_root(1, 2);
    CHECK(q_pair(a1, a2, P, cd).eq(P.q(0, 1)));
    CHECK(q_pair(a1.add(a2, cd), a1, P, cd).eq(P.q(0, 0) * P.q(1, 0)));
}

TEST_CASE("weight-lattice pairing collapses to q_ii powers") {
    for (const char* name : {"A2", "B2", "G2"}) {
        CartanDatum cd = cartan_by_name(name);
        ParamMatrix P = cd.params();
        for (int i = 0; i < cd.rank(); ++i)
            for (int j = 0; j < cd.rank(); ++j) {
                auto ai = LatticeVec::simple_root(i, cd.rank());
                auto lj = LatticeVec::fundamental(j, cd.rank());
                FieldElem lhs = q_pair(ai, lj, P, cd) * q_pair(lj, ai, P, cd);
                FieldElem rhs = i == j ? P.q(i, i) : FieldElem(1);
                CHECK(lhs.eq(rhs));
            }
    }
}

TEST_CASE("bicharacter laws on random lattice vectors") {
    CartanDatum cd = cartan_by_name("B2");
    ParamMatrix P = cd.params();
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < 60; ++t) {
        LatticeVec mu = LatticeVec::root({Rat(c(rng)), Rat(c(rng))});
        LatticeVec mup = LatticeVec::root({Rat(c(rng)), Rat(c(rng))});
        LatticeVec nu = LatticeVec::root({Rat(c(rng)), Rat(c(rng))});
        CHECK(q_pair(mu.add(mup, cd), nu, P, cd).eq(q_pair(mu, nu, P, cd) * q_pair(mup, nu, P, cd)));
        CHECK(q_pair(nu, mu.add(mup, cd), P, cd).eq(q_pair(nu, mu, P, cd) * q_pair(nu, mup, P, cd)));
    }
}

TEST_CASE("one-parameter preset") {
    CartanDatum cd = cartan_by_name("A2");
    ParamMatrix P = cd.params();
    auto sub = preset(PresetKind::OneParameter, P);
    // q_12 -> q^(d_1 a_12) = v^-1
    CHECK(P.q(0, 1).substitute(sub).eq(FieldElem::variable(P.v_id(), Rat(-1))));
    // q_ii -> q^(2 d_i) unchanged
    CHECK(P.q(0, 0).substitute(sub).eq(P.q(0, 0)));
    CHECK(P.q(1, 0).substitute(sub).eq(FieldElem::variable(P.v_id(), Rat(-1))));

    // under the preset, q_pair(mu,nu) = q^((mu,nu)) on the root lattice
    InvariantForm form(cd);
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int t = 0; t < 40; ++t) {
        LatticeVec mu = LatticeVec::root({Rat(c(rng)), Rat(c(rng))});
        LatticeVec nu = LatticeVec::root({Rat(c(rng)), Rat(c(rng))});
        FieldElem lhs = q_pair(mu, nu, P, cd).substitute(sub);
        FieldElem rhs = FieldElem::from_monomial(Monomial::var(P.v_id(), form.pair(mu, nu)));
        CHECK(lhs.eq(rhs));
    }
}

TEST_CASE("two-parameter preset matches the r,s table") {
    CartanDatum cd = cartan_by_name("A2");
    ParamMatrix P = cd.params();
    auto sub = preset(PresetKind::TwoParameter, P);
    CHECK(P.q(0, 1).substitute(sub).eq(FieldElem::variable(P.s_id())));
    CHECK(P.q(1, 0).substitute(sub).eq(FieldElem::variable(P.r_id(), Rat(-1))));
    FieldElem rs = FieldElem::from_monomial(Monomial::var(P.r_id()) * Monomial::var(P.s_id(), Rat(-1)));
    CHECK(P.q(0, 0).substitute(sub).eq(rs));
}

TEST_CASE("positive roots and Kostant partition counts") {
    CHECK(positive_roots(cartan_by_name("A2")).size() == 3);
    CHECK(positive_roots(cartan_by_name("B2")).size() == 4);
    CHECK(positive_roots(cartan_by_name("G2")).size() == 6);
    CHECK(positive_roots(cartan_by_name("A1xA1")).size() == 2);

    CartanDatum a2 = cartan_by_name("A2");
    CHECK(kostant_count(a2, {1, 1}) == 2);
    CHECK(kostant_count(a2, {2, 1}) == 2);
    CHECK(kostant_count(a2, {2, 2}) == 3);
    CartanDatum b2 = cartan_by_name("B2");
    CHECK(kostant_count(b2, {1, 2}) == 3);
    CHECK(kostant_count(b2, {2, 2}) == 4);
    CartanDatum g2 = cartan_by_name("G2");
    CHECK(kostant_count(g2, {1, 3}) == 4);
    CHECK(kostant_count(g2, {2, 2}) == 4);
}

TEST_CASE("invariant form and rho") {
    CartanDatum a1 = cartan_by_name("A1");
    InvariantForm form(a1);
    // (rho, rho) = 1/2 in A1 with d_1 = 1
    CHECK(form.pair(form.rho(), form.rho()) == Rat(1, 2));
    CartanDatum b2 = cartan_by_name("B2");
    InvariantForm fb(b2);
    auto a_1 = LatticeVec::simple_root(0, 2);
    auto a_2 = LatticeVec::simple_root(1, 2);
    CHECK(fb.pair(a_1, a_1) == Rat(4));
    CHECK(fb.pair(a_2, a_2) == Rat(2));
    CHECK(fb.pair(a_1, a_2) == Rat(-2));
    CHECK(fb.pair(a_2, a_1) == Rat(-2));
}
