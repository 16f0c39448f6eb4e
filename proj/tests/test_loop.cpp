#include "doctest.h"

#include "onsager/error.hpp"
#include "onsager/loop.hpp"

#include <random>

using namespace onsager;

namespace {

AffineFixIndex real(const Root& a, int k) { return {AffineRoot{a, k}, 1}; }
AffineFixIndex imag(std::size_t r, int k, unsigned i) { return {AffineRoot{Root::zero(r), k}, i}; }

LoopElement random_loop(std::mt19937& rng, const StructureTable& t, int max_level, bool with_cd) {
    std::uniform_int_distribution<GIndex> idx(0, t.dim() - 1);
    std::uniform_int_distribution<int> lvl(-max_level, max_level), coeff(-3, 3);
    LoopElement x;
    for (int k = 0; k < 3; ++k) x += LoopElement::basis(idx(rng), lvl(rng), Rational(coeff(rng)));
    if (with_cd) {
        x.c = Rational(coeff(rng));
        x.d = Rational(coeff(rng));
    }
    return x;
}

// Every basis element x[k] with |k| <= L, plus c and d.
std::vector<LoopElement> loop_basis(const StructureTable& t, int L) {
    std::vector<LoopElement> out{LoopElement::central(), LoopElement::derivation()};
    for (GIndex g = 0; g < t.dim(); ++g)
        for (int k = -L; k <= L; ++k) out.push_back(LoopElement::basis(g, k));
    return out;
}

YExpansion single(const AffineFixIndex& idx, long c) {
    YExpansion e;
    add_signed(e, idx, Rational(c));
    return e;
}

}  // namespace

TEST_SUITE("loop") {

TEST_CASE("bracket examples") {
    auto t = StructureTable::build(preset("C2"));
    const auto& rs = t.roots();
    for (RootId id = 0; id < rs.num_positive(); ++id) {
        const Root& a = rs.root(id);
        auto ea = LoopElement::basis(t.e_index(id), 1), fa = LoopElement::basis(t.e_index(rs.negate(id)), -1);
        LoopElement expect = LoopElement::from_finite(bracket_g(t, e_elem(t, a), e_elem(t, -a)), 0) + LoopElement::central(Rational(2) / rs.form(a, a));
        CHECK(bracket_loop(t, ea, fa) == expect);
        for (int m = -3; m <= 3; ++m) {
            auto x = LoopElement::basis(t.e_index(id), m);
            CHECK(bracket_loop(t, LoopElement::derivation(), x) == Rational(m) * x);
        }
    }
    // long root: 2/(a,a) = 1, short root: 2
    CHECK(bracket_loop(t, LoopElement::basis(t.e_index(rs.id_of(Root({1, 0}))), 2), LoopElement::basis(t.e_index(rs.id_of(Root({-1, 0}))), -2)).c == Rational(4));
    CHECK(bracket_loop(t, LoopElement::basis(t.e_index(rs.id_of(Root({0, 1}))), 1), LoopElement::basis(t.e_index(rs.id_of(Root({0, -1}))), -1)).c == Rational(1));
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = random_loop(rng, t, 3, true);
        CHECK(bracket_loop(t, LoopElement::central(), x).is_zero());
        CHECK(bracket_loop(t, x, LoopElement::central()).is_zero());
    }
}

TEST_CASE("omega tilde examples") {
    auto t = StructureTable::build(preset("A2"));
    const auto& rs = t.roots();
    for (RootId id = 0; id < rs.num_roots(); ++id)
        for (int k = -2; k <= 2; ++k)
            CHECK(omega_tilde(t, LoopElement::basis(t.e_index(id), k)) == LoopElement::basis(t.e_index(rs.negate(id)), -k, Rational(-1)));
    CHECK(omega_tilde(t, LoopElement::derivation()) == LoopElement::derivation(Rational(-1)));
    CHECK(omega_tilde(t, LoopElement::central()) == LoopElement::central(Rational(-1)));
    std::mt19937 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        auto x = random_loop(rng, t, 4, true);
        CHECK(omega_tilde(t, omega_tilde(t, x)) == x);
    }
}

TEST_CASE("y basis elements") {
    auto t = StructureTable::build(preset("C2"));
    const auto& rs = t.roots();
    for (int k = 1; k <= 3; ++k)
        for (unsigned i = 1; i <= 2; ++i)
            CHECK(y_affine(t, imag(2, k, i)) == LoopElement::basis(t.h_index(i - 1), k) - LoopElement::basis(t.h_index(i - 1), -k));
    const Root& theta = rs.highest_root();
    CHECK(theta == Root({2, 1}));
    AffineFixIndex a0 = real(-theta, 1);
    CHECK(y_affine(t, a0) == LoopElement::basis(t.e_index(rs.id_of(-theta)), 1) - LoopElement::basis(t.e_index(rs.id_of(theta)), -1));
    for (const auto& e : affine_positive_roots(rs, 9))
        for (unsigned i = 1; i <= e.multiplicity; ++i) {
            AffineFixIndex idx{e.root, i};
            auto y = y_affine(t, idx);
            CHECK(omega_tilde(t, y) == y);
            CHECK(y_affine(t, AffineFixIndex{-e.root, i}) == Rational(-1) * y);
            CHECK(to_y_basis(t, y) == single(idx, 1));
        }
    CHECK(y_affine(t, imag(2, 0, 1)).is_zero());
    CHECK_THROWS_AS(y_affine(t, imag(2, 1, 3)), Error);
    CHECK_THROWS_AS(y_affine(t, real(Root({1, 2}), 0)), Error);
    CHECK_THROWS_AS(to_y_basis(t, LoopElement::basis(t.h_index(0), 0)), Error);
    CHECK_THROWS_AS(to_y_basis(t, LoopElement::basis(t.e_index(0), 1)), Error);
    CHECK_THROWS_AS(to_y_basis(t, LoopElement::central()), Error);
}

TEST_CASE("property: Jacobi and form invariance") {
    for (const char* name : {"A1", "A2", "C2", "G2"}) {
        CAPTURE(name);
        auto t = StructureTable::build(preset(name));
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 300; ++trial) {
            auto x = random_loop(rng, t, 3, true), y = random_loop(rng, t, 3, true), z = random_loop(rng, t, 3, true);
            auto cyc = bracket_loop(t, x, bracket_loop(t, y, z)) + bracket_loop(t, y, bracket_loop(t, z, x)) + bracket_loop(t, z, bracket_loop(t, x, y));
            CHECK(cyc.is_zero());
            CHECK((bracket_loop(t, x, y) + bracket_loop(t, y, x)).is_zero());
            CHECK(form_loop(t, bracket_loop(t, x, y), z) + form_loop(t, y, bracket_loop(t, x, z)) == Rational(0));
            CHECK(form_loop(t, x, y) == form_loop(t, y, x));
        }
    }
}

TEST_CASE("property: omega tilde is an automorphism") {
    for (const char* name : {"A1", "A2", "C2"}) {
        CAPTURE(name);
        auto t = StructureTable::build(preset(name));
        auto basis = loop_basis(t, 2);
        for (const auto& x : basis)
            for (const auto& y : basis)
                CHECK(omega_tilde(t, bracket_loop(t, x, y)) == bracket_loop(t, omega_tilde(t, x), omega_tilde(t, y)));
    }
}

TEST_CASE("property: y-basis structure constants match the closed forms") {
    for (const char* name : {"A1", "A2", "C2", "B3", "G2"}) {
        CAPTURE(name);
        auto t = StructureTable::build(preset(name));
        const auto& rs = t.roots();
        const int L = t.rank() <= 2 ? 3 : 1;
        std::vector<AffineFixIndex> idx;
        for (RootId id = 0; id < rs.num_roots(); ++id)
            for (int k = -L; k <= L; ++k) idx.push_back(real(rs.root(id), k));
        for (int k = -L; k <= L; ++k)
            for (unsigned i = 1; i <= t.rank(); ++i) idx.push_back(imag(t.rank(), k, i));
        for (const auto& a : idx)
            for (const auto& b : idx) {
                auto got = k_bracket_expand(t, a, b);
                CHECK(got == k_bracket_predict(t, a, b));
                for (const auto& [i, c] : got) CHECK(c.is_integer());
            }
    }
}

TEST_CASE("brackets of y along a single root string") {
    auto t = StructureTable::build(preset("C2"));
    const auto& rs = t.roots();
    for (const auto& a : rs.positive_roots())
        for (int l = -2; l <= 2; ++l)
            for (int m = -2; m <= 2; ++m) {
                YExpansion expect;
                auto k = rs.coroot_coords(a);
                for (unsigned i = 0; i < 2; ++i) add_signed(expect, imag(2, m - l, i + 1), Rational(k[i]));
                CHECK(k_bracket_expand(t, real(a, l), real(a, m)) == expect);
                YExpansion expect2;
                for (unsigned i = 0; i < 2; ++i) add_signed(expect2, imag(2, m + l, i + 1), Rational(k[i]));
                CHECK(k_bracket_expand(t, real(a, l), real(-a, m)) == expect2);
            }
}

TEST_CASE("Onsager structure constants") {
    auto t = StructureTable::build(preset("A1"));
    CHECK(onsager_basis(t, 0).G.is_zero());
    CHECK(onsager_basis(t, -3).G == Rational(-1) * onsager_basis(t, 3).G);
    // A_m = -y_{alpha_0 - (m+1) delta}
    for (int m = -4; m <= 4; ++m) CHECK(onsager_basis(t, m).A == Rational(-1) * y_affine(t, AffineRoot{Root({-1}), -m}));
    for (int k = -5; k <= 5; ++k)
        for (int l = -5; l <= 5; ++l) {
            auto Ak = onsager_basis(t, k).A, Al = onsager_basis(t, l).A;
            CHECK(bracket_loop(t, Ak, Al) == onsager_basis(t, l - k).G);
        }
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) CHECK(bracket_loop(t, onsager_basis(t, m).G, onsager_basis(t, n).G).is_zero());
    for (int m = 1; m <= 5; ++m)
        for (int k = -5; k <= 5; ++k) {
            auto lhs = bracket_loop(t, onsager_basis(t, m).G, onsager_basis(t, k).A);
            CHECK(lhs == Rational(2) * (onsager_basis(t, k + m).A - onsager_basis(t, k - m).A));
        }
}

TEST_CASE("strings") {
    auto t = StructureTable::build(preset("A1"));
    CHECK(real(Root({-1}), 1).str() == "y(-a1+d)");
    CHECK(imag(1, 2, 1).str() == "y(2d)^1");
    auto x = LoopElement::basis(t.e_index(0), 1) - LoopElement::central(Rational(2));
    CHECK(x.str(t) == "e(a1)[1] - 2*c");
    CHECK(expansion_str(single(real(Root({1}), -1), -2)) == "2*y(-a1+d)");
}

}  // TEST_SUITE
