#include "doctest.h"

#include "onsager/error.hpp"
#include "onsager/onsager.hpp"

using namespace onsager;

namespace {

FreeLieElement L(const char* text) { return to_lyndon(parse_bracket(text)); }

std::vector<std::size_t> dims_of(const char* name, unsigned jmax, WordMode mode = WordMode::RightNested) {
    auto rep = filtration_dims(Realization::for_cartan(preset(name)), jmax, mode);
    return {rep.dims.begin() + 1, rep.dims.end()};
}

}  // namespace

TEST_SUITE("onsager") {

TEST_CASE("relations") {
    auto dg = relations(preset("A1~"));
    REQUIRE(dg.size() == 2);
    CHECK(dg[0].i == 0);
    CHECK(dg[0].j == 1);
    CHECK(dg[1].relation == L("[B1,[B1,[B1,B0]]]") + Rational(4) * L("[B1,B0]"));
    CHECK(dg[0].relation == L("[B0,[B0,[B0,B1]]]") + Rational(4) * L("[B0,B1]"));
    auto a2 = relations(preset("A2"));
    REQUIRE(a2.size() == 2);
    CHECK(a2[0].relation == L("[B1,[B1,B2]]") + FreeLieElement::generator(2));
    CHECK(a2[1].relation == L("[B2,[B2,B1]]") + FreeLieElement::generator(1));
    CHECK(relations(preset("A1")).empty());
    CHECK(relations(preset("A3")).size() == 6);
}

TEST_CASE("psi on generators and brackets") {
    auto rz = Realization::for_cartan(preset("A2"));
    const auto& t = rz.table();
    for (int i = 1; i <= 2; ++i)
        CHECK(psi_eval(rz, BracketExpr::leaf(i)) == LoopElement::from_finite(e_simple(t, i - 1) - f_simple(t, i - 1)));
    CHECK_THROWS_AS(psi_eval(rz, BracketExpr::leaf(3)), Error);
    CHECK_THROWS_AS(psi_eval(rz, BracketExpr::leaf(0)), Error);
    const auto& rs = t.roots();
    int kappa = t.N(rs.id_of(Root({1, 0})), rs.id_of(Root({0, 1})));
    YExpansion expect{{AffineFixIndex{AffineRoot{Root({1, 1}), 0}, 1}, Rational(kappa)}};
    CHECK(to_y_basis(t, psi_eval(rz, parse_bracket("[B1,B2]"))) == expect);
    CHECK(psi_eval(rz, parse_bracket("[B1,[B1,B2]]")) == Rational(-1) * rz.generator(2));

    auto aff = Realization::for_cartan(preset("A1~"));
    CHECK(aff.generator_index(0) == AffineFixIndex{AffineRoot{Root({-1}), 1}, 1});
    CHECK(aff.generator_index(1) == AffineFixIndex{AffineRoot{Root({1}), 0}, 1});
    CHECK_THROWS_AS(aff.generator(2), Error);
    CHECK(aff.delta_height() == 2);
}

TEST_CASE("psi kills the defining relations") {
    for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4", "A1~", "A2~", "C2~", "B3~", "G2~"}) {
        CAPTURE(name);
        auto rz = Realization::for_cartan(preset(name));
        for (const auto& chk : check_relations(rz)) {
            CAPTURE(chk.relation);
            CHECK(chk.ok);
        }
    }
}

TEST_CASE("realizations of relabelled and unsupported matrices") {
    // C2~ with the affine node in the middle
    auto c = CartanMatrix::validate({{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}});
    REQUIRE(c.kind() == CartanKind::UntwistedAffine);
    auto rz = Realization::for_cartan(c);
    for (const auto& chk : check_relations(rz)) CHECK(chk.ok);
    CHECK(filtration_dims(rz, 6).ok());
    CHECK_THROWS_AS(Realization::for_cartan(CartanMatrix::validate({{2, -3}, {-3, 2}})), Error);
    CHECK(Realization::for_cartan(preset("C3")).uses_explicit_sp_basis());
    CHECK(Realization::for_cartan(preset("C2~")).uses_explicit_sp_basis());
    CHECK_FALSE(Realization::for_cartan(preset("B3")).uses_explicit_sp_basis());
}

TEST_CASE("filtration dimensions") {
    CHECK(dims_of("A2", 4) == std::vector<std::size_t>{2, 1, 0, 0});
    CHECK(dims_of("C2", 4) == std::vector<std::size_t>{2, 1, 1, 0});
    CHECK(dims_of("A1~", 4) == std::vector<std::size_t>{2, 1, 2, 1});
    CHECK(dims_of("G2", 6) == std::vector<std::size_t>{2, 1, 1, 1, 1, 0});
    for (const char* name : {"A2", "C2", "G2", "B3", "C3", "A1~", "C2~", "A2~", "G2~"}) {
        CAPTURE(name);
        auto rz = Realization::for_cartan(preset(name));
        unsigned jmax = rz.kind() == RealizationKind::Finite ? static_cast<unsigned>(rz.table().roots().max_height()) + 1 : 6;
        auto rep = filtration_dims(rz, jmax);
        CHECK(rep.ok());
        CHECK(rep.dims[1] == rz.num_generators());
    }
}

TEST_CASE("property: right-nested words suffice") {
    for (const char* name : {"A2", "C2", "G2", "A1~", "C2~"}) {
        CAPTURE(name);
        CHECK(dims_of(name, 4) == dims_of(name, 4, WordMode::AllWords));
    }
}

TEST_CASE("generation check") {
    auto a1 = Realization::for_cartan(preset("A1~"));
    auto rep = generation_check(a1, 4);
    CHECK(rep.rank == 6);
    CHECK(rep.ok());
    for (const char* name : {"A3", "B3", "C3", "G2", "F4"}) {
        CAPTURE(name);
        auto rz = Realization::for_cartan(preset(name));
        auto full = generation_check(rz, static_cast<unsigned>(rz.table().roots().max_height()));
        CHECK(full.rank == rz.table().roots().num_positive());
        CHECK(full.ok());
        auto one = generation_check(rz, 1);
        CHECK(one.rank == rz.num_generators());
        CHECK(one.ok());
    }
    CHECK(generation_check(Realization::for_cartan(preset("C2~")), 7).ok());
}

}  // TEST_SUITE
