#include "doctest.h"

#include "onsager/exact.hpp"

#include <random>

using namespace onsager;

namespace {

ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<int> sparse(0, 2);
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (sparse(rng) != 0) m.set(i, j, GaussianRational(Rational(val(rng)), Rational(sparse(rng) == 0 ? val(rng) : 0)));
    return m;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("rational normal form") {
    Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("gaussian rational") {
    auto i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(GaussianRational::parse("1/2+3/4i") == GaussianRational(Rational(1, 2), Rational(3, 4)));
    CHECK(GaussianRational::parse("-i") == -i);
    CHECK(GaussianRational::parse("2-i") == GaussianRational(Rational(2), Rational(-1)));
    GaussianRational z(Rational(3), Rational(-2));
    CHECK(z.conj().conj() == z);
    CHECK(z / z == GaussianRational(1));
    CHECK((z * z.conj()).re() == z.norm());
}

TEST_CASE("rank examples") {
    CHECK(rank(ExactMatrix::identity(2)) == 2);
    CHECK(rank(ExactMatrix(3, 4)) == 0);
    CHECK(rank(ExactMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace_basis(ExactMatrix::identity(2)).empty());
    auto ns = nullspace_basis(ExactMatrix::from_rows({{1, 1}}));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == -ns[0][1]);
    CHECK_FALSE(ns[0][0].is_zero());
    CHECK(nullspace_basis(ExactMatrix(1, 2)).size() == 2);
}

TEST_CASE("span rank examples") {
    CHECK(span_rank({{1, 0}, {0, 1}}) == 2);
    CHECK(span_rank({{1, 1}, {2, 2}}) == 1);
    CHECK(span_rank({}) == 0);
}

TEST_CASE("determinant") {
    CHECK(determinant({{2, -1}, {-1, 2}}) == Rational(3));
    CHECK(determinant({{2, -2}, {-2, 2}}) == Rational(0));
    CHECK(determinant({{0, 1}, {1, 0}}) == Rational(-1));
}

TEST_CASE("property: field axioms on rationals") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        Rational again(a.value());
        CHECK(again == a);
        CHECK(again.numerator() == a.numerator());
    }
}

TEST_CASE("property: rank of transpose and rank-nullity") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng, dim(rng), dim(rng));
        CHECK(rank(m) == rank(m.transpose()));
        auto ns = nullspace_basis(m);
        CHECK(rank(m) + ns.size() == m.cols());
        for (const auto& v : ns) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                GaussianRational s;
                for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
                CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("solve") {
    auto m = ExactMatrix::from_rows({{GaussianRational(1), GaussianRational(1)}, {GaussianRational(1), GaussianRational(-1)}});
    auto x = solve(m, {GaussianRational(3), GaussianRational(1)});
    REQUIRE(x);
    CHECK((*x)[0] == GaussianRational(2));
    CHECK((*x)[1] == GaussianRational(1));
    auto singular = ExactMatrix::from_rows({{GaussianRational(1), GaussianRational(2)}, {GaussianRational(2), GaussianRational(4)}});
    CHECK_FALSE(solve(singular, {GaussianRational(1), GaussianRational(0)}));
    CHECK(solve(singular, {GaussianRational(1), GaussianRational(2)}));
}

TEST_CASE("property: solve returns a solution of consistent systems") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng, dim(rng), dim(rng));
        ExactVector x0(m.cols());
        for (auto& v : x0) v = GaussianRational(Rational(val(rng)), Rational(val(rng)));
        ExactVector b(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) b[i] += m.at(i, j) * x0[j];
        auto x = solve(m, b);
        REQUIRE(x);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            GaussianRational s;
            for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * (*x)[j];
            CHECK(s == b[i]);
        }
    }
}

TEST_CASE("matrix algebra") {
    auto e = ExactMatrix::unit(2, 0, 1);
    auto f = ExactMatrix::unit(2, 1, 0);
    auto h = commutator(e, f);
    CHECK(h.is_diagonal());
    CHECK(h.at(0, 0) == GaussianRational(1));
    CHECK(h.at(1, 1) == GaussianRational(-1));
    CHECK(commutator(h, e) == e * GaussianRational(2));
    CHECK((e - e).is_zero());
    CHECK(e.transpose() == f);
}

TEST_CASE("echelon basis") {
    EchelonBasis<Rational> b;
    CHECK(b.insert({{0, Rational(1)}, {3, Rational(2)}}));
    CHECK(b.insert({{3, Rational(1)}}));
    CHECK_FALSE(b.insert({{0, Rational(5)}}));
    CHECK(b.rank() == 2);
    CHECK(b.contains({{0, Rational(1)}, {3, Rational(7)}}));
    CHECK_FALSE(b.contains({{1, Rational(1)}}));
}

}  // TEST_SUITE
