#include "doctest.h"

#include "onsager/chevalley.hpp"
#include "onsager/error.hpp"

#include <random>

using namespace onsager;

namespace {

Root R(std::vector<int> c) { return Root(std::move(c)); }

// Root with given eps-coordinates in C_r.
Root c_root(std::vector<int> eps) {
    const std::size_t r = eps.size();
    // invert c_type_eps: coefficient of alpha_j is eps_1 + ... + eps_j for j < r,
    // and half the total for alpha_r
    std::vector<int> coords(r, 0);
    int partial = 0;
    for (std::size_t j = 0; j + 1 < r; ++j) {
        partial += eps[j];
        coords[j] = partial;
    }
    coords[r - 1] = (partial + eps[r - 1]) / 2;
    return Root(coords);
}

ChevElement jacobi(const StructureTable& t, GIndex a, GIndex b, GIndex c) {
    auto x = ChevElement::basis(a), y = ChevElement::basis(b), z = ChevElement::basis(c);
    return bracket_g(t, x, bracket_g(t, y, z)) + bracket_g(t, y, bracket_g(t, z, x)) + bracket_g(t, z, bracket_g(t, x, y));
}

ChevElement random_element(std::mt19937& rng, const StructureTable& t) {
    std::uniform_int_distribution<GIndex> idx(0, t.dim() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    ChevElement x;
    for (int k = 0; k < 3; ++k) x += ChevElement::basis(idx(rng), Rational(coeff(rng)));
    return x;
}

}  // namespace

TEST_SUITE("chevalley") {

TEST_CASE("structure constant examples") {
    auto a2 = StructureTable::build(preset("A2"));
    const auto& rs = a2.roots();
    CHECK(std::abs(a2.N(rs.id_of(R({1, 0})), rs.id_of(R({0, 1})))) == 1);
    auto c2 = StructureTable::build(preset("C2"));
    const auto& cs = c2.roots();
    CHECK(std::abs(c2.N(cs.id_of(R({1, 0})), cs.id_of(R({1, 1})))) == 2);
    CHECK_THROWS_AS(StructureTable::build(preset("A1~")), Error);
}

TEST_CASE("brackets with Cartan elements") {
    auto t = StructureTable::build(preset("C3"));
    const auto& A = t.roots().cartan();
    CHECK(bracket_g(t, h_elem(t, 0), e_simple(t, 1)) == Rational(A(0, 1)) * e_simple(t, 1));
    CHECK(bracket_g(t, e_simple(t, 0), f_simple(t, 0)) == h_elem(t, 0));
    CHECK(bracket_g(t, e_simple(t, 0), f_simple(t, 1)).is_zero());
    // [e_alpha, e_-alpha] = h_alpha = sum k_i h_i
    for (RootId id = 0; id < t.roots().num_positive(); ++id) {
        const Root& a = t.roots().root(id);
        ChevElement h;
        auto k = t.roots().coroot_coords(a);
        for (std::size_t i = 0; i < k.size(); ++i) h += Rational(k[i]) * h_elem(t, i);
        CHECK(bracket_g(t, e_elem(t, a), e_elem(t, -a)) == h);
    }
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = random_element(rng, t);
        CHECK(bracket_g(t, x, x).is_zero());
    }
}

TEST_CASE("property: N-table laws, magnitudes and Jacobi") {
    for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"}) {
        CAPTURE(name);
        auto t = StructureTable::build(preset(name));
        const auto& rs = t.roots();
        for (RootId a = 0; a < rs.num_roots(); ++a)
            for (RootId b = 0; b < rs.num_roots(); ++b) {
                int n = t.N(a, b);
                CHECK(n == -t.N(b, a));
                CHECK(t.N(rs.negate(a), rs.negate(b)) == -n);
                if (t.sum(a, b)) {
                    int p = 0;
                    while (rs.contains(rs.root(b) - (p + 1) * rs.root(a))) ++p;
                    CHECK(std::abs(n) == p + 1);
                } else {
                    CHECK(n == 0);
                }
            }
        std::mt19937 rng(42);
        std::uniform_int_distribution<GIndex> idx(0, t.dim() - 1);
        bool small = t.dim() <= 40;
        if (small) {
            for (GIndex a = 0; a < t.dim(); ++a)
                for (GIndex b = a + 1; b < t.dim(); ++b)
                    for (GIndex c = b + 1; c < t.dim(); ++c) CHECK(jacobi(t, a, b, c).is_zero());
        } else {
            for (int trial = 0; trial < 20000; ++trial) CHECK(jacobi(t, idx(rng), idx(rng), idx(rng)).is_zero());
        }
    }
}

TEST_CASE("property: E-types Jacobi on samples") {
    for (const char* name : {"E6", "E7"}) {
        auto t = StructureTable::build(preset(name));
        std::mt19937 rng(11);
        std::uniform_int_distribution<GIndex> idx(0, t.dim() - 1);
        for (int trial = 0; trial < 5000; ++trial) CHECK(jacobi(t, idx(rng), idx(rng), idx(rng)).is_zero());
    }
}

TEST_CASE("property: omega is an involutive automorphism and the form is invariant") {
    for (const char* name : {"A3", "B3", "C3", "G2", "D4"}) {
        CAPTURE(name);
        auto t = StructureTable::build(preset(name));
        for (GIndex a = 0; a < t.dim(); ++a) {
            auto x = ChevElement::basis(a);
            CHECK(omega(t, omega(t, x)) == x);
            for (GIndex b = 0; b < t.dim(); ++b) {
                auto y = ChevElement::basis(b);
                CHECK(omega(t, bracket_g(t, x, y)) == bracket_g(t, omega(t, x), omega(t, y)));
                CHECK(t.form(a, b) == t.form(b, a));
            }
        }
        CHECK(omega(t, h_elem(t, 0)) == Rational(-1) * h_elem(t, 0));
        CHECK(omega(t, e_simple(t, 0)) == Rational(-1) * f_simple(t, 0));
        std::mt19937 rng(3);
        for (int trial = 0; trial < 300; ++trial) {
            auto x = random_element(rng, t), y = random_element(rng, t), z = random_element(rng, t);
            CHECK(form_g(t, bracket_g(t, x, y), z) + form_g(t, y, bracket_g(t, x, z)) == Rational(0));
        }
    }
}

TEST_CASE("fix-point basis") {
    for (const char* name : {"A2", "B3", "C3", "G2"}) {
        CAPTURE(name);
        auto t = StructureTable::build(preset(name));
        const auto& rs = t.roots();
        for (std::size_t i = 0; i < rs.rank(); ++i)
            CHECK(y_basis(t, Root::simple(rs.rank(), i)) == e_simple(t, i) - f_simple(t, i));
        for (const auto& a : rs.positive_roots()) {
            CHECK(omega(t, y_basis(t, a)) == y_basis(t, a));
            for (const auto& b : rs.positive_roots()) {
                if (a == b) continue;
                RootId ia = rs.id_of(a), ib = rs.id_of(b), mb = rs.negate(ib);
                ChevElement expect;
                if (t.sum(ia, ib)) expect += Rational(t.N(ia, ib)) * y_any(t, a + b);
                if (t.sum(ia, mb)) expect -= Rational(t.N(ia, mb)) * y_any(t, a - b);
                CHECK(bracket_g(t, y_basis(t, a), y_basis(t, b)) == expect);
            }
        }
        CHECK_THROWS_AS(y_basis(t, -rs.positive_roots()[0]), Error);
    }
}

TEST_CASE("property: identity relating Y-brackets to e/f brackets") {
    for (const char* name : {"A1", "A2", "A3", "B3", "C2", "C3", "G2"}) {
        CAPTURE(name);
        auto t = StructureTable::build(preset(name));
        const auto& A = t.roots().cartan();
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < A.size(); ++j) {
                if (i == j) continue;
                for (int r = 0; r <= 2 - A(i, j); ++r) {
                    auto [lhs, rhs] = almost_relation_sides(t, i, j, static_cast<unsigned>(r));
                    CHECK(lhs == rhs);
                }
            }
    }
}

TEST_CASE("sl realization") {
    auto one = sl_realization(1);
    CHECK(one.image(e_simple(one.table(), 0)) == ExactMatrix::unit(2, 0, 1));
    for (unsigned r = 1; r <= 3; ++r) {
        CAPTURE(r);
        auto sl = sl_realization(r);
        const auto& t = sl.table();
        CHECK(sl.homomorphism_failures().empty());
        for (GIndex g = 0; g < t.dim(); ++g) {
            auto x = ChevElement::basis(g);
            CHECK(sl.image(omega(t, x)) == -sl.image(x).transpose());
            if (t.is_h(g)) CHECK(sl.image(x).is_diagonal());
        }
        for (std::size_t i = 0; i < r; ++i) {
            ExactMatrix Y = sl.image(y_basis(t, Root::simple(r, i)));
            CHECK(Y == ExactMatrix::unit(r + 1, i, i + 1) - ExactMatrix::unit(r + 1, i + 1, i));
            CHECK(Y.transpose() == -Y);
        }
        // Serre relations as matrices
        const auto& A = t.roots().cartan();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                if (i == j) continue;
                ExactMatrix e = sl.image(e_simple(t, j)), f = sl.image(f_simple(t, j));
                for (int s = 0; s < 1 - A(i, j); ++s) {
                    e = commutator(sl.image(e_simple(t, i)), e);
                    f = commutator(sl.image(f_simple(t, i)), f);
                }
                CHECK(e.is_zero());
                CHECK(f.is_zero());
            }
        for (const auto& a : t.roots().positive_roots()) {
            ExactMatrix Y = sl.image(y_basis(t, a));
            CHECK(Y.transpose() == -Y);
        }
    }
}

TEST_CASE("sp realization") {
    for (unsigned r = 1; r <= 3; ++r) {
        CAPTURE(r);
        auto sp = sp_realization(r);
        const auto& t = sp.table();
        CHECK(sp.homomorphism_failures().empty());
        ExactMatrix hr = ExactMatrix::unit(2 * r, r - 1, r - 1) - ExactMatrix::unit(2 * r, 2 * r - 1, 2 * r - 1);
        CHECK(sp.image(h_elem(t, r - 1)) == hr);
        std::vector<int> eps(r, 0);
        eps[r - 1] = 2;
        Root two_eps_r = c_root(eps);
        CHECK(two_eps_r == Root::simple(r, r - 1));
        CHECK(commutator(sp.image(e_elem(t, two_eps_r)), sp.image(e_elem(t, -two_eps_r))) == hr);
        for (GIndex g = 0; g < t.dim(); ++g) {
            auto x = ChevElement::basis(g);
            CHECK(sp.image(omega(t, x)) == -sp.image(x).transpose());
        }
        for (const auto& a : t.roots().positive_roots()) {
            ExactMatrix Y = sp.image(y_basis(t, a));
            ExactMatrix B = Y.block(0, 0, r, r), C = Y.block(0, r, r, r);
            CHECK(Y.block(r, 0, r, r) == -C);
            CHECK(Y.block(r, r, r, r) == B);
            CHECK(B.transpose() == -B);
            CHECK(C.transpose() == C);
        }
        // the explicit matrices realize the extraspecial-pair signs unchanged
        auto generic = StructureTable::build(preset("C" + std::to_string(r)));
        CHECK(t.entries() == generic.entries());
    }
}

TEST_CASE("eta") {
    for (unsigned r = 1; r <= 3; ++r) {
        CAPTURE(r);
        auto sp = sp_realization(r);
        const auto& t = sp.table();
        const auto I = GaussianRational::i();
        CHECK(eta(sp, y_basis(t, Root::simple(r, r - 1))) == ExactMatrix::unit(r, r - 1, r - 1) * I);
        for (std::size_t j = 0; j + 1 < r; ++j)
            CHECK(eta(sp, y_basis(t, Root::simple(r, j))) == ExactMatrix::unit(r, j, j + 1) - ExactMatrix::unit(r, j + 1, j));
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = j + 1; k < r; ++k) {
                std::vector<int> minus(r, 0), plus(r, 0);
                minus[j] = 1, minus[k] = -1, plus[j] = 1, plus[k] = 1;
                CHECK(eta(sp, y_basis(t, c_root(minus))) == ExactMatrix::unit(r, j, k) - ExactMatrix::unit(r, k, j));
                CHECK(eta(sp, y_basis(t, c_root(plus))) == (ExactMatrix::unit(r, j, k) + ExactMatrix::unit(r, k, j)) * I);
            }
        for (std::size_t l = 0; l < r; ++l) {
            std::vector<int> e(r, 0);
            e[l] = 2;
            CHECK(eta(sp, y_basis(t, c_root(e))) == ExactMatrix::unit(r, l, l) * I);
        }
        for (const auto& a : t.roots().positive_roots())
            for (const auto& b : t.roots().positive_roots()) {
                auto ya = y_basis(t, a), yb = y_basis(t, b);
                CHECK(eta(sp, bracket_g(t, ya, yb)) == commutator(eta(sp, ya), eta(sp, yb)));
            }
        CHECK_THROWS_AS(eta(sp, e_simple(t, 0)), Error);
    }
}

TEST_CASE("kappa values in the explicit sp basis") {
    for (unsigned r = 2; r <= 4; ++r) {
        auto t = c_type_explicit_table(r);
        const auto& rs = t.roots();
        for (std::size_t j = 1; j < r; ++j) {
            std::vector<int> beta(r, 0), gamma(r, 0);
            beta[j - 1] = -1, beta[j] = -1;
            gamma[j - 1] = 1, gamma[j] = -1;
            RootId b = rs.id_of(c_root(beta)), g = rs.id_of(c_root(gamma));
            CHECK(t.N(b, g) == 2);
            CHECK(t.N(b, rs.negate(g)) == 2);
        }
    }
}

TEST_CASE("gl presentation") {
    for (unsigned r = 2; r <= 4; ++r) {
        auto rep = verify_gl_presentation(r);
        CAPTURE(r);
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("dimension of the fix-point algebra") {
    for (unsigned r = 1; r <= 5; ++r) {
        auto t = StructureTable::build(preset("A" + std::to_string(r)));
        CHECK(t.roots().num_positive() == r * (r + 1) / 2);  // dim so_{r+1}
        auto c = StructureTable::build(preset("C" + std::to_string(r)));
        CHECK(c.roots().num_positive() == r * r);  // dim gl_r
    }
}

}  // TEST_SUITE
