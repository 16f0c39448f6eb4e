#include "onsager/characters.hpp"

#include "onsager/error.hpp"
#include "onsager/parallel.hpp"

#include <set>
#include <stdexcept>

namespace onsager {

std::vector<int> even_column_set(const CartanMatrix& c) {
    std::vector<int> out;
    for (std::size_t j = 0; j < c.size(); ++j) {
        bool even = true;
        for (std::size_t i = 0; i < c.size(); ++i) even = even && c(i, j) % 2 == 0;
        if (even) out.push_back(c.label_of_index(j));
    }
    return out;
}

int default_character_window(const Realization& rz) {
    if (rz.kind() == RealizationKind::Finite) return rz.table().roots().max_height();
    return 2 * rz.delta_height() + 2;
}

CharacterSpace character_space(const Realization& rz, int H) {
    CharacterSpace space;
    space.H = H;
    space.unknowns = rz.fix_basis(H);
    const std::size_t n = space.unknowns.size();
    std::map<AffineFixIndex, std::size_t> col;
    for (std::size_t k = 0; k < n; ++k) col.emplace(space.unknowns[k], k);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    auto brackets = parallel_map<YExpansion>(pairs.size(), [&](std::size_t k) {
        return k_bracket_expand(rz.table(), space.unknowns[pairs[k].first], space.unknowns[pairs[k].second]);
    });

    EchelonBasis<Rational> rows;
    std::set<std::size_t> hit;
    for (const auto& e : brackets) {
        if (e.empty()) continue;
        SparseVector<Rational> row;
        bool inside = true;
        for (const auto& [idx, c] : e) {
            auto it = col.find(idx);
            if (it == col.end()) {
                inside = false;
                break;
            }
            row[static_cast<std::int64_t>(it->second)] = c;
        }
        if (!inside) continue;
        ++space.constraints;
        for (const auto& [k, c] : row) hit.insert(static_cast<std::size_t>(k));
        rows.insert(std::move(row));
    }

    bool complete = rz.kind() == RealizationKind::Finite && H >= rz.table().roots().max_height();
    if (!complete)
        for (std::size_t k = 0; k < n; ++k)
            if (rz.height(space.unknowns[k]) < H && !hit.count(k))
                throw Error(ErrorCode::WindowTooSmall, space.unknowns[k].str(rz.label_base()) + " is not constrained at H = " + std::to_string(H));

    ExactMatrix m(rows.rank(), n);
    for (std::size_t i = 0; i < rows.rank(); ++i)
        for (const auto& [k, c] : rows.rows()[i]) m.set(i, static_cast<std::size_t>(k), GaussianRational(c));
    space.basis = nullspace_basis(m);
    return space;
}

Character character_from_generators(const Realization& rz, const CharacterSpace& space,
                                    const std::map<int, GaussianRational>& generator_values) {
    const std::size_t g = rz.num_generators();
    std::map<AffineFixIndex, std::size_t> col;
    for (std::size_t k = 0; k < space.unknowns.size(); ++k) col.emplace(space.unknowns[k], k);
    ExactMatrix m(g, space.dimension());
    ExactVector rhs(g);
    Character chi;
    for (std::size_t p = 0; p < g; ++p) {
        int label = rz.cartan().label_of_index(p);
        auto it = col.find(rz.generator_index(label));
        if (it == col.end()) throw std::invalid_argument("generator outside the character window");
        for (std::size_t b = 0; b < space.dimension(); ++b) m.set(p, b, space.basis[b][it->second]);
        auto v = generator_values.find(label);
        rhs[p] = v == generator_values.end() ? GaussianRational() : v->second;
    }
    for (const auto& kv : generator_values) (void)rz.cartan().index_of_label(kv.first);
    auto x = solve(m, rhs);
    if (!x) throw std::invalid_argument("no character with the requested generator values");
    for (std::size_t k = 0; k < space.unknowns.size(); ++k) {
        GaussianRational v;
        for (std::size_t b = 0; b < space.dimension(); ++b) v += (*x)[b] * space.basis[b][k];
        chi.values.emplace(space.unknowns[k], v);
    }
    for (std::size_t p = 0; p < g; ++p) {
        int label = rz.cartan().label_of_index(p);
        chi.generator_values.emplace(label, chi.values.at(rz.generator_index(label)));
    }
    return chi;
}

namespace {

bool is_long_c(const Root& alpha) {
    for (int e : c_type_eps(alpha))
        if (e == 2 || e == -2) return true;
    return false;
}

}  // namespace

GaussianRational chi_finite(const CartanMatrix& c, const GaussianRational& t, const Root& alpha) {
    if (c.kind() != CartanKind::Finite || c.entries() != preset("C" + std::to_string(c.size())).entries())
        throw Error(ErrorCode::NotCType, "closed-form characters need type C_r");
    if (alpha.rank() != c.size() || !alpha.is_positive() || !RootSystem::build(c).contains(alpha))
        throw Error(ErrorCode::NotAPositiveRoot, alpha.str() + " is not a positive root");
    return is_long_c(alpha) ? t : GaussianRational();
}

GaussianRational chi_finite(unsigned r, const GaussianRational& t, const Root& alpha) {
    if (r == 0) throw Error(ErrorCode::NotCType, "rank 0");
    return chi_finite(preset("C" + std::to_string(r)), t, alpha);
}

GaussianRational chi_affine(const CartanMatrix& c, const GaussianRational& s, const GaussianRational& t,
                            const AffineRoot& gamma, unsigned i) {
    const std::size_t r = c.size() - 1;
    if (c.kind() != CartanKind::UntwistedAffine || r == 0 || c.entries() != preset("C" + std::to_string(r) + "~").entries())
        throw Error(ErrorCode::NotCAffine, "closed-form characters need type C_r~");
    if (gamma.finite_part.rank() != r) throw Error(ErrorCode::NotARoot, "rank mismatch");
    if (gamma.finite_part.is_zero()) {
        if (i < 1 || i > r) throw Error(ErrorCode::IndexError, "imaginary multiplicity index " + std::to_string(i));
        return {};
    }
    if (!RootSystem::build(c.finite_part()).contains(gamma.finite_part))
        throw Error(ErrorCode::NotARoot, gamma.finite_part.str() + " is not a root");
    if (!is_long_c(gamma.finite_part)) return {};
    const bool positive = gamma.finite_part.is_positive();
    if (gamma.level % 2 == 0) return positive ? t : -t;
    return positive ? -s : s;
}

GaussianRational chi_affine(unsigned r, const GaussianRational& s, const GaussianRational& t, const AffineRoot& gamma,
                            unsigned i) {
    if (r == 0) throw Error(ErrorCode::NotCAffine, "rank 0");
    return chi_affine(preset("C" + std::to_string(r) + "~"), s, t, gamma, i);
}

}  // namespace onsager
