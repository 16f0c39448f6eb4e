#pragma once

// One-dimensional representations of the fix-point algebra: functionals on
// the y-basis vanishing on all brackets.

#include "onsager/onsager.hpp"

#include <map>
#include <vector>

namespace onsager {

/// Labels j with a_ij even for every i.
std::vector<int> even_column_set(const CartanMatrix& c);

struct CharacterSpace {
    int H = 0;
    /// Coordinates of the functionals: chi(y) for each y of height <= H.
    std::vector<AffineFixIndex> unknowns;
    std::vector<ExactVector> basis;
    std::size_t constraints = 0;
    std::size_t dimension() const { return basis.size(); }
};

/// Solves chi([u, v]) = 0 over all pairs of y-basis elements of height <= H
/// whose bracket stays in the window. Throws Error{WindowTooSmall} when some
/// y of height < H is never hit by such a bracket (finite types with H at
/// least the maximal height are exempt: there the system is complete).
CharacterSpace character_space(const Realization& rz, int H);
/// H = max height (finite) or 2 ht(delta) + 2 (affine).
int default_character_window(const Realization& rz);

struct Character {
    std::map<int, GaussianRational> generator_values;
    std::map<AffineFixIndex, GaussianRational> values;
};

/// The element of the space with chi(Y_label) = given value (0 for labels not
/// listed). Throws std::invalid_argument if no such functional exists.
Character character_from_generators(const Realization& rz, const CharacterSpace& space,
                                    const std::map<int, GaussianRational>& generator_values);

/// Closed form on C_r: t on long positive roots, 0 on short ones.
/// Throws Error{NotCType}, or Error{NotAPositiveRoot}.
GaussianRational chi_finite(const CartanMatrix& c, const GaussianRational& t, const Root& alpha);
GaussianRational chi_finite(unsigned r, const GaussianRational& t, const Root& alpha);

/// Closed form on C_r~ for y_gamma^(i), any sign of gamma (y_{-gamma} = -y_gamma):
/// alpha long, gamma = +-alpha + 2k delta -> +-t; gamma = -+alpha + (2k+1) delta -> +-s;
/// short roots and imaginary roots -> 0. Throws Error{NotCAffine} or Error{NotARoot}.
GaussianRational chi_affine(const CartanMatrix& c, const GaussianRational& s, const GaussianRational& t,
                            const AffineRoot& gamma, unsigned i = 1);
GaussianRational chi_affine(unsigned r, const GaussianRational& s, const GaussianRational& t, const AffineRoot& gamma,
                            unsigned i = 1);

}  // namespace onsager
