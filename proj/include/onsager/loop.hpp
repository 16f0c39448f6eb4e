#pragma once

// Untwisted affine algebra as Lg + Cc + Cd over a finite-type Chevalley table,
// its Chevalley involution, the integral fix-point basis y_gamma^(i) and the
// closed-form structure constants in that basis.

#include "onsager/chevalley.hpp"

#include <map>
#include <string>
#include <utility>

namespace onsager {

/// x[k] = x (x) t^k for a Chevalley basis element x.
struct LoopKey {
    GIndex g = 0;
    int level = 0;
    friend auto operator<=>(const LoopKey&, const LoopKey&) = default;
};

struct LoopElement {
    std::map<LoopKey, Rational> terms;
    Rational c;
    Rational d;

    static LoopElement basis(GIndex g, int level, Rational coeff = Rational(1));
    static LoopElement central(Rational coeff = Rational(1));
    static LoopElement derivation(Rational coeff = Rational(1));
    static LoopElement from_finite(const ChevElement& x, int level = 0);

    bool is_zero() const { return terms.empty() && c.is_zero() && d.is_zero(); }
    Rational coefficient(GIndex g, int level) const;
    /// Highest |level| among the terms.
    int max_abs_level() const;

    LoopElement& operator+=(const LoopElement& o);
    LoopElement& operator-=(const LoopElement& o);
    friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
    friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
    friend LoopElement operator*(const Rational& s, const LoopElement& a);
    friend bool operator==(const LoopElement&, const LoopElement&) = default;

    std::string str(const StructureTable& t) const;
};

/// [x[k], y[m]] = [x,y][k+m] + k delta_{k,-m} (x,y) c,  [d, x[m]] = m x[m].
LoopElement bracket_loop(const StructureTable& t, const LoopElement& x, const LoopElement& y);
/// Invariant form: (x[k], y[m]) = delta_{k,-m} (x,y), (c,d) = 1.
Rational form_loop(const StructureTable& t, const LoopElement& x, const LoopElement& y);
/// x[k] -> omega(x)[-k], c -> -c, d -> -d.
LoopElement omega_tilde(const StructureTable& t, const LoopElement& x);

/// Index of y_gamma^(i). gamma = alpha + k delta; i is 1 for real roots and
/// 1..r for imaginary ones. Finite realizations only use level 0.
struct AffineFixIndex {
    AffineRoot gamma;
    unsigned i = 1;

    bool is_imaginary() const { return gamma.is_imaginary(); }
    friend bool operator==(const AffineFixIndex&, const AffineFixIndex&) = default;
    friend auto operator<=>(const AffineFixIndex&, const AffineFixIndex&) = default;
    std::string str(int label_base = 1) const;
};

/// Formal Z-combination of y-basis elements, keyed by positive indices.
using YExpansion = std::map<AffineFixIndex, Rational>;

/// y_gamma^(i) for any gamma, so that y_{-gamma} = -y_gamma and y_0 = 0.
/// Throws Error{NotARoot} if gamma is neither a root nor zero, IndexError for a bad i.
LoopElement y_affine(const StructureTable& t, const AffineFixIndex& idx);
LoopElement y_affine(const StructureTable& t, const AffineRoot& gamma, unsigned i = 1);

/// Rewrites an element in the y-basis. Throws Error{NotExpandable} unless x
/// lies in their span (in particular c and d must vanish).
YExpansion to_y_basis(const StructureTable& t, const LoopElement& x);
LoopElement from_y_basis(const StructureTable& t, const YExpansion& e);

/// Adds coeff * y_gamma^(i) to e, folding negative gamma onto -gamma and dropping gamma = 0.
void add_signed(YExpansion& e, const AffineFixIndex& idx, const Rational& coeff);

/// [y_1, y_2] computed in the loop algebra and rewritten in the y-basis.
YExpansion k_bracket_expand(const StructureTable& t, const AffineFixIndex& a, const AffineFixIndex& b);
/// The same bracket from the closed-form structure constants (kappa, k_i(alpha), alpha(h_i)).
YExpansion k_bracket_predict(const StructureTable& t, const AffineFixIndex& a, const AffineFixIndex& b);

std::string expansion_str(const YExpansion& e, int label_base = 1);

/// A_m = y_{alpha_1 + m delta} and G_m = y_{m delta}^(1) over an A_1 table.
struct OnsagerPair {
    LoopElement A;
    LoopElement G;
};
OnsagerPair onsager_basis(const StructureTable& t, int m);

}  // namespace onsager
