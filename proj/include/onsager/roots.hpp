#pragma once

// Finite root systems (positive roots by reflection closure, normalized
// invariant form, coroot coordinates) and positive affine roots of untwisted
// affine type.

#include "onsager/cartan.hpp"
#include "onsager/exact.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace onsager {

/// Integer combination of simple roots.
struct Root {
    std::vector<int> coords;

    Root() = default;
    explicit Root(std::vector<int> c) : coords(std::move(c)) {}
    static Root simple(std::size_t n, std::size_t i);
    static Root zero(std::size_t n) { return Root(std::vector<int>(n, 0)); }

    std::size_t rank() const { return coords.size(); }
    int height() const;
    bool is_zero() const;
    bool is_positive() const;  // nonzero, all coords >= 0
    bool is_negative() const { return (-*this).is_positive(); }

    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator-(const Root& a, const Root& b) { return a + (-b); }
    friend Root operator*(int k, const Root& a);
    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;

    /// "a1+a2", "2a1+a2", "-a3", "0".
    std::string str(int label_base = 1) const;
};

/// Index into RootSystem::root(): ids 0..N-1 are the positive roots in
/// (height, lex) order, id N+k is the negative of positive root k.
using RootId = std::size_t;

class RootSystem {
public:
    /// Enumerates the positive roots by closure under simple reflections.
    /// Throws Error{NotFinite}.
    static RootSystem build(const CartanMatrix& c);

    const CartanMatrix& cartan() const { return cartan_; }
    std::size_t rank() const { return cartan_.size(); }
    std::size_t num_positive() const { return positive_.size(); }
    std::size_t num_roots() const { return 2 * positive_.size(); }
    const std::vector<Root>& positive_roots() const { return positive_; }

    const Root& root(RootId id) const { return all_[id]; }
    std::optional<RootId> find(const Root& r) const;
    /// Throws Error{NotARoot}.
    RootId id_of(const Root& r) const;
    RootId negate(RootId id) const { return id < num_positive() ? id + num_positive() : id - num_positive(); }
    bool is_positive(RootId id) const { return id < num_positive(); }
    bool contains(const Root& r) const { return find(r).has_value(); }
    RootId simple_id(std::size_t i) const { return simple_ids_[i]; }

    /// Normalized invariant form on the root lattice; long roots of every
    /// indecomposable component have squared length 2.
    Rational form(const Root& a, const Root& b) const;
    Rational simple_form(std::size_t i, std::size_t j) const { return simple_form_[i][j]; }
    bool is_long(const Root& a) const { return form(a, a) == Rational(2); }

    /// alpha(h_i) = sum_j r_j(alpha) a_ij.
    int pairing(const Root& alpha, std::size_t i) const;
    /// Simple reflection s_i(alpha) = alpha - alpha(h_i) alpha_i.
    Root reflect(const Root& alpha, std::size_t i) const;

    /// Highest root (of the component containing node 0 when decomposable).
    const Root& highest_root() const { return positive_[highest_]; }
    int max_height() const { return positive_.back().height(); }

    /// k_i(alpha) with h_alpha = sum_i k_i(alpha) h_i:
    /// k_i = r_i (alpha_i,alpha_i) / (alpha,alpha). Throws Error{NotARoot}.
    std::vector<int> coroot_coords(const Root& alpha) const;

private:
    CartanMatrix cartan_;
    std::vector<Root> positive_;
    std::vector<Root> all_;
    std::map<Root, RootId> index_;
    std::vector<RootId> simple_ids_;
    std::vector<std::vector<Rational>> simple_form_;
    std::size_t highest_ = 0;
};

/// alpha + level*delta; real iff the finite part is nonzero.
struct AffineRoot {
    Root finite_part;
    int level = 0;

    bool is_real() const { return !finite_part.is_zero(); }
    bool is_imaginary() const { return finite_part.is_zero() && level != 0; }
    bool is_positive() const { return level > 0 || (level == 0 && finite_part.is_positive()); }
    AffineRoot operator-() const { return {-finite_part, -level}; }
    friend AffineRoot operator+(const AffineRoot& a, const AffineRoot& b) {
        return {a.finite_part + b.finite_part, a.level + b.level};
    }
    friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
    friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;

    /// "a1+2d", "-a1-a2+d", "3d".
    std::string str(int label_base = 1) const;
};

/// Height over the affine simple roots alpha_0..alpha_r, with
/// delta = alpha_0 + theta: ht(alpha + k delta) = ht(alpha) + k (ht(theta)+1).
int affine_height(const RootSystem& finite, const AffineRoot& gamma);

struct AffineRootEntry {
    AffineRoot root;
    int height = 0;
    int multiplicity = 1;
};

/// All positive affine roots of height <= max_height, sorted by
/// (height, level, finite part). Imaginary roots carry multiplicity r.
/// Throws Error{NotAffine}.
std::vector<AffineRootEntry> affine_positive_roots(const CartanMatrix& affine, int max_height);
std::vector<AffineRootEntry> affine_positive_roots(const RootSystem& finite, int max_height);

}  // namespace onsager
