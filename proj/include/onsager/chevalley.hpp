#pragma once

// Finite-type Lie algebra g(A) in a Chevalley basis {h_i, e_alpha}, the
// Chevalley involution, the fix-point basis y_alpha, matrix realizations for
// sl_{r+1} and sp_r, and the map eta from the sp_r fix-point algebra to gl_r.

#include "onsager/exact.hpp"
#include "onsager/roots.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace onsager {

/// Basis index into g: 0..r-1 are h_1..h_r, r + id is e_{root(id)}.
using GIndex = std::size_t;

class StructureTable {
public:
    /// Signs by extraspecial pairs: within each height, positive roots are
    /// ordered as in RootSystem; for every non-simple positive xi, the pair
    /// (alpha, beta) with alpha minimal gets N = +(p+1). Throws Error{NotFinite}.
    static StructureTable build(const CartanMatrix& c);

    const RootSystem& roots() const { return rs_; }
    std::size_t rank() const { return rs_.rank(); }
    std::size_t dim() const { return rs_.rank() + rs_.num_roots(); }

    GIndex h_index(std::size_t i) const { return i; }
    GIndex e_index(RootId id) const { return rs_.rank() + id; }
    bool is_h(GIndex g) const { return g < rs_.rank(); }
    RootId root_of(GIndex g) const { return g - rs_.rank(); }

    /// N_{alpha,beta}, zero unless alpha + beta is a root.
    int N(RootId a, RootId b) const { return n_[a * rs_.num_roots() + b]; }
    /// Id of alpha + beta when it is a root.
    std::optional<RootId> sum(RootId a, RootId b) const {
        long s = sum_[a * rs_.num_roots() + b];
        return s < 0 ? std::nullopt : std::optional<RootId>(static_cast<RootId>(s));
    }
    /// k_i(alpha) with [e_alpha, e_-alpha] = sum_i k_i h_i.
    const std::vector<int>& coroot(RootId a) const { return coroot_[a]; }

    /// Table for the basis e'_alpha = sigma[alpha] e_alpha (sigma = +-1,
    /// sigma[-alpha] = sigma[alpha]).
    StructureTable resigned(const std::vector<int>& sigma) const;

    /// Invariant form on basis elements: (h_i,h_j) = 4(a_i,a_j)/((a_i,a_i)(a_j,a_j)),
    /// (e_alpha, e_-alpha) = 2/(alpha,alpha).
    Rational form(GIndex a, GIndex b) const;

    struct Entry {
        Root alpha;
        Root beta;
        int n = 0;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    /// Every nonzero N_{alpha,beta}, ordered by (alpha, beta) root ids.
    std::vector<Entry> entries() const;

    /// Name of basis element: "h1", "e(a1+a2)", "e(-a1)".
    std::string basis_name(GIndex g) const;

private:
    RootSystem rs_;
    std::vector<int> n_;
    std::vector<long> sum_;
    std::vector<std::vector<int>> coroot_;
};

/// Sparse combination of basis elements of g.
struct ChevElement {
    SparseVector<Rational> terms;

    static ChevElement basis(GIndex g, Rational c = Rational(1));
    bool is_zero() const { return terms.empty(); }
    Rational coefficient(GIndex g) const;

    ChevElement& operator+=(const ChevElement& o);
    ChevElement& operator-=(const ChevElement& o);
    friend ChevElement operator+(ChevElement a, const ChevElement& b) { return a += b; }
    friend ChevElement operator-(ChevElement a, const ChevElement& b) { return a -= b; }
    friend ChevElement operator*(const Rational& s, const ChevElement& a);
    friend bool operator==(const ChevElement&, const ChevElement&) = default;

    std::string str(const StructureTable& t) const;
};

/// [x, y] for basis elements, as (index, coefficient) pairs.
std::vector<std::pair<GIndex, Rational>> bracket_basis(const StructureTable& t, GIndex a, GIndex b);
ChevElement bracket_g(const StructureTable& t, const ChevElement& x, const ChevElement& y);
/// h -> -h, e_alpha -> -e_-alpha.
ChevElement omega(const StructureTable& t, const ChevElement& x);
GIndex omega_index(const StructureTable& t, GIndex g);
Rational form_g(const StructureTable& t, const ChevElement& x, const ChevElement& y);

ChevElement h_elem(const StructureTable& t, std::size_t i);
ChevElement e_elem(const StructureTable& t, const Root& alpha);
/// e_i and f_i for the simple root alpha_i (0-based i).
ChevElement e_simple(const StructureTable& t, std::size_t i);
ChevElement f_simple(const StructureTable& t, std::size_t i);
/// y_alpha = e_alpha - e_-alpha. Throws Error{NotAPositiveRoot}.
ChevElement y_basis(const StructureTable& t, const Root& alpha);
/// y_alpha for any root, so that y_{-alpha} = -y_alpha.
ChevElement y_any(const StructureTable& t, const Root& alpha);

/// sum_{s=0}^{r} c_s[r] (ad Y_i)^s Y_j and (ad e_i)^r e_j + (-1)^{r-1} (ad f_i)^r f_j
/// for simple roots i != j (0-based).
std::pair<ChevElement, ChevElement> almost_relation_sides(const StructureTable& t, std::size_t i, std::size_t j, unsigned r);

/// Images of the Chevalley basis under a faithful matrix representation.
class MatrixRealization {
public:
    MatrixRealization(std::shared_ptr<const StructureTable> table, std::vector<ExactMatrix> images);

    const StructureTable& table() const { return *table_; }
    std::shared_ptr<const StructureTable> table_ptr() const { return table_; }
    std::size_t dim() const { return images_.front().rows(); }
    const ExactMatrix& image(GIndex g) const { return images_[g]; }
    ExactMatrix image(const ChevElement& x) const;

    /// Basis pairs (a, b) with image([a,b]) != [image a, image b].
    std::vector<std::pair<GIndex, GIndex>> homomorphism_failures() const;

private:
    std::shared_ptr<const StructureTable> table_;
    std::vector<ExactMatrix> images_;
};

/// Images of all e_alpha generated from given images of h_i, e_i, f_i by
/// bracketing along positive decompositions.
std::vector<ExactMatrix> extend_from_simple(const StructureTable& t, const std::vector<ExactMatrix>& h,
                                            const std::vector<ExactMatrix>& e, const std::vector<ExactMatrix>& f);

/// Signs sigma with target(alpha) = sigma[alpha] * phi(e_alpha), where phi is
/// the homomorphism determined by phi(e_{+-alpha_i}) = target(+-alpha_i).
/// Throws std::logic_error if the target is not of that form.
std::vector<int> reconcile_signs(const StructureTable& t, const std::function<ExactMatrix(RootId)>& target);

/// (r+1)x(r+1) realization of A_r: e_i = E_{i,i+1}, f_i = E_{i+1,i}, remaining
/// root vectors by brackets along extraspecial pairs of the generic table.
MatrixRealization sl_realization(unsigned r);

/// eps-coordinates of a root of C_r (alpha_j = eps_j - eps_{j+1}, alpha_r = 2 eps_r).
std::vector<int> c_type_eps(const Root& alpha);
/// The explicit 2r x 2r sp_r matrix attached to a root of C_r.
ExactMatrix sp_root_matrix(unsigned r, const Root& alpha);
/// Generic table for C_r re-signed to the basis of the explicit sp_r matrices.
StructureTable c_type_explicit_table(unsigned r);
/// 2r x 2r realization of C_r by the explicit sp_r matrices; its table is
/// c_type_explicit_table(r).
MatrixRealization sp_realization(unsigned r);

/// eta(B C; -C B) = B + iC on the image of x in sp_realization.
/// Throws Error{NotFixed} unless omega(x) = x.
ExactMatrix eta(const MatrixRealization& sp, const ChevElement& x);

struct GlPresentationReport {
    unsigned r = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Builds K_1..K_r from eta, checks K_r = (i/r)(Z - sum_j j eta(h_j)) and the
/// four families of gl_r relations.
GlPresentationReport verify_gl_presentation(unsigned r);

}  // namespace onsager
