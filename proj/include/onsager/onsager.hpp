#pragma once

// Generalized Onsager algebra L(A) through its image in the fix-point
// algebra: relations, the evaluation map psi(B_i) = Y_i, the filtration by
// word length and the generation check.

#include "onsager/cartan.hpp"
#include "onsager/freelie.hpp"
#include "onsager/loop.hpp"

#include <memory>
#include <vector>

namespace onsager {

enum class RealizationKind { Finite, Affine };

/// k(A) inside g(A) (finite type) or inside the loop algebra of the finite
/// part (untwisted affine type). Finite elements are level-0 loop elements.
class Realization {
public:
    /// Throws Error{NotAffine} for matrices that are neither finite nor
    /// untwisted affine. Type C (finite part C_r) uses the explicit sp_r basis.
    static Realization for_cartan(const CartanMatrix& c);

    RealizationKind kind() const { return kind_; }
    const CartanMatrix& cartan() const { return cartan_; }
    /// Chevalley table of g (finite) or of the finite part (affine).
    const StructureTable& table() const { return *table_; }
    std::shared_ptr<const StructureTable> table_ptr() const { return table_; }
    bool uses_explicit_sp_basis() const { return explicit_sp_; }

    std::size_t num_generators() const { return cartan_.size(); }
    int label_base() const { return cartan_.label_base(); }
    /// Label used when printing finite roots: affine finite parts keep 1..r.
    int root_label_base() const { return 1; }

    /// y-index of Y_label. Throws Error{IndexError}.
    AffineFixIndex generator_index(int label) const;
    LoopElement generator(int label) const { return y(generator_index(label)); }
    LoopElement y(const AffineFixIndex& idx) const { return y_affine(*table_, idx); }

    /// Height over the generators; imaginary k delta has height k ht(delta).
    int height(const AffineFixIndex& idx) const;
    /// ht(delta) (affine only, 0 for finite).
    int delta_height() const;
    /// Positive y-basis indices of height <= H, sorted by height.
    std::vector<AffineFixIndex> fix_basis(int H) const;
    /// Number of y-basis elements of height exactly j.
    std::size_t basis_count_at(int j) const;

private:
    RealizationKind kind_ = RealizationKind::Finite;
    CartanMatrix cartan_;
    std::shared_ptr<const StructureTable> table_;
    bool explicit_sp_ = false;
    std::vector<AffineFixIndex> gens_;
};

/// One inhomogeneous Serre relation per ordered pair of distinct labels.
struct LabelledRelation {
    int i = 0;
    int j = 0;
    FreeLieElement relation;
};
std::vector<LabelledRelation> relations(const CartanMatrix& c);

/// Homomorphic evaluation B_i -> Y_i. Throws Error{IndexError}.
LoopElement psi_eval(const Realization& rz, const BracketExpr& e);
LoopElement psi_eval(const Realization& rz, const FreeLieElement& x);

struct RelationCheck {
    int i = 0;
    int j = 0;
    std::string relation;
    std::string image;
    bool ok = false;
    friend bool operator==(const RelationCheck&, const RelationCheck&) = default;
};
/// psi of every relation, which must vanish.
std::vector<RelationCheck> check_relations(const Realization& rz);

enum class WordMode { RightNested, AllWords };

struct FiltrationReport {
    unsigned jmax = 0;
    /// Index 0 is unused; dims[j] = dim L_j - dim L_{j-1}.
    std::vector<std::size_t> dims;
    std::vector<std::size_t> expected;
    bool ok() const { return dims == expected; }
    friend bool operator==(const FiltrationReport&, const FiltrationReport&) = default;
};
FiltrationReport filtration_dims(const Realization& rz, unsigned jmax, WordMode mode = WordMode::RightNested);

struct GenerationReport {
    unsigned H = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool contained = false;
    bool ok() const { return contained && rank == expected; }
    friend bool operator==(const GenerationReport&, const GenerationReport&) = default;
};
/// Words of length <= H span exactly the y_gamma^(i) with ht(gamma) <= H.
GenerationReport generation_check(const Realization& rz, unsigned H);

}  // namespace onsager
