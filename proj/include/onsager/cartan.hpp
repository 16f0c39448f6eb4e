#pragma once

// Generalized Cartan matrices: validation, minimal symmetrizers,
// finite / untwisted-affine classification and named presets.
//
// Convention throughout the library: a_ij = alpha_j(h_i), so the row of a
// short simple root carries the large off-diagonal entry. For C_r the last
// node is the long root and a_{r-1,r} = -2.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace onsager {

using IntMatrix = std::vector<std::vector<int>>;

enum class CartanKind { Finite, UntwistedAffine, Other };

const char* to_string(CartanKind kind);

class CartanMatrix {
public:
    /// Checks the GCM axioms, computes the minimal symmetrizer and classifies.
    /// Throws Error{NotGCM} or Error{NotSymmetrizable}.
    static CartanMatrix validate(IntMatrix a);

    std::size_t size() const { return a_.size(); }
    int operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
    const IntMatrix& entries() const { return a_; }
    const std::vector<int>& symmetrizer() const { return d_; }
    CartanKind kind() const { return kind_; }
    /// Preset-style name ("A2", "G2", "C2~") when the matrix is isomorphic to
    /// an indecomposable finite or untwisted affine preset; empty otherwise.
    const std::string& type_name() const { return type_name_; }

    /// Generators are labelled 0..n-1 for untwisted affine matrices and 1..n
    /// otherwise.
    int label_base() const { return kind_ == CartanKind::UntwistedAffine ? 0 : 1; }
    /// Matrix row of a generator label; throws Error{IndexError}.
    std::size_t index_of_label(int label) const;
    int label_of_index(std::size_t i) const { return static_cast<int>(i) + label_base(); }

    /// Row index of the affine node alpha_0 (untwisted affine only).
    std::optional<std::size_t> affine_node() const { return affine_node_; }
    /// Row indices of the remaining nodes, in matrix order.
    std::vector<std::size_t> finite_nodes() const;
    /// The finite Cartan matrix obtained by deleting the affine node.
    /// Throws Error{NotAffine}.
    CartanMatrix finite_part() const;

    friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.a_ == b.a_; }

private:
    IntMatrix a_;
    std::vector<int> d_;
    CartanKind kind_ = CartanKind::Other;
    std::string type_name_;
    std::optional<std::size_t> affine_node_;
};

/// Minimal positive integer d with diag(d)*a symmetric (coprime per
/// indecomposable component). Throws Error{NotSymmetrizable}.
std::vector<int> symmetrizer(const IntMatrix& a);

/// "A1".."A12", "B2".., "C1".., "D4".., "E6", "E7", "E8", "F4", "G2", and the
/// same names with a "~" suffix for the untwisted affine extension (affine
/// node first, labelled 0). Throws Error{UnknownPreset}.
CartanMatrix preset(std::string_view name);
/// Representative list of supported preset names (ranks up to 8).
std::vector<std::string> preset_names();

/// One row per line, whitespace-separated integers; blank lines and lines
/// starting with '#' are ignored. Throws Error{MatrixFormat}.
IntMatrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const IntMatrix& a);

}  // namespace onsager
