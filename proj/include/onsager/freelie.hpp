#pragma once

// Free Lie algebra over Q on generators B_i, in the Lyndon basis.

#include "onsager/exact.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace onsager {

/// Word over generator labels; letters compare as integers.
using Word = std::vector<int>;

bool is_lyndon(const Word& w);
/// Lyndon words of the given length over `letters` (sorted, distinct), in
/// lexicographic order.
std::vector<Word> lyndon_words(const std::vector<int>& letters, std::size_t length);
/// (u, v) with v the longest proper Lyndon suffix of the Lyndon word w.
/// Requires |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Bracket expression tree: a generator leaf or a bracket of two subtrees.
class BracketExpr {
public:
    static BracketExpr leaf(int generator);
    static BracketExpr node(BracketExpr left, BracketExpr right);

    bool is_leaf() const { return !left_; }
    int generator() const { return generator_; }
    const BracketExpr& left() const { return *left_; }
    const BracketExpr& right() const { return *right_; }
    std::size_t degree() const;
    /// Smallest and largest generator label occurring in the tree.
    std::pair<int, int> label_range() const;

    /// "[B1,[B1,B2]]".
    std::string str() const;
    friend bool operator==(const BracketExpr& a, const BracketExpr& b);

private:
    int generator_ = 0;
    std::shared_ptr<const BracketExpr> left_;
    std::shared_ptr<const BracketExpr> right_;
};

/// expr := "B" nat | "[" expr "," expr "]", whitespace allowed between tokens.
/// Throws Error{SyntaxError} or Error{UnbalancedBracket} with a byte offset.
BracketExpr parse_bracket(std::string_view text);

/// Rational combination of Lyndon words (each standing for its standard
/// bracketing).
class FreeLieElement {
public:
    FreeLieElement() = default;
    static FreeLieElement generator(int label);
    /// Single basis element; `w` must be Lyndon.
    static FreeLieElement basis(const Word& w, Rational coeff = Rational(1));

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word& w) const;
    void add(const Word& w, const Rational& coeff);

    FreeLieElement& operator+=(const FreeLieElement& o);
    FreeLieElement& operator-=(const FreeLieElement& o);
    FreeLieElement& operator*=(const Rational& s);
    friend FreeLieElement operator+(FreeLieElement a, const FreeLieElement& b) { return a += b; }
    friend FreeLieElement operator-(FreeLieElement a, const FreeLieElement& b) { return a -= b; }
    friend FreeLieElement operator*(const Rational& s, FreeLieElement a) { return a *= s; }
    FreeLieElement operator-() const { return Rational(-1) * *this; }
    friend bool operator==(const FreeLieElement&, const FreeLieElement&) = default;

    /// "[B1,[B1,B2]] + 4[B1,B2]" using standard bracketings.
    std::string str() const;

private:
    std::map<Word, Rational> terms_;
};

FreeLieElement lie_bracket(const FreeLieElement& x, const FreeLieElement& y);
FreeLieElement to_lyndon(const BracketExpr& e);
BracketExpr standard_bracketing(const Word& w);
/// (ad x)^k y.
FreeLieElement ad_power(const FreeLieElement& x, unsigned k, const FreeLieElement& y);

/// Number of Lyndon words of length d over n letters:
/// (1/d) sum_{e | d} mu(e) n^{d/e}.
BigInt witt_dimension(unsigned n, unsigned d);

}  // namespace onsager
