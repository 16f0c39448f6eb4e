#include "onsager/freelie.hpp"

#include "onsager/error.hpp"

#include <algorithm>
#include <cctype>

namespace onsager {

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end()))
            return false;
    return true;
}

std::vector<Word> lyndon_words(const std::vector<int>& letters, std::size_t length) {
    std::vector<Word> out;
    if (letters.empty() || length == 0) return out;
    // Duval's generation over positions into `letters`.
    const std::size_t k = letters.size();
    std::vector<std::size_t> w{0};
    while (!w.empty()) {
        if (w.size() == length) {
            Word word;
            for (auto i : w) word.push_back(letters[i]);
            out.push_back(std::move(word));
        }
        std::size_t m = w.size();
        while (w.size() < length) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == k - 1) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (is_lyndon(suffix)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), suffix};
    }
    throw std::invalid_argument("standard factorization needs a word of length >= 2");
}

// ---------------------------------------------------------------------------

BracketExpr BracketExpr::leaf(int generator) {
    BracketExpr e;
    e.generator_ = generator;
    return e;
}

BracketExpr BracketExpr::node(BracketExpr left, BracketExpr right) {
    BracketExpr e;
    e.left_ = std::make_shared<const BracketExpr>(std::move(left));
    e.right_ = std::make_shared<const BracketExpr>(std::move(right));
    return e;
}

std::size_t BracketExpr::degree() const { return is_leaf() ? 1 : left_->degree() + right_->degree(); }

std::pair<int, int> BracketExpr::label_range() const {
    if (is_leaf()) return {generator_, generator_};
    auto [a, b] = left_->label_range();
    auto [c, d] = right_->label_range();
    return {std::min(a, c), std::max(b, d)};
}

std::string BracketExpr::str() const {
    if (is_leaf()) return "B" + std::to_string(generator_);
    return "[" + left_->str() + "," + right_->str() + "]";
}

bool operator==(const BracketExpr& a, const BracketExpr& b) {
    if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.generator_ == b.generator_;
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    BracketExpr parse() {
        BracketExpr e = expr();
        skip_ws();
        if (pos_ < s_.size()) {
            if (s_[pos_] == ']') throw Error(ErrorCode::UnbalancedBracket, "unmatched ']'", pos_);
            throw Error(ErrorCode::SyntaxError, "unexpected trailing input", pos_);
        }
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    BracketExpr expr() {
        skip_ws();
        if (pos_ >= s_.size()) {
            if (!open_.empty()) throw Error(ErrorCode::UnbalancedBracket, "unclosed '['", open_.back());
            throw Error(ErrorCode::SyntaxError, "expected an expression", pos_);
        }
        char ch = s_[pos_];
        if (ch == 'B') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw Error(ErrorCode::SyntaxError, "expected a generator index after 'B'", pos_);
            if (pos_ - start > 6) throw Error(ErrorCode::SyntaxError, "generator index too large", start);
            return BracketExpr::leaf(std::stoi(std::string(s_.substr(start, pos_ - start))));
        }
        if (ch == '[') {
            open_.push_back(pos_);
            ++pos_;
            BracketExpr left = expr();
            expect(',');
            BracketExpr right = expr();
            expect(']');
            open_.pop_back();
            return BracketExpr::node(std::move(left), std::move(right));
        }
        if (ch == ']') throw Error(ErrorCode::UnbalancedBracket, "unexpected ']'", pos_);
        throw Error(ErrorCode::SyntaxError, std::string("unexpected character '") + ch + "'", pos_);
    }

    void expect(char want) {
        skip_ws();
        if (pos_ >= s_.size()) throw Error(ErrorCode::UnbalancedBracket, "unclosed '['", open_.back());
        if (s_[pos_] != want) throw Error(ErrorCode::SyntaxError, std::string("expected '") + want + "'", pos_);
        ++pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::vector<std::size_t> open_;
};

}  // namespace

BracketExpr parse_bracket(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------

FreeLieElement FreeLieElement::generator(int label) { return basis(Word{label}); }

FreeLieElement FreeLieElement::basis(const Word& w, Rational coeff) {
    FreeLieElement x;
    x.add(w, coeff);
    return x;
}

Rational FreeLieElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FreeLieElement::add(const Word& w, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeLieElement& FreeLieElement::operator+=(const FreeLieElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

FreeLieElement& FreeLieElement::operator-=(const FreeLieElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

FreeLieElement& FreeLieElement::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

std::string FreeLieElement::str() const {
    if (terms_.empty()) return "0";
    // Longest words first, as in a displayed relation.
    std::vector<std::pair<Word, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    std::string out;
    for (const auto& [w, c] : sorted) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) out += c.sign() < 0 ? "-" : "";
        else out += c.sign() < 0 ? " - " : " + ";
        if (mag != Rational(1)) out += mag.str();
        out += standard_bracketing(w).str();
    }
    return out;
}

namespace {

using Terms = std::map<Word, Rational>;

void add_scaled(Terms& acc, const Rational& s, const Terms& x) {
    for (const auto& [w, c] : x) {
        auto [it, inserted] = acc.try_emplace(w, s * c);
        if (!inserted) {
            it->second += s * c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

// Bracket of the standard bracketings of two Lyndon words, in the Lyndon
// basis. Per-thread memo.
const Terms& bracket_words(const Word& u, const Word& v) {
    thread_local std::map<std::pair<Word, Word>, Terms> memo;
    auto key = std::make_pair(u, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Terms result;
    if (u == v) {
    } else if (v < u) {
        add_scaled(result, Rational(-1), bracket_words(v, u));
    } else {
        bool simple = u.size() == 1;
        std::pair<Word, Word> f;
        if (!simple) {
            f = standard_factorization(u);
            simple = !(f.second < v);
        }
        if (simple) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            result.emplace(std::move(uv), Rational(1));
        } else {
            // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
            const auto& [u1, u2] = f;
            Terms inner = bracket_words(u2, v);
            for (const auto& [w, c] : inner) add_scaled(result, c, bracket_words(u1, w));
            inner = bracket_words(u1, v);
            for (const auto& [w, c] : inner) add_scaled(result, -c, bracket_words(u2, w));
        }
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

FreeLieElement lie_bracket(const FreeLieElement& x, const FreeLieElement& y) {
    FreeLieElement out;
    for (const auto& [u, a] : x.terms())
        for (const auto& [v, b] : y.terms()) {
            Rational ab = a * b;
            for (const auto& [w, c] : bracket_words(u, v)) out.add(w, ab * c);
        }
    return out;
}

FreeLieElement to_lyndon(const BracketExpr& e) {
    if (e.is_leaf()) return FreeLieElement::generator(e.generator());
    return lie_bracket(to_lyndon(e.left()), to_lyndon(e.right()));
}

BracketExpr standard_bracketing(const Word& w) {
    if (w.size() == 1) return BracketExpr::leaf(w[0]);
    auto [u, v] = standard_factorization(w);
    return BracketExpr::node(standard_bracketing(u), standard_bracketing(v));
}

FreeLieElement ad_power(const FreeLieElement& x, unsigned k, const FreeLieElement& y) {
    FreeLieElement out = y;
    for (unsigned s = 0; s < k; ++s) out = lie_bracket(x, out);
    return out;
}

BigInt witt_dimension(unsigned n, unsigned d) {
    auto mobius = [](unsigned m) {
        int mu = 1;
        for (unsigned p = 2; p * p <= m; ++p) {
            if (m % p != 0) continue;
            m /= p;
            if (m % p == 0) return 0;
            mu = -mu;
        }
        if (m > 1) mu = -mu;
        return mu;
    };
    BigInt sum = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        int mu = mobius(e);
        if (mu == 0) continue;
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), n, d / e);
        sum += mu * p;
    }
    return sum / d;
}

}  // namespace onsager
