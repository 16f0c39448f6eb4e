#pragma once

// Exact scalars (arbitrary-precision rationals and Gaussian rationals) and
// exact linear algebra over them.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace onsager {

using BigInt = mpz_class;

/// Rational number in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    explicit Rational(const BigInt& n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static Rational parse(const std::string& text);

    const mpq_class& value() const { return v_; }
    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    /// Throws std::domain_error unless the value is an integer fitting in a long.
    long to_long() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_{0};
};

/// Element of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    /// Accepts "a", "a/b", "i", "-i", "3i", "1/2+3/4i", "2-i".
    static GaussianRational parse(const std::string& text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    std::string str() const;

private:
    Rational re_;
    Rational im_;
};

/// Sparse vector keyed by an integer coordinate; zero entries are never stored.
template <class Scalar>
using SparseVector = std::map<std::int64_t, Scalar>;

template <class Scalar>
void axpy(SparseVector<Scalar>& y, const Scalar& a, const SparseVector<Scalar>& x) {
    if (a.is_zero()) return;
    for (const auto& [k, v] : x) {
        auto [it, inserted] = y.try_emplace(k, a * v);
        if (!inserted) {
            it->second += a * v;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

/// Incrementally maintained row-echelon basis of a span of sparse vectors.
/// Every stored row has a distinct leading coordinate normalized to 1.
template <class Scalar>
class EchelonBasis {
public:
    /// Reduces `v` against the stored rows. Returns the residue (zero iff v is
    /// in the span).
    SparseVector<Scalar> reduce(SparseVector<Scalar> v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            std::int64_t key = it->first;
            Scalar factor = -it->second;
            axpy(v, factor, rows_[p->second]);
            it = v.upper_bound(key);
        }
        return v;
    }

    /// Adds `v` to the span; returns true iff it was independent.
    bool insert(SparseVector<Scalar> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Scalar inv = Scalar(1) / v.begin()->second;
        for (auto& [k, x] : v) x *= inv;
        pivots_.emplace(v.begin()->first, rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(const SparseVector<Scalar>& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVector<Scalar>>& rows() const { return rows_; }

private:
    std::vector<SparseVector<Scalar>> rows_;
    std::map<std::int64_t, std::size_t> pivots_;
};

/// Sparse matrix over Q(i) with fixed dimensions.
class ExactMatrix {
public:
    using Entry = std::pair<std::size_t, std::size_t>;

    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    static ExactMatrix identity(std::size_t n);
    static ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j);  // E_{ij}, 0-based
    static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussianRational at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const GaussianRational& v);
    void add_to(std::size_t i, std::size_t j, const GaussianRational& v);
    const std::map<Entry, GaussianRational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    bool is_diagonal() const;

    ExactMatrix transpose() const;
    ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const GaussianRational& s);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
    friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
    ExactMatrix operator-() const { return *this * GaussianRational(-1); }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

    std::string str() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::map<Entry, GaussianRational> entries_;
};

/// [a, b] = ab - ba.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

using ExactVector = std::vector<GaussianRational>;

std::size_t rank(const ExactMatrix& m);
/// Basis of the right kernel, one vector per free column of the reduced
/// row-echelon form (free coordinate set to 1).
std::vector<ExactVector> nullspace_basis(const ExactMatrix& m);
std::size_t span_rank(const std::vector<ExactVector>& vectors);
/// Some x with m x = b, if one exists.
std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b);
/// Exact determinant of a square rational matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace onsager
