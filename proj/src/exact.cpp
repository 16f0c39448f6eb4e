#include "onsager/exact.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace onsager {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::domain_error("rational " + str() + " is not a machine integer");
    return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (n.is_zero()) throw std::domain_error("division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

GaussianRational GaussianRational::parse(const std::string& raw) {
    std::string text;
    std::remove_copy_if(raw.begin(), raw.end(), std::back_inserter(text),
                        [](char c) { return c == ' '; });
    if (text.empty()) throw std::invalid_argument("empty scalar");
    auto parse_imag = [](std::string s) {
        // s ends in 'i'
        s.pop_back();
        if (s.empty() || s == "+") return Rational(1);
        if (s == "-") return Rational(-1);
        if (s.back() == '*') s.pop_back();
        return Rational::parse(s.front() == '+' ? s.substr(1) : s);
    };
    if (text.back() != 'i') return Rational::parse(text.front() == '+' ? text.substr(1) : text);
    // split at the last sign that is not leading and not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if (text[k] == '+' || text[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {Rational(0), parse_imag(text)};
    std::string re = text.substr(0, split);
    return {Rational::parse(re.front() == '+' ? re.substr(1) : re), parse_imag(text.substr(split))};
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag;
    if (im_ == Rational(1)) imag = "i";
    else if (im_ == Rational(-1)) imag = "-i";
    else imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    if (imag.front() == '-') return re_.str() + imag;
    return re_.str() + "+" + imag;
}

// ---------------------------------------------------------------------------

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    ExactMatrix m(n, n);
    m.set(i, j, 1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

GaussianRational ExactMatrix::at(std::size_t i, std::size_t j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? GaussianRational() : it->second;
}

void ExactMatrix::set(std::size_t i, std::size_t j, const GaussianRational& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    if (v.is_zero()) entries_.erase({i, j});
    else entries_[{i, j}] = v;
}

void ExactMatrix::add_to(std::size_t i, std::size_t j, const GaussianRational& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    if (v.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace({i, j}, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

bool ExactMatrix::is_diagonal() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return e.first.first == e.first.second; });
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (const auto& [ij, v] : entries_) t.entries_.emplace(Entry{ij.second, ij.first}, v);
    return t;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    ExactMatrix b(nr, nc);
    for (const auto& [ij, v] : entries_) {
        auto [i, j] = ij;
        if (i >= r0 && i < r0 + nr && j >= c0 && j < c0 + nc) b.entries_.emplace(Entry{i - r0, j - c0}, v);
    }
    return b;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (const auto& [ij, v] : o.entries_) add_to(ij.first, ij.second, v);
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (const auto& [ij, v] : o.entries_) add_to(ij.first, ij.second, -v);
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [ij, v] : entries_) v *= s;
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    std::vector<std::vector<std::pair<std::size_t, const GaussianRational*>>> brows(b.rows_);
    for (const auto& [ij, v] : b.entries_) brows[ij.first].emplace_back(ij.second, &v);
    ExactMatrix c(a.rows_, b.cols_);
    for (const auto& [ij, v] : a.entries_)
        for (const auto& [k, w] : brows[ij.second]) c.add_to(ij.first, k, v * *w);
    return c;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << "]\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

using DenseRows = std::vector<ExactVector>;

DenseRows dense(const ExactMatrix& m) {
    DenseRows rows(m.rows(), ExactVector(m.cols()));
    for (const auto& [ij, v] : m.entries()) rows[ij.first][ij.second] = v;
    return rows;
}

// Reduced row-echelon form in place; returns pivot columns. Pivot: first
// nonzero entry in row order.
std::vector<std::size_t> rref(DenseRows& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        GaussianRational inv = GaussianRational(1) / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][c].is_zero()) continue;
            GaussianRational f = rows[q][c];
            for (std::size_t k = c; k < ncols; ++k)
                if (!rows[r][k].is_zero()) rows[q][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
    EchelonBasis<GaussianRational> basis;
    std::vector<SparseVector<GaussianRational>> rows(m.rows());
    for (const auto& [ij, v] : m.entries()) rows[ij.first].emplace(static_cast<std::int64_t>(ij.second), v);
    for (auto& row : rows) basis.insert(std::move(row));
    return basis.rank();
}

std::vector<ExactVector> nullspace_basis(const ExactMatrix& m) {
    DenseRows rows = dense(m);
    std::vector<std::size_t> pivots = rref(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<ExactVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        ExactVector v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t span_rank(const std::vector<ExactVector>& vectors) {
    if (vectors.empty()) return 0;
    std::size_t n = vectors.front().size();
    ExactMatrix m(vectors.size(), n);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != n) throw std::invalid_argument("span_rank: vectors of different lengths");
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, vectors[i][j]);
    }
    return rank(m);
}

std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    // kernel vectors (x, w) of [m | b] with w != 0 give x / -w
    ExactMatrix aug(m.rows(), m.cols() + 1);
    for (const auto& [ij, v] : m.entries()) aug.set(ij.first, ij.second, v);
    for (std::size_t i = 0; i < b.size(); ++i) aug.set(i, m.cols(), b[i]);
    for (auto& v : nullspace_basis(aug)) {
        if (v.back().is_zero()) continue;
        GaussianRational w = -v.back();
        v.pop_back();
        for (auto& x : v) x /= w;
        return v;
    }
    return std::nullopt;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    std::size_t n = m.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t q = c + 1; q < n; ++q) {
            if (m[q][c].is_zero()) continue;
            Rational f = m[q][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[q][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace onsager
