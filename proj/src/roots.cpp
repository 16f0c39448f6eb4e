#include "onsager/roots.hpp"

#include "onsager/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace onsager {

Root Root::simple(std::size_t n, std::size_t i) {
    Root r = zero(n);
    r.coords.at(i) = 1;
    return r;
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
    return !is_zero() && std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

Root Root::operator-() const {
    Root r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords.at(i);
    return r;
}

Root operator*(int k, const Root& a) {
    Root r = a;
    for (auto& c : r.coords) c *= k;
    return r;
}

std::string Root::str(int label_base) const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        int c = coords[i];
        if (c == 0) continue;
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        if (std::abs(c) != 1) out += std::to_string(std::abs(c));
        out += "a" + std::to_string(static_cast<int>(i) + label_base);
    }
    return out.empty() ? "0" : out;
}

std::string AffineRoot::str(int label_base) const {
    std::string out = finite_part.is_zero() ? "" : finite_part.str(label_base);
    if (level != 0) {
        if (level < 0) out += "-";
        else if (!out.empty()) out += "+";
        if (std::abs(level) != 1) out += std::to_string(std::abs(level));
        out += "d";
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

RootSystem RootSystem::build(const CartanMatrix& c) {
    if (c.kind() != CartanKind::Finite) throw Error(ErrorCode::NotFinite, "root enumeration requires a finite-type Cartan matrix");
    RootSystem rs;
    rs.cartan_ = c;
    std::size_t n = c.size();

    std::set<Root> seen;
    std::deque<Root> queue;
    for (std::size_t i = 0; i < n; ++i) {
        seen.insert(Root::simple(n, i));
        queue.push_back(Root::simple(n, i));
    }
    while (!queue.empty()) {
        Root alpha = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            Root beta = rs.reflect(alpha, i);
            if (beta.is_positive() && seen.insert(beta).second) queue.push_back(beta);
        }
    }
    rs.positive_.assign(seen.begin(), seen.end());
    // (height, lex) with larger coordinate vectors first inside a height, so
    // that the simple roots come out as alpha_1..alpha_n.
    std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.coords > b.coords;
    });
    rs.all_ = rs.positive_;
    for (const auto& r : rs.positive_) rs.all_.push_back(-r);
    for (RootId id = 0; id < rs.all_.size(); ++id) rs.index_.emplace(rs.all_[id], id);
    for (std::size_t i = 0; i < n; ++i) rs.simple_ids_.push_back(rs.index_.at(Root::simple(n, i)));

    // Components of the Dynkin diagram, each normalized so its long roots
    // have squared length 2.
    const auto& d = c.symmetrizer();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j)
                if (comp[j] < 0 && c(i, j) != 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    std::vector<int> maxd(ncomp, 0);
    for (std::size_t i = 0; i < n; ++i) maxd[comp[i]] = std::max(maxd[comp[i]], d[i]);
    rs.simple_form_.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rs.simple_form_[i][j] = Rational(d[i] * c(i, j), maxd[comp[i]]);

    rs.highest_ = 0;
    for (RootId id = 0; id < rs.positive_.size(); ++id)
        if (rs.positive_[id].coords[0] > 0 && rs.positive_[id].height() >= rs.positive_[rs.highest_].height())
            rs.highest_ = id;
    return rs;
}

std::optional<RootId> RootSystem::find(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

RootId RootSystem::id_of(const Root& r) const {
    auto id = find(r);
    if (!id) throw Error(ErrorCode::NotARoot, r.str() + " is not a root");
    return *id;
}

Rational RootSystem::form(const Root& a, const Root& b) const {
    Rational sum;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j)
            if (b.coords[j] != 0) sum += Rational(a.coords[i] * b.coords[j]) * simple_form_[i][j];
    }
    return sum;
}

int RootSystem::pairing(const Root& alpha, std::size_t i) const {
    int s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += alpha.coords[j] * cartan_(i, j);
    return s;
}

Root RootSystem::reflect(const Root& alpha, std::size_t i) const {
    Root r = alpha;
    r.coords[i] -= pairing(alpha, i);
    return r;
}

std::vector<int> RootSystem::coroot_coords(const Root& alpha) const {
    if (!contains(alpha)) throw Error(ErrorCode::NotARoot, alpha.str() + " is not a root");
    Rational len = form(alpha, alpha);
    std::vector<int> k(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        Rational ki = Rational(alpha.coords[i]) * simple_form_[i][i] / len;
        if (!ki.is_integer()) throw std::logic_error("non-integral coroot coordinate for " + alpha.str());
        k[i] = static_cast<int>(ki.to_long());
    }
    return k;
}

// ---------------------------------------------------------------------------

int affine_height(const RootSystem& finite, const AffineRoot& gamma) {
    return gamma.finite_part.height() + gamma.level * (finite.highest_root().height() + 1);
}

std::vector<AffineRootEntry> affine_positive_roots(const RootSystem& finite, int max_height) {
    std::vector<AffineRootEntry> out;
    int h = finite.highest_root().height() + 1;
    int r = static_cast<int>(finite.rank());
    for (const auto& alpha : finite.positive_roots())
        if (alpha.height() <= max_height) out.push_back({{alpha, 0}, alpha.height(), 1});
    for (int k = 1; k * h - (h - 1) <= max_height; ++k) {
        for (RootId id = 0; id < finite.num_roots(); ++id) {
            AffineRoot g{finite.root(id), k};
            int ht = affine_height(finite, g);
            if (ht <= max_height) out.push_back({g, ht, 1});
        }
        if (k * h <= max_height) out.push_back({{Root::zero(finite.rank()), k}, k * h, r});
    }
    std::sort(out.begin(), out.end(), [](const AffineRootEntry& a, const AffineRootEntry& b) {
        if (a.height != b.height) return a.height < b.height;
        if (a.root.level != b.root.level) return a.root.level < b.root.level;
        return a.root.finite_part.coords > b.root.finite_part.coords;
    });
    return out;
}

std::vector<AffineRootEntry> affine_positive_roots(const CartanMatrix& affine, int max_height) {
    if (affine.kind() != CartanKind::UntwistedAffine)
        throw Error(ErrorCode::NotAffine, "affine root enumeration requires an untwisted affine Cartan matrix");
    return affine_positive_roots(RootSystem::build(affine.finite_part()), max_height);
}

}  // namespace onsager
