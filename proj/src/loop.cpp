#include "onsager/loop.hpp"

#include "onsager/error.hpp"

#include <cstdlib>

namespace onsager {

namespace {

void add_term(std::map<LoopKey, Rational>& terms, LoopKey key, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(key, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms.erase(it);
    }
}

std::string coeff_prefix(const Rational& c, bool first) {
    Rational mag = c.sign() < 0 ? -c : c;
    std::string out = first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    if (mag != Rational(1)) out += mag.str() + "*";
    return out;
}

}  // namespace

LoopElement LoopElement::basis(GIndex g, int level, Rational coeff) {
    LoopElement x;
    add_term(x.terms, {g, level}, coeff);
    return x;
}

LoopElement LoopElement::central(Rational coeff) {
    LoopElement x;
    x.c = std::move(coeff);
    return x;
}

LoopElement LoopElement::derivation(Rational coeff) {
    LoopElement x;
    x.d = std::move(coeff);
    return x;
}

LoopElement LoopElement::from_finite(const ChevElement& x, int level) {
    LoopElement out;
    for (const auto& [g, c] : x.terms) out.terms.emplace(LoopKey{static_cast<GIndex>(g), level}, c);
    return out;
}

Rational LoopElement::coefficient(GIndex g, int level) const {
    auto it = terms.find({g, level});
    return it == terms.end() ? Rational(0) : it->second;
}

int LoopElement::max_abs_level() const {
    int m = 0;
    for (const auto& [k, v] : terms) m = std::max(m, std::abs(k.level));
    return m;
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
    for (const auto& [k, v] : o.terms) add_term(terms, k, v);
    c += o.c;
    d += o.d;
    return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
    for (const auto& [k, v] : o.terms) add_term(terms, k, -v);
    c -= o.c;
    d -= o.d;
    return *this;
}

LoopElement operator*(const Rational& s, const LoopElement& a) {
    LoopElement out;
    if (s.is_zero()) return out;
    for (const auto& [k, v] : a.terms) out.terms.emplace(k, s * v);
    out.c = s * a.c;
    out.d = s * a.d;
    return out;
}

std::string LoopElement::str(const StructureTable& t) const {
    std::string out;
    for (const auto& [k, v] : terms) {
        out += coeff_prefix(v, out.empty());
        out += t.basis_name(k.g) + "[" + std::to_string(k.level) + "]";
    }
    if (!c.is_zero()) out += coeff_prefix(c, out.empty()) + "c";
    if (!d.is_zero()) out += coeff_prefix(d, out.empty()) + "d";
    return out.empty() ? "0" : out;
}

LoopElement bracket_loop(const StructureTable& t, const LoopElement& x, const LoopElement& y) {
    LoopElement out;
    for (const auto& [kx, cx] : x.terms)
        for (const auto& [ky, cy] : y.terms) {
            Rational cc = cx * cy;
            for (const auto& [g, v] : bracket_basis(t, kx.g, ky.g)) add_term(out.terms, {g, kx.level + ky.level}, cc * v);
            if (kx.level != 0 && kx.level == -ky.level) out.c += Rational(kx.level) * cc * t.form(kx.g, ky.g);
        }
    if (!x.d.is_zero())
        for (const auto& [ky, cy] : y.terms) add_term(out.terms, ky, x.d * Rational(ky.level) * cy);
    if (!y.d.is_zero())
        for (const auto& [kx, cx] : x.terms) add_term(out.terms, kx, -(y.d * Rational(kx.level) * cx));
    return out;
}

Rational form_loop(const StructureTable& t, const LoopElement& x, const LoopElement& y) {
    Rational s = x.c * y.d + x.d * y.c;
    for (const auto& [kx, cx] : x.terms)
        for (const auto& [ky, cy] : y.terms)
            if (kx.level == -ky.level) s += cx * cy * t.form(kx.g, ky.g);
    return s;
}

LoopElement omega_tilde(const StructureTable& t, const LoopElement& x) {
    LoopElement out;
    for (const auto& [k, v] : x.terms) out.terms.emplace(LoopKey{omega_index(t, k.g), -k.level}, -v);
    out.c = -x.c;
    out.d = -x.d;
    return out;
}

std::string AffineFixIndex::str(int label_base) const {
    std::string s = "y(" + gamma.str(label_base) + ")";
    if (gamma.is_imaginary()) s += "^" + std::to_string(i);
    return s;
}

LoopElement y_affine(const StructureTable& t, const AffineRoot& gamma, unsigned i) {
    return y_affine(t, AffineFixIndex{gamma, i});
}

LoopElement y_affine(const StructureTable& t, const AffineFixIndex& idx) {
    const auto& g = idx.gamma;
    if (g.finite_part.rank() != t.rank()) throw Error(ErrorCode::NotARoot, "rank mismatch in " + idx.str());
    if (g.finite_part.is_zero()) {
        if (idx.i < 1 || idx.i > t.rank()) throw Error(ErrorCode::IndexError, "imaginary multiplicity index " + std::to_string(idx.i));
        if (g.level == 0) return {};
        GIndex h = t.h_index(idx.i - 1);
        return LoopElement::basis(h, g.level) - LoopElement::basis(h, -g.level);
    }
    if (idx.i != 1) throw Error(ErrorCode::IndexError, "real root index must be 1 in " + idx.str());
    auto id = t.roots().find(g.finite_part);
    if (!id) throw Error(ErrorCode::NotARoot, g.finite_part.str() + " is not a root");
    return LoopElement::basis(t.e_index(*id), g.level) - LoopElement::basis(t.e_index(t.roots().negate(*id)), -g.level);
}

void add_signed(YExpansion& e, const AffineFixIndex& idx, const Rational& coeff) {
    if (coeff.is_zero()) return;
    if (idx.gamma.finite_part.is_zero() && idx.gamma.level == 0) return;
    AffineFixIndex key = idx;
    Rational v = coeff;
    if (!key.gamma.is_positive()) {
        key.gamma = -key.gamma;
        v = -v;
    }
    auto [it, inserted] = e.try_emplace(key, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) e.erase(it);
    }
}

LoopElement from_y_basis(const StructureTable& t, const YExpansion& e) {
    LoopElement out;
    for (const auto& [idx, c] : e) out += c * y_affine(t, idx);
    return out;
}

YExpansion to_y_basis(const StructureTable& t, const LoopElement& x) {
    if (!x.c.is_zero() || !x.d.is_zero()) throw Error(ErrorCode::NotExpandable, "c/d component in " + x.str(t));
    YExpansion out;
    const std::size_t r = t.rank();
    for (const auto& [k, v] : x.terms) {
        if (t.is_h(k.g)) {
            if (k.level == 0) throw Error(ErrorCode::NotExpandable, "level-0 Cartan component in " + x.str(t));
            if (k.level > 0) out[{AffineRoot{Root::zero(r), k.level}, static_cast<unsigned>(k.g + 1)}] = v;
        } else {
            AffineRoot gamma{t.roots().root(t.root_of(k.g)), k.level};
            if (gamma.is_positive()) out[{gamma, 1}] = v;
        }
    }
    if (!(from_y_basis(t, out) == x)) throw Error(ErrorCode::NotExpandable, "not omega-fixed: " + x.str(t));
    return out;
}

YExpansion k_bracket_expand(const StructureTable& t, const AffineFixIndex& a, const AffineFixIndex& b) {
    return to_y_basis(t, bracket_loop(t, y_affine(t, a), y_affine(t, b)));
}

YExpansion k_bracket_predict(const StructureTable& t, const AffineFixIndex& a, const AffineFixIndex& b) {
    const RootSystem& rs = t.roots();
    const std::size_t r = t.rank();
    YExpansion out;
    const bool ia = a.gamma.finite_part.is_zero(), ib = b.gamma.finite_part.is_zero();
    if (ia && ib) return out;
    if (!ia && ib) {
        for (const auto& [idx, c] : k_bracket_predict(t, b, a)) out[idx] = -c;
        return out;
    }
    auto imag = [&](int level, unsigned i) { return AffineFixIndex{AffineRoot{Root::zero(r), level}, i}; };
    auto real = [&](const Root& alpha, int level) { return AffineFixIndex{AffineRoot{alpha, level}, 1}; };
    const Root& beta = b.gamma.finite_part;
    const int m = b.gamma.level;
    if (ia) {
        // [y_{l delta}^(i), y_{beta + m delta}]
        const int l = a.gamma.level;
        Rational v(rs.pairing(beta, a.i - 1));
        add_signed(out, real(beta, l + m), v);
        add_signed(out, real(beta, m - l), -v);
        return out;
    }
    const Root& alpha = a.gamma.finite_part;
    const int l = a.gamma.level;
    RootId x = rs.id_of(alpha), y = rs.id_of(beta);
    if (x == y || rs.negate(x) == y) {
        const auto& k = t.coroot(x);
        int level = x == y ? m - l : m + l;
        for (std::size_t i = 0; i < r; ++i) add_signed(out, imag(level, static_cast<unsigned>(i + 1)), Rational(k[i]));
        return out;
    }
    if (auto s = t.sum(x, y)) add_signed(out, real(rs.root(*s), l + m), Rational(t.N(x, y)));
    if (auto s = t.sum(x, rs.negate(y))) add_signed(out, real(rs.root(*s), l - m), Rational(-t.N(x, rs.negate(y))));
    return out;
}

std::string expansion_str(const YExpansion& e, int label_base) {
    std::string out;
    for (const auto& [idx, c] : e) out += coeff_prefix(c, out.empty()) + idx.str(label_base);
    return out.empty() ? "0" : out;
}

OnsagerPair onsager_basis(const StructureTable& t, int m) {
    if (t.rank() != 1) throw Error(ErrorCode::IndexError, "Onsager basis needs an A1 table");
    return {y_affine(t, AffineRoot{Root::simple(1, 0), m}), y_affine(t, AffineRoot{Root::zero(1), m}, 1)};
}

}  // namespace onsager
