#include "onsager/chevalley.hpp"

#include "onsager/error.hpp"
#include "onsager/serre.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace onsager {

namespace {

int to_int(const Rational& q, const char* what) {
    if (!q.is_integer()) throw std::logic_error(std::string("non-integral ") + what + ": " + q.str());
    return static_cast<int>(q.to_long());
}

}  // namespace

StructureTable StructureTable::build(const CartanMatrix& c) {
    StructureTable t;
    t.rs_ = RootSystem::build(c);
    const RootSystem& rs = t.rs_;
    const std::size_t n = rs.num_roots();
    const std::size_t P = rs.num_positive();

    t.sum_.assign(n * n, -1);
    for (RootId a = 0; a < n; ++a)
        for (RootId b = 0; b < n; ++b)
            if (auto s = rs.find(rs.root(a) + rs.root(b))) t.sum_[a * n + b] = static_cast<long>(*s);
    for (RootId a = 0; a < n; ++a) t.coroot_.push_back(rs.coroot_coords(rs.root(a)));

    // Extraspecial pair of each non-simple positive root xi: alpha minimal
    // with xi - alpha positive.
    std::vector<std::pair<RootId, RootId>> extra(P, {P, P});
    std::vector<int> extra_value(P, 0);
    for (RootId xi = 0; xi < P; ++xi) {
        for (RootId a = 0; a < xi; ++a) {
            auto b = rs.find(rs.root(xi) - rs.root(a));
            if (!b || !rs.is_positive(*b)) continue;
            extra[xi] = {a, *b};
            int p = 0;
            while (rs.contains(rs.root(*b) - (p + 1) * rs.root(a))) ++p;
            extra_value[xi] = p + 1;
            break;
        }
    }

    constexpr int kUnset = 1 << 30;
    std::vector<int> memo(n * n, kUnset);
    auto sq = [&](RootId id) { return rs.form(rs.root(id), rs.root(id)); };

    std::function<int(RootId, RootId)> N = [&](RootId a, RootId b) -> int {
        long s = t.sum_[a * n + b];
        if (s < 0) return 0;
        int& slot = memo[a * n + b];
        if (slot != kUnset) return slot;
        int value = 0;
        bool pa = rs.is_positive(a), pb = rs.is_positive(b);
        if (pa && pb) {
            RootId xi = static_cast<RootId>(s);
            auto [a1, b1] = extra[xi];
            if (a == a1 && b == b1) {
                value = extra_value[xi];
            } else if (a == b1 && b == a1) {
                value = -extra_value[xi];
            } else {
                // Four-term identity for a + b - a1 - b1 = 0.
                Rational acc;
                RootId ma1 = rs.negate(a1), mb1 = rs.negate(b1);
                if (auto d = t.sum(b, ma1)) acc += Rational(N(b, ma1) * N(a, mb1)) / sq(*d);
                if (auto d = t.sum(a, ma1)) acc += Rational(N(ma1, a) * N(b, mb1)) / sq(*d);
                value = to_int(sq(xi) * acc / Rational(extra_value[xi]), "structure constant");
            }
        } else if (pa && !pb) {
            // a + b + (-c) = 0 with c = a + b.
            RootId cid = static_cast<RootId>(s);
            if (rs.is_positive(cid)) {
                value = to_int(-sq(cid) / sq(a) * Rational(N(rs.negate(b), cid)), "structure constant");
            } else {
                value = to_int(sq(cid) / sq(b) * Rational(N(rs.negate(cid), a)), "structure constant");
            }
        } else if (!pa && pb) {
            value = -N(b, a);
        } else {
            value = -N(rs.negate(a), rs.negate(b));
        }
        memo[a * n + b] = value;
        return value;
    };

    t.n_.assign(n * n, 0);
    for (RootId a = 0; a < n; ++a)
        for (RootId b = 0; b < n; ++b) t.n_[a * n + b] = N(a, b);
    return t;
}

StructureTable StructureTable::resigned(const std::vector<int>& sigma) const {
    StructureTable t = *this;
    const std::size_t n = rs_.num_roots();
    for (RootId a = 0; a < n; ++a)
        for (RootId b = 0; b < n; ++b)
            if (auto s = sum(a, b)) t.n_[a * n + b] = sigma[a] * sigma[b] * sigma[*s] * n_[a * n + b];
    return t;
}

Rational StructureTable::form(GIndex a, GIndex b) const {
    if (is_h(a) && is_h(b)) {
        Rational num = Rational(4) * rs_.simple_form(a, b);
        return num / (rs_.simple_form(a, a) * rs_.simple_form(b, b));
    }
    if (is_h(a) || is_h(b)) return Rational(0);
    RootId x = root_of(a), y = root_of(b);
    if (rs_.negate(x) != y) return Rational(0);
    return Rational(2) / rs_.form(rs_.root(x), rs_.root(x));
}

std::vector<StructureTable::Entry> StructureTable::entries() const {
    std::vector<Entry> out;
    const std::size_t n = rs_.num_roots();
    for (RootId a = 0; a < n; ++a)
        for (RootId b = 0; b < n; ++b)
            if (int v = N(a, b); v != 0) out.push_back({rs_.root(a), rs_.root(b), v});
    return out;
}

std::string StructureTable::basis_name(GIndex g) const {
    if (is_h(g)) return "h" + std::to_string(g + 1);
    return "e(" + rs_.root(root_of(g)).str() + ")";
}

// ---------------------------------------------------------------------------

ChevElement ChevElement::basis(GIndex g, Rational c) {
    ChevElement x;
    if (!c.is_zero()) x.terms.emplace(static_cast<std::int64_t>(g), std::move(c));
    return x;
}

Rational ChevElement::coefficient(GIndex g) const {
    auto it = terms.find(static_cast<std::int64_t>(g));
    return it == terms.end() ? Rational(0) : it->second;
}

ChevElement& ChevElement::operator+=(const ChevElement& o) {
    axpy(terms, Rational(1), o.terms);
    return *this;
}

ChevElement& ChevElement::operator-=(const ChevElement& o) {
    axpy(terms, Rational(-1), o.terms);
    return *this;
}

ChevElement operator*(const Rational& s, const ChevElement& a) {
    ChevElement out;
    axpy(out.terms, s, a.terms);
    return out;
}

std::string ChevElement::str(const StructureTable& t) const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) out += c.sign() < 0 ? "-" : "";
        else out += c.sign() < 0 ? " - " : " + ";
        if (mag != Rational(1)) out += mag.str() + "*";
        out += t.basis_name(static_cast<GIndex>(g));
    }
    return out;
}

std::vector<std::pair<GIndex, Rational>> bracket_basis(const StructureTable& t, GIndex a, GIndex b) {
    const RootSystem& rs = t.roots();
    std::vector<std::pair<GIndex, Rational>> out;
    if (t.is_h(a) && t.is_h(b)) return out;
    if (t.is_h(a)) {
        int v = rs.pairing(rs.root(t.root_of(b)), a);
        if (v != 0) out.emplace_back(b, Rational(v));
        return out;
    }
    if (t.is_h(b)) {
        int v = rs.pairing(rs.root(t.root_of(a)), b);
        if (v != 0) out.emplace_back(a, Rational(-v));
        return out;
    }
    RootId x = t.root_of(a), y = t.root_of(b);
    if (rs.negate(x) == y) {
        const auto& k = t.coroot(x);
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] != 0) out.emplace_back(t.h_index(i), Rational(k[i]));
        return out;
    }
    if (auto s = t.sum(x, y)) out.emplace_back(t.e_index(*s), Rational(t.N(x, y)));
    return out;
}

ChevElement bracket_g(const StructureTable& t, const ChevElement& x, const ChevElement& y) {
    ChevElement out;
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) {
            Rational ab = ca * cb;
            for (const auto& [g, c] : bracket_basis(t, static_cast<GIndex>(a), static_cast<GIndex>(b)))
                axpy(out.terms, ab * c, ChevElement::basis(g).terms);
        }
    return out;
}

GIndex omega_index(const StructureTable& t, GIndex g) {
    return t.is_h(g) ? g : t.e_index(t.roots().negate(t.root_of(g)));
}

ChevElement omega(const StructureTable& t, const ChevElement& x) {
    ChevElement out;
    for (const auto& [g, c] : x.terms)
        out.terms.emplace(static_cast<std::int64_t>(omega_index(t, static_cast<GIndex>(g))), -c);
    return out;
}

Rational form_g(const StructureTable& t, const ChevElement& x, const ChevElement& y) {
    Rational s;
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) {
            Rational f = t.form(static_cast<GIndex>(a), static_cast<GIndex>(b));
            if (!f.is_zero()) s += ca * cb * f;
        }
    return s;
}

ChevElement h_elem(const StructureTable& t, std::size_t i) { return ChevElement::basis(t.h_index(i)); }

ChevElement e_elem(const StructureTable& t, const Root& alpha) {
    return ChevElement::basis(t.e_index(t.roots().id_of(alpha)));
}

ChevElement e_simple(const StructureTable& t, std::size_t i) { return ChevElement::basis(t.e_index(t.roots().simple_id(i))); }

ChevElement f_simple(const StructureTable& t, std::size_t i) {
    return ChevElement::basis(t.e_index(t.roots().negate(t.roots().simple_id(i))));
}

ChevElement y_any(const StructureTable& t, const Root& alpha) {
    RootId id = t.roots().id_of(alpha);
    return ChevElement::basis(t.e_index(id)) - ChevElement::basis(t.e_index(t.roots().negate(id)));
}

ChevElement y_basis(const StructureTable& t, const Root& alpha) {
    if (!alpha.is_positive() || !t.roots().contains(alpha))
        throw Error(ErrorCode::NotAPositiveRoot, alpha.str() + " is not a positive root");
    return y_any(t, alpha);
}

std::pair<ChevElement, ChevElement> almost_relation_sides(const StructureTable& t, std::size_t i, std::size_t j, unsigned r) {
    const RootSystem& rs = t.roots();
    CoeffRow row = coeff_row(t.roots().cartan()(i, j), r);
    ChevElement Yi = y_basis(t, Root::simple(rs.rank(), i));
    ChevElement term = y_basis(t, Root::simple(rs.rank(), j));
    ChevElement lhs;
    for (unsigned s = 0; s <= r; ++s) {
        if (s > 0) term = bracket_g(t, Yi, term);
        if (row.c[s] != 0) lhs += Rational(row.c[s]) * term;
    }
    ChevElement e = e_simple(t, j), f = f_simple(t, j);
    for (unsigned s = 0; s < r; ++s) {
        e = bracket_g(t, e_simple(t, i), e);
        f = bracket_g(t, f_simple(t, i), f);
    }
    ChevElement rhs = e + Rational(r % 2 == 1 ? 1 : -1) * f;
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------

MatrixRealization::MatrixRealization(std::shared_ptr<const StructureTable> table, std::vector<ExactMatrix> images)
    : table_(std::move(table)), images_(std::move(images)) {
    if (images_.size() != table_->dim()) throw std::invalid_argument("one image per basis element required");
}

ExactMatrix MatrixRealization::image(const ChevElement& x) const {
    ExactMatrix m(dim(), dim());
    for (const auto& [g, c] : x.terms) m += images_[static_cast<GIndex>(g)] * GaussianRational(c);
    return m;
}

std::vector<std::pair<GIndex, GIndex>> MatrixRealization::homomorphism_failures() const {
    std::vector<std::pair<GIndex, GIndex>> bad;
    for (GIndex a = 0; a < table_->dim(); ++a)
        for (GIndex b = 0; b < table_->dim(); ++b) {
            ChevElement br = bracket_g(*table_, ChevElement::basis(a), ChevElement::basis(b));
            if (image(br) != commutator(images_[a], images_[b])) bad.emplace_back(a, b);
        }
    return bad;
}

std::vector<ExactMatrix> extend_from_simple(const StructureTable& t, const std::vector<ExactMatrix>& h,
                                            const std::vector<ExactMatrix>& e, const std::vector<ExactMatrix>& f) {
    const RootSystem& rs = t.roots();
    const std::size_t P = rs.num_positive();
    std::size_t d = h.front().rows();
    std::vector<ExactMatrix> img(t.dim(), ExactMatrix(d, d));
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        img[t.h_index(i)] = h[i];
        img[t.e_index(rs.simple_id(i))] = e[i];
        img[t.e_index(rs.negate(rs.simple_id(i)))] = f[i];
    }
    for (RootId xi = 0; xi < P; ++xi) {
        if (rs.root(xi).height() == 1) continue;
        for (RootId a = 0; a < xi; ++a) {
            auto b = rs.find(rs.root(xi) - rs.root(a));
            if (!b || !rs.is_positive(*b)) continue;
            img[t.e_index(xi)] = commutator(img[t.e_index(a)], img[t.e_index(*b)]) * GaussianRational(Rational(1, t.N(a, *b)));
            RootId ma = rs.negate(a), mb = rs.negate(*b);
            img[t.e_index(rs.negate(xi))] =
                commutator(img[t.e_index(ma)], img[t.e_index(mb)]) * GaussianRational(Rational(1, t.N(ma, mb)));
            break;
        }
    }
    return img;
}

std::vector<int> reconcile_signs(const StructureTable& t, const std::function<ExactMatrix(RootId)>& target) {
    const RootSystem& rs = t.roots();
    std::vector<ExactMatrix> h, e, f;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        RootId s = rs.simple_id(i);
        e.push_back(target(s));
        f.push_back(target(rs.negate(s)));
        h.push_back(commutator(e.back(), f.back()));
    }
    auto img = extend_from_simple(t, h, e, f);
    std::vector<int> sigma(rs.num_roots(), 0);
    for (RootId id = 0; id < rs.num_roots(); ++id) {
        ExactMatrix want = target(id);
        const ExactMatrix& got = img[t.e_index(id)];
        if (want == got) sigma[id] = 1;
        else if (want == -got) sigma[id] = -1;
        else throw std::logic_error("target root vector for " + rs.root(id).str() + " is not +-phi(e_alpha)");
    }
    for (RootId id = 0; id < rs.num_roots(); ++id)
        if (sigma[id] != sigma[rs.negate(id)])
            throw std::logic_error("sign change is not compatible with the Chevalley involution");
    return sigma;
}

MatrixRealization sl_realization(unsigned r) {
    auto table = std::make_shared<const StructureTable>(StructureTable::build(preset("A" + std::to_string(r))));
    std::size_t d = r + 1;
    std::vector<ExactMatrix> h, e, f;
    for (std::size_t i = 0; i < r; ++i) {
        e.push_back(ExactMatrix::unit(d, i, i + 1));
        f.push_back(ExactMatrix::unit(d, i + 1, i));
        h.push_back(ExactMatrix::unit(d, i, i) - ExactMatrix::unit(d, i + 1, i + 1));
    }
    return MatrixRealization(table, extend_from_simple(*table, h, e, f));
}

std::vector<int> c_type_eps(const Root& alpha) {
    const std::size_t r = alpha.rank();
    std::vector<int> eps(r, 0);
    for (std::size_t m = 0; m < r; ++m) {
        if (m + 1 < r) eps[m] += alpha.coords[m];
        if (m > 0) eps[m] -= alpha.coords[m - 1];
    }
    eps[r - 1] += 2 * alpha.coords[r - 1];
    return eps;
}

ExactMatrix sp_root_matrix(unsigned r, const Root& alpha) {
    auto eps = c_type_eps(alpha);
    std::vector<std::size_t> plus, minus;
    for (std::size_t m = 0; m < r; ++m) {
        if (eps[m] == 2) return ExactMatrix::unit(2 * r, m, r + m);
        if (eps[m] == -2) return ExactMatrix::unit(2 * r, r + m, m);
        if (eps[m] == 1) plus.push_back(m);
        if (eps[m] == -1) minus.push_back(m);
    }
    if (plus.size() == 1 && minus.size() == 1) {
        std::size_t k = plus[0], l = minus[0];
        return ExactMatrix::unit(2 * r, k, l) - ExactMatrix::unit(2 * r, r + l, r + k);
    }
    if (plus.size() == 2) {
        std::size_t k = plus[0], l = plus[1];
        return ExactMatrix::unit(2 * r, k, r + l) + ExactMatrix::unit(2 * r, l, r + k);
    }
    if (minus.size() == 2) {
        std::size_t k = minus[0], l = minus[1];
        return ExactMatrix::unit(2 * r, r + k, l) + ExactMatrix::unit(2 * r, r + l, k);
    }
    throw Error(ErrorCode::NotARoot, alpha.str() + " is not a root of C" + std::to_string(r));
}

namespace {

ExactMatrix sp_h_matrix(unsigned r, std::size_t j) {
    ExactMatrix m = ExactMatrix::unit(2 * r, j, j) - ExactMatrix::unit(2 * r, r + j, r + j);
    if (j + 1 < r) m += ExactMatrix::unit(2 * r, r + j + 1, r + j + 1) - ExactMatrix::unit(2 * r, j + 1, j + 1);
    return m;
}

}  // namespace

StructureTable c_type_explicit_table(unsigned r) {
    StructureTable t = StructureTable::build(preset("C" + std::to_string(r)));
    auto sigma = reconcile_signs(t, [&](RootId id) { return sp_root_matrix(r, t.roots().root(id)); });
    return t.resigned(sigma);
}

MatrixRealization sp_realization(unsigned r) {
    auto table = std::make_shared<const StructureTable>(c_type_explicit_table(r));
    std::vector<ExactMatrix> img;
    for (std::size_t j = 0; j < r; ++j) img.push_back(sp_h_matrix(r, j));
    for (RootId id = 0; id < table->roots().num_roots(); ++id) img.push_back(sp_root_matrix(r, table->roots().root(id)));
    return MatrixRealization(table, std::move(img));
}

ExactMatrix eta(const MatrixRealization& sp, const ChevElement& x) {
    if (omega(sp.table(), x) != x) throw Error(ErrorCode::NotFixed, "eta is defined on omega-fixed elements only");
    ExactMatrix m = sp.image(x);
    std::size_t r = m.rows() / 2;
    ExactMatrix B = m.block(0, 0, r, r), C = m.block(0, r, r, r);
    if (m.block(r, 0, r, r) != -C || m.block(r, r, r, r) != B)
        throw std::logic_error("fixed element does not have the (B C; -C B) shape");
    return B + C * GaussianRational::i();
}

GlPresentationReport verify_gl_presentation(unsigned r) {
    GlPresentationReport rep;
    rep.r = r;
    auto fail = [&](const std::string& what) { rep.failures.push_back(what); };
    MatrixRealization sp = sp_realization(r);
    const StructureTable& t = sp.table();
    const GaussianRational I = GaussianRational::i();

    std::vector<ExactMatrix> K;
    for (std::size_t j = 0; j < r; ++j) K.push_back(eta(sp, y_basis(t, Root::simple(r, j))));
    for (std::size_t j = 0; j + 1 < r; ++j)
        if (K[j] != ExactMatrix::unit(r, j, j + 1) - ExactMatrix::unit(r, j + 1, j))
            fail("K_" + std::to_string(j + 1) + " = E_{j,j+1} - E_{j+1,j}");
    if (K[r - 1] != ExactMatrix::unit(r, r - 1, r - 1) * I) fail("K_r = i E_{r,r}");

    ExactMatrix Z = ExactMatrix::identity(r);
    ExactMatrix acc = Z;
    for (std::size_t j = 0; j + 1 < r; ++j)
        acc -= sp.image(h_elem(t, j)).block(0, 0, r, r) * GaussianRational(static_cast<long>(j + 1));
    if (acc * (I / GaussianRational(static_cast<long>(r))) != K[r - 1]) fail("K_r = (i/r)(Z - sum_j j eta(h_j))");

    auto br = [](const ExactMatrix& a, const ExactMatrix& b) { return commutator(a, b); };
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
            if ((j > k + 1 || k > j + 1) && !br(K[j], K[k]).is_zero())
                fail("[K_" + std::to_string(j + 1) + ",K_" + std::to_string(k + 1) + "] = 0");
    for (std::size_t j = 0; j + 2 < r; ++j)
        if (br(K[j], br(K[j], K[j + 1])) != -K[j + 1])
            fail("[K_j,[K_j,K_{j+1}]] = -K_{j+1} for j = " + std::to_string(j + 1));
    for (std::size_t j = 0; j + 1 < r; ++j)
        if (br(K[j + 1], br(K[j + 1], K[j])) != -K[j])
            fail("[K_{j+1},[K_{j+1},K_j]] = -K_j for j = " + std::to_string(j + 1));
    if (r >= 2) {
        const ExactMatrix& a = K[r - 2];
        ExactMatrix ab = br(a, K[r - 1]);
        if (br(a, br(a, ab)) != ab * GaussianRational(-4)) fail("[K_{r-1},[K_{r-1},[K_{r-1},K_r]]] = -4[K_{r-1},K_r]");
    }

    // K_1..K_r generate gl_r.
    EchelonBasis<GaussianRational> span;
    auto coords = [r](const ExactMatrix& m) {
        SparseVector<GaussianRational> v;
        for (const auto& [ij, x] : m.entries()) v.emplace(static_cast<std::int64_t>(ij.first * r + ij.second), x);
        return v;
    };
    std::vector<ExactMatrix> frontier;
    for (const auto& k : K)
        if (span.insert(coords(k))) frontier.push_back(k);
    while (!frontier.empty()) {
        std::vector<ExactMatrix> next;
        for (const auto& k : K)
            for (const auto& x : frontier) {
                ExactMatrix y = br(k, x);
                if (span.insert(coords(y))) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    if (span.rank() != static_cast<std::size_t>(r) * r) fail("K_1..K_r generate gl_r");
    return rep;
}

}  // namespace onsager
