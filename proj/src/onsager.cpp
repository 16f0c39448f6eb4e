#include "onsager/onsager.hpp"

#include "onsager/error.hpp"
#include "onsager/parallel.hpp"
#include "onsager/serre.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace onsager {

namespace {

std::atomic<unsigned> g_threads{~0u};

bool is_c_type(const CartanMatrix& c) {
    return c.size() >= 2 && c.entries() == preset("C" + std::to_string(c.size())).entries();
}

}  // namespace

unsigned thread_count() {
    unsigned n = g_threads.load();
    if (n == ~0u) {
        n = 0;
        if (const char* env = std::getenv("ONSAGER_KIT_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        g_threads = n;
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

void set_thread_count(unsigned n) { g_threads = n; }

Realization Realization::for_cartan(const CartanMatrix& c) {
    Realization rz;
    rz.cartan_ = c;
    if (c.kind() == CartanKind::Finite) {
        rz.kind_ = RealizationKind::Finite;
        rz.explicit_sp_ = is_c_type(c);
        rz.table_ = std::make_shared<const StructureTable>(rz.explicit_sp_ ? c_type_explicit_table(static_cast<unsigned>(c.size()))
                                                                          : StructureTable::build(c));
        for (std::size_t p = 0; p < c.size(); ++p) rz.gens_.push_back({AffineRoot{Root::simple(c.size(), p), 0}, 1});
        return rz;
    }
    if (c.kind() != CartanKind::UntwistedAffine)
        throw Error(ErrorCode::NotAffine, "no realization for a matrix that is neither finite nor untwisted affine");
    rz.kind_ = RealizationKind::Affine;
    CartanMatrix fp = c.finite_part();
    const std::size_t r = fp.size();
    rz.explicit_sp_ = is_c_type(fp);
    rz.table_ = std::make_shared<const StructureTable>(rz.explicit_sp_ ? c_type_explicit_table(static_cast<unsigned>(r))
                                                                       : StructureTable::build(fp));
    const RootSystem& rs = rz.table_->roots();
    const Root& theta = rs.highest_root();
    const std::size_t a0 = *c.affine_node();
    const auto nodes = c.finite_nodes();
    const auto k_theta = rs.coroot_coords(theta);
    // alpha_0 = delta - theta and h_0 = c - h_theta must reproduce the affine row and column
    for (std::size_t q = 0; q < r; ++q) {
        int col = 0;
        for (std::size_t i = 0; i < r; ++i) col += k_theta[i] * fp(i, q);
        if (c(nodes[q], a0) != -rs.pairing(theta, q) || c(a0, nodes[q]) != -col)
            throw Error(ErrorCode::NotAffine, "affine node does not match the highest root of the finite part");
    }
    for (std::size_t p = 0; p < c.size(); ++p) {
        if (p == a0) {
            rz.gens_.push_back({AffineRoot{-theta, 1}, 1});
        } else {
            std::size_t q = static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), p) - nodes.begin());
            rz.gens_.push_back({AffineRoot{Root::simple(r, q), 0}, 1});
        }
    }
    return rz;
}

AffineFixIndex Realization::generator_index(int label) const { return gens_[cartan_.index_of_label(label)]; }

int Realization::height(const AffineFixIndex& idx) const {
    if (kind_ == RealizationKind::Finite) return idx.gamma.finite_part.height();
    return affine_height(table_->roots(), idx.gamma);
}

int Realization::delta_height() const {
    if (kind_ == RealizationKind::Finite) return 0;
    return table_->roots().highest_root().height() + 1;
}

std::vector<AffineFixIndex> Realization::fix_basis(int H) const {
    std::vector<AffineFixIndex> out;
    if (kind_ == RealizationKind::Finite) {
        for (const auto& a : table_->roots().positive_roots())
            if (a.height() <= H) out.push_back({AffineRoot{a, 0}, 1});
        return out;
    }
    for (const auto& e : affine_positive_roots(table_->roots(), H))
        for (int i = 1; i <= e.multiplicity; ++i) out.push_back({e.root, static_cast<unsigned>(i)});
    return out;
}

std::size_t Realization::basis_count_at(int j) const {
    std::size_t n = 0;
    for (const auto& idx : fix_basis(j))
        if (height(idx) == j) ++n;
    return n;
}

std::vector<LabelledRelation> relations(const CartanMatrix& c) {
    std::vector<LabelledRelation> out;
    for (std::size_t p = 0; p < c.size(); ++p)
        for (std::size_t q = 0; q < c.size(); ++q) {
            if (p == q) continue;
            int i = c.label_of_index(p), j = c.label_of_index(q);
            out.push_back({i, j, serre_relation(c, i, j)});
        }
    return out;
}

LoopElement psi_eval(const Realization& rz, const BracketExpr& e) {
    if (e.is_leaf()) return rz.generator(e.generator());
    return bracket_loop(rz.table(), psi_eval(rz, e.left()), psi_eval(rz, e.right()));
}

LoopElement psi_eval(const Realization& rz, const FreeLieElement& x) {
    LoopElement out;
    for (const auto& [w, c] : x.terms()) out += c * psi_eval(rz, standard_bracketing(w));
    return out;
}

std::vector<RelationCheck> check_relations(const Realization& rz) {
    auto rels = relations(rz.cartan());
    return parallel_map<RelationCheck>(rels.size(), [&](std::size_t k) {
        const auto& rel = rels[k];
        LoopElement img = psi_eval(rz, rel.relation);
        return RelationCheck{rel.i, rel.j, serre_relation_text(rz.cartan(), rel.i, rel.j), img.str(rz.table()), img.is_zero()};
    });
}

namespace {

// Span of psi-images, coordinatized in the y-basis.
class YSpan {
public:
    bool insert(const YExpansion& e) {
        SparseVector<Rational> v;
        for (const auto& [idx, c] : e) {
            auto it = coord_.try_emplace(idx, static_cast<std::int64_t>(coord_.size())).first;
            v[it->second] = c;
        }
        return span_.insert(std::move(v));
    }
    std::size_t rank() const { return span_.rank(); }

private:
    std::map<AffineFixIndex, std::int64_t> coord_;
    EchelonBasis<Rational> span_;
};

struct Level {
    std::vector<LoopElement> fresh;  // independent elements added at this length
    std::vector<YExpansion> expansions;
};

// L_1, ..., L_jmax, each as the elements that enlarged the span at that length.
std::vector<Level> build_filtration(const Realization& rz, unsigned jmax, WordMode mode, YSpan& span) {
    const StructureTable& t = rz.table();
    std::vector<Level> levels(jmax + 1);
    std::vector<LoopElement> gens;
    for (std::size_t p = 0; p < rz.num_generators(); ++p) gens.push_back(rz.generator(rz.cartan().label_of_index(p)));
    auto absorb = [&](Level& lvl, std::vector<LoopElement> candidates) {
        auto exps = parallel_map<YExpansion>(candidates.size(), [&](std::size_t k) { return to_y_basis(t, candidates[k]); });
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if (span.insert(exps[k])) {
                lvl.fresh.push_back(std::move(candidates[k]));
                lvl.expansions.push_back(std::move(exps[k]));
            }
    };
    if (jmax >= 1) absorb(levels[1], gens);
    for (unsigned j = 2; j <= jmax; ++j) {
        std::vector<std::pair<const LoopElement*, const LoopElement*>> pairs;
        if (mode == WordMode::RightNested) {
            for (const auto& g : gens)
                for (const auto& w : levels[j - 1].fresh) pairs.emplace_back(&g, &w);
        } else {
            for (unsigned a = 1; 2 * a <= j; ++a)
                for (const auto& u : levels[a].fresh)
                    for (const auto& v : levels[j - a].fresh) pairs.emplace_back(&u, &v);
        }
        auto brackets = parallel_map<LoopElement>(pairs.size(), [&](std::size_t k) { return bracket_loop(t, *pairs[k].first, *pairs[k].second); });
        absorb(levels[j], std::move(brackets));
    }
    return levels;
}

}  // namespace

FiltrationReport filtration_dims(const Realization& rz, unsigned jmax, WordMode mode) {
    YSpan span;
    auto levels = build_filtration(rz, jmax, mode, span);
    FiltrationReport rep;
    rep.jmax = jmax;
    rep.dims.assign(jmax + 1, 0);
    rep.expected.assign(jmax + 1, 0);
    for (unsigned j = 1; j <= jmax; ++j) {
        rep.dims[j] = levels[j].fresh.size();
        rep.expected[j] = rz.basis_count_at(static_cast<int>(j));
    }
    return rep;
}

GenerationReport generation_check(const Realization& rz, unsigned H) {
    YSpan span;
    auto levels = build_filtration(rz, H, WordMode::RightNested, span);
    GenerationReport rep;
    rep.H = H;
    rep.rank = span.rank();
    rep.expected = rz.fix_basis(static_cast<int>(H)).size();
    rep.contained = true;
    for (const auto& lvl : levels)
        for (const auto& e : lvl.expansions)
            for (const auto& [idx, c] : e)
                if (rz.height(idx) > static_cast<int>(H)) rep.contained = false;
    return rep;
}

}  // namespace onsager
