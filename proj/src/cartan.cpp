#include "onsager/cartan.hpp"

#include "onsager/error.hpp"
#include "onsager/exact.hpp"
#include "onsager/roots.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace onsager {

const char* to_string(CartanKind kind) {
    switch (kind) {
        case CartanKind::Finite: return "Finite";
        case CartanKind::UntwistedAffine: return "UntwistedAffine";
        case CartanKind::Other: return "Other";
    }
    return "Other";
}

namespace {

constexpr int kMaxPresetRank = 12;

IntMatrix identity_cartan(int n) {
    IntMatrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    return a;
}

void link(IntMatrix& a, int i, int j, int aij = -1, int aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
}

// Raw finite-type matrices, 0-based nodes in Bourbaki order.
std::optional<IntMatrix> finite_raw(char type, int r) {
    switch (type) {
        case 'A': {
            if (r < 1 || r > kMaxPresetRank) return std::nullopt;
            auto a = identity_cartan(r);
            for (int i = 0; i + 1 < r; ++i) link(a, i, i + 1);
            return a;
        }
        case 'B': {
            if (r < 2 || r > kMaxPresetRank) return std::nullopt;
            auto a = identity_cartan(r);
            for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
            link(a, r - 2, r - 1, -1, -2);  // alpha_r short
            return a;
        }
        case 'C': {
            if (r < 1 || r > kMaxPresetRank) return std::nullopt;
            auto a = identity_cartan(r);
            if (r == 1) return a;
            for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
            link(a, r - 2, r - 1, -2, -1);  // alpha_r = 2 eps_r long
            return a;
        }
        case 'D': {
            if (r < 4 || r > kMaxPresetRank) return std::nullopt;
            auto a = identity_cartan(r);
            for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
            link(a, r - 3, r - 1);
            return a;
        }
        case 'E': {
            if (r < 6 || r > 8) return std::nullopt;
            auto a = identity_cartan(r);
            link(a, 0, 2);
            link(a, 1, 3);
            for (int i = 2; i + 1 < r; ++i) link(a, i, i + 1);
            return a;
        }
        case 'F': {
            if (r != 4) return std::nullopt;
            auto a = identity_cartan(4);
            link(a, 0, 1);
            link(a, 1, 2, -1, -2);
            link(a, 2, 3);
            return a;
        }
        case 'G': {
            if (r != 2) return std::nullopt;
            auto a = identity_cartan(2);
            link(a, 0, 1, -3, -1);  // alpha_1 short
            return a;
        }
        default: return std::nullopt;
    }
}

// Untwisted affine extension, affine node first:
// a_{0j} = -2(theta,alpha_j)/(theta,theta), a_{j0} = -theta(h_j).
IntMatrix affine_extension(const CartanMatrix& finite) {
    RootSystem rs = RootSystem::build(finite);
    const Root& theta = rs.highest_root();
    std::size_t r = finite.size();
    IntMatrix a(r + 1, std::vector<int>(r + 1, 0));
    a[0][0] = 2;
    Rational tt = rs.form(theta, theta);
    for (std::size_t j = 0; j < r; ++j) {
        Root aj = Root::simple(r, j);
        a[0][j + 1] = (Rational(-2) * rs.form(theta, aj) / tt).to_long();
        a[j + 1][0] = -rs.pairing(theta, j);
        for (std::size_t k = 0; k < r; ++k) a[j + 1][k + 1] = finite(j, k);
    }
    return a;
}

struct Candidate {
    std::string name;
    IntMatrix a;
};

std::vector<Candidate> finite_candidates(int n) {
    std::vector<Candidate> out;
    for (char t : std::string("ACBDEFG"))
        if (auto a = finite_raw(t, n)) out.push_back({std::string(1, t) + std::to_string(n), *a});
    return out;
}

const std::vector<Candidate>& affine_candidates(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Candidate>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Candidate> out;
    if (n >= 2) {
        for (const auto& c : finite_candidates(n - 1)) {
            if (c.name == "B2") continue;  // same diagram as C2
            out.push_back({c.name + "~", affine_extension(CartanMatrix::validate(c.a))});
        }
    }
    return cache.emplace(n, std::move(out)).first->second;
}

// Finds sigma with a[i][j] == b[sigma(i)][sigma(j)].
std::optional<std::vector<std::size_t>> find_isomorphism(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size();
    if (b.size() != n) return std::nullopt;
    std::vector<std::size_t> sigma(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
        if (i == n) return true;
        for (std::size_t cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                ok = a[i][k] == b[cand][sigma[k]] && a[k][i] == b[sigma[k]][cand];
            if (!ok) continue;
            sigma[i] = cand;
            used[cand] = true;
            if (extend(i + 1)) return true;
            used[cand] = false;
        }
        return false;
    };
    if (extend(0)) return sigma;
    return std::nullopt;
}

Rational principal_minor(const IntMatrix& a, const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Rational>> m(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m[i][j] = Rational(a[idx[i]][idx[j]]);
    return determinant(std::move(m));
}

bool indecomposable(const IntMatrix& a) {
    std::size_t n = a.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j)
            if (!seen[j] && a[i][j] != 0) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

std::vector<int> symmetrizer(const IntMatrix& a) {
    std::size_t n = a.size();
    std::vector<std::optional<Rational>> d(n);
    std::vector<int> out(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (d[start]) continue;
        std::vector<std::size_t> component{start};
        d[start] = Rational(1);
        for (std::size_t head = 0; head < component.size(); ++head) {
            std::size_t i = component[head];
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                // d_i a_ij = d_j a_ji
                Rational dj = *d[i] * Rational(a[i][j]) / Rational(a[j][i]);
                if (!d[j]) {
                    d[j] = dj;
                    component.push_back(j);
                } else if (*d[j] != dj) {
                    throw Error(ErrorCode::NotSymmetrizable, "no diagonal matrix symmetrizes the Cartan matrix");
                }
            }
        }
        BigInt lcm = 1;
        for (auto i : component) lcm = ::lcm(lcm, d[i]->denominator());
        BigInt g = 0;
        for (auto i : component) g = ::gcd(g, BigInt(d[i]->numerator() * lcm / d[i]->denominator()));
        for (auto i : component) {
            BigInt v = d[i]->numerator() * lcm / d[i]->denominator() / g;
            out[i] = static_cast<int>(v.get_si());
        }
    }
    return out;
}

CartanMatrix CartanMatrix::validate(IntMatrix a) {
    std::size_t n = a.size();
    if (n == 0) throw Error(ErrorCode::NotGCM, "empty matrix");
    for (const auto& row : a)
        if (row.size() != n) throw Error(ErrorCode::NotGCM, "matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] != 2) throw Error(ErrorCode::NotGCM, "diagonal entry a_" + std::to_string(i) + std::to_string(i) + " != 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw Error(ErrorCode::NotGCM, "positive off-diagonal entry");
            if ((a[i][j] == 0) != (a[j][i] == 0)) throw Error(ErrorCode::NotGCM, "asymmetric zero pattern");
        }
    }
    CartanMatrix c;
    c.d_ = onsager::symmetrizer(a);
    c.a_ = std::move(a);

    bool finite = true;
    for (std::size_t k = 1; k <= n && finite; ++k) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        finite = principal_minor(c.a_, idx).sign() > 0;
    }
    if (finite) {
        c.kind_ = CartanKind::Finite;
        for (const auto& cand : finite_candidates(static_cast<int>(n)))
            if (find_isomorphism(c.a_, cand.a)) {
                c.type_name_ = cand.name;
                break;
            }
        return c;
    }

    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    bool affine = n >= 2 && indecomposable(c.a_) && principal_minor(c.a_, all).is_zero();
    for (std::uint32_t mask = 1; affine && mask + 1 < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        affine = principal_minor(c.a_, idx).sign() > 0;
    }
    if (affine) {
        for (const auto& cand : affine_candidates(static_cast<int>(n))) {
            if (auto sigma = find_isomorphism(c.a_, cand.a)) {
                c.kind_ = CartanKind::UntwistedAffine;
                c.type_name_ = cand.name;
                c.affine_node_ = static_cast<std::size_t>(std::find(sigma->begin(), sigma->end(), 0) - sigma->begin());
                break;
            }
        }
    }
    return c;
}

std::size_t CartanMatrix::index_of_label(int label) const {
    long idx = static_cast<long>(label) - label_base();
    if (idx < 0 || idx >= static_cast<long>(size()))
        throw Error(ErrorCode::IndexError, "generator label " + std::to_string(label) + " out of range");
    return static_cast<std::size_t>(idx);
}

std::vector<std::size_t> CartanMatrix::finite_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (!affine_node_ || *affine_node_ != i) out.push_back(i);
    return out;
}

CartanMatrix CartanMatrix::finite_part() const {
    if (kind_ != CartanKind::UntwistedAffine) throw Error(ErrorCode::NotAffine, "matrix is not of untwisted affine type");
    auto nodes = finite_nodes();
    IntMatrix f(nodes.size(), std::vector<int>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j) f[i][j] = a_[nodes[i]][nodes[j]];
    return validate(std::move(f));
}

CartanMatrix preset(std::string_view name) {
    auto unknown = [&] { return Error(ErrorCode::UnknownPreset, "unknown preset '" + std::string(name) + "'"); };
    if (name.size() < 2) throw unknown();
    bool affine = name.back() == '~';
    std::string_view body = affine ? name.substr(0, name.size() - 1) : name;
    char type = static_cast<char>(std::toupper(static_cast<unsigned char>(body.front())));
    std::string digits(body.substr(1));
    if (digits.empty() || digits.size() > 2 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) throw unknown();
    int r = std::stoi(digits);
    auto raw = finite_raw(type, r);
    if (!raw) throw unknown();
    CartanMatrix finite = CartanMatrix::validate(*raw);
    if (!affine) return finite;
    CartanMatrix c = CartanMatrix::validate(affine_extension(finite));
    if (c.kind() != CartanKind::UntwistedAffine) throw unknown();
    return c;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (int r = 1; r <= 8; ++r) names.push_back("A" + std::to_string(r));
    for (int r = 2; r <= 8; ++r) names.push_back("B" + std::to_string(r));
    for (int r = 1; r <= 8; ++r) names.push_back("C" + std::to_string(r));
    for (int r = 4; r <= 8; ++r) names.push_back("D" + std::to_string(r));
    for (const char* s : {"E6", "E7", "E8", "F4", "G2"}) names.emplace_back(s);
    std::size_t finite_count = names.size();
    for (std::size_t k = 0; k < finite_count; ++k) names.push_back(names[k] + "~");
    return names;
}

IntMatrix parse_matrix_text(std::string_view text) {
    IntMatrix rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size())
                throw Error(ErrorCode::MatrixFormat, "line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw Error(ErrorCode::MatrixFormat, "line " + std::to_string(lineno) + ": row length differs");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error(ErrorCode::MatrixFormat, "no matrix rows");
    return rows;
}

std::string format_matrix_text(const IntMatrix& a) {
    std::ostringstream os;
    for (const auto& row : a) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << '\n';
    }
    return os.str();
}

}  // namespace onsager
