#include "onsager/serre.hpp"

#include "onsager/error.hpp"

namespace onsager {

std::vector<CoeffRow> coeff_table(long a, unsigned rmax) {
    std::vector<CoeffRow> rows;
    for (unsigned r = 0; r <= rmax; ++r) {
        CoeffRow row{a, r, std::vector<BigInt>(r + 1, 0)};
        row.c[r] = 1;
        if (r >= 2) {
            BigInt factor = BigInt(static_cast<long>(r) - 1) * BigInt(static_cast<long>(r) - 2 + a);
            for (unsigned s = 0; s + 2 <= r; ++s) {
                BigInt prev = s >= 1 ? rows[r - 1].c[s - 1] : BigInt(0);
                row.c[s] = prev - factor * rows[r - 2].c[s];
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CoeffRow coeff_row(long a, unsigned r) { return coeff_table(a, r).back(); }

BigInt c0_closed_form(long a, unsigned l) {
    BigInt p = 1;
    for (unsigned k = 1; k <= l; ++k) p *= BigInt(2L * k - 1) * BigInt(2L * k - 2 + a);
    return l % 2 == 0 ? p : BigInt(-p);
}

FreeLieElement serre_relation(const CartanMatrix& c, int i, int j) {
    std::size_t ii = c.index_of_label(i);
    std::size_t jj = c.index_of_label(j);
    if (ii == jj) throw Error(ErrorCode::SameIndex, "relation needs two distinct generators, got " + std::to_string(i) + " twice");
    long a = c(ii, jj);
    unsigned r = static_cast<unsigned>(1 - a);
    CoeffRow row = coeff_row(a, r);
    FreeLieElement bi = FreeLieElement::generator(i);
    FreeLieElement term = FreeLieElement::generator(j);
    FreeLieElement out;
    for (unsigned s = 0; s <= r; ++s) {
        if (s > 0) term = lie_bracket(bi, term);
        if (row.c[s] != 0) out += Rational(row.c[s]) * term;
    }
    return out;
}

std::string serre_relation_text(const CartanMatrix& c, int i, int j) {
    std::size_t ii = c.index_of_label(i);
    if (ii == c.index_of_label(j)) throw Error(ErrorCode::SameIndex, "relation needs two distinct generators, got " + std::to_string(i) + " twice");
    unsigned r = static_cast<unsigned>(1 - c(ii, c.index_of_label(j)));
    CoeffRow row = coeff_row(c(ii, c.index_of_label(j)), r);
    const std::string bi = "B" + std::to_string(i);
    std::string out;
    for (unsigned s = r + 1; s-- > 0;) {
        const BigInt& v = row.c[s];
        if (v == 0) continue;
        std::string word = "B" + std::to_string(j);
        for (unsigned k = 0; k < s; ++k) word = "[" + bi + "," + word + "]";
        BigInt mag = abs(v);
        if (out.empty()) out = v < 0 ? "-" : "";
        else out += v < 0 ? " - " : " + ";
        if (mag != 1) out += mag.get_str();
        out += word;
    }
    return out;
}

}  // namespace onsager
