#pragma once

// Coefficients c_s[r] of the inhomogeneous Serre relations and the
// relations themselves.

#include "onsager/cartan.hpp"
#include "onsager/exact.hpp"
#include "onsager/freelie.hpp"

#include <string>
#include <vector>

namespace onsager {

/// c[s] = c_s[r] for 0 <= s <= r, for the Cartan entry a.
struct CoeffRow {
    long a = 0;
    unsigned r = 0;
    std::vector<BigInt> c;

    friend bool operator==(const CoeffRow&, const CoeffRow&) = default;
};

/// c_r[r] = 1, c_{r-1}[r] = 0 and
/// c_s[r] = c_{s-1}[r-1] - (r-1)(r-2+a) c_s[r-2].
CoeffRow coeff_row(long a, unsigned r);
/// All rows 0..rmax.
std::vector<CoeffRow> coeff_table(long a, unsigned rmax);
/// (-1)^l prod_{k=1}^{l} (2k-1)(2k-2+a), which equals c_0[2l].
BigInt c0_closed_form(long a, unsigned l);

/// sum_{s=0}^{1-a_ij} c_s[1-a_ij] (ad B_i)^s B_j with i, j generator labels of
/// `c`. Throws Error{IndexError} or Error{SameIndex}.
FreeLieElement serre_relation(const CartanMatrix& c, int i, int j);
/// The same relation written with nested brackets, e.g.
/// "[B1,[B1,[B1,B0]]] + 4[B1,B0]".
std::string serre_relation_text(const CartanMatrix& c, int i, int j);

}  // namespace onsager
