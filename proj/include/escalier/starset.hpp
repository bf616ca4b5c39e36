#pragma once

#include "escalier/barcode.hpp"
#include "escalier/monomials.hpp"

#include <vector>

namespace esc {

struct StarSet {
    std::vector<Term> terms;  // Lex-ascending
    OrderIdeal source;
};

StarSet star_set_from_barcode(const BarCode& b);
StarSet star_set_direct(const OrderIdeal& N);

// 1-based indices of the variables multiplicative for t in m (Janet rule).
std::vector<std::size_t> multiplicative_vars(const std::vector<Term>& m, const Term& t);
bool is_complete(const std::vector<Term>& m);
bool is_stably_complete(const std::vector<Term>& m);

// Star set with the stably complete property checked; throws std::logic_error if it fails.
StarSet pommaret_basis(const OrderIdeal& N);

bool is_stable_via_starset(const OrderIdeal& N);

}  // namespace esc
